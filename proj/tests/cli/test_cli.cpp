// Exercises the installed command line surface through the real binary.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int checks = 0, failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CDG_CLI_PATH) + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) result.output.append(buf.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / "cdg_cli_test";
  fs::create_directories(tmp);

  {
    auto r = run("analyze 'F(7,3)'");
    expect(r.exit_code == 0, "analyze F(7,3) exits 0");
    expect(r.output.find("codegrees: 3 3 7 7") != std::string::npos,
           "analyze F(7,3) prints the codegree line");
    expect(r.output.find("order: 21") != std::string::npos, "analyze F(7,3) prints the order");
  }
  {
    auto r = run("analyze S4");
    expect(r.output.find("two-frobenius: K=4 L=12") != std::string::npos,
           "analyze S4 reports the chain witness");
  }
  {
    auto r = run(std::string("analyze ") + CDG_TEST_DATA_DIR + "/s3.grp");
    expect(r.exit_code == 0, "analyze from a group file");
    expect(r.output.find("codegrees: 2 3") != std::string::npos, "file analysis codegrees");
  }
  {
    auto r = run("analyze missing.grp");
    expect(r.exit_code == 2, "missing file exits 2");
  }
  {
    auto r = run("frobnicate");
    expect(r.exit_code == 2, "unknown subcommand exits 2");
  }
  {
    auto r = run("catalog list --max-order 15");
    expect(r.exit_code == 0, "catalog list exits 0");
    expect(r.output.find("28 groups") != std::string::npos, "catalog lists 28 groups");
    expect(r.output.find("Q8") != std::string::npos, "catalog names Q8");
  }
  {
    auto dot = tmp / "a4.dot";
    auto r = run("export-dot A4 --graph gamma -o " + dot.string());
    expect(r.exit_code == 0, "export-dot exits 0");
    auto text = slurp(dot);
    expect(text.find("label=\"4\"") != std::string::npos, "dot file has codegree labels");
  }
  {
    auto table = tmp / "s3.json";
    auto r = run("export-table S3 -o " + table.string());
    expect(r.exit_code == 0, "export-table exits 0");
    auto text = slurp(table);
    expect(text.find("\"conductor\": 6") != std::string::npos, "table json has the conductor");
  }
  {
    auto rep = tmp / "r.jsonl";
    auto r = run("verify prime-powers --max-order 23 --report " + rep.string());
    expect(r.exit_code == 0, "prime-powers below order 24 exits 0");
    expect(slurp(rep).find("\"verdict\":\"pass\"") != std::string::npos, "report has pass lines");
  }
  {
    // S4 separates the two sides of the prime-power predicate, so the
    // suite reports a failure and the tool exits 1.
    auto r = run("verify prime-powers --max-order 24 --report " + (tmp / "s4.jsonl").string());
    expect(r.exit_code == 1, "prime-powers at order 24 exits 1");
    expect(r.output.find("S4") != std::string::npos, "summary names the witness");
  }
  {
    auto r = run("verify diophantine --report " + (tmp / "d.jsonl").string());
    expect(r.exit_code == 0, "diophantine suite exits 0");
  }

  fs::remove_all(tmp);
  std::cout << checks << " cli checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}
