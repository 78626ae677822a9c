#include "cdg/group_file.hpp"

#include <fstream>
#include <sstream>

#include "cdg/errors.hpp"

namespace cdg {

namespace {

struct Line {
  int number = 0;  // 1-based
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

Permutation parse_cycles(const Line& line, std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::uint32_t i = 0; i < degree; ++i) images[i] = i;
  std::vector<bool> used(degree, false);

  const std::string& s = line.text;
  std::size_t pos = 0;
  auto col = [&]() { return static_cast<int>(pos) + 1; };
  auto skip_spaces = [&]() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  };

  skip_spaces();
  if (pos == s.size()) throw ParseError(line.number, col(), "expected a cycle");
  bool any_cycle = false;
  while (pos < s.size()) {
    skip_spaces();
    if (pos == s.size()) break;
    if (s[pos] != '(')
      throw ParseError(line.number, col(), "expected '(' to open a cycle");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_spaces();
      if (pos == s.size()) throw ParseError(line.number, col(), "unclosed cycle");
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      if (s[pos] < '0' || s[pos] > '9')
        throw ParseError(line.number, col(), "expected a point or ')'");
      int start_col = col();
      std::uint64_t value = 0;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        value = value * 10 + (s[pos] - '0');
        if (value > 1000000) throw ParseError(line.number, start_col, "point out of range");
        ++pos;
      }
      if (value == 0 || value > degree)
        throw ParseError(line.number, start_col,
                         "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      std::uint32_t point = static_cast<std::uint32_t>(value - 1);
      if (used[point])
        throw ParseError(line.number, start_col,
                         "point " + std::to_string(value) + " appears twice");
      used[point] = true;
      cycle.push_back(point);
    }
    any_cycle = true;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  if (!any_cycle) throw ParseError(line.number, col(), "expected a cycle");
  return Permutation(images);
}

}  // namespace

FiniteGroup parse_group_file(const std::string& text, std::uint32_t cap) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty group file");

  std::istringstream header(lines[0].text);
  std::string mode;
  header >> mode;

  if (mode == "perm") {
    long long degree = -1;
    if (!(header >> degree) || degree < 1 || degree > 1000000)
      throw ParseError(lines[0].number, static_cast<int>(mode.size()) + 2,
                       "perm header needs a positive degree");
    std::string extra;
    if (header >> extra)
      throw ParseError(lines[0].number, 1, "unexpected token after the degree");
    std::vector<Permutation> gens;
    for (std::size_t i = 1; i < lines.size(); ++i)
      gens.push_back(parse_cycles(lines[i], static_cast<std::uint32_t>(degree)));
    return FiniteGroup::from_generators(static_cast<std::uint32_t>(degree), std::move(gens), cap);
  }

  if (mode == "table") {
    long long n = -1;
    if (!(header >> n) || n < 1 || n > 65535)
      throw ParseError(lines[0].number, static_cast<int>(mode.size()) + 2,
                       "table header needs a positive size");
    if (lines.size() - 1 != static_cast<std::size_t>(n))
      throw ParseError(lines[0].number, 1,
                       "expected " + std::to_string(n) + " table rows, found " +
                           std::to_string(lines.size() - 1));
    std::vector<std::vector<std::uint32_t>> table;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::istringstream row(lines[i].text);
      std::vector<std::uint32_t> entries;
      long long v;
      while (row >> v) {
        if (v < 0 || v >= n)
          throw ParseError(lines[i].number, 1,
                           "entry " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        entries.push_back(static_cast<std::uint32_t>(v));
      }
      if (!row.eof()) throw ParseError(lines[i].number, 1, "non-numeric table entry");
      if (entries.size() != static_cast<std::size_t>(n))
        throw ParseError(lines[i].number, 1,
                         "expected " + std::to_string(n) + " entries, found " +
                             std::to_string(entries.size()));
      table.push_back(std::move(entries));
    }
    return FiniteGroup::from_cayley_table(table);
  }

  throw ParseError(lines[0].number, 1, "header must start with 'perm' or 'table'");
}

FiniteGroup load_group_file(const std::string& path, std::uint32_t cap) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str(), cap);
}

}  // namespace cdg
