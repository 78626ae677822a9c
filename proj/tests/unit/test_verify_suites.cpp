#include <doctest.h>

#include <algorithm>

#include "cdg/verify.hpp"

using namespace cdg;

namespace {

int count_verdict(const std::vector<CheckResult>& results, const char* check,
                  CheckResult::Verdict verdict) {
  int n = 0;
  for (const auto& r : results)
    if (r.check == check && r.verdict == verdict) ++n;
  return n;
}

const CheckResult* find_result(const std::vector<CheckResult>& results, const char* check,
                               const char* group) {
  for (const auto& r : results)
    if (r.check == check && r.group == group) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("diophantine search") {
  auto solutions = check_step7_diophantine(20);
  REQUIRE(solutions.size() == 1);
  CHECK(solutions[0].first == 2);
  CHECK(solutions[0].second == 2);  // 4 + 3*4 = 16
  CHECK(check_step7_diophantine(2) == solutions);
  CHECK_THROWS_AS(check_step7_diophantine(1), Error);
}

TEST_CASE("verify corpus composition") {
  auto c15 = verify_corpus(15);
  CHECK(c15.size() == 28);
  auto c10 = verify_corpus(10);
  for (const auto& e : c10) CHECK(e.order <= 10);
}

TEST_CASE("analyze pipeline") {
  auto a = analyze_group("S4", build(*entry_from_name("S4")));
  CHECK(a.group.order() == 24);
  CHECK(a.gamma_stats.component_count == 2);
  CHECK(a.delta_stats.component_count == 2);
  REQUIRE(a.two_frobenius);
  CHECK(a.two_frobenius->k.order() == 4);
  CHECK(a.two_frobenius->l.order() == 12);
}

TEST_CASE("connectivity suite passes on the small corpus") {
  auto results = suite_theorem_connectivity(verify_corpus(24));
  CHECK(count_verdict(results, "connectivity.components", CheckResult::Verdict::fail) == 0);
  CHECK(count_verdict(results, "connectivity.diameter", CheckResult::Verdict::fail) == 0);
  CHECK(count_verdict(results, "connectivity.frobenius-iff", CheckResult::Verdict::fail) == 0);
  CHECK(count_verdict(results, "connectivity.component-agreement", CheckResult::Verdict::fail) == 0);
  // the trivial group is skipped, not judged
  auto* c1 = find_result(results, "connectivity.components", "C1");
  REQUIRE(c1);
  CHECK(c1->verdict == CheckResult::Verdict::skipped);
  // S4 carries its chain witness
  auto* s4 = find_result(results, "connectivity.frobenius-iff", "S4");
  REQUIRE(s4);
  CHECK(s4->verdict == CheckResult::Verdict::pass);
  CHECK(s4->witness["two_frobenius"]["k_order"] == 4);
  CHECK(s4->witness["two_frobenius"]["l_order"] == 12);
}

TEST_CASE("triangle-free suite on the small corpus") {
  auto results = suite_theorem_triangle_free(verify_corpus(21));
  CHECK(count_verdict(results, "triangle-free.classification", CheckResult::Verdict::fail) == 0);
  CHECK(count_verdict(results, "triangle-free.reference", CheckResult::Verdict::fail) == 0);
  // every reference group is certified
  CHECK(count_verdict(results, "triangle-free.reference", CheckResult::Verdict::pass) == 6);
  // groups in the list are matched by isomorphism, not by name
  auto* d6 = find_result(results, "triangle-free.classification", "S3");
  REQUIRE(d6);
  CHECK(d6->witness["isomorphic_to"] == "S3");
}

TEST_CASE("prime-power suite documents the S4 disagreement") {
  // Below order 24 the two sides of the predicate agree everywhere.
  auto small = suite_theorem_prime_powers(verify_corpus(23));
  CHECK(count_verdict(small, "prime-powers.agreement", CheckResult::Verdict::fail) == 0);

  // S4 is the unique disagreement up to order 30: its codegrees {2,3,8,8}
  // are all prime powers, yet it is neither a p-group nor Frobenius.
  auto results = suite_theorem_prime_powers(verify_corpus(30));
  int fails = count_verdict(results, "prime-powers.agreement", CheckResult::Verdict::fail);
  CHECK(fails == 1);
  auto* s4 = find_result(results, "prime-powers.agreement", "S4");
  REQUIRE(s4);
  CHECK(s4->verdict == CheckResult::Verdict::fail);
  CHECK(s4->witness["all_prime_powers"] == true);
  CHECK(s4->witness["rhs"] == false);
}

TEST_CASE("lemma suite passes on the small corpus") {
  auto results = suite_lemmas(verify_corpus(16), 60);
  for (const auto& r : results) {
    INFO(r.check, " [", r.group, "] ", r.witness.dump());
    CHECK_FALSE(r.failed());
  }
  // the cyclic count check ran for every order up to the limit
  CHECK(count_verdict(results, "lemmas.cyclic-totient", CheckResult::Verdict::pass) == 60);
  // nilpotent non-p-groups were exercised
  CHECK(count_verdict(results, "lemmas.nilpotent-sylow", CheckResult::Verdict::pass) > 0);
  // product pairs were exercised
  CHECK(count_verdict(results, "lemmas.product-multiplicativity", CheckResult::Verdict::pass) > 0);
}

TEST_CASE("reports are deterministic and sorted") {
  VerifyOptions options;
  options.max_order = 12;
  options.cyclic_limit = 24;
  options.diophantine_max_n = 20;
  auto r1 = run_verify({"all"}, options);
  auto r2 = run_verify({"all"}, options);
  CHECK(report_to_jsonl(r1) == report_to_jsonl(r2));

  // sorted by (suite, group, check)
  for (std::size_t i = 1; i < r1.results.size(); ++i) {
    const auto &a = r1.results[i - 1], &b = r1.results[i];
    auto suite = [](const std::string& c) { return c.substr(0, c.find('.')); };
    auto ka = std::make_tuple(suite(a.check), a.group, a.check);
    auto kb = std::make_tuple(suite(b.check), b.group, b.check);
    CHECK(ka <= kb);
  }

  // timing fields only appear on request
  CHECK(report_to_jsonl(r1).find("millis") == std::string::npos);
  options.timing = true;
  auto r3 = run_verify({"diophantine"}, options);
  CHECK(report_to_jsonl(r3).find("millis") != std::string::npos);
}

TEST_CASE("jsonl shape") {
  VerifyOptions options;
  options.max_order = 6;
  options.cyclic_limit = 6;
  auto report = run_verify({"prime-powers"}, options);
  auto jsonl = report_to_jsonl(report);
  // one header plus one line per result
  std::size_t lines = std::count(jsonl.begin(), jsonl.end(), '\n');
  CHECK(lines == report.results.size() + 1);
  auto header = nlohmann::json::parse(jsonl.substr(0, jsonl.find('\n')));
  CHECK(header["report"] == "codegree-verify");
  CHECK(header["corpus_size"] == report.corpus_size);
  CHECK(header["corpus_note"].get<std::string>().find("order 15") != std::string::npos);
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_verify({"nonsense"}, VerifyOptions{}), Error);
}
