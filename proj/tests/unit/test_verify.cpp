#include "doctest.h"
#include "ikalg/errors.hpp"
#include "ikalg/verify.hpp"
#include "oracles.hpp"

using namespace ikalg;

namespace {

VerifyOptions options(const char* family, int level, int jobs = 1) {
  VerifyOptions o;
  o.family = FamilySpec::builtin(family);
  o.level = level;
  o.jobs = jobs;
  return o;
}

bool same_reports(const std::vector<SuiteReport>& a, const std::vector<SuiteReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].suite != b[i].suite || a[i].checked != b[i].checked || a[i].failed != b[i].failed ||
        a[i].notes != b[i].notes || a[i].rows.size() != b[i].rows.size())
      return false;
    for (std::size_t j = 0; j < a[i].rows.size(); ++j) {
      const auto &x = a[i].rows[j], &y = b[i].rows[j];
      if (x.key != y.key || x.lhs != y.lhs || x.rhs != y.rhs || x.ok != y.ok) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(suite_names() == std::vector<std::string>{"main-lemma", "invert", "phi", "tower", "audit",
                                                  "orbits", "p-equals-s", "xi"});
}

TEST_CASE("all suites pass for admissible families") {
  for (const auto& [family, level] :
       std::vector<std::pair<const char*, int>>{{"sym", 4}, {"wreath:cyclic2", 3}, {"wreath:sym3", 2}}) {
    CAPTURE(family);
    const auto reports = run_suites("all", options(family, level));
    REQUIRE(reports.size() == suite_names().size());
    for (const auto& r : reports) {
      CAPTURE(r.suite);
      CHECK(r.ok());
      CHECK(r.failed == 0);
      CHECK(r.checked > 0);
      CHECK_FALSE(r.first_failure.has_value());
    }
  }
}

TEST_CASE("dtype runs the audit only, and it fails as expected") {
  const auto reports = run_suites("all", options("dtype", 3));
  REQUIRE(reports.size() == suite_names().size());
  for (const auto& r : reports) {
    CAPTURE(r.suite);
    CHECK(r.ok());
    if (r.suite == "audit") {
      CHECK_FALSE(r.skipped);
      CHECK(r.expect_failure);
      CHECK(r.failed == 1);
      REQUIRE(r.first_failure.has_value());
      CHECK(r.first_failure->key.find("lambda={1,2}") != std::string::npos);
    } else {
      CHECK(r.skipped);
    }
  }
  CHECK_THROWS_AS(run_suites("phi", options("dtype", 3)), Error);
  const auto audit = run_suites("audit", options("dtype", 3));
  REQUIRE(audit.size() == 1);
  CHECK(audit[0].failed == 1);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(run_suites("nonsense", options("sym", 3)), Error);
  CHECK_THROWS_AS(run_suites("all", options("sym", -1)), Error);
}

TEST_CASE("reports do not depend on the job count") {
  const auto one = run_suites("all", options("wreath:cyclic2", 3, 1));
  CHECK(same_reports(one, run_suites("all", options("wreath:cyclic2", 3, 2))));
  CHECK(same_reports(one, run_suites("all", options("wreath:cyclic2", 3, 8))));
}

TEST_CASE("conjugation orbits") {
  const auto f = trivial_group();
  const auto elements = enumerate_elements(f, 4, Budget{});
  const auto orbits = conjugation_orbits(elements, f);
  REQUIRE(orbits.size() == 24);
  CHECK(*std::max_element(orbits.begin(), orbits.end()) == 4);
  std::vector<int> by_label;
  std::vector<ClassLabel> seen;
  for (const auto& g : elements) {
    const auto label = class_label(g, f);
    auto it = std::find(seen.begin(), seen.end(), label);
    if (it == seen.end()) {
      by_label.push_back(static_cast<int>(seen.size()));
      seen.push_back(label);
    } else {
      by_label.push_back(static_cast<int>(it - seen.begin()));
    }
  }
  CHECK(same_partition(orbits, by_label));
  auto merged = by_label;
  for (auto& x : merged) x = x == 1 ? 0 : x;
  CHECK_FALSE(same_partition(orbits, merged));
  CHECK(same_partition({0, 0, 1}, {5, 5, 2}));
  CHECK_FALSE(same_partition({0, 1, 1}, {0, 0, 1}));
}
