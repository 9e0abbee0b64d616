#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ikalg/correspondence.hpp"

namespace ikalg {

/// One checked identity: what was compared and both sides as decimal strings.
struct CheckRow {
  std::string key;
  std::string lhs;
  std::string rhs;
  bool ok = true;
};

struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<CheckRow> rows;
  std::optional<CheckRow> first_failure;
  std::vector<std::string> notes;
  /// The audit of a non-admissible family is expected to fail.
  bool expect_failure = false;
  bool skipped = false;

  /// Outcome matches expectation.
  bool ok() const noexcept { return skipped || (expect_failure ? failed > 0 : failed == 0); }
};

struct VerifyOptions {
  FamilySpec family;
  int level = 3;
  Budget budget;
  int jobs = 1;
};

/// Suites: main-lemma, invert, phi, tower, audit, orbits, p-equals-s, xi.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws Config for unknown names.
std::vector<SuiteReport> run_suites(std::string_view suite, const VerifyOptions& options);

/// Partition of G_n into conjugation orbits by brute force; orbit ids in
/// order of first appearance over the canonical element order.
std::vector<int> conjugation_orbits(const std::vector<GroupElement>& elements,
                                    const FiniteGroup& group);

/// True iff two labelings induce the same partition.
bool same_partition(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace ikalg
