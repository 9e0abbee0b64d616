#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ikalg/finite_group.hpp"
#include "ikalg/sparse_vector.hpp"
#include "ikalg/wreath.hpp"

namespace ikalg {

/// A pair (λ, h) with support(h) ⊆ λ.
struct PartialElement {
  SupportSet domain;
  GroupElement h;

  /// Validates the support condition; throws InvalidLabel otherwise.
  static PartialElement make(SupportSet domain, const GroupElement& h, const FiniteGroup& group);

  friend bool operator==(const PartialElement&, const PartialElement&) = default;
};

/// Canonical order: domain by subset_less, then element order.
bool partial_less(const PartialElement& a, const PartialElement& b);

std::string format_partial(const PartialElement& p, const FiniteGroup& group);

/// (λ', h')(λ'', h'') = (λ' ∪ λ'', h'h'').
PartialElement pmultiply(const PartialElement& a, const PartialElement& b,
                         const FiniteGroup& group);

/// (|λ|, class_label(h)).
OmegaLabel omega_of(const PartialElement& p, const FiniteGroup& group);

/// Conjugation (gλ, g h g⁻¹).
PartialElement conjugate(const GroupElement& g, const PartialElement& p, const FiniteGroup& group);

/// Every partial element of class ω with λ' ⊆ within, at ambient level n,
/// in canonical order.
std::vector<PartialElement> enumerate_omega_class(const OmegaLabel& omega, SupportSet within,
                                                  const FiniteGroup& group, int n,
                                                  const Budget& budget = {});

/// All partial elements at level n (h ranging over `members`), canonical order.
std::vector<PartialElement> partial_elements(std::span<const GroupElement> members, int n,
                                             const FiniteGroup& group);

/// Orbit ids for `items` under conjugation by `acting`, numbered in order of
/// first appearance. Conjugates falling outside `items` are ignored, so
/// `items` should be closed under the action.
std::vector<int> orbit_ids(std::span<const PartialElement> items,
                           std::span<const GroupElement> acting, const FiniteGroup& group);

struct OrbitPartition {
  std::vector<PartialElement> elements;  // canonical order
  std::vector<int> orbit_of;             // per element
  int orbit_count = 0;
};

/// Brute-force partition of all partial elements at level n into G_n-orbits.
OrbitPartition orbit_oracle(const FiniteGroup& group, int n, const Budget& budget = {});

/// The fixed representative of ω: λ = {1..l} and the canonically first
/// element of class c with support inside it. Throws InvalidLabel if α(c) > l.
PartialElement canonical_representative(const OmegaLabel& omega, const FiniteGroup& group,
                                        const Budget& budget = {});

/// Number of pairs (λ',h') ∈ ω', (λ'',h'') ∈ ω'' with λ'∪λ'' = target.domain
/// and h'h'' = target.h, counted at the target's ambient level.
Count count_factorizations(const OmegaLabel& first, const OmegaLabel& second,
                           const PartialElement& target, const FiniteGroup& group,
                           const Budget& budget = {});

/// Structure constant P^{ω}_{ω',ω''} at the canonical representative of ω.
/// Throws InvalidLabel when a label has α(c) > l.
Count p_constant(const OmegaLabel& first, const OmegaLabel& second, const OmegaLabel& target,
                 const FiniteGroup& group, const Budget& budget = {});

/// Canonical basis {(l, c) : α(c) <= l <= n} of A_{<=n}.
std::vector<OmegaLabel> omega_basis(const FiniteGroup& group, int n, const Budget& budget = {});

/// All structure constants P with target level <= max_level, built by
/// enumerating factorizations of each target's representative. Immutable once
/// built; construction runs targets in parallel and merges in canonical order.
class StructureConstants {
 public:
  using Expansion = std::vector<std::pair<OmegaLabel, Count>>;

  StructureConstants(const FiniteGroup& group, int max_level, const Budget& budget = {},
                     int jobs = 1);

  const FiniteGroup& base() const noexcept { return group_; }
  int max_level() const noexcept { return max_level_; }
  const std::vector<OmegaLabel>& basis() const noexcept { return basis_; }

  /// e_{ω'} e_{ω''} = Σ P e_ω over targets with l <= max_level, canonical order.
  const Expansion& expand(const OmegaLabel& first, const OmegaLabel& second) const;

  Count at(const OmegaLabel& first, const OmegaLabel& second, const OmegaLabel& target) const;

 private:
  FiniteGroup group_;
  int max_level_;
  std::vector<OmegaLabel> basis_;
  std::map<std::pair<OmegaLabel, OmegaLabel>, Expansion> table_;
};

/// Product in A_{<=n}: bilinear extension of e_{ω'}e_{ω''} = Σ P e_ω, dropping
/// targets above n. Throws LevelMismatch if a, b are not at level n or the
/// table is too shallow.
AlgebraVector ik_product(const AlgebraVector& a, const AlgebraVector& b, int n,
                         const StructureConstants& constants);

/// π: A_{<=N} → A_{<=N'}: drop terms with l > N'.
AlgebraVector project(const AlgebraVector& a, int to_level);

}  // namespace ikalg
