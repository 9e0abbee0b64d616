#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ikalg/center_algebra.hpp"
#include "ikalg/partial_algebra.hpp"

namespace ikalg {

/// ξ(l', c; l) = (l-α)! / ((l-l')! (l'-α)!) = C(l-α, l'-α); 0 outside the
/// range α(c) <= l' <= l.
Count xi_closed_form(int lprime, const ClassLabel& c, int l);

/// ξ by direct counting: fix λ = {1..l} and an element h of class c supported
/// in it, then count the l'-subsets of λ containing support(h).
Count xi_count_oracle(int lprime, const ClassLabel& c, int l, const FiniteGroup& group);

struct MainLemmaReport {
  Integer lhs;
  Integer rhs;
  bool equal = false;
};

/// Both sides of ξ(l',c';l) ξ(l'',c'';l) S^{c(l)}_{c'(l),c''(l)}
///   = Σ_{l̃} ξ(l̃,c;l) P^{(l̃,c)}_{(l',c'),(l'',c'')}.
/// Empty classes (α > level) contribute 0 on both sides.
MainLemmaReport verify_main_lemma(const OmegaLabel& first, const OmegaLabel& second, int l,
                                  const ClassLabel& c, const StructureConstants& p,
                                  const CenterConstants& s);

/// The unipotent lower-triangular system (1+R)·P = S over l ∈ {m, …, M},
/// m = max(l', l''), M = l' + l''.
struct RSystem {
  OmegaLabel first;
  OmegaLabel second;
  ClassLabel c;
  int m = 0;
  int big_m = 0;
  /// R[i][j] = ξ(m+j, c; m+i) for j < i, zero elsewhere.
  std::vector<std::vector<Count>> r;
  /// ξ'(l) ξ''(l) s(l) for l = m..M.
  std::vector<Integer> s;

  int size() const noexcept { return big_m - m + 1; }
};

/// Assembles R and the S vector from ξ and center constants only.
RSystem build_r_system(const OmegaLabel& first, const OmegaLabel& second, const ClassLabel& c,
                       const CenterConstants& s);

/// Forward substitution on (1+R)·P = S; entry i is P^{(m+i, c)}.
std::vector<Integer> solve_p_from_s(const RSystem& system);

/// φ(e_{(l',c)}) = Σ_{l'<=l<=n} ξ(l',c;l) e_{c(l)}, extended linearly.
CenterVector phi(const AlgebraVector& a, int n);

/// The combination e_{(l,c)} - Σ_{l<l'<=n} β_{l'} e_{(l',c)} whose image under φ
/// is exactly e_{c(l)} through level n. Throws InvalidLabel unless α(c) <= l <= n.
AlgebraVector phi_preimage(const CenterBasisLabel& target, int n);

enum class FamilyKind { Symmetric, Wreath, DType, User };

/// λ ↦ G_λ for λ ⊆ {1..N}: G_λ is the set of family members with support in λ.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Symmetric;
  FiniteGroup base = trivial_group();
  std::string name = "sym";

  /// "sym", "wreath:<builtin>", "dtype", or a group file (kind User).
  static FamilySpec builtin(std::string_view name);
  static FamilySpec from_group(FiniteGroup group, std::string name);

  bool contains(const GroupElement& h) const;
  /// Whether this family is expected to satisfy the admissibility axioms.
  bool expected_admissible() const noexcept { return kind != FamilyKind::DType; }
  /// Symmetric, wreath and user families build the partial-element algebra.
  bool has_algebra() const noexcept { return kind != FamilyKind::DType; }
};

struct AuditWitness {
  SupportSet lambda;
  PartialElement first;
  PartialElement second;
};

struct AuditReport {
  bool trivial_base = false;      // G_∅ = {e}
  bool finite_subgroups = false;  // every G_λ is a finite subgroup (enumerated)
  bool class_fusion = false;      // G-conjugate partial elements in λ are G_λ-conjugate
  std::size_t subsets_checked = 0;
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;
  std::optional<AuditWitness> witness;  // first violation in canonical order
  std::vector<std::string> notes;

  bool pass() const noexcept { return trivial_base && finite_subgroups && class_fusion; }
};

/// Checks admissibility at level n: for every λ ⊆ {1..n}, partial elements
/// inside λ that are conjugate under G_n must be conjugate under G_λ.
/// Conjugacy is decided by orbit enumeration only.
AuditReport admissibility_audit(const FamilySpec& family, int n, const Budget& budget = {},
                                int jobs = 1);

}  // namespace ikalg
