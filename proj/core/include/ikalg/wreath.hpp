#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ikalg/finite_group.hpp"
#include "ikalg/integer.hpp"

namespace ikalg {

/// Largest supported level. Enumeration budgets bind long before this does.
inline constexpr int kMaxPoints = 16;

/// Caps on brute-force enumeration.
struct Budget {
  std::uint64_t max_elements = 10'000'000;
};

/// A subset of the points {1..n}, stored 0-based as a bitmask.
class SupportSet {
 public:
  constexpr SupportSet() = default;
  constexpr explicit SupportSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr SupportSet first(int k) {
    return SupportSet(k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(int point) const noexcept { return (bits_ >> point) & 1u; }
  constexpr bool subset_of(SupportSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr SupportSet operator|(SupportSet o) const noexcept { return SupportSet(bits_ | o.bits_); }
  constexpr SupportSet operator&(SupportSet o) const noexcept { return SupportSet(bits_ & o.bits_); }
  constexpr void insert(int point) noexcept { bits_ |= std::uint64_t{1} << point; }

  /// Members as 0-based points, ascending.
  std::vector<int> points() const;

  constexpr bool operator==(const SupportSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical subset order: by size, then lexicographically by sorted members.
bool subset_less(SupportSet a, SupportSet b) noexcept;

/// All subsets of {1..n} in canonical order.
std::vector<SupportSet> subsets_canonical(int n);

/// Display form `{1,2}` (1-based).
std::string format_support(SupportSet s);

/// An element (s; f_1..f_n) of F wr S_n. `perm[i]` is the image of point i and
/// `deco[i]` the F-decoration at point i, both 0-based. Entries at and beyond n
/// are zero so that the defaulted ordering is the canonical one.
struct GroupElement {
  int n = 0;
  std::array<std::uint8_t, kMaxPoints> perm{};
  std::array<ElementIndex, kMaxPoints> deco{};

  static GroupElement identity(int n, const FiniteGroup& group);

  /// Build from a 0-based image vector and decorations (empty deco = identity).
  static GroupElement from(const std::vector<int>& images, const std::vector<int>& decorations,
                           const FiniteGroup& group);

  auto operator<=>(const GroupElement&) const = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& e) const noexcept;
};

/// Product a·b (b acts first): perm = a.perm ∘ b.perm,
/// deco[i] = a.deco[i] · b.deco[a.perm⁻¹(i)]. Throws LevelMismatch.
GroupElement multiply(const GroupElement& a, const GroupElement& b, const FiniteGroup& group);

GroupElement inverse(const GroupElement& a, const FiniteGroup& group);

/// g·a·g⁻¹.
GroupElement conjugate(const GroupElement& g, const GroupElement& a, const FiniteGroup& group);

/// Points where a moves or carries a nontrivial decoration.
SupportSet support(const GroupElement& a, const FiniteGroup& group);

bool is_identity(const GroupElement& a, const FiniteGroup& group);

/// Re-read a at a larger level, acting trivially on the new points.
GroupElement embed(const GroupElement& a, int level, const FiniteGroup& group);

/// Image of a set of points under a's permutation.
SupportSet image(const GroupElement& a, SupportSet s);

/// One cycle of a class label: its length and the F-class of its cycle product.
struct CyclePart {
  int length = 0;
  int fclass = 0;
  auto operator<=>(const CyclePart&) const = default;
};

/// Canonical conjugacy-class invariant of a finitary element of F wr S_inf.
/// Parts are sorted by length descending, then F-class ascending; parts
/// (1, identity class) are never stored. Labels order by alpha, then parts.
struct ClassLabel {
  std::vector<CyclePart> parts;
  int alpha = 0;

  ClassLabel() = default;
  /// Normalizes: drops (1, 0) parts, sorts, recomputes alpha.
  explicit ClassLabel(std::vector<CyclePart> p);

  bool empty() const noexcept { return parts.empty(); }

  friend bool operator==(const ClassLabel& a, const ClassLabel& b) { return a.parts == b.parts; }
  friend std::strong_ordering operator<=>(const ClassLabel& a, const ClassLabel& b);
};

/// Decomposes the permutation into cycles and records (length, class of the
/// cycle product) for each, where the product for a cycle i1→i2→…→iℓ starting
/// at its minimal point i1 is deco[iℓ]·…·deco[i2]·deco[i1].
ClassLabel class_label(const GroupElement& a, const FiniteGroup& group);

/// `[3,2]` when the base group is trivial (or every part has F-class 0 and
/// `shorthand` is set), otherwise `[(3,0),(2,1)]`.
std::string format_label(const ClassLabel& label, bool shorthand);

/// Accepts both `[3,2]` and `[(3,0),(2,1)]`, whitespace-insensitive; a bare
/// length k means (k, 0). Throws ParseError.
ClassLabel parse_label(std::string_view text);

/// Every label with alpha <= max_alpha over a base group with `fclasses`
/// conjugacy classes, in canonical order. Generated combinatorially.
std::vector<ClassLabel> all_labels(int max_alpha, int fclasses);

/// A canonical element of G_n carrying `label`: cycles on consecutive points
/// from 1, the class representative decorating each cycle's first point.
GroupElement representative_element(const ClassLabel& label, int n, const FiniteGroup& group);

/// |F|^n · n!, or BudgetExceeded if it exceeds the budget.
std::uint64_t element_count(const FiniteGroup& group, int n, const Budget& budget);

/// Visits every element of G_n once in canonical order (permutation
/// lexicographic, then decorations lexicographic).
void for_each_element(const FiniteGroup& group, int n, const Budget& budget,
                      const std::function<void(const GroupElement&)>& visit);

std::vector<GroupElement> enumerate_elements(const FiniteGroup& group, int n, const Budget& budget);

/// Membership in the even-signed subgroup (type D) of Z/2 wr S_n: an even
/// number of nontrivial decorations. Throws WrongBaseGroup unless |F| = 2.
bool d_type_membership(const GroupElement& a, const FiniteGroup& group);

/// `(e; -,+,+)`, `((1 2)(3 4 5); +,+,+,+,+)`; for trivial F just the cycles.
std::string format_element(const GroupElement& a, const FiniteGroup& group);

/// G_n fully enumerated with a class label per element.
class LevelGroup {
 public:
  LevelGroup(const FiniteGroup& group, int n, const Budget& budget);

  int level() const noexcept { return n_; }
  const FiniteGroup& base() const noexcept { return group_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }

  /// Distinct labels present in G_n, canonical order.
  const std::vector<ClassLabel>& labels() const noexcept { return labels_; }
  int label_id(std::size_t element) const { return label_of_[element]; }
  /// Index into labels(), or -1 if the label does not occur at this level.
  int find_label(const ClassLabel& label) const;
  Count class_size(int label_id) const { return class_sizes_.at(label_id); }
  /// Canonically first element carrying the label.
  const GroupElement& representative(int label_id) const {
    return elements_.at(first_of_.at(label_id));
  }
  /// Position of e in elements(); e must have level n.
  std::size_t index_of(const GroupElement& e) const;

 private:
  FiniteGroup group_;
  int n_;
  std::vector<GroupElement> elements_;
  std::vector<int> label_of_;
  std::vector<ClassLabel> labels_;
  std::vector<Count> class_sizes_;
  std::vector<std::size_t> first_of_;
  std::map<ClassLabel, int> label_index_;
};

}  // namespace ikalg
