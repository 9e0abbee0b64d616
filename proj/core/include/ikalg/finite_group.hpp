#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ikalg {

/// Index of an element of a finite group, as given by its multiplication table.
using ElementIndex = std::uint8_t;

/// Default cap on the order of a base group.
inline constexpr int kDefaultMaxGroupOrder = 24;

/// A finite group given extensionally by its multiplication table. Immutable
/// after construction; inverses and conjugacy classes are precomputed.
///
/// Conjugacy classes are numbered canonically: ordered by their minimal element
/// index, except that the identity's class is always class 0.
class FiniteGroup {
 public:
  /// Validates `table` (order x order, entries in range, associative, with
  /// identity and inverses). Throws Error with the offending indices.
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names = {},
              int max_order = kDefaultMaxGroupOrder);

  int order() const noexcept { return order_; }
  ElementIndex identity() const noexcept { return identity_; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const noexcept {
    return mult_[static_cast<std::size_t>(a) * order_ + b];
  }
  ElementIndex inv(ElementIndex a) const noexcept { return inv_[a]; }

  int class_of(ElementIndex a) const noexcept { return class_of_[a]; }
  int class_count() const noexcept { return static_cast<int>(class_reps_.size()); }
  ElementIndex class_rep(int cls) const { return class_reps_.at(cls); }
  const std::vector<ElementIndex>& class_reps() const noexcept { return class_reps_; }
  std::vector<ElementIndex> class_members(int cls) const;

  bool is_trivial() const noexcept { return order_ == 1; }

  /// Display name; falls back to the decimal index when no names were given.
  const std::string& name(ElementIndex a) const { return names_.at(a); }

  /// The element whose name is `name`, or -1.
  int find_name(std::string_view name) const noexcept;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.mult_ == b.mult_;
  }

 private:
  int order_ = 0;
  std::vector<ElementIndex> mult_;
  std::vector<ElementIndex> inv_;
  ElementIndex identity_ = 0;
  std::vector<int> class_of_;
  std::vector<ElementIndex> class_reps_;
  std::vector<std::string> names_;
};

/// Builds a FiniteGroup from a multiplication table.
FiniteGroup load_group(const std::vector<std::vector<int>>& table,
                       const std::vector<std::string>& names = {},
                       int max_order = kDefaultMaxGroupOrder);

/// Parses the JSON group-spec document `{"order": n, "mult": [[...]], "names": [...]}`.
FiniteGroup load_group_json(std::string_view json_text, int max_order = kDefaultMaxGroupOrder);

/// Reads and parses a group-spec file.
FiniteGroup load_group_file(const std::string& path, int max_order = kDefaultMaxGroupOrder);

/// Built-in groups: "trivial", "cyclicM" / "cyclic(M)" for 1 <= M <= 12,
/// "sym3" / "sym(3)". cyclic(2) uses the names "+" and "-".
FiniteGroup builtin_group(std::string_view name);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int m);
FiniteGroup symmetric_group_3();

struct ConjugacyClasses {
  std::vector<int> class_of;                      // per element
  std::vector<std::vector<ElementIndex>> members;  // per class, ascending
};

/// Conjugation orbits of `group`, in the canonical class order.
ConjugacyClasses conjugacy_classes(const FiniteGroup& group);

}  // namespace ikalg
