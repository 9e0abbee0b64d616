#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ikalg/finite_group.hpp"
#include "ikalg/sparse_vector.hpp"
#include "ikalg/wreath.hpp"

namespace ikalg {

/// Class labels of G_l (α <= l) in canonical order, found by enumerating G_l.
std::vector<CenterBasisLabel> center_basis(int l, const FiniteGroup& group,
                                           const Budget& budget = {});

/// S^{c(l)}_{c'(l),c''(l)}: for the canonical h ∈ c(l), the number of pairs
/// h' ∈ c'(l), h'' ∈ c''(l) with h'h'' = h. Zero if any class misses G_l.
Count s_constant(const ClassLabel& first, const ClassLabel& second, const ClassLabel& target,
                 int l, const FiniteGroup& group, const Budget& budget = {});

/// Same count at an arbitrary h ∈ G_l (used to check representative independence).
Count s_constant_at(const ClassLabel& first, const ClassLabel& second, const GroupElement& h,
                    const FiniteGroup& group);

/// Structure constants of Z(k[G_l]) for every l <= max_level.
class CenterConstants {
 public:
  using Expansion = std::vector<std::pair<ClassLabel, Count>>;

  CenterConstants(const FiniteGroup& group, int max_level, const Budget& budget = {},
                  int jobs = 1);

  int max_level() const noexcept { return max_level_; }
  const FiniteGroup& base() const noexcept { return group_; }

  /// Class labels of G_l.
  const std::vector<ClassLabel>& labels(int l) const { return labels_.at(l); }
  Count class_size(int l, const ClassLabel& c) const;

  /// e_{c'(l)} e_{c''(l)} = Σ S e_{c(l)}, canonical order.
  const Expansion& expand(int l, const ClassLabel& first, const ClassLabel& second) const;

  Count at(int l, const ClassLabel& first, const ClassLabel& second,
           const ClassLabel& target) const;

 private:
  FiniteGroup group_;
  int max_level_;
  std::vector<std::vector<ClassLabel>> labels_;
  std::vector<std::map<ClassLabel, Count>> sizes_;
  std::vector<std::map<std::pair<ClassLabel, ClassLabel>, Expansion>> table_;
};

/// Product in Z(k[G_l]) for vectors supported at a single common level l.
/// Throws LevelMismatch when the operands sit at different or multiple levels.
CenterVector center_product(const CenterVector& a, const CenterVector& b,
                            const CenterConstants& constants);

/// Componentwise product in the direct product of the centers.
CenterVector direct_product(const CenterVector& a, const CenterVector& b,
                            const CenterConstants& constants);

}  // namespace ikalg
