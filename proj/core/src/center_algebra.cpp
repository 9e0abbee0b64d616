#include "ikalg/center_algebra.hpp"

#include <set>

#include "ikalg/errors.hpp"
#include "ikalg/parallel.hpp"

namespace ikalg {

std::vector<CenterBasisLabel> center_basis(int l, const FiniteGroup& group,
                                           const Budget& budget) {
  const LevelGroup level(group, l, budget);
  std::vector<CenterBasisLabel> out;
  for (const auto& c : level.labels()) out.push_back({l, c});
  return out;
}

Count s_constant_at(const ClassLabel& first, const ClassLabel& second, const GroupElement& h,
                    const FiniteGroup& group) {
  Count total = 0;
  // Budget is implied by the caller having built h at this level.
  for_each_element(group, h.n, Budget{~std::uint64_t{0}}, [&](const GroupElement& h1) {
    if (class_label(h1, group) != first) return;
    if (class_label(multiply(inverse(h1, group), h, group), group) == second) ++total;
  });
  return total;
}

Count s_constant(const ClassLabel& first, const ClassLabel& second, const ClassLabel& target,
                 int l, const FiniteGroup& group, const Budget& budget) {
  if (first.alpha > l || second.alpha > l || target.alpha > l) return 0;
  const LevelGroup level(group, l, budget);
  const int id = level.find_label(target);
  if (id < 0 || level.find_label(first) < 0 || level.find_label(second) < 0) return 0;
  return s_constant_at(first, second, level.representative(id), group);
}

CenterConstants::CenterConstants(const FiniteGroup& group, int max_level, const Budget& budget,
                                 int jobs)
    : group_(group), max_level_(max_level) {
  if (max_level < 0) throw Error(ErrorKind::Config, "negative level");
  std::vector<LevelGroup> levels;
  for (int l = 0; l <= max_level; ++l) levels.emplace_back(group, l, budget);
  labels_.resize(max_level + 1);
  sizes_.resize(max_level + 1);
  table_.resize(max_level + 1);

  struct Task {
    int l;
    int label;
  };
  std::vector<Task> tasks;
  for (int l = 0; l <= max_level; ++l) {
    labels_[l] = levels[l].labels();
    for (int k = 0; k < static_cast<int>(labels_[l].size()); ++k) {
      sizes_[l][labels_[l][k]] = levels[l].class_size(k);
      tasks.push_back({l, k});
    }
  }

  std::vector<std::map<std::pair<int, int>, Count>> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t t) {
    const auto& level = levels[tasks[t].l];
    const FiniteGroup& f = level.base();
    const GroupElement& h = level.representative(tasks[t].label);
    for (std::size_t i = 0; i < level.elements().size(); ++i) {
      const GroupElement h2 = multiply(inverse(level.elements()[i], f), h, f);
      ++results[t][{level.label_id(i), level.label_id(level.index_of(h2))}];
    }
  });

  // Tasks are in (l, label) order, so expansions come out sorted.
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const int l = tasks[t].l;
    const auto& names = labels_[l];
    for (const auto& [key, count] : results[t])
      table_[l][{names[key.first], names[key.second]}].emplace_back(names[tasks[t].label],
                                                                    count);
  }
}

Count CenterConstants::class_size(int l, const ClassLabel& c) const {
  const auto& sizes = sizes_.at(l);
  auto it = sizes.find(c);
  return it == sizes.end() ? 0 : it->second;
}

const CenterConstants::Expansion& CenterConstants::expand(int l, const ClassLabel& first,
                                                          const ClassLabel& second) const {
  static const Expansion kEmpty;
  if (l < 0 || l > max_level_)
    throw Error(ErrorKind::LevelMismatch, "level " + std::to_string(l) +
                                              " outside the center table");
  auto it = table_[l].find({first, second});
  return it == table_[l].end() ? kEmpty : it->second;
}

Count CenterConstants::at(int l, const ClassLabel& first, const ClassLabel& second,
                          const ClassLabel& target) const {
  for (const auto& [c, count] : expand(l, first, second))
    if (c == target) return count;
  return 0;
}

namespace {

std::set<int> levels_of(const CenterVector& v) {
  std::set<int> out;
  for (const auto& [label, x] : v.terms()) out.insert(label.l);
  return out;
}

}  // namespace

CenterVector direct_product(const CenterVector& a, const CenterVector& b,
                            const CenterConstants& constants) {
  a.require_same_level(b);
  CenterVector out(a.level());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      if (x.l != y.l) continue;
      const Integer scale = cx * cy;
      for (const auto& [c, count] : constants.expand(x.l, x.c, y.c))
        out.add({x.l, c}, scale * count);
    }
  return out;
}

CenterVector center_product(const CenterVector& a, const CenterVector& b,
                            const CenterConstants& constants) {
  const auto la = levels_of(a);
  const auto lb = levels_of(b);
  if (la.size() > 1 || lb.size() > 1 || (!la.empty() && !lb.empty() && la != lb))
    throw Error(ErrorKind::LevelMismatch, "center_product needs both operands at one level");
  return direct_product(a, b, constants);
}

}  // namespace ikalg
