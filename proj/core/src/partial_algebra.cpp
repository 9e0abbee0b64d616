#include "ikalg/partial_algebra.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "ikalg/errors.hpp"
#include "ikalg/parallel.hpp"

namespace ikalg {

namespace {

using SizeCounts = std::array<std::array<Count, kMaxPoints + 1>, kMaxPoints + 1>;

/// cnt[a][b] += number of (λ', λ'') with s1 ⊆ λ', s2 ⊆ λ'', λ' ∪ λ'' = whole,
/// |λ'| = a, |λ''| = b. Assumes s1, s2 ⊆ whole.
void count_domain_pairs(SupportSet whole, SupportSet s1, SupportSet s2, SizeCounts& cnt) {
  const std::uint64_t free1 = whole.bits() & ~s1.bits();
  std::uint64_t sub = free1;
  while (true) {
    const SupportSet first(s1.bits() | sub);
    // λ'' must cover whole \ λ' and s2; the rest of whole is optional.
    const SupportSet required(((whole.bits() & ~first.bits()) | s2.bits()));
    const int optional = whole.size() - required.size();
    for (int k = 0; k <= optional; ++k)
      cnt[first.size()][required.size() + k] += binomial(optional, k);
    if (sub == 0) break;
    sub = (sub - 1) & free1;
  }
}

void require_valid(const OmegaLabel& omega) {
  if (omega.l < 0 || !omega.valid())
    throw Error(ErrorKind::InvalidLabel,
                format_leveled(omega, false) + " is empty: alpha exceeds the level");
}

}  // namespace

PartialElement PartialElement::make(SupportSet domain, const GroupElement& h,
                                    const FiniteGroup& group) {
  if (!support(h, group).subset_of(domain))
    throw Error(ErrorKind::InvalidLabel, "support of " + format_element(h, group) +
                                             " is not inside " + format_support(domain));
  if (h.n < 64 && (domain.bits() >> h.n) != 0)
    throw Error(ErrorKind::LevelMismatch, format_support(domain) + " exceeds level " +
                                              std::to_string(h.n));
  return {domain, h};
}

bool partial_less(const PartialElement& a, const PartialElement& b) {
  if (a.domain != b.domain) return subset_less(a.domain, b.domain);
  return a.h < b.h;
}

std::string format_partial(const PartialElement& p, const FiniteGroup& group) {
  return "(" + format_support(p.domain) + ", " + format_element(p.h, group) + ")";
}

PartialElement pmultiply(const PartialElement& a, const PartialElement& b,
                         const FiniteGroup& group) {
  return {a.domain | b.domain, multiply(a.h, b.h, group)};
}

OmegaLabel omega_of(const PartialElement& p, const FiniteGroup& group) {
  return {p.domain.size(), class_label(p.h, group)};
}

PartialElement conjugate(const GroupElement& g, const PartialElement& p,
                         const FiniteGroup& group) {
  return {image(g, p.domain), conjugate(g, p.h, group)};
}

std::vector<PartialElement> enumerate_omega_class(const OmegaLabel& omega, SupportSet within,
                                                  const FiniteGroup& group, int n,
                                                  const Budget& budget) {
  std::vector<PartialElement> out;
  if (!omega.valid() || omega.l > within.size()) return out;
  const auto elements = enumerate_elements(group, n, budget);
  std::vector<SupportSet> supports;
  std::vector<bool> matches;
  for (const auto& e : elements) {
    supports.push_back(support(e, group));
    matches.push_back(class_label(e, group) == omega.c);
  }
  for (SupportSet domain : subsets_canonical(n)) {
    if (domain.size() != omega.l || !domain.subset_of(within)) continue;
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (matches[i] && supports[i].subset_of(domain)) out.push_back({domain, elements[i]});
  }
  return out;
}

std::vector<PartialElement> partial_elements(std::span<const GroupElement> members, int n,
                                             const FiniteGroup& group) {
  std::vector<SupportSet> supports;
  supports.reserve(members.size());
  for (const auto& e : members) supports.push_back(support(e, group));
  std::vector<PartialElement> out;
  for (SupportSet domain : subsets_canonical(n))
    for (std::size_t i = 0; i < members.size(); ++i)
      if (supports[i].subset_of(domain)) out.push_back({domain, members[i]});
  std::stable_sort(out.begin(), out.end(), partial_less);
  return out;
}

std::vector<int> orbit_ids(std::span<const PartialElement> items,
                           std::span<const GroupElement> acting, const FiniteGroup& group) {
  std::map<std::pair<std::uint64_t, GroupElement>, std::size_t> where;
  for (std::size_t i = 0; i < items.size(); ++i)
    where.emplace(std::make_pair(items[i].domain.bits(), items[i].h), i);
  std::vector<GroupElement> inverses;
  inverses.reserve(acting.size());
  for (const auto& g : acting) inverses.push_back(inverse(g, group));

  std::vector<int> orbit(items.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (orbit[i] >= 0) continue;
    orbit[i] = next;
    for (std::size_t k = 0; k < acting.size(); ++k) {
      const auto& g = acting[k];
      const PartialElement moved{image(g, items[i].domain),
                                 multiply(multiply(g, items[i].h, group), inverses[k], group)};
      auto it = where.find({moved.domain.bits(), moved.h});
      if (it != where.end()) orbit[it->second] = next;
    }
    ++next;
  }
  return orbit;
}

OrbitPartition orbit_oracle(const FiniteGroup& group, int n, const Budget& budget) {
  const auto members = enumerate_elements(group, n, budget);
  OrbitPartition out;
  out.elements = partial_elements(members, n, group);
  out.orbit_of = orbit_ids(out.elements, members, group);
  out.orbit_count =
      out.orbit_of.empty() ? 0 : *std::max_element(out.orbit_of.begin(), out.orbit_of.end()) + 1;
  return out;
}

PartialElement canonical_representative(const OmegaLabel& omega, const FiniteGroup& group,
                                        const Budget& budget) {
  require_valid(omega);
  const LevelGroup level(group, omega.l, budget);
  const int id = level.find_label(omega.c);
  if (id < 0)
    throw Error(ErrorKind::InvalidLabel,
                format_leveled(omega, false) + " does not occur in G_" + std::to_string(omega.l));
  return {SupportSet::first(omega.l), level.representative(id)};
}

Count count_factorizations(const OmegaLabel& first, const OmegaLabel& second,
                           const PartialElement& target, const FiniteGroup& group,
                           const Budget& budget) {
  if (!first.valid() || !second.valid()) return 0;
  const SupportSet whole = target.domain;
  Count total = 0;
  for_each_element(group, target.h.n, budget, [&](const GroupElement& h1) {
    const SupportSet s1 = support(h1, group);
    if (!s1.subset_of(whole) || s1.size() > first.l) return;
    const GroupElement h2 = multiply(inverse(h1, group), target.h, group);
    const SupportSet s2 = support(h2, group);
    if (!s2.subset_of(whole) || s2.size() > second.l) return;
    if (class_label(h1, group) != first.c || class_label(h2, group) != second.c) return;
    SizeCounts cnt{};
    count_domain_pairs(whole, s1, s2, cnt);
    total += cnt[first.l][second.l];
  });
  return total;
}

Count p_constant(const OmegaLabel& first, const OmegaLabel& second, const OmegaLabel& target,
                 const FiniteGroup& group, const Budget& budget) {
  require_valid(first);
  require_valid(second);
  return count_factorizations(first, second, canonical_representative(target, group, budget),
                              group, budget);
}

std::vector<OmegaLabel> omega_basis(const FiniteGroup& group, int n, const Budget& budget) {
  const LevelGroup top(group, n, budget);
  std::vector<OmegaLabel> out;
  for (int l = 0; l <= n; ++l)
    for (const auto& c : top.labels())
      if (c.alpha <= l) out.push_back({l, c});
  return out;
}

StructureConstants::StructureConstants(const FiniteGroup& group, int max_level,
                                       const Budget& budget, int jobs)
    : group_(group), max_level_(max_level) {
  if (max_level < 0) throw Error(ErrorKind::Config, "negative level");
  std::vector<LevelGroup> levels;
  levels.reserve(max_level + 1);
  for (int l = 0; l <= max_level; ++l) levels.emplace_back(group, l, budget);

  struct Task {
    int l;
    int label;
  };
  std::vector<Task> tasks;
  for (int l = 0; l <= max_level; ++l)
    for (int k = 0; k < static_cast<int>(levels[l].labels().size()); ++k) {
      tasks.push_back({l, k});
      basis_.push_back({l, levels[l].labels()[k]});
    }
  std::sort(basis_.begin(), basis_.end());
  std::sort(tasks.begin(), tasks.end(), [&](const Task& a, const Task& b) {
    return OmegaLabel{a.l, levels[a.l].labels()[a.label]} <
           OmegaLabel{b.l, levels[b.l].labels()[b.label]};
  });

  // (|λ'|, label id of h', |λ''|, label id of h'') -> count, per target.
  using Key = std::tuple<int, int, int, int>;
  std::vector<std::map<Key, Count>> results(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t t) {
    const auto& level = levels[tasks[t].l];
    const FiniteGroup& f = level.base();
    const SupportSet whole = SupportSet::first(level.level());
    const GroupElement& h = level.representative(tasks[t].label);
    auto& out = results[t];
    for (std::size_t i = 0; i < level.elements().size(); ++i) {
      const GroupElement& h1 = level.elements()[i];
      const GroupElement h2 = multiply(inverse(h1, f), h, f);
      const std::size_t j = level.index_of(h2);
      SizeCounts cnt{};
      count_domain_pairs(whole, support(h1, f), support(h2, f), cnt);
      for (int a = 0; a <= level.level(); ++a)
        for (int b = 0; b <= level.level(); ++b)
          if (cnt[a][b] != 0) out[{a, level.label_id(i), b, level.label_id(j)}] += cnt[a][b];
    }
  });

  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const auto& level = levels[tasks[t].l];
    const OmegaLabel target{tasks[t].l, level.labels()[tasks[t].label]};
    for (const auto& [key, count] : results[t]) {
      const auto& [a, c1, b, c2] = key;
      OmegaLabel first{a, level.labels()[c1]};
      OmegaLabel second{b, level.labels()[c2]};
      table_[{std::move(first), std::move(second)}].emplace_back(target, count);
    }
  }
}

const StructureConstants::Expansion& StructureConstants::expand(const OmegaLabel& first,
                                                                const OmegaLabel& second) const {
  static const Expansion kEmpty;
  auto it = table_.find({first, second});
  return it == table_.end() ? kEmpty : it->second;
}

Count StructureConstants::at(const OmegaLabel& first, const OmegaLabel& second,
                             const OmegaLabel& target) const {
  if (target.l > max_level_)
    throw Error(ErrorKind::LevelMismatch, "target level " + std::to_string(target.l) +
                                              " above table level " + std::to_string(max_level_));
  for (const auto& [omega, count] : expand(first, second))
    if (omega == target) return count;
  return 0;
}

AlgebraVector ik_product(const AlgebraVector& a, const AlgebraVector& b, int n,
                         const StructureConstants& constants) {
  if (a.level() != n || b.level() != n)
    throw Error(ErrorKind::LevelMismatch, "operands must both be at level " + std::to_string(n));
  if (n > constants.max_level())
    throw Error(ErrorKind::LevelMismatch, "structure constants only reach level " +
                                              std::to_string(constants.max_level()));
  AlgebraVector out(n);
  for (const auto& [w1, x1] : a.terms())
    for (const auto& [w2, x2] : b.terms()) {
      const Integer scale = x1 * x2;
      for (const auto& [target, count] : constants.expand(w1, w2))
        if (target.l <= n) out.add(target, scale * count);
    }
  return out;
}

AlgebraVector project(const AlgebraVector& a, int to_level) {
  if (to_level > a.level())
    throw Error(ErrorKind::LevelMismatch, "projection must not raise the level");
  AlgebraVector out(to_level);
  for (const auto& [omega, x] : a.terms())
    if (omega.l <= to_level) out.add(omega, x);
  return out;
}

}  // namespace ikalg
