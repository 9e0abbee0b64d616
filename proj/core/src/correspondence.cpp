#include "ikalg/correspondence.hpp"

#include <algorithm>

#include "ikalg/errors.hpp"
#include "ikalg/parallel.hpp"

namespace ikalg {

Count xi_closed_form(int lprime, const ClassLabel& c, int l) {
  if (lprime < c.alpha || lprime > l) return 0;
  return binomial(l - c.alpha, lprime - c.alpha);
}

Count xi_count_oracle(int lprime, const ClassLabel& c, int l, const FiniteGroup& group) {
  if (c.alpha > l || lprime < 0 || lprime > l) return 0;
  if (l > 20) throw Error(ErrorKind::BudgetExceeded, "subset enumeration above 2^20");
  const GroupElement h = representative_element(c, l, group);
  if (class_label(h, group) != c)
    throw Error(ErrorKind::InvalidLabel, "no element of " + format_label(c, false) + " found");
  const SupportSet s = support(h, group);
  Count total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    const SupportSet sub(mask);
    if (sub.size() == lprime && s.subset_of(sub)) ++total;
  }
  return total;
}

MainLemmaReport verify_main_lemma(const OmegaLabel& first, const OmegaLabel& second, int l,
                                  const ClassLabel& c, const StructureConstants& p,
                                  const CenterConstants& s) {
  if (l > p.max_level() || l > s.max_level())
    throw Error(ErrorKind::BudgetExceeded, "level " + std::to_string(l) +
                                               " beyond the precomputed tables");
  MainLemmaReport out;
  out.lhs = Integer(xi_closed_form(first.l, first.c, l)) *
            xi_closed_form(second.l, second.c, l) * s.at(l, first.c, second.c, c);
  out.rhs = 0;
  if (first.valid() && second.valid())
    for (int lt = 0; lt <= l; ++lt) {
      const Count xi = xi_closed_form(lt, c, l);
      if (xi == 0) continue;
      out.rhs += Integer(xi) * p.at(first, second, {lt, c});
    }
  out.equal = out.lhs == out.rhs;
  return out;
}

RSystem build_r_system(const OmegaLabel& first, const OmegaLabel& second, const ClassLabel& c,
                       const CenterConstants& s) {
  RSystem sys;
  sys.first = first;
  sys.second = second;
  sys.c = c;
  sys.m = std::max(first.l, second.l);
  sys.big_m = first.l + second.l;
  if (sys.big_m > s.max_level())
    throw Error(ErrorKind::BudgetExceeded, "R-system needs center constants up to level " +
                                               std::to_string(sys.big_m));
  const int size = sys.size();
  sys.r.assign(size, std::vector<Count>(size, 0));
  sys.s.assign(size, 0);
  for (int i = 0; i < size; ++i) {
    const int l = sys.m + i;
    for (int j = 0; j < i; ++j) sys.r[i][j] = xi_closed_form(sys.m + j, c, l);
    sys.s[i] = Integer(xi_closed_form(first.l, first.c, l)) *
               xi_closed_form(second.l, second.c, l) * s.at(l, first.c, second.c, c);
  }
  return sys;
}

std::vector<Integer> solve_p_from_s(const RSystem& system) {
  const int size = system.size();
  std::vector<Integer> p(size);
  for (int i = 0; i < size; ++i) {
    Integer acc = system.s[i];
    for (int j = 0; j < i; ++j) acc -= Integer(system.r[i][j]) * p[j];
    p[i] = acc;
  }
  return p;
}

CenterVector phi(const AlgebraVector& a, int n) {
  if (a.level() > n)
    throw Error(ErrorKind::LevelMismatch, "phi target level below the operand level");
  CenterVector out(n);
  for (const auto& [omega, x] : a.terms())
    for (int l = omega.l; l <= n; ++l) {
      const Count xi = xi_closed_form(omega.l, omega.c, l);
      if (xi != 0) out.add({l, omega.c}, x * xi);
    }
  return out;
}

AlgebraVector phi_preimage(const CenterBasisLabel& target, int n) {
  if (!target.valid() || target.l > n || target.l < 0)
    throw Error(ErrorKind::InvalidLabel, format_leveled(target, false) +
                                             " is not a basis label at level " +
                                             std::to_string(n));
  // x_k for k = l..n solves Σ_{j<=k} x_j ξ(j,c;k) = δ_{k,l}; ξ(k,c;k) = 1.
  const int l = target.l;
  std::vector<Integer> x(n - l + 1);
  x[0] = 1;
  for (int k = l + 1; k <= n; ++k) {
    Integer acc = 0;
    for (int j = l; j < k; ++j) acc += x[j - l] * xi_closed_form(j, target.c, k);
    x[k - l] = -acc;
  }
  AlgebraVector out(n);
  for (int k = l; k <= n; ++k) out.add({k, target.c}, x[k - l]);
  return out;
}

FamilySpec FamilySpec::builtin(std::string_view name) {
  FamilySpec f;
  f.name = std::string(name);
  if (name == "sym" || name == "symmetric") {
    f.kind = FamilyKind::Symmetric;
    f.base = trivial_group();
  } else if (name == "dtype") {
    f.kind = FamilyKind::DType;
    f.base = cyclic_group(2);
  } else if (name.starts_with("wreath:")) {
    f.kind = FamilyKind::Wreath;
    f.base = builtin_group(name.substr(7));
  } else {
    throw Error(ErrorKind::UnknownBuiltin, "unknown family '" + std::string(name) + "'");
  }
  return f;
}

FamilySpec FamilySpec::from_group(FiniteGroup group, std::string name) {
  FamilySpec f;
  f.kind = FamilyKind::User;
  f.base = std::move(group);
  f.name = std::move(name);
  return f;
}

bool FamilySpec::contains(const GroupElement& h) const {
  return kind == FamilyKind::DType ? d_type_membership(h, base) : true;
}

AuditReport admissibility_audit(const FamilySpec& family, int n, const Budget& budget,
                                int jobs) {
  const FiniteGroup& group = family.base;
  std::vector<GroupElement> members;
  for_each_element(group, n, budget, [&](const GroupElement& h) {
    if (family.contains(h)) members.push_back(h);
  });
  std::vector<SupportSet> member_support;
  for (const auto& h : members) member_support.push_back(support(h, group));

  AuditReport report;
  report.finite_subgroups = true;
  {
    std::size_t trivial = 0;
    bool only_identity = true;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (member_support[i].empty()) {
        ++trivial;
        only_identity = only_identity && is_identity(members[i], group);
      }
    report.trivial_base = trivial == 1 && only_identity;
  }

  const auto items = partial_elements(members, n, group);
  const auto global = orbit_ids(items, members, group);
  const auto subsets = subsets_canonical(n);

  struct Local {
    bool closed = true;
    std::size_t pairs = 0;
    std::size_t violations = 0;
    std::optional<AuditWitness> witness;
  };
  std::vector<Local> locals(subsets.size());
  parallel_for(subsets.size(), jobs, [&](std::size_t k) {
    const SupportSet lambda = subsets[k];
    Local& out = locals[k];
    std::vector<GroupElement> sub_members;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (member_support[i].subset_of(lambda)) sub_members.push_back(members[i]);
    // G_λ must be a subgroup: closed under products (finite, so inverses follow).
    for (const auto& a : sub_members)
      for (const auto& b : sub_members) {
        const auto ab = multiply(a, b, group);
        if (!family.contains(ab) || !support(ab, group).subset_of(lambda)) out.closed = false;
      }
    std::vector<PartialElement> sub_items;
    std::vector<int> sub_global;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (items[i].domain.subset_of(lambda)) {
        sub_items.push_back(items[i]);
        sub_global.push_back(global[i]);
      }
    const auto local = orbit_ids(sub_items, sub_members, group);
    for (std::size_t i = 0; i < sub_items.size(); ++i)
      for (std::size_t j = i + 1; j < sub_items.size(); ++j) {
        if (sub_global[i] != sub_global[j]) continue;
        ++out.pairs;
        if (local[i] != local[j]) {
          ++out.violations;
          if (!out.witness) out.witness = AuditWitness{lambda, sub_items[i], sub_items[j]};
        }
      }
  });

  bool closed = true;
  for (const auto& local : locals) {
    closed = closed && local.closed;
    report.pairs_checked += local.pairs;
    report.violations += local.violations;
    if (!report.witness && local.witness) report.witness = local.witness;
  }
  report.finite_subgroups = report.finite_subgroups && closed;
  report.subsets_checked = subsets.size();
  report.class_fusion = report.violations == 0;
  report.notes.push_back("orbit products are finite: unions of finite subsets have bounded size");
  report.notes.push_back("orbit separation is not audited: it quantifies over every orbit level");
  return report;
}

}  // namespace ikalg
