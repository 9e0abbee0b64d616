#include "doctest.h"
#include "ikalg/correspondence.hpp"
#include "ikalg/errors.hpp"
#include "oracles.hpp"

using namespace ikalg;

namespace {

const FiniteGroup kTrivial = trivial_group();
const FiniteGroup kZ2 = cyclic_group(2);

ClassLabel c(const char* text) { return parse_label(text); }
OmegaLabel w(const char* text) { return parse_omega(text); }

}  // namespace

TEST_CASE("xi closed form") {
  for (int l = 0; l <= 6; ++l)
    for (const auto& label : all_labels(l, 2)) CHECK(xi_closed_form(l, label, l) == 1);
  CHECK(xi_closed_form(1, c("[]"), 3) == 3);
  CHECK(xi_closed_form(3, c("[2]"), 4) == 2);
  CHECK(xi_closed_form(2, c("[2]"), 3) == 1);
  CHECK(xi_closed_form(1, c("[2]"), 3) == 0);
  CHECK(xi_closed_form(4, c("[]"), 3) == 0);
}

TEST_CASE("xi count oracle") {
  CHECK(xi_count_oracle(1, c("[]"), 3, kTrivial) == 3);
  CHECK(xi_count_oracle(3, c("[2]"), 4, kTrivial) == 2);
  CHECK(xi_count_oracle(2, c("[2]"), 3, kTrivial) == 1);
  for (int l = 0; l <= 8; ++l) CHECK(xi_count_oracle(0, c("[]"), l, kTrivial) == 1);
}

TEST_CASE("xi closed form equals subset counting up to level 8") {
  for (const auto* f : {&kTrivial, &kZ2}) {
    const auto labels = all_labels(8, f->class_count());
    for (int l = 0; l <= 8; ++l)
      for (int lp = 0; lp <= l; ++lp)
        for (const auto& label : labels)
          if (label.alpha <= lp) REQUIRE(xi_closed_form(lp, label, l) == xi_count_oracle(lp, label, l, *f));
  }
}

TEST_CASE("main lemma examples") {
  const StructureConstants p(kTrivial, 4);
  const CenterConstants s(kTrivial, 4);
  auto r = verify_main_lemma(w("1:[]"), w("1:[]"), 2, c("[]"), p, s);
  CHECK(r.lhs == 4);
  CHECK(r.rhs == 4);
  CHECK(r.equal);
  r = verify_main_lemma(w("2:[2]"), w("2:[2]"), 3, c("[3]"), p, s);
  CHECK(r.lhs == 3);
  CHECK(r.rhs == 3);
  r = verify_main_lemma(w("1:[2]"), w("2:[2]"), 3, c("[2]"), p, s);
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 0);
  CHECK(r.equal);
  CHECK_THROWS_AS(verify_main_lemma(w("1:[]"), w("1:[]"), 5, c("[]"), p, s), Error);
}

TEST_CASE("main lemma holds on every tuple") {
  const std::vector<std::pair<FiniteGroup, int>> cases{{kTrivial, 5}, {kZ2, 3}};
  for (const auto& [f, top] : cases) {
    const StructureConstants p(f, top);
    const CenterConstants s(f, top);
    for (int l = 0; l <= top; ++l)
      for (int l1 = 0; l1 <= l; ++l1)
        for (const auto& c1 : s.labels(l))
          for (int l2 = 0; l2 <= l; ++l2)
            for (const auto& c2 : s.labels(l))
              for (const auto& t : s.labels(l))
                REQUIRE(verify_main_lemma({l1, c1}, {l2, c2}, l, t, p, s).equal);
  }
}

TEST_CASE("R system for e_(1,[])^2") {
  const CenterConstants s(kTrivial, 4);
  const auto sys = build_r_system(w("1:[]"), w("1:[]"), c("[]"), s);
  CHECK(sys.m == 1);
  CHECK(sys.big_m == 2);
  CHECK(sys.r == std::vector<std::vector<Count>>{{0, 0}, {2, 0}});
  CHECK(sys.s == std::vector<Integer>{1, 4});
  CHECK(solve_p_from_s(sys) == std::vector<Integer>{1, 2});
}

TEST_CASE("R system for the unit") {
  const CenterConstants s(kTrivial, 4);
  const auto sys = build_r_system(w("0:[]"), w("3:[2]"), c("[2]"), s);
  CHECK(sys.size() == 1);
  CHECK(sys.r == std::vector<std::vector<Count>>{{0}});
  CHECK(solve_p_from_s(sys) == sys.s);
  CHECK(sys.s == std::vector<Integer>{1});
}

TEST_CASE("R system for e_(2,[2])^2 into [3]") {
  const CenterConstants s(kTrivial, 4);
  const auto sys = build_r_system(w("2:[2]"), w("2:[2]"), c("[3]"), s);
  CHECK(sys.m == 2);
  CHECK(sys.big_m == 4);
  CHECK(sys.r == std::vector<std::vector<Count>>{{0, 0, 0}, {0, 0, 0}, {0, 1, 0}});
  // s(4): pairs of transpositions of S_4 multiplying to a fixed 3-cycle.
  const auto classes = oracle::element_classes(kTrivial, 4);
  std::set<GroupElement> transp;
  for (const auto& k : classes)
    if (class_label(*k.begin(), kTrivial) == c("[2]")) transp = k;
  const auto h = GroupElement::from({1, 2, 0, 3}, {}, kTrivial);
  CHECK(oracle::class_sum_coefficient(transp, transp, h, kTrivial) == 3);
  CHECK(sys.s == std::vector<Integer>{0, 3, 3});
  CHECK(solve_p_from_s(sys) == std::vector<Integer>{0, 3, 0});
  CHECK_THROWS_AS(build_r_system(w("3:[2]"), w("3:[2]"), c("[]"), s), Error);
}

TEST_CASE("solving the R system reproduces P") {
  const std::vector<std::pair<FiniteGroup, int>> cases{{kTrivial, 5}, {kZ2, 3}};
  for (const auto& [f, top] : cases) {
    const StructureConstants p(f, top);
    const CenterConstants s(f, top);
    for (const auto& a : p.basis())
      for (const auto& b : p.basis()) {
        if (a.l + b.l > top) continue;
        for (const auto& t : s.labels(a.l + b.l)) {
          const auto sys = build_r_system(a, b, t, s);
          for (int i = 0; i < sys.size(); ++i)
            for (int j = i; j < sys.size(); ++j) CHECK(sys.r[i][j] == 0);
          const auto solved = solve_p_from_s(sys);
          for (int k = 0; k < sys.size(); ++k) REQUIRE(solved[k] == p.at(a, b, {sys.m + k, t}));
        }
      }
  }
}

TEST_CASE("phi examples") {
  auto img = phi(AlgebraVector::basis(w("0:[]"), 3), 3);
  CenterVector expected(3);
  for (int l = 0; l <= 3; ++l) expected.add({l, c("[]")}, 1);
  CHECK(img == expected);

  img = phi(AlgebraVector::basis(w("2:[2]"), 4), 4);
  CHECK(format_vector(img, true) == "{2:[2]: 1, 3:[2]: 1, 4:[2]: 1}");
  img = phi(AlgebraVector::basis(w("1:[]"), 3), 3);
  CHECK(format_vector(img, true) == "{1:[]: 1, 2:[]: 2, 3:[]: 3}");
}

TEST_CASE("phi is a homomorphism") {
  const std::vector<std::pair<FiniteGroup, int>> cases{{kTrivial, 5}, {kZ2, 3}};
  for (const auto& [f, n] : cases) {
    const StructureConstants p(f, n);
    const CenterConstants s(f, n);
    for (const auto& a : p.basis())
      for (const auto& b : p.basis()) {
        if (a.l + b.l > n) continue;
        const auto ea = AlgebraVector::basis(a, n), eb = AlgebraVector::basis(b, n);
        REQUIRE(direct_product(phi(ea, n), phi(eb, n), s) == phi(ik_product(ea, eb, n, p), n));
      }
  }
}

TEST_CASE("phi preimage") {
  auto pre = phi_preimage({0, c("[]")}, 1);
  CHECK(pre == AlgebraVector::basis(w("0:[]"), 1) - AlgebraVector::basis(w("1:[]"), 1));
  pre = phi_preimage({2, c("[2]")}, 3);
  CHECK(pre == AlgebraVector::basis(w("2:[2]"), 3) - AlgebraVector::basis(w("3:[2]"), 3));
  CHECK(phi_preimage({4, c("[2,2]")}, 4) == AlgebraVector::basis(w("4:[2,2]"), 4));
  CHECK_THROWS_AS(phi_preimage({1, c("[2]")}, 3), Error);
  CHECK_THROWS_AS(phi_preimage({4, c("[2]")}, 3), Error);

  for (int n = 0; n <= 5; ++n)
    for (const auto* f : {&kTrivial, &kZ2})
      for (int l = 0; l <= n; ++l)
        for (const auto& label : all_labels(l, f->class_count())) {
          const CenterBasisLabel target{l, label};
          REQUIRE(phi(phi_preimage(target, n), n) == CenterVector::basis(target, n));
        }
}

TEST_CASE("family specs") {
  CHECK(FamilySpec::builtin("sym").base.is_trivial());
  CHECK(FamilySpec::builtin("wreath:cyclic2").base.order() == 2);
  CHECK(FamilySpec::builtin("wreath:sym3").base.order() == 6);
  CHECK(FamilySpec::builtin("dtype").kind == FamilyKind::DType);
  CHECK_FALSE(FamilySpec::builtin("dtype").expected_admissible());
  CHECK_THROWS_AS(FamilySpec::builtin("btype"), Error);
  const auto d = FamilySpec::builtin("dtype");
  CHECK_FALSE(d.contains(GroupElement::from({0, 1}, {1, 0}, d.base)));
  CHECK(d.contains(GroupElement::from({0, 1}, {1, 1}, d.base)));
}

TEST_CASE("admissibility audit") {
  const auto sym = admissibility_audit(FamilySpec::builtin("sym"), 4);
  CHECK(sym.pass());
  CHECK(sym.trivial_base);
  CHECK(sym.finite_subgroups);
  CHECK(sym.subsets_checked == 16);
  CHECK(sym.pairs_checked > 0);

  CHECK(admissibility_audit(FamilySpec::builtin("wreath:cyclic2"), 3).pass());
  CHECK(admissibility_audit(FamilySpec::builtin("wreath:cyclic3"), 2).pass());
  CHECK(admissibility_audit(FamilySpec::builtin("wreath:sym3"), 2).pass());

  const auto d = admissibility_audit(FamilySpec::builtin("dtype"), 3, Budget{}, 4);
  CHECK_FALSE(d.pass());
  CHECK(d.trivial_base);
  CHECK(d.finite_subgroups);
  REQUIRE(d.witness.has_value());
  const FiniteGroup& z2 = kZ2;
  CHECK(d.witness->lambda == SupportSet(0b011));
  CHECK(d.witness->first.domain == SupportSet(0b011));
  CHECK(d.witness->second.domain == SupportSet(0b011));
  CHECK(d.witness->first.h == GroupElement::from({1, 0, 2}, {0, 0, 0}, z2));
  CHECK(d.witness->second.h == GroupElement::from({1, 0, 2}, {1, 1, 0}, z2));
  // Smallest level where the fusion appears.
  CHECK(admissibility_audit(FamilySpec::builtin("dtype"), 2).pass());
}
