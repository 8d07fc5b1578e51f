#include <random>

#include "doctest.h"
#include "pairops/inverse_monomial.hpp"
#include "pairops/linear_module.hpp"
#include "pairops/pair_operation.hpp"

using namespace pairops;

namespace {

InverseModule IM(std::vector<Exponent> m) {
  return InverseModule::from_monomials(std::move(m));
}

MonomialIdeal MI(std::vector<Exponent> g) {
  return MonomialIdeal::from_generators(std::move(g));
}

}  // namespace

TEST_CASE("contraction action convention") {
  CHECK(InverseModule::contract(1, 0, 2, 1) == Exponent{1, 1});  // x . x^-2 y^-1
  CHECK(!InverseModule::contract(1, 0, 1, 3));                   // x . x^-1 y^-3 = 0
  CHECK(InverseModule::contract(0, 0, 3, 2) == Exponent{3, 2});  // 1 . z = z
}

TEST_CASE("downward closure is enforced and reported") {
  bool added = false;
  const InverseModule L =
      InverseModule::from_monomials({{1, 3}, {2, 1}}, &added);
  CHECK(added);
  CHECK(L.monomials() ==
        std::vector<Exponent>{{1, 1}, {1, 2}, {1, 3}, {2, 1}});
  bool added2 = true;
  InverseModule::from_monomials({{1, 1}}, &added2);
  CHECK(!added2);
  CHECK_THROWS_AS(IM({{0, 1}}), std::invalid_argument);
}

TEST_CASE("annihilators in E: the worked submodule") {
  // N = (0 :_E (x^3, xy, y^3))
  const InverseModule N = ann_E(MI({{3, 0}, {1, 1}, {0, 3}}));
  CHECK(N.monomials() ==
        std::vector<Exponent>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}});
  CHECK(ann_E(MonomialIdeal::max_power(2)).monomials() ==
        std::vector<Exponent>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(ann_E(MonomialIdeal::unit()).is_zero());
  CHECK_THROWS_AS(ann_E(MI({{1, 0}})), std::invalid_argument);

  // mN = (0 :_E m^2), then (mN :_E m) = N + k x^-2 y^-2
  const MonomialIdeal m = MonomialIdeal::max_power(1);
  const InverseModule mN = N.scale(m);
  CHECK(mN == ann_E(MonomialIdeal::max_power(2)));
  const InverseModule cl = mN.colon(m);
  CHECK(cl == N.sum(IM({{2, 2}})));

  // (E / cl)^v = ann_R(cl) = m^3 = m ((x^3,xy,y^3) :_R m)
  CHECK(cl.annihilator_in_R() == MonomialIdeal::max_power(3));
  CHECK(m.product(MI({{3, 0}, {1, 1}, {0, 3}}).colon(m)) ==
        MonomialIdeal::max_power(3));
}

TEST_CASE("ann_R round trip") {
  for (const MonomialIdeal& I :
       {MI({{3, 0}, {1, 1}, {0, 3}}), MonomialIdeal::max_power(4),
        MI({{3, 0}, {2, 2}, {0, 3}}), MI({{2, 0}, {0, 5}})}) {
    CHECK(ann_E(I).annihilator_in_R() == I);
  }
  CHECK(IM({{1, 1}}).annihilator_in_R() == MonomialIdeal::max_power(1));
  CHECK(InverseModule().annihilator_in_R() == MonomialIdeal::unit());
}

TEST_CASE("module colon and scale basics") {
  const InverseModule L = IM({{2, 2}});
  CHECK(L.scale(MonomialIdeal::unit()) == L);
  CHECK_THROWS_AS(L.colon(MI({{1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(L.colon(MonomialIdeal()), std::invalid_argument);
  // (L :_E m) for the 2x2 block: the corner grows to (2,2)+antennae, by hand
  const InverseModule c = L.colon(MonomialIdeal::max_power(1));
  CHECK(c == IM({{1, 3}, {2, 2}, {3, 1}}));
}

TEST_CASE("socle and eta in the inverse model") {
  // Soc(0 :_E m^k) = (0 :_E m) is one-dimensional for every k; the
  // cogenerator count of a cyclic dual is 1, matching mu(R/m^k) = 1.
  for (int k = 1; k <= 4; ++k) {
    const InverseModule tri = ann_E(MonomialIdeal::max_power(k));
    CHECK(tri.socle() == IM({{1, 1}}));
    CHECK(tri.eta() == 1);
  }
  CHECK(IM({{1, 1}}).socle() == IM({{1, 1}}));  // simple module

  // the k corner monomials live in Soc(R/m^k) on the ring side instead
  for (int k = 1; k <= 5; ++k) {
    const MonomialIdeal mk = MonomialIdeal::max_power(k);
    const MonomialIdeal colon = mk.colon(MonomialIdeal::max_power(1));
    CHECK(colon == MonomialIdeal::max_power(k - 1));
    CHECK(colon.colength() + static_cast<size_t>(k) == mk.colength());
  }
}

TEST_CASE("eta of E-quotients") {
  CHECK(eta_of_E_quotient(InverseModule()) == 1);  // Soc E = k x^-1 y^-1
  // (C :_E m)/C for the m^2 triangle: triangle of m^3 minus triangle of m^2
  const InverseModule C = ann_E(MonomialIdeal::max_power(2));
  CHECK(eta_of_E_quotient(C) == 3);
}

TEST_CASE("monomial covers and basic emptiness in E") {
  const InverseModule A = ann_E(MonomialIdeal::max_power(2));
  const auto covers = monomial_covers_below(A);
  REQUIRE(covers.size() == 2);
  CHECK(covers[0].length() == 2);
  CHECK(covers[1].length() == 2);

  // (0 :_E m^2) is a fixed point of z -> m (z :_E m); both methods agree,
  // consistent with m^2 being basically full in R
  const auto verdict = is_basically_empty_in_E(A, std::nullopt);
  CHECK(verdict.fixed_point);
  CHECK(verdict.eta_cover);
  const MonomialIdeal m = MonomialIdeal::max_power(1);
  const MonomialIdeal m2 = MonomialIdeal::max_power(2);
  CHECK(m.product(m2).colon(m) == m2);  // dual statement on the ring side

  // N from the closure example is basically empty, matching its annihilator
  // (x^3,xy,y^3) being basically full; its jbf-closure being larger is a
  // statement about fullness in E, not emptiness
  const InverseModule N = ann_E(MI({{3, 0}, {1, 1}, {0, 3}}));
  const auto v2 = is_basically_empty_in_E(N, std::nullopt);
  CHECK(v2.fixed_point);
  CHECK(v2.fixed_point == v2.eta_cover);

  // (x^2,y^2) is not basically full (its closure is m^2), so the dual block
  // (0 :_E (x^2,y^2)) is not basically empty
  const MonomialIdeal xy2 = MI({{2, 0}, {0, 2}});
  CHECK(m.product(xy2).colon(m) == MonomialIdeal::max_power(2));
  const auto v3 = is_basically_empty_in_E(ann_E(xy2), std::nullopt);
  CHECK(!v3.fixed_point);
  CHECK(v3.fixed_point == v3.eta_cover);
}

TEST_CASE("semigroup dual module: perfect pairing duality") {
  const SemigroupAlgebra alg(NumericalSemigroup({2, 3}), PrimeField(2), 10);
  const DualityBridge br(alg);
  const auto primal = br.primal().all_submodules();
  const auto dual = br.dual().all_submodules();
  CHECK(primal.size() == dual.size());
  for (const Subspace& L : primal) {
    const Subspace a = br.ann_of_primal(L);
    CHECK(a.dim() + L.dim() == alg.dim());
    CHECK(br.ann_of_dual(a) == L);
    CHECK(br.dual().is_submodule(a));
  }
}

TEST_CASE("eta equals mu of the Matlis dual on random semigroup pairs") {
  const SemigroupAlgebra alg(NumericalSemigroup({2, 3}), PrimeField(3), 8);
  const DualityBridge br(alg);
  const auto lattice = br.dual().all_submodules();
  std::mt19937 rng(515);
  int tested = 0;
  while (tested < 100) {
    const Subspace& A = lattice[rng() % lattice.size()];
    const Subspace& B = lattice[rng() % lattice.size()];
    if (!B.contains(A) || A == B) continue;
    ++tested;
    // eta(B/A) and mu((B/A)^v) = mu(ann(A)/ann(B)) by independent code paths
    const size_t eta = br.dual().eta(B, A);
    const size_t mu = br.primal().mu(br.ann_of_dual(A), br.ann_of_dual(B));
    CHECK(eta == mu);
  }
}

TEST_CASE("basically full/empty criteria agree exhaustively at N=8") {
  const SemigroupAlgebra alg(NumericalSemigroup({2, 3}), PrimeField(2), 8);
  const DualityBridge br(alg);
  const LinearModule& V = br.primal();
  const LinearModule& W = br.dual();
  const Subspace zero = V.zero();

  // mu-cover criterion matches the colon fixed point on the ideal lattice
  for (const Subspace& L : V.all_submodules()) {
    if (L.is_zero()) continue;
    CHECK(is_basically_full_fixed_point(V, L, V.full(), zero) ==
          is_basically_full_mu_covers(V, L, V.full(), zero));
  }
  // eta-cover criterion matches the dual fixed point on the dual lattice
  for (const Subspace& A : W.all_submodules()) {
    CHECK(is_basically_empty_fixed_point(W, A, W.full(), zero) ==
          is_basically_empty_eta_covers(W, A, W.full(), zero));
  }
  // duality: A basically empty in E_N iff ann(A) basically full in A_N
  for (const Subspace& A : W.all_submodules()) {
    if (A == W.full()) continue;  // ann is the zero ideal
    CHECK(is_basically_empty_fixed_point(W, A, W.full(), zero) ==
          is_basically_full_fixed_point(V, br.ann_of_dual(A), V.full(), zero));
  }
}

TEST_CASE("m^n (A :_B m^n) is basically empty, n = 1..3") {
  const SemigroupAlgebra alg(NumericalSemigroup({2, 3}), PrimeField(2), 8);
  const DualityBridge br(alg);
  const LinearModule& W = br.dual();
  const Subspace zero = W.zero();
  const Subspace B = W.full();
  for (int n = 1; n <= 3; ++n) {
    const Subspace mn = ideal_m_power(alg, n).space();
    for (const Subspace& A : W.all_submodules()) {
      const Subspace An = W.scale(mn, W.colon(A, mn, B));
      CHECK(is_basically_empty_fixed_point(W, An, B, zero));
    }
  }
}

TEST_CASE("principal ring probe") {
  // k[[t^2,t^3]]: (t^2 + t^3) is m-primary but not basically full
  const SemigroupAlgebra alg23(NumericalSemigroup({2, 3}), PrimeField(2), 12);
  const LinearModule V23(alg23, false);
  const Subspace witness =
      SemigroupIdeal::from_class(alg23, {IdealClass::Kind::Principal, 2, 1}).space();
  CHECK(!is_basically_full_fixed_point(V23, witness, V23.full(), V23.zero()));
  const Subspace cl = V23.colon(
      V23.scale(maximal_ideal(alg23).space(), witness),
      maximal_ideal(alg23).space(), V23.full());
  CHECK(SemigroupIdeal::from_subspace(alg23, cl).classify() ==
        IdealClass{IdealClass::Kind::TwoGen, 2, 0});

  // k[[t]]: every nonzero ideal of the truncation is basically full, and no
  // dual witness exists either
  const SemigroupAlgebra alg1(NumericalSemigroup({1}), PrimeField(2), 8);
  const DualityBridge br1(alg1);
  for (const Subspace& L : br1.primal().all_submodules()) {
    if (L.is_zero()) continue;
    CHECK(is_basically_full_fixed_point(br1.primal(), L, br1.primal().full(),
                                        br1.primal().zero()));
  }
  for (const Subspace& A : br1.dual().all_submodules()) {
    // the full window is the truncation boundary: (A :_E m) needs room
    // beyond it, so the E-level statement only applies to proper submodules
    if (A == br1.dual().full()) continue;
    CHECK(is_basically_empty_fixed_point(br1.dual(), A, br1.dual().full(),
                                         br1.dual().zero()));
  }
}
