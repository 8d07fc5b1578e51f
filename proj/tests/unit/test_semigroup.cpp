#include <set>

#include "doctest.h"
#include "pairops/errors.hpp"
#include "pairops/semigroup.hpp"

using namespace pairops;

namespace {

SemigroupAlgebra make23(int N, uint32_t p = 2) {
  return SemigroupAlgebra(NumericalSemigroup({2, 3}), PrimeField(p), N);
}

SemigroupIdeal two_gen(const SemigroupAlgebra& alg, int n) {
  return SemigroupIdeal::from_class(alg, {IdealClass::Kind::TwoGen, n, 0});
}

SemigroupIdeal principal(const SemigroupAlgebra& alg, int n, uint32_t a) {
  return SemigroupIdeal::from_class(alg, {IdealClass::Kind::Principal, n, a});
}

// Lemma-style closed form for ((t^n,t^{n+1}) : (t^r,t^{r+1})) in k[[t^2,t^3]]
SemigroupIdeal colon_two_gen_expected(const SemigroupAlgebra& alg, int n, int r) {
  if (r >= n) return SemigroupIdeal::unit(alg);
  if (r == n - 1) return two_gen(alg, 2);
  return two_gen(alg, n - r);
}

// ((t^n + a t^{n+1}) : (t^r,t^{r+1}))
SemigroupIdeal colon_principal_expected(const SemigroupAlgebra& alg, int n, int r) {
  if (r >= n + 2) return SemigroupIdeal::unit(alg);
  if (r == n + 1) return two_gen(alg, 2);
  return two_gen(alg, n - r + 2);
}

}  // namespace

TEST_CASE("numerical semigroup membership") {
  const NumericalSemigroup s23({2, 3});
  CHECK(s23.contains(0));
  CHECK(!s23.contains(1));
  for (int e = 2; e < 40; ++e) CHECK(s23.contains(e));
  CHECK(s23.conductor() == 2);

  const NumericalSemigroup s47({4, 7});
  CHECK(!s47.contains(5));
  CHECK(s47.contains(11));
  CHECK(!s47.contains(17));  // Frobenius number of <4,7>
  CHECK(s47.contains(18));

  CHECK_THROWS_AS(NumericalSemigroup({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup({3, 2}), std::invalid_argument);
}

TEST_CASE("algebra multiplication table is commutative and associative") {
  const SemigroupAlgebra alg = make23(12, 3);
  const auto& exps = alg.exponents();
  for (size_t i = 0; i < exps.size(); i += 2)
    for (size_t j = 0; j < exps.size(); j += 2)
      for (size_t k = 0; k < exps.size(); k += 3) {
        const Row a = alg.monomial(exps[i]);
        const Row b = alg.monomial(exps[j]);
        const Row c = alg.monomial(exps[k]);
        CHECK(alg.multiply(a, b) == alg.multiply(b, a));
        CHECK(alg.multiply(alg.multiply(a, b), c) ==
              alg.multiply(a, alg.multiply(b, c)));
      }
}

TEST_CASE("ideal from generators") {
  const SemigroupAlgebra alg = make23(10);
  CHECK(SemigroupIdeal::from_generators(alg, {}).is_zero());
  CHECK(SemigroupIdeal::from_generators(alg, {alg.one()}).is_unit());

  // (t^3 + t^4) in A_10 over F2, closed by hand under t^2, t^3
  Row g = alg.monomial(3);
  const Row t4 = alg.monomial(4);
  for (size_t i = 0; i < g.size(); ++i)
    g[i] = alg.field().add(g[i], t4[i]);
  const SemigroupIdeal I = SemigroupIdeal::from_generators(alg, {g});
  auto add = [&](const Row& a, const Row& b) {
    Row r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = alg.field().add(a[i], b[i]);
    return r;
  };
  const std::vector<Row> expect = {
      add(alg.monomial(3), alg.monomial(4)), add(alg.monomial(5), alg.monomial(6)),
      add(alg.monomial(6), alg.monomial(7)), add(alg.monomial(7), alg.monomial(8)),
      add(alg.monomial(8), alg.monomial(9)), alg.monomial(9)};
  CHECK(I.space() == Subspace::span(alg.field(), alg.dim(), expect));
}

TEST_CASE("colon oracle: closed forms of the four cases, F2 and F3, r,n <= 10") {
  for (uint32_t p : {2u, 3u}) {
    const SemigroupAlgebra alg = make23(26, p);
    const SemigroupIdeal R = SemigroupIdeal::unit(alg);
    const SemigroupIdeal O = SemigroupIdeal::zero(alg);
    for (int r = 2; r <= 10; ++r) {
      const SemigroupIdeal J = two_gen(alg, r);
      CHECK(R.colon(J) == R);
      CHECK(O.colon(J) == O);
      for (int n = 2; n <= 10; ++n) {
        CHECK(two_gen(alg, n).colon(J) == colon_two_gen_expected(alg, n, r));
        for (uint32_t a = 0; a < p; ++a)
          CHECK(principal(alg, n, a).colon(J) ==
                colon_principal_expected(alg, n, r));
      }
    }
  }
}

TEST_CASE("pinned colon values") {
  const SemigroupAlgebra alg = make23(20);
  CHECK(two_gen(alg, 6).colon(two_gen(alg, 2)) == two_gen(alg, 4));
  CHECK(two_gen(alg, 5).colon(two_gen(alg, 4)) == two_gen(alg, 2));
  CHECK(principal(alg, 4, 1).colon(two_gen(alg, 2)) == two_gen(alg, 4));
}

TEST_CASE("products and powers") {
  const SemigroupAlgebra alg = make23(20);
  const SemigroupIdeal m = maximal_ideal(alg);
  CHECK(m.product(SemigroupIdeal::unit(alg)) == m);
  CHECK(m.product(m) == two_gen(alg, 4));
  CHECK(two_gen(alg, 3).power(2) == two_gen(alg, 6));
  CHECK(ideal_m_power(alg, 3) == two_gen(alg, 6));
  CHECK_THROWS_AS(two_gen(alg, 7).power(3), Unstable);
}

TEST_CASE("integral closure via valuation, with reduction-criterion oracle") {
  const SemigroupAlgebra alg = make23(20);
  const SemigroupIdeal R = SemigroupIdeal::unit(alg);
  CHECK(R.integral_closure() == R);
  for (int n = 2; n <= 6; ++n) {
    CHECK(two_gen(alg, n).integral_closure() == two_gen(alg, n));
    CHECK(principal(alg, n, 1).integral_closure() == two_gen(alg, n));
  }

  // oracle: x in bar(I) iff I is a reduction of I + (x), i.e.
  // (I+(x))^{s+1} = I (I+(x))^s for some small s  (Northcott-Rees)
  auto integral_over = [&](const SemigroupIdeal& I, const Row& x) {
    const SemigroupIdeal K =
        I.sum(SemigroupIdeal::from_generators(alg, {x}));
    for (int s = 1; s <= 4; ++s)
      if (K.power(s + 1, false) == I.product(K.power(s, false))) return true;
    return false;
  };
  const SemigroupIdeal I = principal(alg, 2, 1);  // (t^2 + t^3)
  CHECK(I.integral_closure() == two_gen(alg, 2));
  for (int e : alg.exponents()) {
    if (e == 0 || e > 8) continue;
    CHECK(integral_over(I, alg.monomial(e)) == (e >= 2));
  }
  const SemigroupIdeal I34 = two_gen(alg, 3);
  CHECK(!integral_over(I34, alg.monomial(2)));
  CHECK(integral_over(I34, alg.monomial(4)));
}

TEST_CASE("classification round-trip and rendering") {
  const SemigroupAlgebra alg = make23(12, 3);
  for (int n = 2; n + 3 < 12; ++n) {
    const IdealClass tg{IdealClass::Kind::TwoGen, n, 0};
    CHECK(SemigroupIdeal::from_class(alg, tg).classify() == tg);
    for (uint32_t a = 0; a < 3; ++a) {
      const IdealClass pr{IdealClass::Kind::Principal, n, a};
      CHECK(SemigroupIdeal::from_class(alg, pr).classify() == pr);
    }
  }
  CHECK(SemigroupIdeal::zero(alg).classify() ==
        IdealClass{IdealClass::Kind::Zero, 0, 0});
  CHECK(two_gen(alg, 2).render() == "(t^2,t^3)");
  CHECK(principal(alg, 4, 1).render() == "(t^4+t^5)");
  CHECK(principal(alg, 4, 2).render() == "(t^4+2t^5)");
  CHECK(principal(alg, 4, 0).render() == "(t^4)");
}

TEST_CASE("classify of a generated principal ideal") {
  const SemigroupAlgebra alg = make23(10);
  Row g = alg.monomial(4);
  const Row t5 = alg.monomial(5);
  for (size_t i = 0; i < g.size(); ++i) g[i] = alg.field().add(g[i], t5[i]);
  const SemigroupIdeal I = SemigroupIdeal::from_generators(alg, {g});
  CHECK(I.classify() == IdealClass{IdealClass::Kind::Principal, 4, 1});
  CHECK(maximal_ideal(alg).classify() == IdealClass{IdealClass::Kind::TwoGen, 2, 0});
}

TEST_CASE("ideal enumeration matches the classification count") {
  for (uint32_t p : {2u, 3u}) {
    const SemigroupAlgebra alg = make23(10, p);
    const auto ideals = enumerate_ideals(alg);
    // oracle: generate every class tag and deduplicate the resulting spaces
    std::set<SemigroupIdeal> expected;
    expected.insert(SemigroupIdeal::zero(alg));
    expected.insert(SemigroupIdeal::unit(alg));
    for (int n = 2; n < 10; ++n) {
      expected.insert(two_gen(alg, n));
      for (uint32_t a = 0; a < p; ++a) expected.insert(principal(alg, n, a));
    }
    CHECK(ideals.size() == expected.size());
    std::set<SemigroupIdeal> got(ideals.begin(), ideals.end());
    CHECK(got == expected);
    CHECK(got.size() == ideals.size());  // duplicate-free listing
    // enumeration completeness: every enumerated ideal classifies
    for (const auto& I : ideals) CHECK_NOTHROW(I.classify());
  }
}

TEST_CASE("enumeration at N=2 gives only 0 and R") {
  const SemigroupAlgebra alg = make23(2);
  const auto ideals = enumerate_ideals(alg);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].is_zero());
  CHECK(ideals[1].is_unit());
}

TEST_CASE("mu, minimal generators, reductions") {
  const SemigroupAlgebra alg = make23(20);
  for (int n = 2; n <= 8; ++n) CHECK(two_gen(alg, n).mu() == 2);
  CHECK(principal(alg, 3, 1).mu() == 1);
  CHECK(principal(alg, 3, 1).is_reduction_of(two_gen(alg, 3)));
  CHECK(!two_gen(alg, 5).is_reduction_of(two_gen(alg, 3)));
  CHECK_THROWS_AS(two_gen(alg, 3).is_reduction_of(two_gen(alg, 5)),
                  std::invalid_argument);
}

TEST_CASE("(I : I) = R for enumerated classified ideals") {
  const SemigroupAlgebra alg = make23(10);
  for (const auto& I : enumerate_ideals(alg)) {
    if (I.is_zero()) continue;
    CHECK(I.colon(I).is_unit());
  }
}

TEST_CASE("enumeration at N=6 over F2 lists the twelve truncated images") {
  const SemigroupAlgebra alg = make23(6);
  const auto ideals = enumerate_ideals(alg);
  CHECK(ideals.size() == 12);
  std::set<std::string> renders;
  for (const auto& I : ideals) renders.insert(I.render());
  for (const char* want :
       {"0", "R", "(t^2,t^3)", "(t^3,t^4)", "(t^4,t^5)", "(t^2)", "(t^2+t^3)",
        "(t^3)", "(t^3+t^4)", "(t^4)", "(t^4+t^5)", "(t^5,t^6)"})
    CHECK(renders.count(want));
}
