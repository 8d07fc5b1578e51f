#ifndef PAIROPS_SEMIGROUP_HPP
#define PAIROPS_SEMIGROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pairops/subspace.hpp"

namespace pairops {

// <g1,...,gk> with gcd 1.  Membership is a reachability table computed once
// up to the conductor.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<int> generators);

  const std::vector<int>& generators() const { return gens_; }
  bool contains(int e) const;
  int conductor() const { return conductor_; }  // least c with [c,inf) in S

  bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

 private:
  std::vector<int> gens_;
  std::vector<bool> member_;  // index < conductor_ + 1
  int conductor_ = 0;
};

// The finite-dimensional truncation A_N = k[[t^g1,...,t^gk]] / (t^e : e >= N),
// with basis {t^e : e in S, e < N}.  Ring elements are coefficient vectors
// over that basis.
class SemigroupAlgebra {
 public:
  SemigroupAlgebra(NumericalSemigroup sg, PrimeField F, int truncation);

  const NumericalSemigroup& semigroup() const { return sg_; }
  const PrimeField& field() const { return F_; }
  int truncation() const { return N_; }
  size_t dim() const { return exps_.size(); }
  const std::vector<int>& exponents() const { return exps_; }

  int index_of_exponent(int e) const;  // -1 when t^e is not a basis monomial
  Row zero_element() const { return Row(dim(), 0); }
  Row one() const { return monomial(0); }
  Row monomial(int e) const;  // t^e; throws std::invalid_argument if e not in basis
  Row scaled_monomial(uint32_t c, int e) const;

  Row multiply(const Row& a, const Row& b) const;
  const Matrix& monomial_action(size_t basis_index) const;  // mult by t^{e_i}
  Matrix action_of(const Row& r) const;                     // mult by r
  const std::vector<Matrix>& generator_actions() const;

  // least exponent with nonzero coefficient; nullopt for 0
  std::optional<int> order(const Row& r) const;

  bool is_23() const;  // flagship k[[t^2,t^3]]

  std::string render_element(const Row& r) const;  // "t^3+2t^4"

 private:
  NumericalSemigroup sg_;
  PrimeField F_;
  int N_;
  std::vector<int> exps_;
  std::vector<int> exp_to_idx_;
  std::vector<Matrix> mono_actions_;  // built once; the type stays immutable
  std::vector<Matrix> gen_actions_;
};

// Figure-style classification of the ideals of k[[t^2,t^3]]:
// Zero, Full, (t^n, t^{n+1}), or (t^n + a t^{n+1}).
struct IdealClass {
  enum class Kind { Zero, Full, TwoGen, Principal };
  Kind kind = Kind::Zero;
  int n = 0;
  uint32_t a = 0;

  std::string str() const;
  bool operator==(const IdealClass& o) const = default;
};

class SemigroupIdeal {
 public:
  static SemigroupIdeal zero(const SemigroupAlgebra& alg);
  static SemigroupIdeal unit(const SemigroupAlgebra& alg);
  static SemigroupIdeal from_generators(const SemigroupAlgebra& alg,
                                        const std::vector<Row>& gens);
  // checks stability under the ring generator actions
  static SemigroupIdeal from_subspace(const SemigroupAlgebra& alg, Subspace s);
  static SemigroupIdeal from_class(const SemigroupAlgebra& alg,
                                   const IdealClass& cls);

  const SemigroupAlgebra& algebra() const { return *alg_; }
  const Subspace& space() const { return space_; }
  size_t dim() const { return space_.dim(); }
  bool is_zero() const { return space_.is_zero(); }
  bool is_unit() const { return space_.is_full(); }

  SemigroupIdeal sum(const SemigroupIdeal& other) const;
  SemigroupIdeal intersect(const SemigroupIdeal& other) const;
  SemigroupIdeal product(const SemigroupIdeal& other) const;
  // checked: throws Unstable when n * order(I) reaches the truncation, i.e.
  // the power is no longer a faithful image of the untruncated power
  SemigroupIdeal power(int n, bool checked = true) const;
  // {r : r J subseteq this}
  SemigroupIdeal colon(const SemigroupIdeal& J) const;
  // valuation pullback: span{t^e : e >= min order}; bar(0) = 0
  SemigroupIdeal integral_closure() const;

  std::optional<int> min_order() const;
  size_t mu() const;  // dim I/mI; requires nonzero
  std::vector<Row> minimal_generators() const;
  bool is_reduction_of(const SemigroupIdeal& I) const;  // this subseteq I, equal bars
  bool contains(const SemigroupIdeal& other) const {
    return space_.contains(other.space());
  }

  // <2,3> only; throws Unstable when nothing matches (precision too small)
  IdealClass classify() const;

  std::string render() const;  // classified when possible, else min gens

  bool operator==(const SemigroupIdeal& o) const { return space_ == o.space_; }
  bool operator<(const SemigroupIdeal& o) const { return space_ < o.space_; }

 private:
  SemigroupIdeal(const SemigroupAlgebra& alg, Subspace s);
  const SemigroupAlgebra* alg_;
  Subspace space_;
};

// maximal ideal m = (t^g1,...,t^gk) as an ideal / subspace
SemigroupIdeal maximal_ideal(const SemigroupAlgebra& alg);
SemigroupIdeal ideal_m_power(const SemigroupAlgebra& alg, int k);

// Every ideal of A_N, canonically sorted, via cyclic-span stable closures and
// a sum fixpoint.  Throws CapExceeded past the cap.
std::vector<SemigroupIdeal> enumerate_ideals(
    const SemigroupAlgebra& alg, uint64_t cap = kDefaultEnumerationCap);

}  // namespace pairops

#endif
