#ifndef PAIROPS_LINEAR_MODULE_HPP
#define PAIROPS_LINEAR_MODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pairops/semigroup.hpp"

namespace pairops {

// A finite-length module over A_N on which ring elements act by matrices:
// the regular module A_N itself, or its linear dual E_N with the transpose
// action.  Submodules are operator-stable subspaces.  Everything here works
// with an optional base submodule U, so a subspace S >= U stands for S/U; all
// colon and scaling formulas remain valid verbatim in the quotient.
class LinearModule {
 public:
  LinearModule(const SemigroupAlgebra& alg, bool dual_side);

  const SemigroupAlgebra& algebra() const { return *alg_; }
  bool dual_side() const { return dual_; }
  const PrimeField& field() const { return alg_->field(); }
  size_t dim() const { return alg_->dim(); }

  Matrix action_of(const Row& ring_elem) const;
  const std::vector<Matrix>& generator_actions() const { return gen_actions_; }

  Subspace zero() const { return Subspace(field(), dim()); }
  Subspace full() const { return Subspace::full(field(), dim()); }
  Subspace submodule_span(const std::vector<Row>& gens) const;
  bool is_submodule(const Subspace& s) const;

  // J . S for an ideal J of A_N (as a subspace of the algebra)
  Subspace scale(const Subspace& J, const Subspace& S) const;
  // {z in M : J z subseteq L}
  Subspace colon(const Subspace& L, const Subspace& J, const Subspace& M) const;

  // (A :_B m), the socle preimage
  Subspace socle_colon(const Subspace& A, const Subspace& B) const;

  // mu(L/U) = dim L/(mL + U)
  size_t mu(const Subspace& L, const Subspace& U) const;
  // eta(B/A) = dim ((A :_B m)/A)
  size_t eta(const Subspace& B, const Subspace& A) const;

  // Submodule covers below: all C with mL + U <= C < L, dim L/C = 1.
  // Throws CapExceeded when the hyperplane count exceeds the cap.
  std::vector<Subspace> covers_below(const Subspace& L, const Subspace& U,
                                     uint64_t cap = 10000) const;
  // Covers above A inside B: C = A + k z with z in (A :_B m) \ A.
  std::vector<Subspace> covers_above(const Subspace& A, const Subspace& B,
                                     uint64_t cap = 10000) const;

  std::vector<Subspace> all_submodules(
      uint64_t cap = kDefaultEnumerationCap) const;

 private:
  const SemigroupAlgebra* alg_;
  bool dual_;
  std::vector<Matrix> gen_actions_;
  Subspace m_ideal_;  // the maximal ideal of A_N, as a subspace of the algebra
};

// Basic fullness (generator side) and emptiness (cogenerator side), each by
// its colon fixed point and by its cover criterion.
bool is_basically_full_fixed_point(const LinearModule& mod, const Subspace& L,
                                   const Subspace& M, const Subspace& U);
bool is_basically_full_mu_covers(const LinearModule& mod, const Subspace& L,
                                 const Subspace& M, const Subspace& U);
bool is_basically_empty_fixed_point(const LinearModule& mod, const Subspace& A,
                                    const Subspace& B, const Subspace& U);
bool is_basically_empty_eta_covers(const LinearModule& mod, const Subspace& A,
                                   const Subspace& B, const Subspace& U);

// Scans the enumerated m-primary ideals for one that is not basically full,
// and mirrors the verdict on the dual side through the annihilator pairing.
// A witness exists iff the maximal ideal is not principal.
struct PrincipalRingProbe {
  bool all_basically_full;
  std::optional<std::string> witness;       // a non-basically-full ideal
  bool dual_side_consistent;  // fullness and dual emptiness agree
};
PrincipalRingProbe principal_ring_probe(const SemigroupAlgebra& alg,
                                        uint64_t cap = kDefaultEnumerationCap);

}  // namespace pairops

#endif
