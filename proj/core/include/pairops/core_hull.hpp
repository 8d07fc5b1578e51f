#ifndef PAIROPS_CORE_HULL_HPP
#define PAIROPS_CORE_HULL_HPP

#include <optional>
#include <string>
#include <vector>

#include "pairops/property_check.hpp"

namespace pairops {

// Reductions of N in M under a closure cl: all lattice L <= N with
// cl(L,M) = cl(N,M).  The core is their intersection, which coincides with
// the intersection of the minimal ones; both are computed and compared.
struct ReductionSet {
  Subspace target;
  Subspace ambient;
  std::vector<Subspace> reductions;
  std::vector<Subspace> minimal;
  Subspace core;
};

ReductionSet reductions_exhaustive(const PairOp& cl, const Subspace& N,
                                   const Subspace& M, const LinearContext& ctx);

// Cover-descent: repeatedly step from a reduction to any submodule cover that
// is still a reduction.  Finds every minimal reduction when cl is an
// order-preserving Nakayama closure, without enumerating the lattice.
std::vector<Subspace> minimal_reductions_descent(const PairOp& cl,
                                                 const Subspace& N,
                                                 const Subspace& M,
                                                 const LinearModule& mod);
Subspace core_descent(const PairOp& cl, const Subspace& N, const Subspace& M,
                      const LinearModule& mod);

struct ExpansionSet {
  Subspace target;
  Subspace ambient;
  std::vector<Subspace> expansions;
  std::vector<Subspace> maximal;
  Subspace hull;
};

ExpansionSet expansions_exhaustive(const PairOp& intr, const Subspace& A,
                                   const Subspace& B, const LinearContext& ctx);

// Cover-ascent, dual to the descent.
std::vector<Subspace> maximal_expansions_ascent(const PairOp& intr,
                                                const Subspace& A,
                                                const Subspace& B,
                                                const LinearModule& mod);
Subspace hull_ascent(const PairOp& intr, const Subspace& A, const Subspace& B,
                     const LinearModule& mod);

// Checks that the hull of the dual pair, pulled back through the bridge,
// equals the core, and that the reduction/expansion counts agree under the
// order-reversing bijection.
struct CoreHullDualityResult {
  bool core_matches;
  bool counts_match;
  bool minimal_counts_match;
  size_t reduction_count;
  size_t expansion_count;
};

CoreHullDualityResult core_hull_duality_check(const PairOp& cl,
                                              const Subspace& N,
                                              const Subspace& M,
                                              const LinearContext& primal_ctx,
                                              const LinearContext& dual_ctx,
                                              const DualityBridge& bridge);

// Closed-form shells.  No hypothesis checking: callers compare the results
// against brute force and report status.
Subspace core_formula_colon(const SemigroupAlgebra& alg, const Subspace& I,
                            const Subspace& J, int n);  // (J^{n+1} : I^n)
Subspace core_formula_be(const SemigroupAlgebra& alg, const Subspace& I,
                         const Subspace& J, int n);  // I (J^n : I^n)
// I^n (0 :_E J^{n+1})
Subspace hull_formula(const DualityBridge& br, const Subspace& I,
                      const Subspace& J, int n);
// ( I (0 :_E (J^n : I^{n-1})) :_E I )
Subspace hull_formula_bf(const DualityBridge& br, const Subspace& I,
                         const Subspace& J, int n);

// Integral interior of L in E_N via the bridge, next to the J-basically
// empty quantifier over the enumerated nonzero ideals.  Only ideals J with
// order(J) + order(ann L) < N act faithfully on L inside the window (and
// higher-order generators never change J(L:J)), so the quantifier is
// restricted to those, further capped by j_bound.
struct IntegralOpenReport {
  bool integrally_open;
  bool jbe_for_all;
  bool agree;
  // the window certifies both directions only when the maximal ideal is in
  // faithful range, i.e. order(ann L) + 2 < N
  bool window_sufficient;
  size_t ideals_tested;
  std::optional<std::string> witness_J;
};

IntegralOpenReport integrally_open_probe(const DualityBridge& bridge,
                                         const Subspace& L,
                                         const std::vector<SemigroupIdeal>& ideals,
                                         int j_bound = 1 << 20);

// Monomial-mode core/hull quantify over the staircase sublattice only.
struct MonomialCoreResult {
  std::vector<MonomialIdeal> reductions;
  std::vector<MonomialIdeal> minimal;
  MonomialIdeal core;
};
MonomialCoreResult monomial_core(const MonomialPairOp& cl, const MonomialIdeal& N,
                                 const MonomialIdeal& M, const MonomialContext& ctx);
struct MonomialHullResult {
  std::vector<MonomialIdeal> expansions;
  std::vector<MonomialIdeal> maximal;
  MonomialIdeal hull;
};
MonomialHullResult monomial_hull(const MonomialPairOp& intr, const MonomialIdeal& A,
                                 const MonomialIdeal& B, const MonomialContext& ctx);

}  // namespace pairops

#endif
