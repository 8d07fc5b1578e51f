#include "pairops/core_hull.hpp"

#include <algorithm>
#include <set>

#include "pairops/errors.hpp"

namespace pairops {

namespace {

std::vector<Subspace> minimal_members(const std::vector<Subspace>& list) {
  std::vector<Subspace> out;
  for (const Subspace& a : list) {
    bool minimal = true;
    for (const Subspace& b : list)
      if (!(a == b) && a.contains(b)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<Subspace> maximal_members(const std::vector<Subspace>& list) {
  std::vector<Subspace> out;
  for (const Subspace& a : list) {
    bool maximal = true;
    for (const Subspace& b : list)
      if (!(a == b) && b.contains(a)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace

ReductionSet reductions_exhaustive(const PairOp& cl, const Subspace& N,
                                   const Subspace& M, const LinearContext& ctx) {
  ReductionSet rs{N, M, {}, {}, ctx.mod->full()};
  const Subspace zero = ctx.mod->zero();
  const Subspace clN = cl.eval(N, M, zero);
  Subspace core = N;
  for (const Subspace& L : ctx.lattice) {
    if (!N.contains(L)) continue;
    if (!cl.is_applicable(L, M, zero)) continue;
    if (!(cl.eval(L, M, zero) == clN)) continue;
    rs.reductions.push_back(L);
    core = core.intersect(L);
  }
  rs.minimal = minimal_members(rs.reductions);
  Subspace core_min = N;
  for (const Subspace& L : rs.minimal) core_min = core_min.intersect(L);
  rs.core = core;
  if (!(core == core_min))
    throw Unstable("reductions_exhaustive: core via all reductions differs "
                   "from core via minimal reductions");
  return rs;
}

std::vector<Subspace> minimal_reductions_descent(const PairOp& cl,
                                                 const Subspace& N,
                                                 const Subspace& M,
                                                 const LinearModule& mod) {
  const Subspace zero = mod.zero();
  const Subspace clN = cl.eval(N, M, zero);
  std::set<Subspace> visited;
  std::set<Subspace> minimal;
  std::vector<Subspace> stack{N};
  visited.insert(N);
  while (!stack.empty()) {
    const Subspace L = stack.back();
    stack.pop_back();
    bool has_reduction_cover = false;
    for (const Subspace& C : mod.covers_below(L, zero)) {
      if (!(cl.eval(C, M, zero) == clN)) continue;
      has_reduction_cover = true;
      if (visited.insert(C).second) stack.push_back(C);
    }
    if (!has_reduction_cover) minimal.insert(L);
  }
  return {minimal.begin(), minimal.end()};
}

Subspace core_descent(const PairOp& cl, const Subspace& N, const Subspace& M,
                      const LinearModule& mod) {
  Subspace core = N;
  for (const Subspace& K : minimal_reductions_descent(cl, N, M, mod))
    core = core.intersect(K);
  return core;
}

ExpansionSet expansions_exhaustive(const PairOp& intr, const Subspace& A,
                                   const Subspace& B, const LinearContext& ctx) {
  ExpansionSet es{A, B, {}, {}, ctx.mod->zero()};
  const Subspace zero = ctx.mod->zero();
  const Subspace intA = intr.eval(A, B, zero);
  Subspace hull = A;
  for (const Subspace& C : ctx.lattice) {
    if (!C.contains(A) || !B.contains(C)) continue;
    if (!intr.is_applicable(C, B, zero)) continue;
    if (!(intr.eval(C, B, zero) == intA)) continue;
    es.expansions.push_back(C);
    hull = hull.sum(C);
  }
  es.maximal = maximal_members(es.expansions);
  Subspace hull_max = A;
  for (const Subspace& C : es.maximal) hull_max = hull_max.sum(C);
  es.hull = hull;
  if (!(hull == hull_max))
    throw Unstable("expansions_exhaustive: hull via all expansions differs "
                   "from hull via maximal expansions");
  return es;
}

std::vector<Subspace> maximal_expansions_ascent(const PairOp& intr,
                                                const Subspace& A,
                                                const Subspace& B,
                                                const LinearModule& mod) {
  const Subspace zero = mod.zero();
  const Subspace intA = intr.eval(A, B, zero);
  std::set<Subspace> visited;
  std::set<Subspace> maximal;
  std::vector<Subspace> stack{A};
  visited.insert(A);
  while (!stack.empty()) {
    const Subspace C = stack.back();
    stack.pop_back();
    bool has_expansion_cover = false;
    for (const Subspace& D : mod.covers_above(C, B)) {
      if (!(intr.eval(D, B, zero) == intA)) continue;
      has_expansion_cover = true;
      if (visited.insert(D).second) stack.push_back(D);
    }
    if (!has_expansion_cover) maximal.insert(C);
  }
  return {maximal.begin(), maximal.end()};
}

Subspace hull_ascent(const PairOp& intr, const Subspace& A, const Subspace& B,
                     const LinearModule& mod) {
  Subspace hull = A;
  for (const Subspace& D : maximal_expansions_ascent(intr, A, B, mod))
    hull = hull.sum(D);
  return hull;
}

CoreHullDualityResult core_hull_duality_check(const PairOp& cl,
                                              const Subspace& N,
                                              const Subspace& M,
                                              const LinearContext& primal_ctx,
                                              const LinearContext& dual_ctx,
                                              const DualityBridge& bridge) {
  const ReductionSet rs = reductions_exhaustive(cl, N, M, primal_ctx);

  // dual pair: B = M^v = W/ann(M), A = (M/N)^v = ann(N)/ann(M)
  const Subspace annM = bridge.ann_of_primal(M);
  const Subspace annN = bridge.ann_of_primal(N);
  const PairOp intr = dualize_primal_op(cl, bridge);
  const Subspace W = bridge.dual().full();
  const Subspace intA = intr.eval(annN, W, annM);

  std::vector<Subspace> expansions;
  Subspace hull = annN;
  for (const Subspace& C : dual_ctx.lattice) {
    if (!C.contains(annN)) continue;  // annM <= annN <= C <= W
    if (!intr.is_applicable(C, W, annM)) continue;
    if (!(intr.eval(C, W, annM) == intA)) continue;
    expansions.push_back(C);
    hull = hull.sum(C);
  }
  std::vector<Subspace> maximal = maximal_members(expansions);

  CoreHullDualityResult res{};
  res.reduction_count = rs.reductions.size();
  res.expansion_count = expansions.size();
  res.counts_match = rs.reductions.size() == expansions.size();
  res.minimal_counts_match = rs.minimal.size() == maximal.size();
  res.core_matches = bridge.ann_of_primal(rs.core) == hull;
  return res;
}

Subspace core_formula_colon(const SemigroupAlgebra& alg, const Subspace& I,
                            const Subspace& J, int n) {
  const SemigroupIdeal Ii = SemigroupIdeal::from_subspace(alg, I);
  const SemigroupIdeal Ji = SemigroupIdeal::from_subspace(alg, J);
  return Ji.power(n + 1, false).colon(Ii.power(n, false)).space();
}

Subspace core_formula_be(const SemigroupAlgebra& alg, const Subspace& I,
                         const Subspace& J, int n) {
  const SemigroupIdeal Ii = SemigroupIdeal::from_subspace(alg, I);
  const SemigroupIdeal Ji = SemigroupIdeal::from_subspace(alg, J);
  return Ii.product(Ji.power(n, false).colon(Ii.power(n, false))).space();
}

Subspace hull_formula(const DualityBridge& br, const Subspace& I,
                      const Subspace& J, int n) {
  const SemigroupAlgebra& alg = br.algebra();
  const SemigroupIdeal Ii = SemigroupIdeal::from_subspace(alg, I);
  const SemigroupIdeal Ji = SemigroupIdeal::from_subspace(alg, J);
  const LinearModule& E = br.dual();
  // (0 :_E J^{n+1}) is the annihilator of the ideal under the pairing
  const Subspace socJ = br.ann_of_primal(Ji.power(n + 1, false).space());
  return E.scale(Ii.power(n, false).space(), socJ);
}

Subspace hull_formula_bf(const DualityBridge& br, const Subspace& I,
                         const Subspace& J, int n) {
  const SemigroupAlgebra& alg = br.algebra();
  const SemigroupIdeal Ii = SemigroupIdeal::from_subspace(alg, I);
  const SemigroupIdeal Ji = SemigroupIdeal::from_subspace(alg, J);
  const LinearModule& E = br.dual();
  const SemigroupIdeal K = Ji.power(n, false).colon(Ii.power(n - 1, false));
  const Subspace socK = br.ann_of_primal(K.space());
  return E.colon(E.scale(I, socK), I, E.full());
}

IntegralOpenReport integrally_open_probe(
    const DualityBridge& bridge, const Subspace& L,
    const std::vector<SemigroupIdeal>& ideals, int j_bound) {
  IntegralOpenReport rep{};
  const SemigroupAlgebra& alg = bridge.algebra();
  const Subspace annL = bridge.ann_of_dual(L);
  const SemigroupIdeal annL_ideal = SemigroupIdeal::from_subspace(alg, annL);
  const Subspace interior =
      bridge.ann_of_dual(annL_ideal.integral_closure().space());
  rep.integrally_open = interior == L;

  rep.jbe_for_all = true;
  rep.ideals_tested = 0;
  const LinearModule& E = bridge.dual();
  const std::optional<int> v_ann = annL_ideal.min_order();
  rep.window_sufficient = v_ann && *v_ann + 2 < alg.truncation();
  for (const SemigroupIdeal& J : ideals) {
    if (J.is_zero()) continue;  // colon by 0 is degenerate in a domain
    const std::optional<int> vJ = J.min_order();
    if (*vJ > j_bound) continue;
    // window faithfulness: J ann(L) must not vanish by mere truncation
    if (!v_ann || *vJ + *v_ann >= alg.truncation()) continue;
    ++rep.ideals_tested;
    const Subspace jbe = E.scale(J.space(), E.colon(L, J.space(), E.full()));
    if (!(jbe == L)) {
      rep.jbe_for_all = false;
      rep.witness_J = J.render();
      break;
    }
  }
  rep.agree = rep.integrally_open == rep.jbe_for_all;
  return rep;
}

MonomialCoreResult monomial_core(const MonomialPairOp& cl, const MonomialIdeal& N,
                                 const MonomialIdeal& M, const MonomialContext& ctx) {
  MonomialCoreResult res;
  const MonomialIdeal clN = cl.eval(N, M);
  res.core = N;
  for (const MonomialIdeal& L : ctx.lattice) {
    if (!N.contains(L) || !M.contains(L)) continue;
    if (!(cl.eval(L, M) == clN)) continue;
    res.reductions.push_back(L);
    res.core = res.core.intersect(L);
  }
  for (const MonomialIdeal& a : res.reductions) {
    bool minimal = true;
    for (const MonomialIdeal& b : res.reductions)
      if (!(a == b) && a.contains(b)) minimal = false;
    if (minimal) res.minimal.push_back(a);
  }
  return res;
}

MonomialHullResult monomial_hull(const MonomialPairOp& intr, const MonomialIdeal& A,
                                 const MonomialIdeal& B, const MonomialContext& ctx) {
  MonomialHullResult res;
  const MonomialIdeal intA = intr.eval(A, B);
  res.hull = A;
  for (const MonomialIdeal& C : ctx.lattice) {
    if (!C.contains(A) || !B.contains(C)) continue;
    if (!(intr.eval(C, B) == intA)) continue;
    res.expansions.push_back(C);
    res.hull = res.hull.sum(C);
  }
  for (const MonomialIdeal& a : res.expansions) {
    bool maximal = true;
    for (const MonomialIdeal& b : res.expansions)
      if (!(a == b) && b.contains(a)) maximal = false;
    if (maximal) res.maximal.push_back(a);
  }
  return res;
}

}  // namespace pairops
