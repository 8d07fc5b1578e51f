#include "pairops/pair_operation.hpp"

namespace pairops {

Subspace PairOp::operator()(const Subspace& L, const Subspace& M) const {
  const Subspace zero(L.field(), L.ambient());
  return eval(L, M, zero);
}

PairOp op_identity(const LinearModule&) {
  return PairOp{
      "identity",
      [](const Subspace& L, const Subspace&, const Subspace&) { return L; },
      nullptr};
}

PairOp op_jbf(const LinearModule& mod, const Subspace& J,
              const std::string& jname) {
  return PairOp{
      "jbf(" + jname + ")",
      [&mod, J](const Subspace& L, const Subspace& M, const Subspace& U) {
        return mod.colon(mod.scale(J, L).sum(U), J, M);
      },
      nullptr};
}

PairOp op_jbe(const LinearModule& mod, const Subspace& J,
              const std::string& jname) {
  return PairOp{
      "jbe(" + jname + ")",
      [&mod, J](const Subspace& L, const Subspace& M, const Subspace& U) {
        return mod.scale(J, mod.colon(L, J, M)).sum(U);
      },
      nullptr};
}

PairOp op_integral_closure(const LinearModule& mod) {
  const SemigroupAlgebra* alg = &mod.algebra();
  return PairOp{
      "integral_closure",
      [alg](const Subspace& L, const Subspace&, const Subspace&) {
        return SemigroupIdeal::from_subspace(*alg, L).integral_closure().space();
      },
      // module integral closure is out of reach; ideals of the ring only
      [](const Subspace&, const Subspace& M, const Subspace& U) {
        return M.is_full() && U.is_zero();
      }};
}

DualityBridge::DualityBridge(const SemigroupAlgebra& alg)
    : alg_(&alg),
      primal_(alg, /*dual_side=*/false),
      dual_(alg, /*dual_side=*/true),
      pairing_(PerfectPairing::standard(alg.field(), alg.dim())) {}

Subspace DualityBridge::ann_of_primal(const Subspace& U) const {
  return pairing_.annihilator(U);
}

Subspace DualityBridge::ann_of_dual(const Subspace& A) const {
  return pairing_.annihilator(A);
}

PairOp dualize_primal_op(const PairOp& p, const DualityBridge& bridge) {
  PairOp q;
  q.name = "dual(" + p.name + ")";
  q.eval = [p, &bridge](const Subspace& A, const Subspace& B,
                        const Subspace& U) {
    // (B/U)^v = ann(U)/ann(B) and ((B/U)/(A/U))^v = ann(A)/ann(B)
    return bridge.ann_of_primal(
        p.eval(bridge.ann_of_dual(A), bridge.ann_of_dual(U),
               bridge.ann_of_dual(B)));
  };
  if (p.applicable) {
    q.applicable = [p, &bridge](const Subspace& A, const Subspace& B,
                                const Subspace& U) {
      return p.applicable(bridge.ann_of_dual(A), bridge.ann_of_dual(U),
                          bridge.ann_of_dual(B));
    };
  }
  return q;
}

PairOp dualize_dual_op(const PairOp& p, const DualityBridge& bridge) {
  PairOp q;
  q.name = "dual(" + p.name + ")";
  q.eval = [p, &bridge](const Subspace& L, const Subspace& M,
                        const Subspace& U) {
    return bridge.ann_of_dual(
        p.eval(bridge.ann_of_primal(L), bridge.ann_of_primal(U),
               bridge.ann_of_primal(M)));
  };
  if (p.applicable) {
    q.applicable = [p, &bridge](const Subspace& L, const Subspace& M,
                                const Subspace& U) {
      return p.applicable(bridge.ann_of_primal(L), bridge.ann_of_primal(U),
                          bridge.ann_of_primal(M));
    };
  }
  return q;
}

AnnChainResult ann_chain_item1(const DualityBridge& bridge, const Subspace& I,
                               const PairOp& cl_on_dual) {
  const PairOp interior = dualize_dual_op(cl_on_dual, bridge);
  const Subspace full = bridge.primal().full();
  const Subspace zero = bridge.primal().zero();
  AnnChainResult r{interior.eval(I, full, zero),
                   bridge.ann_of_dual(cl_on_dual(bridge.ann_of_primal(I),
                                                 bridge.dual().full())),
                   false};
  r.equal = r.via_dualize == r.via_annihilator;
  return r;
}

}  // namespace pairops
