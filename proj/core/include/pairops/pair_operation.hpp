#ifndef PAIROPS_PAIR_OPERATION_HPP
#define PAIROPS_PAIR_OPERATION_HPP

#include <functional>
#include <memory>
#include <string>

#include "pairops/linear_module.hpp"

namespace pairops {

// A pair operation p(L, M) on submodules of a fixed ambient module, with
// quotient support: eval(L, M, U) computes p(L/U, M/U) for U <= L <= M,
// returned as the subspace between U and M that represents it.  All built-ins
// are defined by ring formulas, so isomorphism compatibility holds by
// construction.
struct PairOp {
  std::string name;
  std::function<Subspace(const Subspace& L, const Subspace& M,
                         const Subspace& U)>
      eval;
  // restriction of the admissible pair class; total when absent
  std::function<bool(const Subspace& L, const Subspace& M, const Subspace& U)>
      applicable;

  Subspace operator()(const Subspace& L, const Subspace& M) const;
  Subspace operator()(const Subspace& L, const Subspace& M,
                      const Subspace& U) const {
    return eval(L, M, U);
  }
  bool is_applicable(const Subspace& L, const Subspace& M,
                     const Subspace& U) const {
    return !applicable || applicable(L, M, U);
  }
};

PairOp op_identity(const LinearModule& mod);
// (J L :_M J)
PairOp op_jbf(const LinearModule& mod, const Subspace& J, const std::string& jname);
// J (L :_M J)
PairOp op_jbe(const LinearModule& mod, const Subspace& J, const std::string& jname);
// bar(I) on pairs (I, A_N) of the regular module only
PairOp op_integral_closure(const LinearModule& mod);

// The Matlis bridge between the regular module A_N and its linear dual E_N,
// realized by annihilators under the standard perfect pairing.
class DualityBridge {
 public:
  explicit DualityBridge(const SemigroupAlgebra& alg);

  const SemigroupAlgebra& algebra() const { return *alg_; }
  const LinearModule& primal() const { return primal_; }
  const LinearModule& dual() const { return dual_; }

  Subspace ann_of_primal(const Subspace& U) const;  // -> subspace of E_N
  Subspace ann_of_dual(const Subspace& A) const;    // -> subspace of A_N

 private:
  const SemigroupAlgebra* alg_;
  LinearModule primal_;
  LinearModule dual_;
  PerfectPairing pairing_;
};

// p^dual(A, B) = (B^v / p((B/A)^v, B^v))^v, realized through annihilators:
//   dualize(p)(A, B, U) = ann( p(ann A, ann U, ann B) ).
// An operation on the primal side yields one on the dual side and back.
PairOp dualize_primal_op(const PairOp& p, const DualityBridge& bridge);
PairOp dualize_dual_op(const PairOp& p, const DualityBridge& bridge);

// I^R_{cl-dual} by the generic duality machinery next to the direct
// annihilator formula ann_R(cl(ann_E I, E)); the two must agree.
struct AnnChainResult {
  Subspace via_dualize;
  Subspace via_annihilator;
  bool equal;
};
AnnChainResult ann_chain_item1(const DualityBridge& bridge, const Subspace& I,
                               const PairOp& cl_on_dual);

}  // namespace pairops

#endif
