#ifndef PAIROPS_PROPERTY_CHECK_HPP
#define PAIROPS_PROPERTY_CHECK_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pairops/inverse_monomial.hpp"
#include "pairops/monomial.hpp"
#include "pairops/pair_operation.hpp"

namespace pairops {

enum class Verdict { Holds, Fails, NotChecked };

std::string verdict_str(Verdict v);

// A failing verdict always carries a replayable witness: the axiom name plus
// the lattice elements (indices and renderings) of the first counterexample
// in canonical order.
struct Witness {
  std::string axiom;
  std::vector<std::pair<std::string, std::string>> parts;
  std::vector<size_t> indices;
};

struct PropertyResult {
  Verdict verdict = Verdict::NotChecked;
  std::optional<Witness> witness;
};

struct PropertyReport {
  std::string op_name;
  std::map<std::string, PropertyResult> properties;

  bool holds(const std::string& name) const;
  bool fails(const std::string& name) const;
  Verdict verdict(const std::string& name) const;
  std::string to_json_string() const;  // flat {property: {verdict, witness?}}
  std::string to_text() const;
};

// Exhaustive finite context on the semigroup side: the full submodule
// lattice of a LinearModule, with quotient support.
struct LinearContext {
  const LinearModule* mod = nullptr;
  std::vector<Subspace> lattice;  // canonically sorted
  std::function<std::string(const Subspace&)> renderer;

  static LinearContext build(const LinearModule& mod,
                             uint64_t cap = kDefaultEnumerationCap);
  std::string render(const Subspace& s) const;
  // index in the sorted lattice; npos when absent
  size_t index_of(const Subspace& s) const;
};

PropertyReport check_properties(const PairOp& p, const LinearContext& ctx);

// Nakayama conditions, quantified over all lattice chains.
PropertyResult check_nakayama_closure(const PairOp& cl, const LinearContext& ctx);
PropertyResult check_nakayama_interior(const PairOp& intr, const LinearContext& ctx);

// Re-evaluates the single axiom instance recorded in a witness; true means
// the instance still fails.
bool replay_witness(const PairOp& p, const LinearContext& ctx, const Witness& w);

// Monomial staircase context: no quotient construction, so the two
// quotient-based axioms come back NotChecked.
struct MonomialPairOp {
  std::string name;
  std::function<MonomialIdeal(const MonomialIdeal& L, const MonomialIdeal& M)>
      eval;
};

MonomialPairOp mon_op_identity();
MonomialPairOp mon_op_jbf(const MonomialIdeal& J, const std::string& jname);
MonomialPairOp mon_op_jbe(const MonomialIdeal& J, const std::string& jname);
MonomialPairOp mon_op_integral_closure();
MonomialPairOp mon_op_rr_cap(int n_max = 12);  // alpha(I, J) = RR(I) cap J

struct MonomialContext {
  std::vector<MonomialIdeal> lattice;
  static MonomialContext box(int b);
};

// The monomial-side duality bridge pairs (I, R) with ((0 :_E I), E) through
// annihilators: p^dual(A, E) = (0 :_E p(ann_R A, R)), and applying it twice
// returns p itself.  Defined for operations sending m-primary ideals to
// m-primary ideals.
InverseModule mon_dual_apply(const MonomialPairOp& p, const InverseModule& A);
MonomialIdeal mon_bidual_apply(const MonomialPairOp& p, const MonomialIdeal& I);

PropertyReport check_properties(const MonomialPairOp& p, const MonomialContext& ctx);

// Transfer patterns for the duality: items numbered as in the duality
// proposition, evaluated from the two exhaustive reports.
struct TransferItem {
  std::string name;
  Verdict verdict;
  std::string detail;
};

std::vector<TransferItem> duality_transfer_items(const PropertyReport& p,
                                                 const PropertyReport& pdual);

}  // namespace pairops

#endif
