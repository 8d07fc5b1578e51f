#include "pairops/property_check.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace pairops {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds-exhaustively";
    case Verdict::Fails:
      return "fails";
    case Verdict::NotChecked:
      return "not-checked";
  }
  return "?";
}

bool PropertyReport::holds(const std::string& name) const {
  auto it = properties.find(name);
  return it != properties.end() && it->second.verdict == Verdict::Holds;
}

bool PropertyReport::fails(const std::string& name) const {
  auto it = properties.find(name);
  return it != properties.end() && it->second.verdict == Verdict::Fails;
}

Verdict PropertyReport::verdict(const std::string& name) const {
  auto it = properties.find(name);
  return it == properties.end() ? Verdict::NotChecked : it->second.verdict;
}

std::string PropertyReport::to_json_string() const {
  nlohmann::ordered_json j;
  for (const auto& [name, res] : properties) {
    nlohmann::ordered_json entry;
    entry["verdict"] = verdict_str(res.verdict);
    if (res.witness) {
      nlohmann::ordered_json w;
      w["axiom"] = res.witness->axiom;
      for (const auto& [k, v] : res.witness->parts) w[k] = v;
      entry["witness"] = w;
    }
    j[name] = entry;
  }
  return j.dump(2);
}

std::string PropertyReport::to_text() const {
  std::ostringstream os;
  os << "op: " << op_name << "\n";
  for (const auto& [name, res] : properties) {
    os << "  " << name << ": " << verdict_str(res.verdict);
    if (res.witness) {
      os << "  [";
      bool first = true;
      for (const auto& [k, v] : res.witness->parts) {
        if (!first) os << ", ";
        first = false;
        os << k << "=" << v;
      }
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

LinearContext LinearContext::build(const LinearModule& mod, uint64_t cap) {
  LinearContext ctx;
  ctx.mod = &mod;
  ctx.lattice = mod.all_submodules(cap);
  const SemigroupAlgebra* alg = &mod.algebra();
  if (mod.dual_side()) {
    ctx.renderer = [alg](const Subspace& s) {
      const PerfectPairing pp = PerfectPairing::standard(alg->field(), alg->dim());
      return "dual-of" + SemigroupIdeal::from_subspace(*alg, pp.annihilator(s)).render();
    };
  } else {
    ctx.renderer = [alg](const Subspace& s) {
      return SemigroupIdeal::from_subspace(*alg, s).render();
    };
  }
  return ctx;
}

std::string LinearContext::render(const Subspace& s) const {
  return renderer ? renderer(s) : "<subspace dim " + std::to_string(s.dim()) + ">";
}

size_t LinearContext::index_of(const Subspace& s) const {
  auto it = std::lower_bound(lattice.begin(), lattice.end(), s);
  if (it != lattice.end() && *it == s)
    return static_cast<size_t>(it - lattice.begin());
  return static_cast<size_t>(-1);
}

namespace {

struct LinearChecker {
  const PairOp& p;
  const LinearContext& ctx;
  const std::vector<Subspace>& lat;
  Subspace zero;
  std::vector<std::vector<char>> leq;
  // cache of p(L_i, M_j) with zero base
  std::vector<std::vector<std::optional<Subspace>>> pv;

  LinearChecker(const PairOp& p_, const LinearContext& c)
      : p(p_), ctx(c), lat(c.lattice), zero(c.mod->zero()) {
    const size_t n = lat.size();
    leq.assign(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        leq[i][j] = lat[j].contains(lat[i]) ? 1 : 0;
    pv.assign(n, std::vector<std::optional<Subspace>>(n));
  }

  bool applicable(size_t i, size_t j) {
    return p.is_applicable(lat[i], lat[j], zero);
  }

  const Subspace& eval(size_t i, size_t j) {
    if (!pv[i][j]) pv[i][j] = p.eval(lat[i], lat[j], zero);
    return *pv[i][j];
  }

  Witness witness(const std::string& axiom,
                  std::initializer_list<std::pair<const char*, size_t>> parts) {
    Witness w;
    w.axiom = axiom;
    for (const auto& [name, idx] : parts) {
      w.parts.emplace_back(name, ctx.render(lat[idx]));
      w.indices.push_back(idx);
    }
    return w;
  }

  PropertyResult extensive() {
    for (size_t j = 0; j < lat.size(); ++j)
      for (size_t i = 0; i < lat.size(); ++i) {
        if (!leq[i][j] || !applicable(i, j)) continue;
        if (!eval(i, j).contains(lat[i]))
          return {Verdict::Fails, witness("extensive", {{"L", i}, {"M", j}})};
      }
    return {Verdict::Holds, std::nullopt};
  }

  PropertyResult intensive() {
    for (size_t j = 0; j < lat.size(); ++j)
      for (size_t i = 0; i < lat.size(); ++i) {
        if (!leq[i][j] || !applicable(i, j)) continue;
        if (!lat[i].contains(eval(i, j)))
          return {Verdict::Fails, witness("intensive", {{"L", i}, {"M", j}})};
      }
    return {Verdict::Holds, std::nullopt};
  }

  PropertyResult idempotent() {
    for (size_t j = 0; j < lat.size(); ++j)
      for (size_t i = 0; i < lat.size(); ++i) {
        if (!leq[i][j] || !applicable(i, j)) continue;
        const Subspace& q = eval(i, j);
        if (!lat[j].contains(q)) continue;
        if (!p.is_applicable(q, lat[j], zero)) continue;
        if (!(p.eval(q, lat[j], zero) == q))
          return {Verdict::Fails, witness("idempotent", {{"L", i}, {"M", j}})};
      }
    return {Verdict::Holds, std::nullopt};
  }

  PropertyResult order_preserving_submodules() {
    for (size_t j = 0; j < lat.size(); ++j)
      for (size_t i = 0; i < lat.size(); ++i) {
        if (!leq[i][j]) continue;
        for (size_t k = 0; k < lat.size(); ++k) {
          if (!leq[i][k] || !leq[k][j]) continue;
          if (!applicable(i, j) || !applicable(k, j)) continue;
          if (!eval(k, j).contains(eval(i, j)))
            return {Verdict::Fails, witness("order-preserving-on-submodules",
                                            {{"L", i}, {"N", k}, {"M", j}})};
        }
      }
    return {Verdict::Holds, std::nullopt};
  }

  PropertyResult order_preserving_ambient() {
    for (size_t j = 0; j < lat.size(); ++j)
      for (size_t k = 0; k < lat.size(); ++k) {
        if (!leq[k][j]) continue;
        for (size_t i = 0; i < lat.size(); ++i) {
          if (!leq[i][k]) continue;
          if (!applicable(i, k) || !applicable(i, j)) continue;
          if (!eval(i, j).contains(eval(i, k)))
            return {Verdict::Fails, witness("order-preserving-on-ambient",
                                            {{"L", i}, {"N", k}, {"M", j}})};
        }
      }
    return {Verdict::Holds, std::nullopt};
  }

  PropertyResult restrictable() {
    for (size_t j = 0; j < lat.size(); ++j)
      for (size_t i = 0; i < lat.size(); ++i) {
        if (!leq[i][j] || !applicable(i, j)) continue;
        for (size_t k = 0; k < lat.size(); ++k) {
          if (!leq[k][j]) continue;  // N = lat[k] inside M = lat[j]
          const Subspace cap = lat[i].intersect(lat[k]);
          const size_t ci = ctx.index_of(cap);
          if (ci == static_cast<size_t>(-1)) continue;
          if (!p.is_applicable(cap, lat[k], zero)) continue;
          if (!eval(i, j).contains(eval(ci, k)))
            return {Verdict::Fails,
                    witness("restrictable", {{"L", i}, {"N", k}, {"M", j}})};
        }
      }
    return {Verdict::Holds, std::nullopt};
  }

  PropertyResult surjection_functorial() {
    for (size_t j = 0; j < lat.size(); ++j)
      for (size_t i = 0; i < lat.size(); ++i) {
        if (!leq[i][j] || !applicable(i, j)) continue;
        for (size_t u = 0; u < lat.size(); ++u) {
          if (!leq[u][j]) continue;
          const Subspace LU = lat[i].sum(lat[u]);
          if (!p.is_applicable(LU, lat[j], lat[u])) continue;
          const Subspace lhs = eval(i, j).sum(lat[u]);
          if (!p.eval(LU, lat[j], lat[u]).contains(lhs))
            return {Verdict::Fails, witness("surjection-functorial",
                                            {{"L", i}, {"M", j}, {"U", u}})};
        }
      }
    return {Verdict::Holds, std::nullopt};
  }

  PropertyResult residual() {
    for (size_t j = 0; j < lat.size(); ++j)
      for (size_t k = 0; k < lat.size(); ++k) {
        if (!leq[k][j]) continue;
        for (size_t i = 0; i < lat.size(); ++i) {
          if (!leq[i][k]) continue;  // L <= N <= M
          if (!applicable(k, j)) continue;
          if (!p.is_applicable(lat[k], lat[j], lat[i])) continue;
          if (!(eval(k, j) == p.eval(lat[k], lat[j], lat[i])))
            return {Verdict::Fails,
                    witness("residual", {{"L", i}, {"N", k}, {"M", j}})};
        }
      }
    return {Verdict::Holds, std::nullopt};
  }

  PropertyResult absolute() {
    for (size_t j = 0; j < lat.size(); ++j)
      for (size_t k = 0; k < lat.size(); ++k) {
        if (!leq[k][j]) continue;
        for (size_t i = 0; i < lat.size(); ++i) {
          if (!leq[i][k]) continue;
          if (!applicable(i, k) || !applicable(i, j)) continue;
          if (!(eval(i, k) == eval(i, j)))
            return {Verdict::Fails,
                    witness("absolute", {{"L", i}, {"N", k}, {"M", j}})};
        }
      }
    return {Verdict::Holds, std::nullopt};
  }
};

PropertyResult combine(std::initializer_list<PropertyResult> parts) {
  for (const auto& r : parts)
    if (r.verdict == Verdict::Fails) return r;
  for (const auto& r : parts)
    if (r.verdict == Verdict::NotChecked) return {Verdict::NotChecked, {}};
  return {Verdict::Holds, std::nullopt};
}

}  // namespace

PropertyReport check_properties(const PairOp& p, const LinearContext& ctx) {
  LinearChecker c(p, ctx);
  PropertyReport rep;
  rep.op_name = p.name;
  rep.properties["extensive"] = c.extensive();
  rep.properties["intensive"] = c.intensive();
  rep.properties["idempotent"] = c.idempotent();
  rep.properties["order-preserving-on-submodules"] = c.order_preserving_submodules();
  rep.properties["order-preserving-on-ambient"] = c.order_preserving_ambient();
  rep.properties["restrictable"] = c.restrictable();
  rep.properties["surjection-functorial"] = c.surjection_functorial();
  rep.properties["residual"] = c.residual();
  rep.properties["absolute"] = c.absolute();
  rep.properties["functorial"] =
      combine({rep.properties["order-preserving-on-ambient"],
               rep.properties["surjection-functorial"]});
  rep.properties["closure"] = combine({rep.properties["extensive"],
                                       rep.properties["order-preserving-on-submodules"],
                                       rep.properties["idempotent"]});
  rep.properties["interior"] = combine({rep.properties["intensive"],
                                        rep.properties["order-preserving-on-submodules"],
                                        rep.properties["idempotent"]});
  return rep;
}

PropertyResult check_nakayama_closure(const PairOp& cl, const LinearContext& ctx) {
  const auto& lat = ctx.lattice;
  const Subspace zero = ctx.mod->zero();
  const Subspace m = maximal_ideal(ctx.mod->algebra()).space();
  for (size_t j = 0; j < lat.size(); ++j)
    for (size_t k = 0; k < lat.size(); ++k) {
      if (!lat[j].contains(lat[k])) continue;
      for (size_t i = 0; i < lat.size(); ++i) {
        if (!lat[k].contains(lat[i])) continue;
        if (!cl.is_applicable(lat[i], lat[j], zero)) continue;
        const Subspace LmN = lat[i].sum(ctx.mod->scale(m, lat[k]));
        if (!cl.is_applicable(LmN, lat[j], zero)) continue;
        if (!cl.eval(LmN, lat[j], zero).contains(lat[k])) continue;
        if (!(cl.eval(lat[i], lat[j], zero) == cl.eval(lat[k], lat[j], zero))) {
          Witness w;
          w.axiom = "nakayama-closure";
          w.parts = {{"L", ctx.render(lat[i])},
                     {"N", ctx.render(lat[k])},
                     {"M", ctx.render(lat[j])}};
          w.indices = {i, k, j};
          return {Verdict::Fails, w};
        }
      }
    }
  return {Verdict::Holds, std::nullopt};
}

PropertyResult check_nakayama_interior(const PairOp& intr, const LinearContext& ctx) {
  const auto& lat = ctx.lattice;
  const Subspace zero = ctx.mod->zero();
  for (size_t j = 0; j < lat.size(); ++j)
    for (size_t k = 0; k < lat.size(); ++k) {
      if (!lat[j].contains(lat[k])) continue;  // C = lat[k] <= B = lat[j]
      for (size_t i = 0; i < lat.size(); ++i) {
        if (!lat[k].contains(lat[i])) continue;  // A = lat[i] <= C
        if (!intr.is_applicable(lat[i], lat[j], zero)) continue;
        const Subspace soc = ctx.mod->socle_colon(lat[i], lat[k]);
        if (!intr.is_applicable(soc, lat[j], zero)) continue;
        if (!lat[i].contains(intr.eval(soc, lat[j], zero))) continue;
        if (!(intr.eval(lat[i], lat[j], zero) == intr.eval(lat[k], lat[j], zero))) {
          Witness w;
          w.axiom = "nakayama-interior";
          w.parts = {{"A", ctx.render(lat[i])},
                     {"C", ctx.render(lat[k])},
                     {"B", ctx.render(lat[j])}};
          w.indices = {i, k, j};
          return {Verdict::Fails, w};
        }
      }
    }
  return {Verdict::Holds, std::nullopt};
}

bool replay_witness(const PairOp& p, const LinearContext& ctx, const Witness& w) {
  const auto& lat = ctx.lattice;
  const Subspace zero = ctx.mod->zero();
  auto at = [&](size_t pos) -> const Subspace& { return lat.at(w.indices.at(pos)); };
  if (w.axiom == "extensive")
    return !p.eval(at(0), at(1), zero).contains(at(0));
  if (w.axiom == "intensive")
    return !at(0).contains(p.eval(at(0), at(1), zero));
  if (w.axiom == "idempotent") {
    const Subspace q = p.eval(at(0), at(1), zero);
    return !(p.eval(q, at(1), zero) == q);
  }
  if (w.axiom == "order-preserving-on-submodules")
    return !p.eval(at(1), at(2), zero).contains(p.eval(at(0), at(2), zero));
  if (w.axiom == "order-preserving-on-ambient")
    return !p.eval(at(0), at(2), zero).contains(p.eval(at(0), at(1), zero));
  if (w.axiom == "restrictable")
    return !p.eval(at(0), at(2), zero)
                .contains(p.eval(at(0).intersect(at(1)), at(1), zero));
  if (w.axiom == "surjection-functorial")
    return !p.eval(at(0).sum(at(2)), at(1), at(2))
                .contains(p.eval(at(0), at(1), zero).sum(at(2)));
  if (w.axiom == "residual")
    return !(p.eval(at(1), at(2), zero) == p.eval(at(1), at(2), at(0)));
  if (w.axiom == "absolute")
    return !(p.eval(at(0), at(1), zero) == p.eval(at(0), at(2), zero));
  return false;
}

MonomialPairOp mon_op_identity() {
  return {"identity",
          [](const MonomialIdeal& L, const MonomialIdeal&) { return L; }};
}

MonomialPairOp mon_op_jbf(const MonomialIdeal& J, const std::string& jname) {
  return {"jbf(" + jname + ")",
          [J](const MonomialIdeal& L, const MonomialIdeal& M) {
            return J.product(L).colon(J).intersect(M);
          }};
}

MonomialPairOp mon_op_jbe(const MonomialIdeal& J, const std::string& jname) {
  return {"jbe(" + jname + ")",
          [J](const MonomialIdeal& L, const MonomialIdeal& M) {
            return J.product(L.colon(J).intersect(M));
          }};
}

MonomialPairOp mon_op_integral_closure() {
  return {"integral_closure",
          [](const MonomialIdeal& L, const MonomialIdeal& M) {
            return L.integral_closure().intersect(M);
          }};
}

MonomialPairOp mon_op_rr_cap(int n_max) {
  auto cache = std::make_shared<std::map<MonomialIdeal, MonomialIdeal>>();
  return {"rr_cap",
          [cache, n_max](const MonomialIdeal& L, const MonomialIdeal& M) {
            auto it = cache->find(L);
            if (it == cache->end())
              it = cache->emplace(L, ratliff_rush(L, n_max)).first;
            return it->second.intersect(M);
          }};
}

MonomialContext MonomialContext::box(int b) {
  return MonomialContext{enumerate_monomial_ideals_in_box(b)};
}

InverseModule mon_dual_apply(const MonomialPairOp& p, const InverseModule& A) {
  return ann_E(p.eval(A.annihilator_in_R(), MonomialIdeal::unit()));
}

MonomialIdeal mon_bidual_apply(const MonomialPairOp& p, const MonomialIdeal& I) {
  return mon_dual_apply(p, ann_E(I)).annihilator_in_R();
}

PropertyReport check_properties(const MonomialPairOp& p, const MonomialContext& ctx) {
  const auto& lat = ctx.lattice;
  const size_t n = lat.size();
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      leq[i][j] = lat[j].contains(lat[i]) ? 1 : 0;
  std::vector<std::vector<std::optional<MonomialIdeal>>> pv(
      n, std::vector<std::optional<MonomialIdeal>>(n));
  auto eval = [&](size_t i, size_t j) -> const MonomialIdeal& {
    if (!pv[i][j]) pv[i][j] = p.eval(lat[i], lat[j]);
    return *pv[i][j];
  };
  auto witness = [&](const std::string& axiom,
                     std::initializer_list<std::pair<const char*, size_t>>
                         parts) {
    Witness w;
    w.axiom = axiom;
    for (const auto& [name, idx] : parts) {
      w.parts.emplace_back(name, lat[idx].render());
      w.indices.push_back(idx);
    }
    return w;
  };

  PropertyReport rep;
  rep.op_name = p.name;
  auto& props = rep.properties;
  props["extensive"] = {Verdict::Holds, {}};
  props["intensive"] = {Verdict::Holds, {}};
  props["idempotent"] = {Verdict::Holds, {}};
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      if (!leq[i][j]) continue;
      const MonomialIdeal& q = eval(i, j);
      if (props["extensive"].verdict == Verdict::Holds && !q.contains(lat[i]))
        props["extensive"] = {Verdict::Fails,
                              witness("extensive", {{"L", i}, {"M", j}})};
      if (props["intensive"].verdict == Verdict::Holds && !lat[i].contains(q))
        props["intensive"] = {Verdict::Fails,
                              witness("intensive", {{"L", i}, {"M", j}})};
      if (props["idempotent"].verdict == Verdict::Holds && lat[j].contains(q) &&
          !(p.eval(q, lat[j]) == q))
        props["idempotent"] = {Verdict::Fails,
                               witness("idempotent", {{"L", i}, {"M", j}})};
    }

  props["order-preserving-on-submodules"] = {Verdict::Holds, {}};
  props["order-preserving-on-ambient"] = {Verdict::Holds, {}};
  props["absolute"] = {Verdict::Holds, {}};
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k) {
      if (!leq[k][j]) continue;
      for (size_t i = 0; i < n; ++i) {
        if (!leq[i][k]) continue;
        if (props["order-preserving-on-submodules"].verdict == Verdict::Holds &&
            !eval(k, j).contains(eval(i, j)))
          props["order-preserving-on-submodules"] =
              {Verdict::Fails, witness("order-preserving-on-submodules",
                                       {{"L", i}, {"N", k}, {"M", j}})};
        if (props["order-preserving-on-ambient"].verdict == Verdict::Holds &&
            !eval(i, j).contains(eval(i, k)))
          props["order-preserving-on-ambient"] =
              {Verdict::Fails, witness("order-preserving-on-ambient",
                                       {{"L", i}, {"N", k}, {"M", j}})};
        if (props["absolute"].verdict == Verdict::Holds &&
            !(eval(i, k) == eval(i, j)))
          props["absolute"] = {Verdict::Fails,
                               witness("absolute", {{"L", i}, {"N", k}, {"M", j}})};
      }
    }

  props["restrictable"] = {Verdict::Holds, {}};
  std::map<MonomialIdeal, size_t> index;
  for (size_t i = 0; i < n; ++i) index[lat[i]] = i;
  for (size_t j = 0; j < n && props["restrictable"].verdict == Verdict::Holds; ++j)
    for (size_t i = 0; i < n; ++i) {
      if (!leq[i][j]) continue;
      bool done = false;
      for (size_t k = 0; k < n && !done; ++k) {
        if (!leq[k][j]) continue;
        const MonomialIdeal cap = lat[i].intersect(lat[k]);
        auto it = index.find(cap);
        if (it == index.end()) continue;
        if (!eval(i, j).contains(eval(it->second, k))) {
          props["restrictable"] = {Verdict::Fails,
                                   witness("restrictable",
                                           {{"L", i}, {"N", k}, {"M", j}})};
          done = true;
        }
      }
      if (done) break;
    }

  props["surjection-functorial"] = {Verdict::NotChecked, {}};
  props["residual"] = {Verdict::NotChecked, {}};
  props["functorial"] = {Verdict::NotChecked, {}};
  props["closure"] = combine({props["extensive"],
                              props["order-preserving-on-submodules"],
                              props["idempotent"]});
  props["interior"] = combine({props["intensive"],
                               props["order-preserving-on-submodules"],
                               props["idempotent"]});
  return rep;
}

namespace {

Verdict implication(Verdict a, Verdict b) {
  if (a == Verdict::NotChecked || b == Verdict::NotChecked)
    return Verdict::NotChecked;
  return (a != Verdict::Holds || b == Verdict::Holds) ? Verdict::Holds
                                                      : Verdict::Fails;
}

Verdict biconditional(Verdict a, Verdict b) {
  if (a == Verdict::NotChecked || b == Verdict::NotChecked)
    return Verdict::NotChecked;
  return a == b ? Verdict::Holds : Verdict::Fails;
}

}  // namespace

std::vector<TransferItem> duality_transfer_items(const PropertyReport& p,
                                                 const PropertyReport& d) {
  std::vector<TransferItem> items;
  auto describe = [&](Verdict a, Verdict b) {
    return verdict_str(a) + " / dual " + verdict_str(b);
  };
  items.push_back({"extensive-to-dual-intensive",
                   implication(p.verdict("extensive"), d.verdict("intensive")),
                   describe(p.verdict("extensive"), d.verdict("intensive"))});
  items.push_back({"intensive-to-dual-extensive",
                   implication(p.verdict("intensive"), d.verdict("extensive")),
                   describe(p.verdict("intensive"), d.verdict("extensive"))});
  items.push_back({"order-preserving-iff",
                   biconditional(p.verdict("order-preserving-on-submodules"),
                                 d.verdict("order-preserving-on-submodules")),
                   describe(p.verdict("order-preserving-on-submodules"),
                            d.verdict("order-preserving-on-submodules"))});
  items.push_back({"idempotent-iff",
                   biconditional(p.verdict("idempotent"), d.verdict("idempotent")),
                   describe(p.verdict("idempotent"), d.verdict("idempotent"))});
  items.push_back({"closure-to-dual-interior",
                   implication(p.verdict("closure"), d.verdict("interior")),
                   describe(p.verdict("closure"), d.verdict("interior"))});
  items.push_back({"interior-to-dual-closure",
                   implication(p.verdict("interior"), d.verdict("closure")),
                   describe(p.verdict("interior"), d.verdict("closure"))});
  items.push_back({"restrictable-iff-dual-surjection-functorial",
                   biconditional(p.verdict("restrictable"),
                                 d.verdict("surjection-functorial")),
                   describe(p.verdict("restrictable"),
                            d.verdict("surjection-functorial"))});
  Verdict functorial_iff = Verdict::NotChecked;
  if (p.verdict("order-preserving-on-submodules") == Verdict::Holds)
    functorial_iff =
        biconditional(p.verdict("functorial"), d.verdict("functorial"));
  items.push_back({"functorial-iff",
                   functorial_iff,
                   describe(p.verdict("functorial"), d.verdict("functorial"))});
  return items;
}

}  // namespace pairops
