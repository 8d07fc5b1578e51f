#include "pairops/linear_module.hpp"

#include <stdexcept>

#include "pairops/errors.hpp"

namespace pairops {

LinearModule::LinearModule(const SemigroupAlgebra& alg, bool dual_side)
    : alg_(&alg), dual_(dual_side), m_ideal_(alg.field(), alg.dim()) {
  for (const Matrix& g : alg.generator_actions())
    gen_actions_.push_back(dual_ ? transpose(g) : g);
  m_ideal_ = maximal_ideal(alg).space();
}

Matrix LinearModule::action_of(const Row& ring_elem) const {
  Matrix m = alg_->action_of(ring_elem);
  return dual_ ? transpose(m) : m;
}

Subspace LinearModule::submodule_span(const std::vector<Row>& gens) const {
  return stable_closure(field(), dim(), gen_actions_, gens);
}

bool LinearModule::is_submodule(const Subspace& s) const {
  for (const Row& b : s.basis_rows())
    for (const Matrix& op : gen_actions_)
      if (!s.contains(mat_vec(op, b, field()))) return false;
  return true;
}

Subspace LinearModule::scale(const Subspace& J, const Subspace& S) const {
  std::vector<Row> prods;
  for (const Row& j : J.basis_rows()) {
    const Matrix act = action_of(j);
    for (const Row& s : S.basis_rows()) prods.push_back(mat_vec(act, s, field()));
  }
  return Subspace::span(field(), dim(), prods);
}

Subspace LinearModule::colon(const Subspace& L, const Subspace& J,
                             const Subspace& M) const {
  if (J.is_zero()) return M;
  const PerfectPairing pp = PerfectPairing::standard(field(), dim());
  const Subspace annL = pp.annihilator(L);
  std::vector<Row> cond;
  for (const Row& j : J.basis_rows()) {
    if (annL.dim() == 0) continue;
    Matrix c = mat_mul(annL.basis(), action_of(j), field());
    for (size_t i = 0; i < c.rows; ++i) cond.push_back(c.row(i));
  }
  if (cond.empty()) return M;
  Matrix k = kernel_basis(Matrix::from_rows(cond, dim()), field());
  std::vector<Row> rows;
  for (size_t i = 0; i < k.rows; ++i) rows.push_back(k.row(i));
  return Subspace::span(field(), dim(), rows).intersect(M);
}

Subspace LinearModule::socle_colon(const Subspace& A, const Subspace& B) const {
  return colon(A, m_ideal_, B);
}

size_t LinearModule::mu(const Subspace& L, const Subspace& U) const {
  return L.dim() - scale(m_ideal_, L).sum(U).dim();
}

size_t LinearModule::eta(const Subspace& B, const Subspace& A) const {
  return socle_colon(A, B).dim() - A.dim();
}

namespace {

// Complement representatives of S inside Q (S <= Q): basis rows of Q that are
// independent modulo S, in canonical order.
std::vector<Row> coset_basis(const Subspace& Q, const Subspace& S) {
  std::vector<Row> out;
  Subspace acc = S;
  for (const Row& b : Q.basis_rows()) {
    if (acc.contains(b)) continue;
    out.push_back(b);
    acc = acc.sum(Subspace::span(Q.field(), Q.ambient(), {b}));
  }
  return out;
}

// All covectors in F^d with leading coefficient 1 (one per projective class).
std::vector<Row> projective_covectors(const PrimeField& F, size_t d,
                                      uint64_t cap, const char* who) {
  uint64_t count = 1;
  for (size_t i = 0; i < d; ++i) {
    count *= F.p();
    if (count > cap * F.p()) break;
  }
  const uint64_t classes = d == 0 ? 0 : (count - 1) / (F.p() - 1);
  if (classes > cap)
    throw CapExceeded(std::string(who) + ": " + std::to_string(classes) +
                      " covers exceed cap " + std::to_string(cap));
  std::vector<Row> out;
  Row v(d, 0);
  while (true) {
    size_t i = 0;
    while (i < d) {
      v[i] = (v[i] + 1) % F.p();
      if (v[i] != 0) break;
      ++i;
    }
    if (i == d) break;
    size_t lead = 0;
    while (lead < d && v[lead] == 0) ++lead;
    if (lead < d && v[lead] == 1) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Subspace> LinearModule::covers_below(const Subspace& L,
                                                 const Subspace& U,
                                                 uint64_t cap) const {
  // C with mL + U <= C < L of codimension 1 in L; these are exactly the
  // submodule covers since m C <= m L <= C.
  const Subspace S = scale(m_ideal_, L).sum(U);
  const std::vector<Row> reps = coset_basis(L, S);
  const size_t d = reps.size();
  std::vector<Subspace> covers;
  for (const Row& c : projective_covectors(field(), d, cap, "covers_below")) {
    // C = S + span of the kernel of the covector on the coset coordinates
    Matrix sys = Matrix::from_rows({c}, d);
    Matrix ker = kernel_basis(sys, field());
    std::vector<Row> gens = S.basis_rows();
    for (size_t i = 0; i < ker.rows; ++i) {
      Row v(dim(), 0);
      for (size_t j = 0; j < d; ++j) {
        if (ker.at(i, j) == 0) continue;
        for (size_t t = 0; t < dim(); ++t)
          v[t] = field().add(v[t], field().mul(ker.at(i, j), reps[j][t]));
      }
      gens.push_back(std::move(v));
    }
    covers.push_back(Subspace::span(field(), dim(), gens));
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<Subspace> LinearModule::covers_above(const Subspace& A,
                                                 const Subspace& B,
                                                 uint64_t cap) const {
  const Subspace Q = socle_colon(A, B);
  const std::vector<Row> reps = coset_basis(Q, A);
  const size_t d = reps.size();
  std::vector<Subspace> covers;
  for (const Row& c : projective_covectors(field(), d, cap, "covers_above")) {
    Row v(dim(), 0);
    for (size_t j = 0; j < d; ++j) {
      if (c[j] == 0) continue;
      for (size_t t = 0; t < dim(); ++t)
        v[t] = field().add(v[t], field().mul(c[j], reps[j][t]));
    }
    std::vector<Row> gens = A.basis_rows();
    gens.push_back(std::move(v));
    covers.push_back(Subspace::span(field(), dim(), gens));
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<Subspace> LinearModule::all_submodules(uint64_t cap) const {
  return enumerate_stable_subspaces(field(), dim(), gen_actions_, cap);
}

bool is_basically_full_fixed_point(const LinearModule& mod, const Subspace& L,
                                   const Subspace& M, const Subspace& U) {
  const Subspace m = maximal_ideal(mod.algebra()).space();
  const Subspace cl = mod.colon(mod.scale(m, L).sum(U), m, M);
  return cl == L;
}

bool is_basically_full_mu_covers(const LinearModule& mod, const Subspace& L,
                                 const Subspace& M, const Subspace& U) {
  const size_t muL = mod.mu(L, U);
  for (const Subspace& N : mod.covers_above(L, M)) {
    if (mod.mu(N, U) > muL) return false;
  }
  return true;
}

bool is_basically_empty_fixed_point(const LinearModule& mod, const Subspace& A,
                                    const Subspace& B, const Subspace& U) {
  const Subspace m = maximal_ideal(mod.algebra()).space();
  const Subspace in = mod.scale(m, mod.colon(A, m, B)).sum(U);
  return in == A;
}

bool is_basically_empty_eta_covers(const LinearModule& mod, const Subspace& A,
                                   const Subspace& B, const Subspace& U) {
  const size_t etaBA = mod.eta(B, A);
  for (const Subspace& C : mod.covers_below(A, U)) {
    if (mod.eta(B, C) > etaBA) return false;
  }
  return true;
}

PrincipalRingProbe principal_ring_probe(const SemigroupAlgebra& alg,
                                        uint64_t cap) {
  PrincipalRingProbe probe{true, std::nullopt, true};
  const LinearModule V(alg, false);
  const LinearModule W(alg, true);
  const PerfectPairing pp = PerfectPairing::standard(alg.field(), alg.dim());
  for (const Subspace& L : V.all_submodules(cap)) {
    // every nonzero ideal of the truncated domain model is m-primary
    if (L.is_zero()) continue;
    const bool bf = is_basically_full_fixed_point(V, L, V.full(), V.zero());
    if (!bf && !probe.witness) {
      probe.all_basically_full = false;
      probe.witness = SemigroupIdeal::from_subspace(alg, L).render();
    }
    // the dual submodule ann(L) is basically empty iff L is basically full
    const bool be =
        is_basically_empty_fixed_point(W, pp.annihilator(L), W.full(), W.zero());
    if (bf != be) probe.dual_side_consistent = false;
  }
  return probe;
}

}  // namespace pairops
