#include "pairops/subspace.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "pairops/errors.hpp"

namespace pairops {

Subspace::Subspace(const PrimeField& F, size_t ambient)
    : F_(F), ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(const PrimeField& F, size_t ambient,
                        const std::vector<Row>& generators) {
  Matrix m = Matrix::from_rows(generators, ambient);
  const size_t rank = rref_in_place(m, F);
  Subspace s(F, ambient);
  s.basis_ = Matrix(rank, ambient);
  for (size_t i = 0; i < rank; ++i) s.basis_.set_row(i, m.row(i));
  return s;
}

Subspace Subspace::full(const PrimeField& F, size_t ambient) {
  Subspace s(F, ambient);
  s.basis_ = Matrix::identity(ambient);
  return s;
}

std::vector<Row> Subspace::basis_rows() const {
  std::vector<Row> rows;
  rows.reserve(basis_.rows);
  for (size_t i = 0; i < basis_.rows; ++i) rows.push_back(basis_.row(i));
  return rows;
}

Row Subspace::reduce(Row v) const {
  assert(v.size() == ambient_);
  for (size_t i = 0; i < basis_.rows; ++i) {
    size_t lead = 0;
    while (lead < ambient_ && basis_.at(i, lead) == 0) ++lead;
    if (lead == ambient_) continue;
    const uint32_t c = v[lead];
    if (c == 0) continue;
    for (size_t j = lead; j < ambient_; ++j)
      v[j] = F_.sub(v[j], F_.mul(c, basis_.at(i, j)));
  }
  return v;
}

bool Subspace::contains(const Row& v) const {
  Row r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](uint32_t c) { return c == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() > dim()) return false;
  for (size_t i = 0; i < other.basis_.rows; ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("Subspace::sum: ambient mismatch");
  std::vector<Row> rows = basis_rows();
  for (const Row& r : other.basis_rows()) rows.push_back(r);
  return span(F_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  // Zassenhaus: rows [u|u] for u in U, [v|0] for v in V; after elimination the
  // rows with zero left half carry a basis of U cap V in the right half.
  const size_t n = ambient_;
  Matrix z(dim() + other.dim(), 2 * n);
  for (size_t i = 0; i < basis_.rows; ++i)
    for (size_t j = 0; j < n; ++j) {
      z.at(i, j) = basis_.at(i, j);
      z.at(i, n + j) = basis_.at(i, j);
    }
  for (size_t i = 0; i < other.basis_.rows; ++i)
    for (size_t j = 0; j < n; ++j)
      z.at(dim() + i, j) = other.basis_.at(i, j);
  const size_t rank = rref_in_place(z, F_);
  std::vector<Row> rows;
  for (size_t i = 0; i < rank; ++i) {
    bool left_zero = true;
    for (size_t j = 0; j < n && left_zero; ++j)
      if (z.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    Row r(n);
    for (size_t j = 0; j < n; ++j) r[j] = z.at(i, n + j);
    rows.push_back(std::move(r));
  }
  return span(F_, n, rows);
}

std::vector<Row> Subspace::vectors() const {
  std::vector<Row> out;
  const size_t k = dim();
  uint64_t count = 1;
  for (size_t i = 0; i < k; ++i) count *= F_.p();
  out.reserve(count);
  Row coeff(k, 0);
  for (uint64_t it = 0; it < count; ++it) {
    Row v(ambient_, 0);
    for (size_t i = 0; i < k; ++i) {
      if (coeff[i] == 0) continue;
      for (size_t j = 0; j < ambient_; ++j)
        v[j] = F_.add(v[j], F_.mul(coeff[i], basis_.at(i, j)));
    }
    out.push_back(std::move(v));
    for (size_t i = 0; i < k; ++i) {
      coeff[i] = (coeff[i] + 1) % F_.p();
      if (coeff[i] != 0) break;
    }
  }
  return out;
}

bool Subspace::operator<(const Subspace& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (basis_.rows != o.basis_.rows) return basis_.rows < o.basis_.rows;
  return basis_.a < o.basis_.a;
}

PerfectPairing::PerfectPairing(const PrimeField& F, Matrix gram)
    : F_(F), gram_(std::move(gram)) {
  if (gram_.rows != gram_.cols)
    throw std::invalid_argument("PerfectPairing: gram matrix not square");
  if (rank_of(gram_, F_) != gram_.rows)
    throw std::invalid_argument("PerfectPairing: degenerate pairing");
}

PerfectPairing PerfectPairing::standard(const PrimeField& F, size_t n) {
  return PerfectPairing(F, Matrix::identity(n));
}

uint32_t PerfectPairing::pair(const Row& v, const Row& w) const {
  Row gw = mat_vec(gram_, w, F_);
  uint64_t acc = 0;
  for (size_t i = 0; i < v.size(); ++i)
    acc += static_cast<uint64_t>(v[i]) * gw[i];
  return static_cast<uint32_t>(acc % F_.p());
}

Subspace PerfectPairing::annihilator(const Subspace& U) const {
  if (U.ambient() != gram_.rows)
    throw std::invalid_argument("PerfectPairing: ambient mismatch");
  if (U.is_zero()) return Subspace::full(F_, gram_.rows);
  Matrix bg = mat_mul(U.basis(), gram_, F_);
  Matrix k = kernel_basis(bg, F_);
  Subspace s(F_, gram_.rows);
  std::vector<Row> rows;
  for (size_t i = 0; i < k.rows; ++i) rows.push_back(k.row(i));
  return Subspace::span(F_, gram_.rows, rows);
}

namespace {

// Incremental echelon basis; insert() reduces and keeps rows sorted by pivot.
struct Echelon {
  const PrimeField* F;
  size_t n;
  std::vector<Row> rows;  // each reduced against the others, sorted by pivot

  explicit Echelon(const PrimeField& f, size_t n_) : F(&f), n(n_) {}

  size_t lead(const Row& v) const {
    size_t j = 0;
    while (j < n && v[j] == 0) ++j;
    return j;
  }

  bool insert(Row v) {
    for (const Row& r : rows) {
      const size_t l = lead(r);
      if (l < n && v[l] != 0) {
        const uint32_t c = v[l];
        for (size_t j = l; j < n; ++j) v[j] = F->sub(v[j], F->mul(c, r[j]));
      }
    }
    const size_t lv = lead(v);
    if (lv == n) return false;
    const uint32_t inv = F->inv(v[lv]);
    for (size_t j = lv; j < n; ++j) v[j] = F->mul(v[j], inv);
    auto it = rows.begin();
    while (it != rows.end() && lead(*it) < lv) ++it;
    rows.insert(it, std::move(v));
    return true;
  }
};

}  // namespace

Subspace stable_closure(const PrimeField& F, size_t dim,
                        const std::vector<Matrix>& operators,
                        const std::vector<Row>& generators) {
  // Worklist invariant: whenever a vector enlarges the span, its operator
  // images are queued.  Images of the discarded (dependent) vectors are
  // combinations of images already queued.
  Echelon basis(F, dim);
  std::vector<Row> pending = generators;
  while (!pending.empty()) {
    Row v = std::move(pending.back());
    pending.pop_back();
    if (!basis.insert(v)) continue;
    for (const Matrix& op : operators) pending.push_back(mat_vec(op, v, F));
  }
  return Subspace::span(F, dim, basis.rows);
}

std::vector<Subspace> enumerate_stable_subspaces(
    const PrimeField& F, size_t dim, const std::vector<Matrix>& operators,
    uint64_t cap) {
  // seed count is p^dim; refuse anything over the cap
  long double total = 1;
  for (size_t i = 0; i < dim; ++i) total *= F.p();
  if (total > static_cast<long double>(cap))
    throw CapExceeded("enumerate_stable_subspaces: p^dim = " +
                      std::to_string(static_cast<double>(total)) +
                      " exceeds cap " + std::to_string(cap));

  std::set<Subspace> found;
  found.insert(Subspace(F, dim));  // zero subspace

  // Odometer over nonzero coefficient vectors; scalar multiples share a
  // closure, so only vectors whose leading coefficient is 1 are used.
  Row v(dim, 0);
  while (true) {
    size_t i = 0;
    while (i < dim) {
      v[i] = (v[i] + 1) % F.p();
      if (v[i] != 0) break;
      ++i;
    }
    if (i == dim) break;
    size_t lead = 0;
    while (lead < dim && v[lead] == 0) ++lead;
    if (lead == dim || v[lead] != 1) continue;
    found.insert(stable_closure(F, dim, operators, {v}));
  }

  // close under pairwise sums until fixpoint
  std::vector<Subspace> list(found.begin(), found.end());
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = i + 1; j < list.size(); ++j) {
      Subspace s = list[i].sum(list[j]);
      if (found.insert(s).second) list.push_back(std::move(s));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

}  // namespace pairops
