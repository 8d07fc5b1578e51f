#include "pairops/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pairops/errors.hpp"

namespace pairops {

NumericalSemigroup::NumericalSemigroup(std::vector<int> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty())
    throw std::invalid_argument("NumericalSemigroup: no generators");
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i] <= 0)
      throw std::invalid_argument("NumericalSemigroup: generators must be positive");
    if (i > 0 && gens_[i] <= gens_[i - 1])
      throw std::invalid_argument("NumericalSemigroup: generators must be strictly increasing");
  }
  int g = 0;
  for (int x : gens_) g = std::gcd(g, x);
  if (g != 1)
    throw std::invalid_argument("NumericalSemigroup: gcd of generators must be 1");

  // reachability up to a crude Frobenius bound
  const int bound = gens_.front() * gens_.back() + gens_.back() + 1;
  member_.assign(static_cast<size_t>(bound) + 1, false);
  member_[0] = true;
  for (int e = 1; e <= bound; ++e)
    for (int x : gens_)
      if (e >= x && member_[static_cast<size_t>(e - x)]) {
        member_[static_cast<size_t>(e)] = true;
        break;
      }
  conductor_ = 0;
  for (int e = bound; e >= 0; --e)
    if (!member_[static_cast<size_t>(e)]) {
      conductor_ = e + 1;
      break;
    }
}

bool NumericalSemigroup::contains(int e) const {
  if (e < 0) return false;
  if (e >= conductor_) return true;
  return member_[static_cast<size_t>(e)];
}

SemigroupAlgebra::SemigroupAlgebra(NumericalSemigroup sg, PrimeField F,
                                   int truncation)
    : sg_(std::move(sg)), F_(F), N_(truncation) {
  if (N_ < 1) throw std::invalid_argument("SemigroupAlgebra: truncation must be >= 1");
  exp_to_idx_.assign(static_cast<size_t>(N_), -1);
  for (int e = 0; e < N_; ++e)
    if (sg_.contains(e)) {
      exp_to_idx_[static_cast<size_t>(e)] = static_cast<int>(exps_.size());
      exps_.push_back(e);
    }
  mono_actions_.resize(dim());
  for (size_t i = 0; i < dim(); ++i) {
    Matrix m(dim(), dim());
    for (size_t j = 0; j < dim(); ++j) {
      const int e = exps_[i] + exps_[j];
      const int idx = index_of_exponent(e);
      if (idx >= 0) m.at(static_cast<size_t>(idx), j) = 1;
    }
    mono_actions_[i] = std::move(m);
  }
  for (int g : sg_.generators()) {
    const int idx = index_of_exponent(g);
    if (idx >= 0)
      gen_actions_.push_back(mono_actions_[static_cast<size_t>(idx)]);
    else
      gen_actions_.push_back(Matrix(dim(), dim()));  // generator truncated to 0
  }
}

int SemigroupAlgebra::index_of_exponent(int e) const {
  if (e < 0 || e >= N_) return -1;
  return exp_to_idx_[static_cast<size_t>(e)];
}

Row SemigroupAlgebra::monomial(int e) const {
  const int idx = index_of_exponent(e);
  if (idx < 0)
    throw std::invalid_argument("SemigroupAlgebra: t^" + std::to_string(e) +
                                " is not a basis monomial");
  Row r(dim(), 0);
  r[static_cast<size_t>(idx)] = 1;
  return r;
}

Row SemigroupAlgebra::scaled_monomial(uint32_t c, int e) const {
  Row r = monomial(e);
  for (auto& x : r) x = F_.mul(x, c % F_.p());
  return r;
}

Row SemigroupAlgebra::multiply(const Row& a, const Row& b) const {
  assert(a.size() == dim() && b.size() == dim());
  Row out(dim(), 0);
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      const int e = exps_[i] + exps_[j];
      const int idx = index_of_exponent(e);
      if (idx < 0) continue;  // truncated away
      out[static_cast<size_t>(idx)] =
          F_.add(out[static_cast<size_t>(idx)], F_.mul(a[i], b[j]));
    }
  }
  return out;
}

const Matrix& SemigroupAlgebra::monomial_action(size_t basis_index) const {
  return mono_actions_[basis_index];
}

Matrix SemigroupAlgebra::action_of(const Row& r) const {
  Matrix m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (r[i] == 0) continue;
    const Matrix& mono = monomial_action(i);
    for (size_t k = 0; k < m.a.size(); ++k)
      m.a[k] = F_.add(m.a[k], F_.mul(r[i], mono.a[k]));
  }
  return m;
}

const std::vector<Matrix>& SemigroupAlgebra::generator_actions() const {
  return gen_actions_;
}

std::optional<int> SemigroupAlgebra::order(const Row& r) const {
  for (size_t i = 0; i < dim(); ++i)
    if (r[i] != 0) return exps_[i];
  return std::nullopt;
}

bool SemigroupAlgebra::is_23() const {
  return sg_.generators() == std::vector<int>{2, 3};
}

std::string SemigroupAlgebra::render_element(const Row& r) const {
  std::string out;
  for (size_t i = 0; i < dim(); ++i) {
    if (r[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (exps_[i] == 0) {
      out += std::to_string(r[i]);
      continue;
    }
    if (r[i] != 1) out += std::to_string(r[i]);
    out += "t^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "0" : out;
}

std::string IdealClass::str() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::Full:
      return "R";
    case Kind::TwoGen:
      return "(t^" + std::to_string(n) + ",t^" + std::to_string(n + 1) + ")";
    case Kind::Principal: {
      if (a == 0) return "(t^" + std::to_string(n) + ")";
      std::string coeff = a == 1 ? "" : std::to_string(a);
      return "(t^" + std::to_string(n) + "+" + coeff + "t^" +
             std::to_string(n + 1) + ")";
    }
  }
  return "?";
}

SemigroupIdeal::SemigroupIdeal(const SemigroupAlgebra& alg, Subspace s)
    : alg_(&alg), space_(std::move(s)) {}

SemigroupIdeal SemigroupIdeal::zero(const SemigroupAlgebra& alg) {
  return SemigroupIdeal(alg, Subspace(alg.field(), alg.dim()));
}

SemigroupIdeal SemigroupIdeal::unit(const SemigroupAlgebra& alg) {
  return SemigroupIdeal(alg, Subspace::full(alg.field(), alg.dim()));
}

SemigroupIdeal SemigroupIdeal::from_generators(const SemigroupAlgebra& alg,
                                               const std::vector<Row>& gens) {
  Subspace s = stable_closure(alg.field(), alg.dim(), alg.generator_actions(), gens);
  return SemigroupIdeal(alg, std::move(s));
}

SemigroupIdeal SemigroupIdeal::from_subspace(const SemigroupAlgebra& alg,
                                             Subspace s) {
  for (const Row& b : s.basis_rows())
    for (const Matrix& op : alg.generator_actions())
      if (!s.contains(mat_vec(op, b, alg.field())))
        throw std::invalid_argument(
            "SemigroupIdeal: subspace not stable under the ring action");
  return SemigroupIdeal(alg, std::move(s));
}

SemigroupIdeal SemigroupIdeal::from_class(const SemigroupAlgebra& alg,
                                          const IdealClass& cls) {
  switch (cls.kind) {
    case IdealClass::Kind::Zero:
      return zero(alg);
    case IdealClass::Kind::Full:
      return unit(alg);
    case IdealClass::Kind::TwoGen: {
      std::vector<Row> gens;
      if (alg.index_of_exponent(cls.n) >= 0) gens.push_back(alg.monomial(cls.n));
      if (alg.index_of_exponent(cls.n + 1) >= 0)
        gens.push_back(alg.monomial(cls.n + 1));
      return from_generators(alg, gens);
    }
    case IdealClass::Kind::Principal: {
      Row g = alg.zero_element();
      if (alg.index_of_exponent(cls.n) >= 0) g = alg.monomial(cls.n);
      if (alg.index_of_exponent(cls.n + 1) >= 0) {
        Row h = alg.scaled_monomial(cls.a, cls.n + 1);
        for (size_t i = 0; i < g.size(); ++i) g[i] = alg.field().add(g[i], h[i]);
      }
      return from_generators(alg, {g});
    }
  }
  return zero(alg);
}

SemigroupIdeal SemigroupIdeal::sum(const SemigroupIdeal& other) const {
  if (alg_ != other.alg_)
    throw std::invalid_argument("SemigroupIdeal::sum: different algebras");
  return SemigroupIdeal(*alg_, space_.sum(other.space_));
}

SemigroupIdeal SemigroupIdeal::intersect(const SemigroupIdeal& other) const {
  if (alg_ != other.alg_)
    throw std::invalid_argument("SemigroupIdeal::intersect: different algebras");
  return SemigroupIdeal(*alg_, space_.intersect(other.space_));
}

SemigroupIdeal SemigroupIdeal::product(const SemigroupIdeal& other) const {
  if (alg_ != other.alg_)
    throw std::invalid_argument("SemigroupIdeal::product: different algebras");
  std::vector<Row> prods;
  for (const Row& a : space_.basis_rows())
    for (const Row& b : other.space_.basis_rows())
      prods.push_back(alg_->multiply(a, b));
  // a product of ideals is an ideal; no closure pass needed
  return SemigroupIdeal(*alg_, Subspace::span(alg_->field(), alg_->dim(), prods));
}

SemigroupIdeal SemigroupIdeal::power(int n, bool checked) const {
  if (n < 0) throw std::invalid_argument("SemigroupIdeal::power: negative exponent");
  if (n == 0) return unit(*alg_);
  if (checked && !is_zero()) {
    const int v = *min_order();
    if (static_cast<long long>(v) * n >= alg_->truncation())
      throw Unstable("ideal power: order " + std::to_string(v) + " * " +
                     std::to_string(n) + " reaches truncation " +
                     std::to_string(alg_->truncation()));
  }
  SemigroupIdeal acc = *this;
  for (int i = 1; i < n; ++i) acc = acc.product(*this);
  return acc;
}

SemigroupIdeal SemigroupIdeal::colon(const SemigroupIdeal& J) const {
  if (alg_ != J.alg_)
    throw std::invalid_argument("SemigroupIdeal::colon: different algebras");
  // (I : J) = {r : r j in I for every j in a generating set of J}
  // Conditions: A_I * action(j) * r = 0 where rows of A_I span ann(I).
  const PrimeField& F = alg_->field();
  const size_t n = alg_->dim();
  if (J.is_zero()) return unit(*alg_);
  // The zero subspace stands for the zero ideal of R itself, and R is a
  // domain, so (0 : J) = 0 for J != 0.  The raw A_N colon would instead
  // return the truncation tail {z : order(z) + order(J) >= N}.
  if (is_zero()) return zero(*alg_);
  const PerfectPairing pp = PerfectPairing::standard(F, n);
  const Subspace annI = pp.annihilator(space_);
  std::vector<Row> cond;
  for (const Row& j : J.space_.basis_rows()) {
    const Matrix act = alg_->action_of(j);
    if (annI.dim() == 0) continue;
    Matrix c = mat_mul(annI.basis(), act, F);
    for (size_t i = 0; i < c.rows; ++i) cond.push_back(c.row(i));
  }
  if (cond.empty()) return unit(*alg_);
  Matrix sys = Matrix::from_rows(cond, n);
  Matrix k = kernel_basis(sys, F);
  std::vector<Row> rows;
  for (size_t i = 0; i < k.rows; ++i) rows.push_back(k.row(i));
  return SemigroupIdeal(*alg_, Subspace::span(F, n, rows));
}

SemigroupIdeal SemigroupIdeal::integral_closure() const {
  const auto v = min_order();
  if (!v) return *this;  // bar(0) = 0
  std::vector<Row> gens;
  for (int e : alg_->exponents())
    if (e >= *v) gens.push_back(alg_->monomial(e));
  return SemigroupIdeal(*alg_, Subspace::span(alg_->field(), alg_->dim(), gens));
}

std::optional<int> SemigroupIdeal::min_order() const {
  std::optional<int> best;
  for (const Row& r : space_.basis_rows()) {
    const auto o = alg_->order(r);
    if (o && (!best || *o < *best)) best = o;
  }
  return best;
}

size_t SemigroupIdeal::mu() const {
  if (is_zero())
    throw std::invalid_argument("SemigroupIdeal::mu: zero ideal");
  const SemigroupIdeal mI = maximal_ideal(*alg_).product(*this);
  return dim() - mI.dim();
}

std::vector<Row> SemigroupIdeal::minimal_generators() const {
  if (is_zero()) return {};
  const SemigroupIdeal mI = maximal_ideal(*alg_).product(*this);
  Subspace acc = mI.space();
  std::vector<Row> gens;
  for (const Row& b : space_.basis_rows()) {
    if (acc.contains(b)) continue;
    gens.push_back(b);
    acc = acc.sum(Subspace::span(alg_->field(), alg_->dim(), {b}));
  }
  return gens;
}

bool SemigroupIdeal::is_reduction_of(const SemigroupIdeal& I) const {
  if (!I.contains(*this))
    throw std::invalid_argument("is_reduction_of: not a subideal");
  return integral_closure() == I.integral_closure();
}

IdealClass SemigroupIdeal::classify() const {
  if (!alg_->is_23())
    throw std::invalid_argument("classify: only the <2,3> semigroup is classified");
  if (is_zero()) return IdealClass{IdealClass::Kind::Zero, 0, 0};
  if (is_unit()) return IdealClass{IdealClass::Kind::Full, 0, 0};
  const int v = *min_order();
  IdealClass two{IdealClass::Kind::TwoGen, v, 0};
  if (from_class(*alg_, two) == *this) return two;
  for (uint32_t a = 0; a < alg_->field().p(); ++a) {
    IdealClass pr{IdealClass::Kind::Principal, v, a};
    if (from_class(*alg_, pr) == *this) return pr;
  }
  throw Unstable("classify: no ideal class matches at truncation " +
                 std::to_string(alg_->truncation()));
}

std::string SemigroupIdeal::render() const {
  if (alg_->is_23()) {
    try {
      return classify().str();
    } catch (const Unstable&) {
      // fall through to generator rendering
    }
  }
  if (is_zero()) return "0";
  if (is_unit()) return "R";
  std::string out = "(";
  bool first = true;
  for (const Row& g : minimal_generators()) {
    if (!first) out += ",";
    first = false;
    out += alg_->render_element(g);
  }
  return out + ")";
}

SemigroupIdeal maximal_ideal(const SemigroupAlgebra& alg) {
  std::vector<Row> gens;
  for (int g : alg.semigroup().generators())
    if (alg.index_of_exponent(g) >= 0) gens.push_back(alg.monomial(g));
  return SemigroupIdeal::from_generators(alg, gens);
}

SemigroupIdeal ideal_m_power(const SemigroupAlgebra& alg, int k) {
  if (k <= 0) return SemigroupIdeal::unit(alg);
  return maximal_ideal(alg).power(k, /*checked=*/false);
}

std::vector<SemigroupIdeal> enumerate_ideals(const SemigroupAlgebra& alg,
                                             uint64_t cap) {
  const auto spaces = enumerate_stable_subspaces(
      alg.field(), alg.dim(), alg.generator_actions(), cap);
  std::vector<SemigroupIdeal> out;
  out.reserve(spaces.size());
  for (const Subspace& s : spaces)
    out.push_back(SemigroupIdeal::from_subspace(alg, s));
  return out;
}

}  // namespace pairops
