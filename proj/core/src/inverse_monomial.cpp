#include "pairops/inverse_monomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pairops {

InverseModule InverseModule::from_monomials(std::vector<Exponent> monomials,
                                            bool* closure_added) {
  for (const auto& m : monomials)
    if (m.first < 1 || m.second < 1)
      throw std::invalid_argument(
          "InverseModule: inverse exponents must be >= 1");
  std::set<Exponent> closed;
  for (const auto& m : monomials)
    for (int r = 1; r <= m.first; ++r)
      for (int s = 1; s <= m.second; ++s) closed.insert({r, s});
  if (closure_added) {
    std::set<Exponent> given(monomials.begin(), monomials.end());
    *closure_added = closed.size() != given.size();
  }
  InverseModule out;
  out.monos_.assign(closed.begin(), closed.end());
  return out;
}

bool InverseModule::contains(int r, int s) const {
  return std::binary_search(monos_.begin(), monos_.end(), Exponent{r, s});
}

bool InverseModule::contains(const InverseModule& o) const {
  for (const auto& m : o.monos_)
    if (!contains(m.first, m.second)) return false;
  return true;
}

InverseModule InverseModule::sum(const InverseModule& o) const {
  std::set<Exponent> u(monos_.begin(), monos_.end());
  u.insert(o.monos_.begin(), o.monos_.end());
  InverseModule out;
  out.monos_.assign(u.begin(), u.end());
  return out;
}

InverseModule InverseModule::intersect(const InverseModule& o) const {
  InverseModule out;
  std::set_intersection(monos_.begin(), monos_.end(), o.monos_.begin(),
                        o.monos_.end(), std::back_inserter(out.monos_));
  return out;
}

std::optional<Exponent> InverseModule::contract(int n, int m, int r, int s) {
  // The displayed rule elsewhere would keep results with exponent 0; the
  // worked computations force killing anything that reaches exponent 0.
  if (r - n >= 1 && s - m >= 1) return Exponent{r - n, s - m};
  return std::nullopt;
}

InverseModule InverseModule::scale(const MonomialIdeal& J) const {
  std::set<Exponent> out;
  for (const auto& g : J.min_gens())
    for (const auto& z : monos_)
      if (const auto w = contract(g.first, g.second, z.first, z.second))
        out.insert(*w);
  InverseModule r;
  r.monos_.assign(out.begin(), out.end());
  return r;
}

InverseModule InverseModule::colon(const MonomialIdeal& J) const {
  if (J.is_zero())
    throw std::invalid_argument("InverseModule::colon: (L : 0) is all of E");
  if (!J.is_m_primary() && !J.is_unit())
    throw std::invalid_argument(
        "InverseModule::colon: infinite colon, J is not m-primary");
  int max_r = 0, max_s = 0;
  for (const auto& z : monos_) {
    max_r = std::max(max_r, z.first);
    max_s = std::max(max_s, z.second);
  }
  int max_n = 0, max_m = 0;
  for (const auto& g : J.min_gens()) {
    max_n = std::max(max_n, g.first);
    max_m = std::max(max_m, g.second);
  }
  std::vector<Exponent> out;
  for (int r = 1; r <= max_r + max_n; ++r)
    for (int s = 1; s <= max_s + max_m; ++s) {
      bool ok = true;
      for (const auto& g : J.min_gens()) {
        const auto w = contract(g.first, g.second, r, s);
        if (w && !contains(w->first, w->second)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back({r, s});
    }
  InverseModule res;
  res.monos_ = std::move(out);  // already downward closed and sorted
  return res;
}

InverseModule InverseModule::socle() const {
  InverseModule out;
  if (contains(1, 1)) out.monos_.push_back({1, 1});
  return out;
}

MonomialIdeal InverseModule::annihilator_in_R() const {
  if (is_zero()) return MonomialIdeal::unit();
  int max_r = 0, max_s = 0;
  for (const auto& z : monos_) {
    max_r = std::max(max_r, z.first);
    max_s = std::max(max_s, z.second);
  }
  std::vector<Exponent> gens;
  for (int n = 0; n <= max_r; ++n)
    for (int m = 0; m <= max_s; ++m) {
      bool kills = true;
      for (const auto& z : monos_)
        if (contract(n, m, z.first, z.second)) {
          kills = false;
          break;
        }
      if (kills) gens.push_back({n, m});
    }
  return MonomialIdeal::from_generators(std::move(gens));
}

std::string InverseModule::render() const {
  if (is_zero()) return "[]";
  std::string out = "[";
  bool first = true;
  for (const auto& z : monos_) {
    if (!first) out += ", ";
    first = false;
    out += "x^-" + std::to_string(z.first) + "*y^-" + std::to_string(z.second);
  }
  return out + "]";
}

InverseModule ann_E(const MonomialIdeal& I) {
  if (!I.is_m_primary() && !I.is_unit())
    throw std::invalid_argument("ann_E: infinite annihilator, I is not m-primary");
  if (I.is_unit()) return InverseModule();
  // (0 :_E I) = span{ x^{-r} y^{-s} : x^{r-1} y^{s-1} not in I }
  int bx = 0, by = 0;
  for (const auto& g : I.min_gens()) {
    bx = std::max(bx, g.first);
    by = std::max(by, g.second);
  }
  std::vector<Exponent> monos;
  for (int r = 1; r <= bx; ++r)
    for (int s = 1; s <= by; ++s)
      if (!I.member(r - 1, s - 1)) monos.push_back({r, s});
  return InverseModule::from_monomials(std::move(monos));
}

size_t eta_of_E_quotient(const InverseModule& C) {
  if (C.is_zero()) return 1;  // Soc(E) = k x^{-1} y^{-1}
  const InverseModule cm = C.colon(MonomialIdeal::max_power(1));
  return cm.length() - C.length();
}

std::vector<InverseModule> monomial_covers_below(const InverseModule& A) {
  std::vector<InverseModule> covers;
  for (const auto& z : A.monomials()) {
    if (A.contains(z.first + 1, z.second) || A.contains(z.first, z.second + 1))
      continue;  // not maximal
    std::vector<Exponent> rest;
    for (const auto& w : A.monomials())
      if (w != z) rest.push_back(w);
    covers.push_back(InverseModule::from_monomials(std::move(rest)));
  }
  return covers;
}

BasicEmptinessVerdict is_basically_empty_in_E(
    const InverseModule& A, const std::optional<InverseModule>& B) {
  BasicEmptinessVerdict v{};
  const MonomialIdeal m = MonomialIdeal::max_power(1);
  InverseModule colon_in_B = A.colon(m);
  if (B) colon_in_B = colon_in_B.intersect(*B);
  v.fixed_point = colon_in_B.scale(m) == A;

  const size_t eta_BA = B ? colon_in_B.length() - A.length()
                          : eta_of_E_quotient(A);
  v.eta_cover = true;
  for (const auto& C : monomial_covers_below(A)) {
    InverseModule cC = C.colon(m);
    if (B) cC = cC.intersect(*B);
    const size_t eta_BC = B ? cC.length() - C.length() : eta_of_E_quotient(C);
    if (eta_BC > eta_BA) {
      v.eta_cover = false;
      break;
    }
  }
  return v;
}

}  // namespace pairops
