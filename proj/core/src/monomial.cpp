#include "pairops/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "pairops/errors.hpp"

namespace pairops {

namespace {

bool divides(const Exponent& g, const Exponent& m) {
  return g.first <= m.first && g.second <= m.second;
}

std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

long long cross(const Exponent& a, const Exponent& b) {
  return static_cast<long long>(a.first) * b.second -
         static_cast<long long>(a.second) * b.first;
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(std::vector<Exponent> gens) {
  for (const auto& g : gens)
    if (g.first < 0 || g.second < 0)
      throw std::invalid_argument("MonomialIdeal: negative exponent");
  MonomialIdeal I;
  I.gens_ = minimalize(std::move(gens));
  return I;
}

MonomialIdeal MonomialIdeal::unit() { return from_generators({{0, 0}}); }

MonomialIdeal MonomialIdeal::max_power(int k) {
  if (k <= 0) return unit();
  std::vector<Exponent> gens;
  for (int i = 0; i <= k; ++i) gens.push_back({k - i, i});
  return from_generators(std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0] == Exponent{0, 0};
}

bool MonomialIdeal::member(int a, int b) const {
  for (const auto& g : gens_)
    if (divides(g, {a, b})) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const auto& g : other.gens_)
    if (!member(g.first, g.second)) return false;
  return true;
}

bool MonomialIdeal::is_m_primary() const {
  bool px = false, py = false;
  for (const auto& g : gens_) {
    if (g.second == 0) px = true;
    if (g.first == 0) py = true;
  }
  return px && py;
}

size_t MonomialIdeal::colength() const {
  if (!is_m_primary())
    throw std::invalid_argument("colength: ideal is not m-primary");
  int bx = 0, by = 0;
  for (const auto& g : gens_) {
    if (g.second == 0) bx = g.first;
    if (g.first == 0) by = g.second;
  }
  size_t count = 0;
  for (int a = 0; a < bx; ++a)
    for (int b = 0; b < by; ++b)
      if (!member(a, b)) ++count;
  return count;
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& o) const {
  std::vector<Exponent> gens = gens_;
  gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
  return from_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
  std::vector<Exponent> gens;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_)
      gens.push_back({std::max(a.first, b.first), std::max(a.second, b.second)});
  return from_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::product(const MonomialIdeal& o) const {
  std::vector<Exponent> gens;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_)
      gens.push_back({a.first + b.first, a.second + b.second});
  return from_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::power(int n) const {
  if (n < 0) throw std::invalid_argument("MonomialIdeal::power: negative exponent");
  MonomialIdeal acc = unit();
  for (int i = 0; i < n; ++i) acc = acc.product(*this);
  return acc;
}

MonomialIdeal MonomialIdeal::colon(const MonomialIdeal& o) const {
  if (o.is_zero()) return unit();
  if (is_zero()) return MonomialIdeal();
  // (I : g) for a single monomial g shifts every generator down; the full
  // colon is the intersection over the generators of o.
  bool first = true;
  MonomialIdeal acc;
  for (const auto& g : o.gens_) {
    std::vector<Exponent> shifted;
    for (const auto& h : gens_)
      shifted.push_back({std::max(h.first - g.first, 0),
                         std::max(h.second - g.second, 0)});
    MonomialIdeal part = from_generators(std::move(shifted));
    acc = first ? part : acc.intersect(part);
    first = false;
  }
  return acc;
}

MonomialIdeal MonomialIdeal::integral_closure() const {
  if (is_zero() || is_unit()) return *this;
  // antichain sorted lex: x strictly increasing, y strictly decreasing
  const std::vector<Exponent>& pts = gens_;
  // lower-left hull by monotone chain; region = conv(pts) + R^2_{>=0}
  std::vector<Exponent> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const Exponent& u = hull[hull.size() - 2];
      const Exponent& w = hull[hull.size() - 1];
      const Exponent uw{w.first - u.first, w.second - u.second};
      const Exponent up{p.first - u.first, p.second - u.second};
      if (cross(uw, up) <= 0)
        hull.pop_back();  // w on or above segment u-p: not a vertex
      else
        break;
    }
    hull.push_back(p);
  }
  const int min_x = hull.front().first;
  const int min_y = hull.back().second;
  int max_x = 0, max_y = 0;
  for (const auto& g : pts) {
    max_x = std::max(max_x, g.first);
    max_y = std::max(max_y, g.second);
  }
  std::vector<Exponent> inside;
  for (int a = min_x; a <= max_x; ++a)
    for (int b = min_y; b <= max_y; ++b) {
      bool ok = true;
      for (size_t i = 0; i + 1 < hull.size() && ok; ++i) {
        const Exponent& u = hull[i];
        const Exponent& w = hull[i + 1];
        const Exponent uw{w.first - u.first, w.second - u.second};
        const Exponent uz{a - u.first, b - u.second};
        if (cross(uw, uz) < 0) ok = false;
      }
      if (ok) inside.push_back({a, b});
    }
  return from_generators(std::move(inside));
}

std::optional<int> MonomialIdeal::as_max_power() const {
  if (gens_.empty()) return std::nullopt;
  const int k = gens_.front().first + gens_.front().second;
  if (k == 0) return std::nullopt;
  return *this == max_power(k) ? std::optional<int>(k) : std::nullopt;
}

std::string render_monomial(int a, int b) {
  if (a == 0 && b == 0) return "1";
  std::string s;
  if (a == 1)
    s += "x";
  else if (a > 1)
    s += "x^" + std::to_string(a);
  if (b > 0) {
    if (!s.empty()) s += "*";
    if (b == 1)
      s += "y";
    else
      s += "y^" + std::to_string(b);
  }
  return s;
}

std::string MonomialIdeal::render() const {
  if (is_zero()) return "0";
  if (is_unit()) return "R";
  if (const auto k = as_max_power()) return *k == 1 ? "m" : "m^" + std::to_string(*k);
  std::string out = "(";
  bool first = true;
  // display with x-degree descending, matching the usual staircase listing
  std::vector<Exponent> disp = gens_;
  std::sort(disp.begin(), disp.end(),
            [](const Exponent& a, const Exponent& b) {
              return a.first != b.first ? a.first > b.first : a.second < b.second;
            });
  for (const auto& g : disp) {
    if (!first) out += ",";
    first = false;
    out += render_monomial(g.first, g.second);
  }
  return out + ")";
}

MonomialIdeal ratliff_rush(const MonomialIdeal& I, int n_max) {
  if (!I.is_m_primary() && !I.is_unit())
    throw std::invalid_argument("ratliff_rush: ideal is not m-primary");
  if (n_max < 2) throw std::invalid_argument("ratliff_rush: n_max must be >= 2");
  MonomialIdeal prev = I.power(2).colon(I);
  MonomialIdeal pw = I.power(2);
  for (int n = 2; n <= n_max; ++n) {
    pw = pw.product(I);  // I^{n+1}
    const MonomialIdeal cur = pw.colon(I.power(n));
    if (cur == prev) return prev;
    prev = cur;
  }
  throw Unstable("ratliff_rush: no stabilization by n_max = " +
                 std::to_string(n_max));
}

MonomialIdeal rr_cap(const MonomialIdeal& I, const MonomialIdeal& J, int n_max) {
  return ratliff_rush(I, n_max).intersect(J);
}

std::vector<MonomialIdeal> enumerate_monomial_ideals_in_box(int b) {
  if (b < 1 || b > 8)
    throw CapExceeded("enumerate_monomial_ideals_in_box: b = " +
                      std::to_string(b) + " outside [1,8]");
  std::vector<MonomialIdeal> out;
  std::vector<int> h(static_cast<size_t>(b), 0);
  // all non-increasing height vectors h_0 >= ... >= h_{b-1} in [0,b]
  auto rec = [&](auto&& self, int col, int bound) -> void {
    if (col == b) {
      std::vector<Exponent> gens{{b, 0}};
      for (int a = 0; a < b; ++a)
        if (a == 0 || h[static_cast<size_t>(a)] < h[static_cast<size_t>(a - 1)])
          gens.push_back({a, h[static_cast<size_t>(a)]});
      out.push_back(MonomialIdeal::from_generators(std::move(gens)));
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      h[static_cast<size_t>(col)] = v;
      self(self, col + 1, v);
    }
  };
  rec(rec, 0, b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pairops
