#ifndef PAIROPS_MONOMIAL_HPP
#define PAIROPS_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pairops {

using Exponent = std::pair<int, int>;  // (i, j) for x^i y^j

// A monomial ideal of k[[x,y]] held as its antichain of minimal generators,
// sorted lexicographically.  The zero ideal is the empty antichain.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;  // zero ideal
  static MonomialIdeal from_generators(std::vector<Exponent> gens);
  static MonomialIdeal unit();                  // (1)
  static MonomialIdeal max_power(int k);        // m^k, m = (x,y)

  const std::vector<Exponent>& min_gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool member(int a, int b) const;
  bool contains(const MonomialIdeal& other) const;

  // finite colength: a pure x power and a pure y power both occur
  bool is_m_primary() const;
  size_t colength() const;  // dim_k R/I; requires m-primary

  MonomialIdeal sum(const MonomialIdeal& o) const;
  MonomialIdeal intersect(const MonomialIdeal& o) const;
  MonomialIdeal product(const MonomialIdeal& o) const;
  MonomialIdeal power(int n) const;
  MonomialIdeal colon(const MonomialIdeal& o) const;  // (this : o)

  // Newton-polyhedron closure: lattice points of conv(gens) + R^2_{>=0},
  // decided by exact integer half-plane tests on the lower hull edges.
  MonomialIdeal integral_closure() const;

  // smallest k with this == m^k, if any
  std::optional<int> as_max_power() const;

  std::string render() const;  // "(x^4,x^3*y,y^4)", "m^4", "R", "0"

  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }
  bool operator<(const MonomialIdeal& o) const { return gens_ < o.gens_; }

 private:
  std::vector<Exponent> gens_;
};

// union over n of (I^{n+1} : I^n), stopped at the first repeat; throws
// Unstable("ratliff-rush ...") when the chain has not stabilized by n_max
MonomialIdeal ratliff_rush(const MonomialIdeal& I, int n_max = 12);

// The pair operation alpha(I, J) = RR(I) meet J.
MonomialIdeal rr_cap(const MonomialIdeal& I, const MonomialIdeal& J,
                     int n_max = 12);

// All staircases containing (x^b, y^b) with generators inside the b x b box,
// canonically ordered.  Throws CapExceeded for b > 8.
std::vector<MonomialIdeal> enumerate_monomial_ideals_in_box(int b);

std::string render_monomial(int a, int b);  // "x^3*y" etc.

}  // namespace pairops

#endif
