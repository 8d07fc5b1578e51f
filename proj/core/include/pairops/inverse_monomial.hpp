#ifndef PAIROPS_INVERSE_MONOMIAL_HPP
#define PAIROPS_INVERSE_MONOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairops/monomial.hpp"

namespace pairops {

// A finite monomial submodule of E = E_{k[[x,y]]}(k), modeled as inverse
// monomials x^{-r} y^{-s} with r, s >= 1 under the contraction action
//   x^n y^m . x^{-r} y^{-s} = x^{-(r-n)} y^{-(s-m)}  when r-n >= 1, s-m >= 1
//                           = 0                      otherwise.
// The monomial set is closed downward toward the socle x^{-1} y^{-1}.
class InverseModule {
 public:
  InverseModule() = default;  // zero module

  // closes downward; *closure_added reports whether that added monomials
  static InverseModule from_monomials(std::vector<Exponent> monomials,
                                      bool* closure_added = nullptr);

  const std::vector<Exponent>& monomials() const { return monos_; }
  bool is_zero() const { return monos_.empty(); }
  size_t length() const { return monos_.size(); }  // = k-dimension
  bool contains(int r, int s) const;
  bool contains(const InverseModule& o) const;

  InverseModule sum(const InverseModule& o) const;
  InverseModule intersect(const InverseModule& o) const;

  // x^n y^m . x^{-r} y^{-s}, or nullopt when the contraction kills it
  static std::optional<Exponent> contract(int n, int m, int r, int s);

  // J . this, over the minimal generators of J
  InverseModule scale(const MonomialIdeal& J) const;
  // (this :_E J) = {z in E : J z subseteq this}; finite only for m-primary J
  InverseModule colon(const MonomialIdeal& J) const;

  // {z in this : m z = 0}; inside E this is at most k x^{-1}y^{-1}
  InverseModule socle() const;
  size_t eta() const { return socle().length(); }

  MonomialIdeal annihilator_in_R() const;  // {g : g . this = 0}

  std::string render() const;  // "[x^-1*y^-1, x^-2*y^-1]"

  bool operator==(const InverseModule& o) const { return monos_ == o.monos_; }
  bool operator<(const InverseModule& o) const { return monos_ < o.monos_; }

 private:
  std::vector<Exponent> monos_;  // sorted, downward closed, entries >= 1
};

// (0 :_E I); throws std::invalid_argument unless I is m-primary (the
// annihilator would be infinite otherwise)
InverseModule ann_E(const MonomialIdeal& I);

// eta(E/C) = dim Soc(E/C) = dim (C :_E m)/C
size_t eta_of_E_quotient(const InverseModule& C);

// All monomial covers C of A inside B: A minus one maximal monomial.
// Non-monomial covers exist in E; callers must treat this as the monomial
// sublattice only.
std::vector<InverseModule> monomial_covers_below(const InverseModule& A);

struct BasicEmptinessVerdict {
  bool fixed_point;        // A == m (A :_B m)
  bool eta_cover;          // eta(B/C) <= eta(B/A) for all monomial covers C
  bool monomial_covers_only = true;
};

// B given as a finite window of E (must contain A and (A :_B m)); pass
// nullopt for B = E itself.
BasicEmptinessVerdict is_basically_empty_in_E(
    const InverseModule& A, const std::optional<InverseModule>& B);

}  // namespace pairops

#endif
