#ifndef PAIROPS_EXPRESSION_HPP
#define PAIROPS_EXPRESSION_HPP

#include <string>

#include "pairops/inverse_monomial.hpp"
#include "pairops/monomial.hpp"
#include "pairops/semigroup.hpp"

namespace pairops {

// Shared generator-list grammar (errors carry line/column as ParseError):
//   ideal := '(' gen (',' gen)* ')' | 'm' ('^' int)? | 'R' | '0'
//   gen   := ('-')? term (('+'|'-') term)*
//   term  := int ('*'? factor)* | factor ('*'? factor)*
//   factor:= var ('^' '-'? int)?
// Semigroup mode uses the variable t; monomial mode x and y; the inverse
// grammar wraps monomials with negative exponents in square brackets.

SemigroupIdeal parse_semigroup_ideal(const std::string& text,
                                     const SemigroupAlgebra& alg);

// coefficients are reduced mod p; generators that reduce to zero are dropped
MonomialIdeal parse_monomial_ideal(const std::string& text, const PrimeField& F);

// '[x^-1*y^-3, x^-2*y^-1]'; closes downward, *closure_added reports whether
// closing added monomials
InverseModule parse_inverse_module(const std::string& text,
                                   bool* closure_added = nullptr);

}  // namespace pairops

#endif
