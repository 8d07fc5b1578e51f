#include "pairops/expression.hpp"

#include <cctype>
#include <map>

#include "pairops/errors.hpp"

namespace pairops {

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;
  size_t line = 1;
  size_t col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void advance() {
    if (pos < text.size()) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }
  char take() {
    skip_ws();
    const char c = pos < text.size() ? text[pos] : '\0';
    advance();
    return c;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", line, col);
    advance();
  }
  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    throw ParseError(what, line, col);
  }
  std::pair<size_t, size_t> mark() {
    skip_ws();
    return {line, col};
  }
  long integer() {
    skip_ws();
    bool neg = accept('-');
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("integer literal too large");
      advance();
    }
    return neg ? -v : v;
  }
  void end() {
    skip_ws();
    if (pos != text.size()) fail("trailing input");
  }
};

// one multiplicative term: coefficient and per-variable exponents
struct Term {
  long coeff = 1;
  std::map<char, long> exps;
};

Term parse_term(Lexer& lx, const std::string& vars) {
  Term t;
  bool saw_anything = false;
  if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
    t.coeff = lx.integer();
    saw_anything = true;
    lx.accept('*');
  }
  while (true) {
    const char c = lx.peek();
    if (vars.find(c) == std::string::npos) break;
    lx.advance();
    long e = 1;
    if (lx.accept('^')) e = lx.integer();
    t.exps[c] += e;
    saw_anything = true;
    lx.accept('*');
  }
  if (!saw_anything) lx.fail("expected a term");
  return t;
}

std::vector<Term> parse_generator(Lexer& lx, const std::string& vars) {
  std::vector<Term> terms;
  long sign = 1;
  if (lx.accept('-')) sign = -1;
  while (true) {
    Term t = parse_term(lx, vars);
    t.coeff *= sign;
    terms.push_back(t);
    if (lx.accept('+'))
      sign = 1;
    else if (lx.accept('-'))
      sign = -1;
    else
      break;
  }
  return terms;
}

}  // namespace

SemigroupIdeal parse_semigroup_ideal(const std::string& text,
                                     const SemigroupAlgebra& alg) {
  Lexer lx(text);
  const char c = lx.peek();
  if (c == 'R') {
    lx.advance();
    lx.end();
    return SemigroupIdeal::unit(alg);
  }
  if (c == '0') {
    lx.advance();
    lx.end();
    return SemigroupIdeal::zero(alg);
  }
  if (c == 'm') {
    lx.advance();
    long k = 1;
    if (lx.accept('^')) k = lx.integer();
    if (k < 1) lx.fail("m power must be positive");
    lx.end();
    return ideal_m_power(alg, static_cast<int>(k));
  }
  lx.expect('(');
  std::vector<Row> gens;
  while (true) {
    const auto [gline, gcol] = lx.mark();
    const auto terms = parse_generator(lx, "t");
    Row g = alg.zero_element();
    for (const Term& t : terms) {
      long e = 0;
      auto it = t.exps.find('t');
      if (it != t.exps.end()) e = it->second;
      if (e < 0) throw ParseError("negative exponent in ring element", gline, gcol);
      if (e >= alg.truncation())
        throw ParseError("exponent " + std::to_string(e) +
                             " reaches the truncation " +
                             std::to_string(alg.truncation()) +
                             "; raise N",
                         gline, gcol);
      const int idx = alg.index_of_exponent(static_cast<int>(e));
      if (idx < 0)
        throw ParseError("t^" + std::to_string(e) +
                             " is not an element of the semigroup ring",
                         gline, gcol);
      g[static_cast<size_t>(idx)] = alg.field().add(
          g[static_cast<size_t>(idx)], alg.field().reduce(t.coeff));
    }
    gens.push_back(std::move(g));
    if (!lx.accept(',')) break;
  }
  lx.expect(')');
  lx.end();
  return SemigroupIdeal::from_generators(alg, gens);
}

MonomialIdeal parse_monomial_ideal(const std::string& text, const PrimeField& F) {
  Lexer lx(text);
  const char c = lx.peek();
  if (c == 'R') {
    lx.advance();
    lx.end();
    return MonomialIdeal::unit();
  }
  if (c == '0') {
    lx.advance();
    lx.end();
    return MonomialIdeal();
  }
  if (c == 'm') {
    lx.advance();
    long k = 1;
    if (lx.accept('^')) k = lx.integer();
    if (k < 1) lx.fail("m power must be positive");
    lx.end();
    return MonomialIdeal::max_power(static_cast<int>(k));
  }
  lx.expect('(');
  std::vector<Exponent> gens;
  while (true) {
    const auto [gline, gcol] = lx.mark();
    const auto terms = parse_generator(lx, "xy");
    if (terms.size() != 1)
      throw ParseError("monomial ideal generators must be single monomials",
                       gline, gcol);
    const Term& t = terms.front();
    long a = 0, b = 0;
    if (auto it = t.exps.find('x'); it != t.exps.end()) a = it->second;
    if (auto it = t.exps.find('y'); it != t.exps.end()) b = it->second;
    if (a < 0 || b < 0)
      throw ParseError("negative exponent in a ring monomial", gline, gcol);
    if (F.reduce(t.coeff) == 0) {
      if (!lx.accept(',')) break;
      continue;  // coefficient vanished mod p; generator drops out
    }
    gens.push_back({static_cast<int>(a), static_cast<int>(b)});
    if (!lx.accept(',')) break;
  }
  lx.expect(')');
  lx.end();
  return MonomialIdeal::from_generators(std::move(gens));
}

InverseModule parse_inverse_module(const std::string& text, bool* closure_added) {
  Lexer lx(text);
  lx.expect('[');
  std::vector<Exponent> monos;
  if (lx.peek() != ']') {
    while (true) {
      const auto [gline, gcol] = lx.mark();
      const auto terms = parse_generator(lx, "xy");
      if (terms.size() != 1)
        throw ParseError("inverse modules are spanned by single monomials",
                         gline, gcol);
      const Term& t = terms.front();
      long a = 0, b = 0;
      if (auto it = t.exps.find('x'); it != t.exps.end()) a = it->second;
      if (auto it = t.exps.find('y'); it != t.exps.end()) b = it->second;
      if (a >= 0 || b >= 0)
        throw ParseError("inverse monomials need negative exponents in both "
                         "variables, like x^-2*y^-1",
                         gline, gcol);
      monos.push_back({static_cast<int>(-a), static_cast<int>(-b)});
      if (!lx.accept(',')) break;
    }
  }
  lx.expect(']');
  lx.end();
  return InverseModule::from_monomials(std::move(monos), closure_added);
}

}  // namespace pairops
