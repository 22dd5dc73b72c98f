#pragma once

// Text format for Puiseux polynomials, rationals and monoid literals.
//
//   poly   := term (('+' | '-') term)*
//   term   := ['-'] coeff | ['-'] coeff '*'? mono | ['-'] mono
//   mono   := 'X' ('^' expo)?
//   expo   := uint | '(' uint ('/' uint)? ')'
//   coeff  := uint ('/' uint)?
//   monoid := '<' rat (',' rat)* '>'
//
// Whitespace is allowed between tokens. Fractional exponents need the
// parentheses so that "X^1/2" is never read as a division.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/error.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/puiseux_poly.hpp"
#include "puiseux/rat.hpp"

namespace puiseux {

namespace detail {

class TextParser {
 public:
  explicit TextParser(std::string_view text) : text_(text) {}

  PuiseuxPoly poly() {
    std::vector<Term> terms;
    skip_ws();
    terms.push_back(term(false));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return PuiseuxPoly(std::move(terms));
  }

  PuiseuxMonoid monoid() {
    skip_ws();
    expect('<');
    std::vector<Rat> gens;
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      Coeff g = signed_rational();
      if (sgn(g) <= 0) semantic("generator must be positive", at);
      gens.emplace_back(g);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('>');
      break;
    }
    finish();
    return PuiseuxMonoid(std::move(gens));
  }

  Rat rat() {
    skip_ws();
    const std::size_t at = pos_;
    Coeff q = signed_rational();
    if (sgn(q) < 0) semantic("value must be non-negative", at);
    finish();
    return Rat(q);
  }

  void finish() {
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  Term term(bool negated) {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      negated = !negated;
      skip_ws();
    }
    Coeff c = 1;
    bool have_coeff = false;
    if (is_digit(peek())) {
      c = rational();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'X') fail("expected 'X' after '*'");
      }
    }
    Rat e(0);
    if (peek() == 'X') {
      ++pos_;
      e = exponent();
    } else if (!have_coeff) {
      fail("expected a coefficient or 'X'");
    }
    return {e, negated ? Coeff(-c) : c};
  }

  Rat exponent() {
    skip_ws();
    if (peek() != '^') return Rat(1);
    ++pos_;
    skip_ws();
    if (peek() == '-') semantic("negative exponent", pos_);
    if (is_digit(peek())) return Rat(uint(), 1);
    if (peek() != '(') fail("expected an exponent");
    ++pos_;
    skip_ws();
    if (peek() == '-') semantic("negative exponent", pos_);
    Integer num = uint();
    Integer den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      den = uint();
      if (den == 0) semantic("zero denominator", at);
    }
    skip_ws();
    expect(')');
    return Rat(num, den);
  }

  Coeff signed_rational() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
      skip_ws();
    }
    Coeff q = rational();
    return neg ? Coeff(-q) : q;
  }

  Coeff rational() {
    Integer num = uint();
    Integer den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      den = uint();
      if (den == 0) semantic("zero denominator", at);
    }
    Coeff q(num, den);
    q.canonicalize();
    return q;
  }

  Integer uint() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);  // no octal for leading 0
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }
  [[noreturn]] static void semantic(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PuiseuxPoly parse_poly(std::string_view text) { return detail::TextParser(text).poly(); }
inline PuiseuxMonoid parse_monoid(std::string_view text) { return detail::TextParser(text).monoid(); }
inline Rat parse_rat(std::string_view text) { return detail::TextParser(text).rat(); }

inline std::string format_monomial(const Rat& e) {
  if (e.is_zero()) return "";
  if (e == Rat(1)) return "X";
  if (e.is_integer()) return "X^" + to_string(e);
  return "X^(" + to_string(e) + ")";
}

/// Descending exponents, e.g. "3/2*X^2 - X^(1/2) + 1".
inline std::string format_poly(const PuiseuxPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const bool neg = sgn(it->coeff) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const Coeff mag = abs(it->coeff);
    const std::string mono = format_monomial(it->exponent);
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

inline std::string format_poly(const QPoly& f) { return format_poly(PuiseuxPoly::from_qpoly(f)); }

inline std::string format_monoid(const PuiseuxMonoid& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.generators().size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.generators()[i]);
  }
  return out + ">";
}

}  // namespace puiseux
