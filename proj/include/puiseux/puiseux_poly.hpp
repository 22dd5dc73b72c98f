#pragma once

// Elements of Q[Q_+]: finite sums of c * X^s with rational s >= 0.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "puiseux/error.hpp"
#include "puiseux/qpoly.hpp"
#include "puiseux/rat.hpp"

namespace puiseux {

struct Term {
  Rat exponent;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms are stored with strictly increasing exponents and nonzero
/// coefficients, so equality is structural. Zero has no terms.
class PuiseuxPoly {
 public:
  PuiseuxPoly() = default;
  /// Merges like exponents and drops zero coefficients.
  explicit PuiseuxPoly(std::vector<Term> terms) {
    std::map<Rat, Coeff> acc;
    for (auto& t : terms) {
      t.coeff.canonicalize();
      acc[t.exponent] += t.coeff;
    }
    for (auto& [e, c] : acc)
      if (sgn(c) != 0) terms_.push_back({e, c});
  }
  static PuiseuxPoly constant(const Coeff& c) { return monomial(c, Rat(0)); }
  static PuiseuxPoly monomial(const Coeff& c, const Rat& e) {
    return PuiseuxPoly(std::vector<Term>{{e, c}});
  }
  static PuiseuxPoly from_qpoly(const QPoly& f) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
      if (sgn(f.coeffs()[i]) != 0) t.push_back({Rat(static_cast<long>(i)), f.coeffs()[i]});
    return PuiseuxPoly(std::move(t));
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

  const Rat& ord() const {
    require_nonzero("order");
    return terms_.front().exponent;
  }
  const Rat& deg() const {
    require_nonzero("degree");
    return terms_.back().exponent;
  }
  std::vector<Rat> supp() const {
    std::vector<Rat> s;
    s.reserve(terms_.size());
    for (const auto& t : terms_) s.push_back(t.exponent);
    return s;
  }
  /// Coefficient of the highest-exponent term.
  const Coeff& leading() const {
    require_nonzero("leading coefficient");
    return terms_.back().coeff;
  }
  Coeff coeff(const Rat& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Rat& x) { return t.exponent < x; });
    return (it != terms_.end() && it->exponent == e) ? it->coeff : Coeff(0);
  }

  /// Leading coefficient scaled to 1 (the associate-class representative).
  PuiseuxPoly normalized() const {
    if (is_zero()) return *this;
    return *this * Coeff(1 / leading());
  }

  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    std::vector<Term> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return PuiseuxPoly(std::move(t));
  }
  friend PuiseuxPoly operator-(const PuiseuxPoly& a) {
    PuiseuxPoly out = a;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
  }
  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a + (-b); }
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    std::map<Rat, Coeff> acc;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) acc[x.exponent + y.exponent] += x.coeff * y.coeff;
    PuiseuxPoly out;
    for (auto& [e, c] : acc)
      if (sgn(c) != 0) out.terms_.push_back({e, c});
    return out;
  }
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const Coeff& c) {
    if (sgn(c) == 0) return {};
    PuiseuxPoly out = a;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }
  friend bool operator==(const PuiseuxPoly&, const PuiseuxPoly&) = default;

 private:
  void require_nonzero(const char* what) const {
    if (is_zero()) throw DomainError(std::string(what) + " of the zero element is undefined");
  }

  std::vector<Term> terms_;
};

inline PuiseuxPoly pp_mul(const PuiseuxPoly& f, const PuiseuxPoly& g) { return f * g; }

inline PuiseuxPoly pp_pow(const PuiseuxPoly& f, unsigned e) {
  PuiseuxPoly acc = PuiseuxPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) acc = acc * f;
  return acc;
}

/// Canonical order: by degree, then term by term from the highest exponent
/// (exponent first, then coefficient). Zero sorts first.
inline bool canonical_less(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (ia->exponent != ib->exponent) return ia->exponent > ib->exponent;
    const int c = cmp(ia->coeff, ib->coeff);
    if (c != 0) return c < 0;
  }
  return ia == a.terms().rend() && ib != b.terms().rend();
}

struct OrdDegSupp {
  Rat ord;
  Rat deg;
  std::vector<Rat> supp;
};

inline OrdDegSupp ord_deg_supp(const PuiseuxPoly& f) { return {f.ord(), f.deg(), f.supp()}; }

/// For every s in supp f, deg f + ord f - s is in supp f.
inline bool is_symmetric_support(const PuiseuxPoly& f) {
  if (f.is_zero()) throw DomainError("symmetric support of the zero element is undefined");
  const auto& t = f.terms();
  const Rat axis = f.deg() + f.ord();
  // Ascending exponents must mirror descending ones.
  for (std::size_t i = 0, j = t.size() - 1; i <= j; ++i, --j) {
    if (t[i].exponent + t[j].exponent != axis) return false;
    if (j == 0) break;
  }
  return true;
}

/// Psi_r: X^s -> X^(r s).
inline PuiseuxPoly substitute(const PuiseuxPoly& f, const Rat& r) {
  if (r.is_zero()) throw DomainError("substitution factor must be positive");
  std::vector<Term> t;
  t.reserve(f.size());
  for (const auto& term : f.terms()) t.push_back({term.exponent * r, term.coeff});
  return PuiseuxPoly(std::move(t));
}

struct ClearedPoly {
  Integer m;
  QPoly poly;
};

/// m = lcm of the support denominators and Psi_m(f) as a polynomial in X.
inline ClearedPoly clear_denominators(const PuiseuxPoly& f) {
  if (f.is_zero()) throw DomainError("cannot clear denominators of the zero element");
  const Integer m = lcm_denominators(f.supp());
  const PuiseuxPoly g = substitute(f, Rat(m, 1));
  const Integer top = g.deg().num();
  if (!top.fits_ulong_p() || top > 1'000'000) throw ResourceLimitError("cleared degree too large");
  std::vector<Coeff> c(top.get_ui() + 1, Coeff(0));
  for (const auto& t : g.terms()) c[t.exponent.num().get_ui()] = t.coeff;
  return {m, QPoly(std::move(c))};
}

/// h(X^s).
inline PuiseuxPoly generalized_poly(const QPoly& h, const Rat& s) {
  if (s.is_zero()) throw DomainError("generalized polynomial needs a positive exponent scale");
  return substitute(PuiseuxPoly::from_qpoly(h), s);
}

/// f / g in Q[Q_+] when g divides f there.
inline std::optional<PuiseuxPoly> exact_divide(const PuiseuxPoly& f, const PuiseuxPoly& g) {
  if (g.is_zero()) throw DomainError("division by the zero element");
  if (f.is_zero()) return PuiseuxPoly{};
  if (f.deg() < g.deg() || f.ord() < g.ord()) return std::nullopt;
  std::vector<Rat> all = f.supp();
  for (const auto& r : g.supp()) all.push_back(r);
  const Integer m = lcm_denominators(all);
  const Rat scale(m, 1);
  const auto as_q = [&](const PuiseuxPoly& p) {
    const PuiseuxPoly s = substitute(p, scale);
    std::vector<Coeff> c(s.deg().num().get_ui() + 1, Coeff(0));
    for (const auto& t : s.terms()) c[t.exponent.num().get_ui()] = t.coeff;
    return QPoly(std::move(c));
  };
  auto [q, r] = poly_divrem(as_q(f), as_q(g));
  if (!r.is_zero()) return std::nullopt;
  return substitute(PuiseuxPoly::from_qpoly(q), Rat(1, m));
}

}  // namespace puiseux
