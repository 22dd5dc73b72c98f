#pragma once

// Dense univariate polynomials over Q.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "puiseux/error.hpp"
#include "puiseux/rat.hpp"

namespace puiseux {

/// Dense polynomial in Q[X]; coeffs()[i] is the coefficient of X^i and the
/// last stored coefficient is nonzero. The zero polynomial stores nothing.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  QPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static QPoly constant(const Coeff& c) { return QPoly(std::vector<Coeff>{c}); }
  /// c * X^k
  static QPoly monomial(const Coeff& c, std::size_t k) {
    std::vector<Coeff> v(k + 1, Coeff(0));
    v[k] = c;
    return QPoly(std::move(v));
  }
  static QPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  QPoly monic() const {
    if (is_zero()) return *this;
    return *this * Coeff(1 / leading());
  }

  QPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return QPoly(std::move(d));
  }

  Coeff eval(const Coeff& x) const {
    Coeff acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// f(X^k).
  QPoly inflate(std::size_t k) const {
    if (k == 0) throw DomainError("inflation by zero");
    if (is_zero()) return {};
    std::vector<Coeff> v(static_cast<std::size_t>(degree()) * k + 1, Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return QPoly(std::move(v));
  }

  QPoly pow(unsigned e) const {
    QPoly acc = constant(1), base = *this;
    while (e) {
      if (e & 1u) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return QPoly(std::move(v));
  }
  friend QPoly operator-(const QPoly& a) {
    std::vector<Coeff> v = a.coeffs_;
    for (auto& c : v) c = -c;
    return QPoly(std::move(v));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(v));
  }
  friend QPoly operator*(const QPoly& a, const Coeff& c) {
    if (sgn(c) == 0) return {};
    std::vector<Coeff> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return QPoly(std::move(v));
  }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  // Callers may hand in unreduced mpq values such as Coeff(7, 7).
  void trim() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

/// Canonical total order: by degree, then coefficients from the top down.
inline bool canonical_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long i = a.degree(); i >= 0; --i) {
    const int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

struct DivRem {
  QPoly quotient;
  QPoly remainder;
};

inline DivRem poly_divrem(const QPoly& f, const QPoly& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  if (f.degree() < g.degree()) return {QPoly{}, f};
  std::vector<Coeff> r = f.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<Coeff> q(r.size() - dg, Coeff(0));
  const Coeff inv_lc = 1 / g.leading();
  for (std::size_t i = r.size(); i-- > dg;) {
    if (sgn(r[i]) == 0) continue;
    const Coeff t = r[i] * inv_lc;
    q[i - dg] = t;
    for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] -= t * g.coeffs()[j];
  }
  r.resize(dg);
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

/// Monic gcd over Q (Euclid). gcd(f, 0) = monic(f).
inline QPoly poly_gcd(QPoly f, QPoly g) {
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  while (!g.is_zero()) {
    QPoly r = poly_divrem(f, g).remainder;
    f = std::move(g);
    g = r.monic();
  }
  return f.monic();
}

/// Quotient of an exact division; throws when g does not divide f.
inline QPoly exact_quotient(const QPoly& f, const QPoly& g) {
  auto [q, r] = poly_divrem(f, g);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

struct SquarefreeDecomposition {
  Coeff constant;
  /// Monic, squarefree, pairwise coprime parts with increasing multiplicity.
  std::vector<std::pair<QPoly, unsigned>> parts;
};

/// Yun's algorithm. f = constant * prod part^multiplicity.
inline SquarefreeDecomposition squarefree_decompose(const QPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out{f.leading(), {}};
  const QPoly a = f.monic();
  if (a.degree() == 0) return out;
  QPoly b = a.derivative();
  QPoly c = poly_gcd(a, b);
  QPoly w = exact_quotient(a, c);
  QPoly y = exact_quotient(b, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    QPoly z = y - w.derivative();
    QPoly g = z.is_zero() ? w.monic() : poly_gcd(w, z);
    if (g.degree() > 0) out.parts.emplace_back(g, i);
    w = exact_quotient(w, g);
    y = z.is_zero() ? QPoly{} : exact_quotient(z, g);
    ++i;
  }
  return out;
}

}  // namespace puiseux
