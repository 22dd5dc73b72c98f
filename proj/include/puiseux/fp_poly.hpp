#pragma once

// Dense polynomials over a small prime field F_p and Berlekamp's
// factorization of squarefree monic polynomials.

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "puiseux/error.hpp"
#include "puiseux/prime_field.hpp"
#include "puiseux/rat.hpp"

namespace puiseux {

class FpPoly {
 public:
  explicit FpPoly(std::uint64_t p) : p_(p) { require_prime_modulus(p); }
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : FpPoly(p) {
    coeffs_ = std::move(coeffs);
    for (auto& c : coeffs_) c %= p_;
    trim();
  }
  /// Reduces integer coefficients modulo p.
  static FpPoly from_integers(std::uint64_t p, const std::vector<Integer>& coeffs) {
    std::vector<std::uint64_t> v(coeffs.size());
    const Integer pz(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Integer r = coeffs[i] % pz;
      if (r < 0) r += pz;
      v[i] = r.get_ui();
    }
    return FpPoly(p, std::move(v));
  }

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint64_t leading() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  PrimeFieldElem elem(std::size_t i) const {
    return PrimeFieldElem(static_cast<std::int64_t>(coeff(i)), p_);
  }

  FpPoly scaled(std::uint64_t c) const {
    std::vector<std::uint64_t> v = coeffs_;
    for (auto& x : v) x = x * (c % p_) % p_;
    return FpPoly(p_, std::move(v));
  }
  FpPoly monic() const {
    if (is_zero()) return *this;
    return scaled(inv(leading()));
  }
  FpPoly derivative() const {
    if (coeffs_.size() <= 1) return FpPoly(p_);
    std::vector<std::uint64_t> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * (i % p_) % p_;
    return FpPoly(p_, std::move(v));
  }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
    return FpPoly(a.p_, std::move(v));
  }
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
    return FpPoly(a.p_, std::move(v));
  }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
    std::vector<std::uint64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] = (v[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.p_;
    return FpPoly(a.p_, std::move(v));
  }
  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  /// (quotient, remainder); b must be nonzero.
  friend std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const std::uint64_t p = a.p_;
    if (a.degree() < b.degree()) return {FpPoly(p), a};
    std::vector<std::uint64_t> r = a.coeffs_;
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<std::uint64_t> q(r.size() - db, 0);
    const std::uint64_t il = inv_mod(b.leading(), p);
    for (std::size_t i = r.size(); i-- > db;) {
      if (r[i] == 0) continue;
      const std::uint64_t t = r[i] * il % p;
      q[i - db] = t;
      for (std::size_t j = 0; j <= db; ++j)
        r[i - db + j] = (r[i - db + j] + p - t * b.coeffs_[j] % p) % p;
    }
    r.resize(db);
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
  }
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divrem(a, b).second; }
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divrem(a, b).first; }

  static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return PrimeFieldElem(static_cast<std::int64_t>(a), p).inverse().value();
  }

 private:
  std::uint64_t inv(std::uint64_t a) const { return inv_mod(a, p_); }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::uint64_t p_;
  std::vector<std::uint64_t> coeffs_;
};

inline FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
inline std::tuple<FpPoly, FpPoly, FpPoly> fp_xgcd(const FpPoly& a, const FpPoly& b) {
  const std::uint64_t p = a.modulus();
  FpPoly r0 = a, r1 = b;
  FpPoly s0(p, {1}), s1(p), t0(p), t1(p, {1});
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    FpPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t il = FpPoly::inv_mod(r0.leading(), p);
  return {r0.scaled(il), s0.scaled(il), t0.scaled(il)};
}

/// base^e mod m.
inline FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& m) {
  FpPoly acc(m.modulus(), {1});
  base = base % m;
  while (e) {
    if (e & 1) acc = (acc * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return acc % m;
}

namespace detail {

/// Basis of the null space of the n x n matrix `a` over F_p.
inline std::vector<std::vector<std::uint64_t>> nullspace_mod_p(
    std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t n = a.size();
  std::vector<long> pivot_row_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    const std::uint64_t il = FpPoly::inv_mod(a[row][col], p);
    for (auto& x : a[row]) x = x * il % p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::uint64_t f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = (a[r][c] + p - f * a[row][c] % p) % p;
    }
    pivot_row_of_col[col] = static_cast<long>(row);
    ++row;
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_row_of_col[free] >= 0) continue;
    std::vector<std::uint64_t> v(n, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col) {
      const long r = pivot_row_of_col[col];
      if (r >= 0) v[col] = (p - a[static_cast<std::size_t>(r)][free]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

/// Monic irreducible factors of a monic squarefree f over F_p (Berlekamp),
/// sorted by (degree, coefficients).
inline std::vector<FpPoly> berlekamp_factor(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  if (f.degree() < 1 || f.leading() != 1) throw DomainError("berlekamp_factor needs a monic non-constant input");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n == 1) return {f};

  // Row i holds X^(i*p) mod f.
  const FpPoly xp = fp_powmod(FpPoly(p, {0, 1}), p, f);
  std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
  FpPoly row(p, {1});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[i][j] = row.coeff(j);
    row = (row * xp) % f;
  }
  // v with v(Q - I) = 0, i.e. (Q - I)^T v = 0.
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[j][i] = (q[i][j] + (i == j ? p - 1 : 0)) % p;
  const auto basis = detail::nullspace_mod_p(std::move(a), p);
  const std::size_t r = basis.size();

  std::vector<FpPoly> factors{f};
  for (const auto& vec : basis) {
    if (factors.size() == r) break;
    const FpPoly v(p, vec);
    if (v.degree() < 1) continue;
    std::vector<FpPoly> next;
    for (const FpPoly& u : factors) {
      if (u.degree() == 1) {
        next.push_back(u);
        continue;
      }
      FpPoly rest = u;
      for (std::uint64_t s = 0; s < p && rest.degree() > 0; ++s) {
        const FpPoly g = fp_gcd(rest, v - FpPoly(p, {s}));
        if (g.degree() > 0) {
          next.push_back(g);
          rest = rest / g;
        }
      }
    }
    factors = std::move(next);
  }
  if (factors.size() != r) throw DomainError("berlekamp splitting did not separate all factors");
  std::sort(factors.begin(), factors.end(), [](const FpPoly& x, const FpPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return std::lexicographical_compare(x.coeffs().rbegin(), x.coeffs().rend(), y.coeffs().rbegin(),
                                        y.coeffs().rend());
  });
  return factors;
}

}  // namespace puiseux
