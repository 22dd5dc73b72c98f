#pragma once

// Cyclotomic polynomials over Q, their recognition, elementary symmetric
// values read off coefficients, and the reciprocal vanishing check.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/fp_poly.hpp"
#include "puiseux/prime_field.hpp"
#include "puiseux/qpoly.hpp"

namespace puiseux {

inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("phi(0) is undefined");
  std::uint64_t result = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

class CyclotomicTable {
 public:
  static CyclotomicTable& instance() {
    static CyclotomicTable table;
    return table;
  }

  QPoly get(std::uint64_t n) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    }
    // X^n - 1 divided by Phi_d for every proper divisor d of n.
    QPoly acc = QPoly::monomial(1, n) - QPoly::constant(1);
    for (std::uint64_t d = 1; d < n; ++d)
      if (n % d == 0) acc = exact_quotient(acc, get(d));
    std::lock_guard lock(mutex_);
    return memo_.emplace(n, std::move(acc)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::uint64_t, QPoly> memo_;
};

}  // namespace detail

/// Phi_n, memoized; safe to call concurrently.
inline QPoly cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic index must be positive");
  return detail::CyclotomicTable::instance().get(n);
}

/// All n with phi(n) = d. phi(n) >= sqrt(n/2) bounds the search by n <= 2d^2 + 2.
inline std::vector<std::uint64_t> inverse_totient(std::uint64_t d) {
  if (d == 0) return {};
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = 2 * d * d + 2;
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (euler_phi(n) == d) out.push_back(n);
  return out;
}

namespace detail {

inline std::optional<std::uint64_t> classify_cyclotomic_unchecked(const QPoly& p) {
  if (p.degree() < 1) return std::nullopt;
  for (std::uint64_t n : inverse_totient(static_cast<std::uint64_t>(p.degree())))
    if (cyclotomic_poly(n) == p) return n;
  return std::nullopt;
}

}  // namespace detail

/// Index n with p = Phi_n, or nullopt when p is not cyclotomic.
/// p must be monic and irreducible over Q.
inline std::optional<std::uint64_t> classify_cyclotomic(const QPoly& p) {
  if (p.degree() < 1 || !p.is_monic()) throw DomainError("classify_cyclotomic needs a monic non-constant polynomial");
  const QFactorization fac = factor_over_rationals(p);
  if (fac.factors.size() != 1 || fac.factors[0].multiplicity != 1)
    throw DomainError("classify_cyclotomic needs an irreducible polynomial");
  return detail::classify_cyclotomic_unchecked(p);
}

/// Multiset prod Phi_n^e.
struct CyclotomicProduct {
  std::map<std::uint64_t, unsigned> components;  // index -> exponent

  QPoly expand() const {
    QPoly acc = QPoly::constant(1);
    for (const auto& [n, e] : components) acc = acc * cyclotomic_poly(n).pow(e);
    return acc;
  }
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& [n, e] : components) d += e * euler_phi(n);
    return d;
  }
};

/// e_0, ..., e_n of the roots of a monic polynomial of degree n.
template <class Field>
struct SymmetricVector {
  std::vector<Field> values;

  std::size_t degree() const { return values.size() - 1; }
  const Field& operator[](std::size_t k) const { return values[k]; }
};

namespace detail {

inline bool is_zero_elem(const Coeff& c) { return sgn(c) == 0; }
inline bool is_zero_elem(const PrimeFieldElem& c) { return c.is_zero(); }

}  // namespace detail

/// Vieta: e_k = (-1)^k * coeff(X^(n-k)).
inline SymmetricVector<Coeff> elementary_symmetric(const QPoly& f) {
  if (!f.is_monic()) throw DomainError("elementary_symmetric needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  SymmetricVector<Coeff> out;
  out.values.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const Coeff& c = f.coeffs()[n - k];
    out.values.push_back(k % 2 ? Coeff(-c) : c);
  }
  return out;
}

/// Over F_p the sign (-1)^k is applied in the field; for p = 2 it is 1.
inline SymmetricVector<PrimeFieldElem> elementary_symmetric(const FpPoly& f) {
  if (f.is_zero() || f.leading() != 1) throw DomainError("elementary_symmetric needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  SymmetricVector<PrimeFieldElem> out;
  out.values.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const PrimeFieldElem c = f.elem(n - k);
    out.values.push_back(k % 2 ? -c : c);
  }
  return out;
}

struct ReciprocalReport {
  bool holds = true;
  /// Every k with e_k = 0 but e_(n-k) != 0.
  std::vector<std::size_t> witnesses;
};

template <class Field>
ReciprocalReport reciprocal_vanishing_check(const SymmetricVector<Field>& e) {
  ReciprocalReport report;
  const std::size_t n = e.degree();
  for (std::size_t k = 0; k <= n; ++k) {
    if (detail::is_zero_elem(e[k]) && !detail::is_zero_elem(e[n - k])) report.witnesses.push_back(k);
  }
  report.holds = report.witnesses.empty();
  return report;
}

inline ReciprocalReport reciprocal_vanishing_check(const QPoly& f) {
  if (f.degree() < 1) throw DomainError("reciprocal_vanishing_check needs degree >= 1");
  return reciprocal_vanishing_check(elementary_symmetric(f));
}

inline ReciprocalReport reciprocal_vanishing_check(const FpPoly& f) {
  if (f.degree() < 1) throw DomainError("reciprocal_vanishing_check needs degree >= 1");
  return reciprocal_vanishing_check(elementary_symmetric(f));
}

}  // namespace puiseux
