#pragma once

// Exact scalars: arbitrary-precision integers, signed rational coefficients,
// and the non-negative reduced rationals used as exponents.

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "puiseux/error.hpp"

namespace puiseux {

using Integer = mpz_class;
/// Signed exact rational; always kept canonical (reduced, positive denominator).
using Coeff = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "a/b", or "a" when b = 1.
inline std::string to_string(const Coeff& q) { return q.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Reduced non-negative rational number n(r)/d(r).
class Rat {
 public:
  Rat() = default;
  Rat(long n) : Rat(Integer(n), Integer(1)) {}  // NOLINT(google-explicit-constructor)
  Rat(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = Coeff(num, den);
    value_.canonicalize();
    if (sgn(value_) < 0) throw DomainError("exponent rationals must be non-negative");
  }
  explicit Rat(const Coeff& q) : value_(q) {
    value_.canonicalize();
    if (sgn(value_) < 0) throw DomainError("exponent rationals must be non-negative");
  }

  const Integer& num() const { return value_.get_num(); }
  const Integer& den() const { return value_.get_den(); }
  const Coeff& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return den() == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(Coeff(a.value_ + b.value_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(Coeff(a.value_ * b.value_)); }
  /// Difference in Q_+; throws if b > a.
  friend Rat operator-(const Rat& a, const Rat& b) {
    if (b > a) throw DomainError("negative difference of exponents");
    return Rat(Coeff(a.value_ - b.value_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DomainError("division by zero exponent");
    return Rat(Coeff(a.value_ / b.value_));
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Coeff value_{0};
};

inline std::string to_string(const Rat& r) { return r.value().get_str(); }

inline Rat reduce_rat(const Integer& num, const Integer& den) {
  if (den <= 0) throw DomainError("denominator must be positive");
  if (num < 0) throw DomainError("numerator must be non-negative");
  return Rat(num, den);
}

/// lcm{ d(r) : r in values }.
inline Integer lcm_denominators(std::span<const Rat> values) {
  if (values.empty()) throw DomainError("lcm of an empty set of denominators");
  Integer l = 1;
  for (const Rat& r : values) l = lcm(l, r.den());
  return l;
}

inline Integer lcm_denominators(const std::vector<Rat>& values) {
  return lcm_denominators(std::span<const Rat>(values));
}

}  // namespace puiseux
