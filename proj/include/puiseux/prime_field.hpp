#pragma once

#include <cstdint>
#include <string>

#include "puiseux/error.hpp"

namespace puiseux {

inline constexpr std::uint64_t kMaxPrimeModulus = std::uint64_t{1} << 31;

/// Deterministic trial division; moduli are bounded by 2^31.
inline bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime_modulus(std::uint64_t p) {
  if (p > kMaxPrimeModulus || !is_small_prime(p))
    throw DomainError("modulus " + std::to_string(p) + " is not a prime <= 2^31");
}

/// Element of F_p for a prime p <= 2^31.
class PrimeFieldElem {
 public:
  PrimeFieldElem(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    require_prime_modulus(modulus);
    const auto m = static_cast<std::int64_t>(modulus);
    value_ = static_cast<std::uint64_t>(((value % m) + m) % m);
  }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  friend PrimeFieldElem operator+(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    a.check(b);
    return raw((a.value_ + b.value_) % a.modulus_, a.modulus_);
  }
  friend PrimeFieldElem operator-(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    a.check(b);
    return raw((a.value_ + a.modulus_ - b.value_) % a.modulus_, a.modulus_);
  }
  friend PrimeFieldElem operator*(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    a.check(b);
    return raw(a.value_ * b.value_ % a.modulus_, a.modulus_);
  }
  PrimeFieldElem operator-() const { return raw((modulus_ - value_) % modulus_, modulus_); }

  /// Multiplicative inverse by Fermat's little theorem.
  PrimeFieldElem inverse() const {
    if (value_ == 0) throw DomainError("inverse of zero in F_p");
    return pow(modulus_ - 2);
  }
  PrimeFieldElem pow(std::uint64_t e) const {
    std::uint64_t base = value_, acc = 1 % modulus_;
    while (e) {
      if (e & 1) acc = acc * base % modulus_;
      base = base * base % modulus_;
      e >>= 1;
    }
    return raw(acc, modulus_);
  }
  friend PrimeFieldElem operator/(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    return a * b.inverse();
  }

  friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

 private:
  PrimeFieldElem() = default;
  static PrimeFieldElem raw(std::uint64_t v, std::uint64_t m) {
    PrimeFieldElem e;
    e.value_ = v;
    e.modulus_ = m;
    return e;
  }
  void check(const PrimeFieldElem& o) const {
    if (o.modulus_ != modulus_) throw DomainError("mixed prime-field moduli");
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 2;
};

inline std::string to_string(const PrimeFieldElem& e) { return std::to_string(e.value()); }

}  // namespace puiseux
