#pragma once

// Finitely generated Puiseux monoids and their numerical normal forms.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "puiseux/error.hpp"
#include "puiseux/rat.hpp"

namespace puiseux {

/// Upper bound on the smallest scaled generator (the Apery table size) and
/// on the length of any integer walk over the monoid.
inline constexpr std::uint64_t kMaxMonoidWalk = 10'000'000;

/// Cofinite submonoid of Z_+ given by generators with gcd 1. Membership uses
/// the Apery set of the smallest generator, built lazily on first query.
class NumericalMonoid {
 public:
  explicit NumericalMonoid(std::vector<std::uint64_t> generators) : gens_(std::move(generators)) {
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.empty()) throw DomainError("numerical monoid needs at least one generator");
    if (gens_.front() == 0) throw DomainError("numerical monoid generators must be positive");
    std::uint64_t g = 0;
    for (auto x : gens_) g = std::gcd(g, x);
    if (g != 1) throw DomainError("numerical monoid generators must have gcd 1");
    if (gens_.front() > kMaxMonoidWalk) throw ResourceLimitError("smallest generator too large for an Apery table");
    if (gens_.back() > (std::uint64_t{1} << 40)) throw ResourceLimitError("generator too large");
    cache_ = std::make_shared<Cache>();
  }

  const std::vector<std::uint64_t>& generators() const { return gens_; }

  bool contains(const Integer& x) const {
    if (x < 0) return false;
    const auto& ap = apery();
    const Integer a(static_cast<unsigned long>(gens_.front()));
    const Integer r = x % a;
    return x >= Integer(static_cast<unsigned long>(ap[r.get_ui()]));
  }
  bool contains(std::uint64_t x) const {
    const auto& ap = apery();
    return x >= ap[x % gens_.front()];
  }

  /// w[i] = least member congruent to i modulo the smallest generator.
  const std::vector<std::uint64_t>& apery() const {
    std::call_once(cache_->once, [this] { cache_->table = build_apery(); });
    return cache_->table;
  }

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) { return a.gens_ == b.gens_; }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<std::uint64_t> table;
  };

  // Round-robin relaxation: each generator is folded in by walking every
  // residue cycle of gcd(a, g) once, starting from its current minimum.
  std::vector<std::uint64_t> build_apery() const {
    constexpr std::uint64_t kInf = UINT64_MAX;
    const std::uint64_t a = gens_.front();
    std::vector<std::uint64_t> w(a, kInf);
    w[0] = 0;
    for (std::size_t gi = 1; gi < gens_.size(); ++gi) {
      const std::uint64_t g = gens_[gi];
      const std::uint64_t d = std::gcd(a, g);
      for (std::uint64_t p = 0; p < d; ++p) {
        std::uint64_t n = kInf;
        for (std::uint64_t q = p; q < a; q += d) n = std::min(n, w[q]);
        if (n == kInf) continue;
        for (std::uint64_t step = 0; step < a / d; ++step) {
          n += g;
          const std::uint64_t r = n % a;
          n = std::min(n, w[r]);
          w[r] = n;
        }
      }
    }
    return w;
  }

  std::vector<std::uint64_t> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Finitely generated additive submonoid of Q_+ with positive generators.
/// Such a monoid is reduced, so its only unit is 0.
class PuiseuxMonoid {
 public:
  explicit PuiseuxMonoid(std::vector<Rat> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw DomainError("Puiseux monoid needs at least one generator");
    for (const auto& g : gens_)
      if (g.is_zero()) throw DomainError("generators must be positive");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());

    // r = L / g with L the lcm of denominators and g the gcd of L * gens.
    const Integer l = lcm_denominators(gens_);
    Integer g = 0;
    for (const auto& x : gens_) g = gcd(g, x.num() * (l / x.den()));
    scale_ = Rat(l, g);
    std::vector<std::uint64_t> ints;
    for (const auto& x : gens_) {
      const Rat y = x * scale_;
      if (!y.num().fits_ulong_p()) throw ResourceLimitError("scaled generator does not fit in 64 bits");
      ints.push_back(y.num().get_ui());
    }
    numerical_ = std::make_shared<const NumericalMonoid>(std::move(ints));
  }

  const std::vector<Rat>& generators() const { return gens_; }
  /// The factor r with r * S a numerical monoid.
  const Rat& scale() const { return scale_; }
  const NumericalMonoid& numerical() const { return *numerical_; }

  /// r * S as a Puiseux monoid.
  PuiseuxMonoid scaled(const Rat& r) const {
    if (r.is_zero()) throw DomainError("scaling factor must be positive");
    std::vector<Rat> g;
    for (const auto& x : gens_) g.push_back(x * r);
    return PuiseuxMonoid(std::move(g));
  }

  friend bool operator==(const PuiseuxMonoid& a, const PuiseuxMonoid& b) { return a.gens_ == b.gens_; }

 private:
  std::vector<Rat> gens_;
  Rat scale_;
  std::shared_ptr<const NumericalMonoid> numerical_;
};

struct NumericalForm {
  Rat scale;
  NumericalMonoid monoid;
};

inline NumericalForm normalize_to_numerical(const PuiseuxMonoid& s) { return {s.scale(), s.numerical()}; }

/// q in S iff r*q is an integer lying in the numerical normal form.
inline bool contains(const PuiseuxMonoid& s, const Rat& q) {
  const Rat y = q * s.scale();
  if (!y.is_integer()) return false;
  return s.numerical().contains(y.num());
}

/// { t in S : s - t in S }, ascending.
inline std::vector<Rat> divisors_in_monoid(const PuiseuxMonoid& s, const Rat& x) {
  if (!contains(s, x)) throw DomainError(to_string(x) + " is not an element of the monoid");
  const Integer top = (x * s.scale()).num();
  if (top > kMaxMonoidWalk) throw ResourceLimitError("monoid element too large to enumerate divisors");
  const std::uint64_t n = top.get_ui();
  const NumericalMonoid& num = s.numerical();
  std::vector<Rat> out;
  const Integer den = s.scale().num();
  const Integer mul = s.scale().den();
  for (std::uint64_t t = 0; t <= n; ++t)
    if (num.contains(t) && num.contains(n - t))
      out.push_back(Rat(Integer(static_cast<unsigned long>(t)) * mul, den));
  return out;
}

/// The minimal generating set: generators that are not a sum of two nonzero
/// members. g is such a sum exactly when g - h is a nonzero member for some
/// generator h.
inline std::vector<Rat> monoid_atoms(const PuiseuxMonoid& s) {
  std::vector<Rat> atoms;
  for (const auto& g : s.generators()) {
    bool reducible = false;
    for (const auto& h : s.generators()) {
      if (!(h < g)) continue;
      if (contains(s, g - h)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) atoms.push_back(g);
  }
  return atoms;
}

}  // namespace puiseux
