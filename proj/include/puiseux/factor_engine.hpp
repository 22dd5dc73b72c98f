#pragma once

// Canonical monomial/cyclotomic/prime decomposition of elements of Q[Q_+] and
// exhaustive non-associate divisor enumeration inside Q[S] for finitely
// generated Puiseux monoids S.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "puiseux/cyclotomic.hpp"
#include "puiseux/error.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/puiseux_poly.hpp"
#include "puiseux/qpoly.hpp"
#include "puiseux/rat.hpp"

namespace puiseux {

/// Default cap on the number of candidate divisors examined.
inline constexpr std::uint64_t kDefaultDivisorLimit = std::uint64_t{1} << 20;

struct CyclotomicComponent {
  std::uint64_t index = 1;
  unsigned exponent = 1;

  friend bool operator==(const CyclotomicComponent&, const CyclotomicComponent&) = default;
};

struct PrimeComponent {
  QPoly poly;  // monic, irreducible, not cyclotomic
  unsigned exponent = 1;

  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

/// f = c * X^monomial * prod Phi_n(X^(1/m))^e * prod q(X^(1/m))^l.
///
/// The cyclotomic components are canonical relative to m only: Phi_1(X) is
/// reported as Phi_1 at m = 1 even though Phi_1(X^(1/2)) Phi_2(X^(1/2))
/// splits it further in Q[Q_+]. The prime components are primes of Q[Q_+].
struct CanonicalFactorization {
  Coeff constant{1};
  Integer m{1};
  Rat monomial{0};
  std::vector<CyclotomicComponent> cyclotomic;  // ascending index
  std::vector<PrimeComponent> primes;           // canonical polynomial order

  friend bool operator==(const CanonicalFactorization&, const CanonicalFactorization&) = default;
};

inline CanonicalFactorization canonical_factorization(const PuiseuxPoly& f) {
  if (f.is_zero()) throw DomainError("canonical factorization of the zero element");
  const ClearedPoly cleared = clear_denominators(f);
  const QFactorization fac = factor_over_rationals(cleared.poly);

  CanonicalFactorization out;
  out.constant = fac.constant;
  out.m = cleared.m;
  out.monomial = f.ord();
  for (const auto& [poly, mult] : fac.factors) {
    if (poly == QPoly::x()) continue;  // accounted for by ord f
    if (auto n = detail::classify_cyclotomic_unchecked(poly))
      out.cyclotomic.push_back({*n, mult});
    else
      out.primes.push_back({poly, mult});
  }
  std::sort(out.cyclotomic.begin(), out.cyclotomic.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  return out;
}

inline PuiseuxPoly recompose(const CanonicalFactorization& cf) {
  if (sgn(cf.constant) == 0) throw DomainError("canonical factorization with zero constant");
  if (cf.m < 1) throw DomainError("clearing denominator must be positive");
  const Rat inv_m(1, cf.m);
  PuiseuxPoly acc = PuiseuxPoly::monomial(cf.constant, cf.monomial);
  for (const auto& c : cf.cyclotomic)
    acc = acc * pp_pow(generalized_poly(cyclotomic_poly(c.index), inv_m), c.exponent);
  for (const auto& p : cf.primes) acc = acc * pp_pow(generalized_poly(p.poly, inv_m), p.exponent);
  return acc;
}

/// Non-associate divisors of `element` in Q[monoid], one monic
/// representative (leading coefficient 1) per class, canonically sorted.
struct DivisorSet {
  PuiseuxPoly element;
  PuiseuxMonoid monoid;
  std::vector<PuiseuxPoly> divisors;

  bool contains(const PuiseuxPoly& g) const {
    const PuiseuxPoly n = g.normalized();
    return std::binary_search(divisors.begin(), divisors.end(), n,
                              [](const PuiseuxPoly& a, const PuiseuxPoly& b) { return canonical_less(a, b); });
  }
  std::size_t size() const { return divisors.size(); }
};

namespace detail {

inline bool support_in(const QPoly& p, std::uint64_t shift, const NumericalMonoid& n) {
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (sgn(p.coeffs()[i]) != 0 && !n.contains(static_cast<std::uint64_t>(i) + shift)) return false;
  return true;
}

inline void require_in_monoid(const PuiseuxPoly& f, const PuiseuxMonoid& s) {
  if (f.is_zero()) throw DomainError("divisors of the zero element are not finite");
  for (const auto& t : f.terms())
    if (!contains(s, t.exponent))
      throw DomainError("exponent " + to_string(t.exponent) + " is not in the monoid");
}

}  // namespace detail

/// Enumerates every divisor of f in Q[S]. With r * S = N numerical, Psi_r
/// carries f into Q[N] inside Q[X]; there every divisor is a constant times
/// X^t times a sub-multiset of the irreducible factors, and a candidate is
/// kept when it and its cofactor both have support in N.
inline DivisorSet divisors_in_algebra(const PuiseuxPoly& f, const PuiseuxMonoid& s,
                                      std::uint64_t limit = kDefaultDivisorLimit) {
  detail::require_in_monoid(f, s);
  const Rat& r = s.scale();
  const NumericalMonoid& num = s.numerical();
  // supp f lies in S, so Psi_r(f) has integer support and clears with m = 1.
  const ClearedPoly mapped = clear_denominators(substitute(f, r));
  const QFactorization fac = factor_over_rationals(mapped.poly);
  std::uint64_t monomial_power = 0;
  std::vector<QFactor> parts;
  for (const auto& fc : fac.factors) {
    if (fc.poly == QPoly::x())
      monomial_power = fc.multiplicity;
    else
      parts.push_back(fc);
  }

  // Candidate count (k + 1) * prod (m_i + 1), checked against the cap.
  std::uint64_t count = monomial_power + 1;
  for (const auto& p : parts) {
    count *= p.multiplicity + 1;
    if (count > limit) break;
  }
  if (count > limit)
    throw ResourceLimitError("divisor enumeration needs more than " + std::to_string(limit) + " candidates");

  std::vector<std::vector<QPoly>> powers(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    powers[i].push_back(QPoly::constant(1));
    for (unsigned e = 1; e <= parts[i].multiplicity; ++e) powers[i].push_back(powers[i].back() * parts[i].poly);
  }

  const Rat back(r.den(), r.num());
  std::vector<PuiseuxPoly> found;
  std::vector<unsigned> exps(parts.size(), 0);
  while (true) {
    QPoly g = QPoly::constant(1), h = QPoly::constant(1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      g = g * powers[i][exps[i]];
      h = h * powers[i][parts[i].multiplicity - exps[i]];
    }
    for (std::uint64_t t = 0; t <= monomial_power; ++t) {
      if (!detail::support_in(g, t, num) || !detail::support_in(h, monomial_power - t, num)) continue;
      const QPoly shifted = g * QPoly::monomial(1, t);
      found.push_back(substitute(PuiseuxPoly::from_qpoly(shifted), back).normalized());
    }
    std::size_t i = 0;
    while (i < parts.size() && exps[i] == parts[i].multiplicity) exps[i++] = 0;
    if (i == parts.size()) break;
    ++exps[i];
  }
  std::sort(found.begin(), found.end(),
            [](const PuiseuxPoly& a, const PuiseuxPoly& b) { return canonical_less(a, b); });
  return {f, s, std::move(found)};
}

inline std::size_t ff_divisor_count(const PuiseuxPoly& f, const PuiseuxMonoid& s,
                                    std::uint64_t limit = kDefaultDivisorLimit) {
  return divisors_in_algebra(f, s, limit).size();
}

/// f is an atom of Q[S] when its only divisors are the unit and associate classes.
inline bool is_atom_in_algebra(const PuiseuxPoly& f, const PuiseuxMonoid& s,
                               std::uint64_t limit = kDefaultDivisorLimit) {
  if (f.is_constant()) throw DomainError("constants are zero or units, not atoms");
  return ff_divisor_count(f, s, limit) == 2;
}

}  // namespace puiseux
