#pragma once

// Complete factorization over Q: squarefree decomposition, Berlekamp modulo a
// small prime, Hensel lifting past a Mignotte-style bound, then Zassenhaus
// subset recombination.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "puiseux/error.hpp"
#include "puiseux/fp_poly.hpp"
#include "puiseux/qpoly.hpp"
#include "puiseux/rat.hpp"

namespace puiseux {

struct QFactor {
  QPoly poly;  // monic, irreducible over Q
  unsigned multiplicity = 1;

  friend bool operator==(const QFactor&, const QFactor&) = default;
};

struct QFactorization {
  Coeff constant;
  /// Sorted by (degree, coefficients).
  std::vector<QFactor> factors;

  QPoly expand() const {
    QPoly acc = QPoly::constant(constant);
    for (const auto& f : factors) acc = acc * f.poly.pow(f.multiplicity);
    return acc;
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& f : factors) d += f.multiplicity * static_cast<unsigned>(f.poly.degree());
    return d;
  }
};

namespace detail {

using ZPoly = std::vector<Integer>;  // ascending, no trailing zeros

inline void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  ztrim(out);
  return out;
}

inline Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

/// Primitive part with positive leading coefficient.
inline ZPoly zprimitive(ZPoly a) {
  ztrim(a);
  if (a.empty()) return a;
  Integer g = zcontent(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// Exact quotient a / b in Z[X], or empty optional-like flag when b does not
/// divide a over Z.
inline bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) return false;
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db, Integer(0));
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer t = r[i] / b.back();
    q[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  ztrim(q);
  quotient = std::move(q);
  return true;
}

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of f.
inline ZPoly to_primitive_integer(const QPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coeffs()) l = lcm(l, c.get_den());
  ZPoly z(f.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = f.coeffs()[i].get_num() * (l / f.coeffs()[i].get_den());
  return zprimitive(std::move(z));
}

inline QPoly to_monic_q(const ZPoly& z) {
  std::vector<Coeff> v(z.begin(), z.end());
  return QPoly(std::move(v)).monic();
}

inline Integer mod_sym(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

inline ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
  return a;
}

inline ZPoly to_z(const FpPoly& f) { return ZPoly(f.coeffs().begin(), f.coeffs().end()); }

/// Lifts target == g*h (mod p) with g, h monic and coprime mod p to monic
/// G, H with target == G*H (mod p^k). `target` is monic modulo p^k.
inline std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& target, const FpPoly& g, const FpPoly& h,
                                                unsigned k) {
  const std::uint64_t p = g.modulus();
  auto [one, s, t] = fp_xgcd(g, h);
  if (one.degree() != 0) throw DomainError("hensel lifting needs coprime factors");
  ZPoly big_g = to_z(g), big_h = to_z(h);
  Integer pj(static_cast<unsigned long>(p));
  const Integer pz(static_cast<unsigned long>(p));
  for (unsigned j = 1; j < k; ++j) {
    ZPoly e = target;
    const ZPoly gh = zmul(big_g, big_h);
    e.resize(std::max(e.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& c : e) c /= pj;  // exact: target == G*H mod p^j
    const FpPoly ep = FpPoly::from_integers(p, e);
    auto [quo, sigma] = divrem(s * ep, h);
    const FpPoly tau = t * ep + quo * g;
    const ZPoly dt = to_z(tau), ds = to_z(sigma);
    big_g.resize(std::max(big_g.size(), dt.size()), Integer(0));
    big_h.resize(std::max(big_h.size(), ds.size()), Integer(0));
    for (std::size_t i = 0; i < dt.size(); ++i) big_g[i] += pj * dt[i];
    for (std::size_t i = 0; i < ds.size(); ++i) big_h[i] += pj * ds[i];
    ztrim(big_g);
    ztrim(big_h);
    pj *= pz;
  }
  return {big_g, big_h};
}

/// Advances an ascending k-subset of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
  const std::size_t k = pick.size();
  std::size_t i = k;
  while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++pick[i - 1];
  for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  return true;
}

/// Irreducible factors of a primitive squarefree integer polynomial with
/// positive leading coefficient and nonzero constant term, in the order they
/// are discovered.
inline std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};

  // Smallest prime p >= 3 with p not dividing lc(f) and f squarefree mod p.
  std::uint64_t p = 3;
  for (;; p += 2) {
    if (!is_small_prime(p)) continue;
    const Integer pz(static_cast<unsigned long>(p));
    if (f.back() % pz == 0) continue;
    const FpPoly fp = FpPoly::from_integers(p, f);
    if (fp_gcd(fp, fp.derivative()).degree() == 0) break;
  }
  const FpPoly fp = FpPoly::from_integers(p, f).monic();
  std::vector<FpPoly> modular = berlekamp_factor(fp);
  if (modular.size() == 1) return {f};

  // Any factor g of f has |coeff| <= 2^n * ||f||_2; a multiple of g by a
  // divisor of lc(f) must be recoverable from its symmetric residue.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root = sqrt(norm2) + 1;
  Integer bound = root * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  const Integer pz(static_cast<unsigned long>(p));
  unsigned k = 1;
  Integer pk = pz;
  while (pk <= 2 * bound) {
    pk *= pz;
    ++k;
  }

  // Sequential multifactor lifting.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
  ZPoly target = f;
  for (auto& c : target) c *= lc_inv;
  target = zmod(std::move(target), pk);
  std::vector<ZPoly> lifted;
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    FpPoly rest(p, {1});
    for (std::size_t j = i + 1; j < modular.size(); ++j) rest = rest * modular[j];
    auto [g, h] = hensel_lift_pair(target, modular[i], rest, k);
    lifted.push_back(zmod(std::move(g), pk));
    target = zmod(std::move(h), pk);
  }
  lifted.push_back(std::move(target));

  // Recombination: subsets by increasing size, lexicographic within a size.
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::vector<ZPoly> found;
  ZPoly current = f;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool hit = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      // A true factor's constant term divides lc(current) * current(0);
      // checking that first skips the full product for most subsets.
      Integer c0 = current.back();
      for (std::size_t idx : pick) c0 = mod_sym(c0 * lifted[remaining[idx]].front() % pk, pk);
      if (c0 == 0 || !mpz_divisible_p(Integer(current.back() * current.front()).get_mpz_t(), c0.get_mpz_t())) {
        if (!next_combination(pick, remaining.size())) break;
        continue;
      }
      ZPoly cand{current.back()};
      for (std::size_t idx : pick) cand = zmod(zmul(cand, lifted[remaining[idx]]), pk);
      for (auto& c : cand) c = mod_sym(c, pk);
      cand = zprimitive(std::move(cand));
      ZPoly quotient;
      if (mpz_divisible_p(current.front().get_mpz_t(), cand.front().get_mpz_t()) &&
          zdivides(current, cand, quotient)) {
        found.push_back(cand);
        current = zprimitive(std::move(quotient));
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        hit = true;
        break;
      }
      if (!next_combination(pick, remaining.size())) break;
    }
    if (!hit) ++size;
  }
  if (current.size() > 1) found.push_back(current);
  return found;
}

}  // namespace detail

/// f = constant * prod factor^multiplicity, factors monic irreducible over Q.
inline QFactorization factor_over_rationals(const QPoly& f) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  const SquarefreeDecomposition sq = squarefree_decompose(f);
  QFactorization out{sq.constant, {}};
  for (const auto& [part, mult] : sq.parts) {
    detail::ZPoly z = detail::to_primitive_integer(part);
    std::size_t zeros = 0;
    while (zeros < z.size() && z[zeros] == 0) ++zeros;
    if (zeros > 0) {
      out.factors.push_back({QPoly::x(), mult});
      z.erase(z.begin(), z.begin() + static_cast<long>(zeros));
    }
    if (z.size() <= 1) continue;
    for (const auto& g : detail::zassenhaus(z)) out.factors.push_back({detail::to_monic_q(g), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const QFactor& a, const QFactor& b) { return canonical_less(a.poly, b.poly); });
  return out;
}

}  // namespace puiseux
