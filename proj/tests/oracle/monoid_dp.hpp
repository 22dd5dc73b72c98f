#pragma once

// Membership in a finitely generated Puiseux monoid by unbounded-knapsack
// reachability on the common-denominator lattice. Independent of the Apery
// table path used by the library.

#include <cstdint>
#include <vector>

#include "puiseux/rat.hpp"

namespace oracle {

inline bool dp_member(const std::vector<puiseux::Rat>& gens, const puiseux::Rat& q) {
  mpz_class l = q.den();
  for (const auto& g : gens) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), g.den().get_mpz_t());
  const mpz_class target_z = q.num() * (l / q.den());
  const std::uint64_t target = target_z.get_ui();
  std::vector<std::uint64_t> steps;
  for (const auto& g : gens) steps.push_back(mpz_class(g.num() * (l / g.den())).get_ui());
  std::vector<char> reach(target + 1, 0);
  reach[0] = 1;
  for (std::uint64_t v = 1; v <= target; ++v)
    for (auto s : steps)
      if (s <= v && reach[v - s]) {
        reach[v] = 1;
        break;
      }
  return reach[target] != 0;
}

}  // namespace oracle
