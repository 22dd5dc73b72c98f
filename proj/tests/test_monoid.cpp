#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "oracle/monoid_dp.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/parser.hpp"
#include "support/random_objects.hpp"

using namespace puiseux;

namespace {

PuiseuxMonoid M(const std::string& s) { return parse_monoid(s); }

std::vector<Rat> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

PuiseuxMonoid random_monoid(std::mt19937_64& rng) {
  std::vector<Rat> g;
  const long k = testsupport::uniform(rng, 1, 4);
  for (long i = 0; i < k; ++i) g.push_back(testsupport::random_positive_rat(rng, 12, 4));
  return PuiseuxMonoid(std::move(g));
}

}  // namespace

TEST(NormalizeToNumerical, Examples) {
  const auto a = normalize_to_numerical(M("<1/2, 3/4>"));
  EXPECT_EQ(a.scale, Rat(4));
  EXPECT_EQ(a.monoid.generators(), (std::vector<std::uint64_t>{2, 3}));

  const auto b = normalize_to_numerical(M("<1>"));
  EXPECT_EQ(b.scale, Rat(1));
  EXPECT_EQ(b.monoid.generators(), (std::vector<std::uint64_t>{1}));

  const auto c = normalize_to_numerical(M("<2, 3>"));
  EXPECT_EQ(c.scale, Rat(1));
  EXPECT_EQ(c.monoid.generators(), (std::vector<std::uint64_t>{2, 3}));

  // gcd of scaled generators is divided out.
  const auto d = normalize_to_numerical(M("<4, 6>"));
  EXPECT_EQ(d.scale, Rat(1, 2));
  EXPECT_EQ(d.monoid.generators(), (std::vector<std::uint64_t>{2, 3}));

  EXPECT_THROW(PuiseuxMonoid(std::vector<Rat>{}), DomainError);
  EXPECT_THROW(PuiseuxMonoid(std::vector<Rat>{Rat(0)}), DomainError);
  EXPECT_THROW(NumericalMonoid({4, 6}), DomainError);
}

TEST(MonoidContains, Examples) {
  EXPECT_FALSE(contains(M("<2, 3>"), Rat(1)));
  EXPECT_TRUE(contains(M("<1/2, 2/3>"), Rat(7, 6)));
  EXPECT_TRUE(contains(M("<2, 3>"), Rat(7)));
  EXPECT_TRUE(contains(M("<2, 3>"), Rat(0)));
  EXPECT_FALSE(contains(M("<2, 3>"), Rat(5, 2)));
}

TEST(MonoidContains, AgreesWithDynamicProgramming) {
  std::mt19937_64 rng(61);
  int members = 0;
  for (int i = 0; i < 1000; ++i) {
    const PuiseuxMonoid s = random_monoid(rng);
    const Rat q(testsupport::uniform(rng, 0, 60), testsupport::uniform(rng, 1, 12));
    const bool in = contains(s, q);
    members += in;
    EXPECT_EQ(in, oracle::dp_member(s.generators(), q)) << format_monoid(s) << " " << to_string(q);
    // r * S = N as sets.
    const Rat y = q * s.scale();
    EXPECT_EQ(in, y.is_integer() && s.numerical().contains(y.num()));
  }
  EXPECT_GT(members, 100);
}

TEST(MonoidContains, ClosedUnderAddition) {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 300; ++i) {
    const PuiseuxMonoid s = random_monoid(rng);
    const auto a = testsupport::random_in_monoid(rng, s, 1, 5).deg();
    const auto b = testsupport::random_in_monoid(rng, s, 1, 5).deg();
    ASSERT_TRUE(contains(s, a));
    ASSERT_TRUE(contains(s, b));
    EXPECT_TRUE(contains(s, a + b));
  }
}

TEST(DivisorsInMonoid, Examples) {
  EXPECT_EQ(divisors_in_monoid(M("<2, 3>"), Rat(6)), rats({0, 2, 3, 4, 6}));
  EXPECT_EQ(divisors_in_monoid(M("<5/2, 7>"), Rat(0)), rats({0}));
  EXPECT_EQ(divisors_in_monoid(M("<1>"), Rat(3)), rats({0, 1, 2, 3}));
  EXPECT_EQ(divisors_in_monoid(M("<1/2, 2/3>"), Rat(7, 6)),
            (std::vector<Rat>{Rat(0), Rat(1, 2), Rat(2, 3), Rat(7, 6)}));
  EXPECT_THROW(divisors_in_monoid(M("<2, 3>"), Rat(1)), DomainError);
}

TEST(DivisorsInMonoid, SymmetricFiniteAndCorrect) {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 200; ++i) {
    const PuiseuxMonoid s = random_monoid(rng);
    const Rat x = testsupport::random_in_monoid(rng, s, 1, 4).deg();
    const auto d = divisors_in_monoid(s, x);
    ASSERT_FALSE(d.empty());
    EXPECT_EQ(d.front(), Rat(0));
    EXPECT_EQ(d.back(), x);
    for (const auto& t : d) {
      EXPECT_TRUE(std::binary_search(d.begin(), d.end(), x - t));
      EXPECT_TRUE(oracle::dp_member(s.generators(), t));
      EXPECT_TRUE(oracle::dp_member(s.generators(), x - t));
    }
  }
}

TEST(MonoidAtoms, Examples) {
  EXPECT_EQ(monoid_atoms(M("<2, 3>")), rats({2, 3}));
  EXPECT_EQ(monoid_atoms(M("<4, 6, 9>")), rats({4, 6, 9}));
  EXPECT_EQ(monoid_atoms(M("<2, 3, 5>")), rats({2, 3}));
  EXPECT_EQ(monoid_atoms(M("<1/2, 1, 3/2>")), (std::vector<Rat>{Rat(1, 2)}));
}

TEST(MonoidAtoms, GenerateTheMonoid) {
  std::mt19937_64 rng(64);
  for (int i = 0; i < 100; ++i) {
    const PuiseuxMonoid s = random_monoid(rng);
    const auto atoms = monoid_atoms(s);
    ASSERT_FALSE(atoms.empty());
    const Integer l = lcm_denominators(s.generators());
    for (long k = 0; k <= 40; ++k) {
      const Rat q(Integer(k), l);
      EXPECT_EQ(oracle::dp_member(atoms, q), oracle::dp_member(s.generators(), q));
    }
    // No atom is a sum of two nonzero members.
    for (const auto& a : atoms) EXPECT_EQ(divisors_in_monoid(s, a).size(), 2u);
  }
}

TEST(NumericalMonoid, ConcurrentAperyInitialization) {
  for (int round = 0; round < 20; ++round) {
    const PuiseuxMonoid s = M("<101/7, 137/7, 3>");
    std::vector<std::vector<char>> seen(8);
    std::vector<std::thread> pool;
    for (auto& v : seen)
      pool.emplace_back([&s, &v] {
        for (long k = 0; k < 2000; ++k) v.push_back(contains(s, Rat(k, 7)));
      });
    for (auto& t : pool) t.join();
    for (const auto& v : seen) EXPECT_EQ(v, seen.front());
  }
}

TEST(NumericalMonoid, ResourceLimits) {
  EXPECT_THROW(NumericalMonoid({20'000'001, 20'000'002}), ResourceLimitError);
  EXPECT_THROW(divisors_in_monoid(M("<1>"), Rat(20'000'000)), ResourceLimitError);
}
