#include <gtest/gtest.h>

#include <random>

#include "puiseux/parser.hpp"
#include "puiseux/prime_field.hpp"
#include "puiseux/rat.hpp"

using namespace puiseux;

TEST(ReduceRat, Examples) {
  const Rat a = reduce_rat(6, 4);
  EXPECT_EQ(a.num(), 3);
  EXPECT_EQ(a.den(), 2);
  const Rat z = reduce_rat(0, 5);
  EXPECT_EQ(z.num(), 0);
  EXPECT_EQ(z.den(), 1);
  EXPECT_EQ(reduce_rat(5, 1), Rat(5));
}

TEST(ReduceRat, ZeroDenominatorIsDomainError) {
  EXPECT_THROW(reduce_rat(1, 0), DomainError);
  EXPECT_THROW(reduce_rat(-1, 2), DomainError);
}

TEST(ReduceRat, InvariantUnderCommonScaling) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(0, 10'000), den(1, 10'000), k(1, 1000);
  for (int i = 0; i < 1000; ++i) {
    const long a = num(rng), b = den(rng), m = k(rng);
    const Rat r = reduce_rat(a, b);
    EXPECT_EQ(r, reduce_rat(Integer(a) * m, Integer(b) * m));
    EXPECT_EQ(gcd(r.num(), r.den()), 1);
  }
}

TEST(LcmDenominators, Examples) {
  EXPECT_EQ(lcm_denominators({Rat(1, 2), Rat(2, 3)}), 6);
  EXPECT_EQ(lcm_denominators({Rat(2)}), 1);
  EXPECT_EQ(lcm_denominators({Rat(5, 2), Rat(1, 3), Rat(7, 4)}), 12);
  EXPECT_THROW(lcm_denominators(std::vector<Rat>{}), DomainError);
}

// (a/b) + (c/d) and (a/b)(c/d) against integer arithmetic on b*d.
TEST(RatArithmetic, CrossCheckedAgainstCommonDenominator) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(0, 1'000'000), den(1, 1'000'000);
  for (int i = 0; i < 1000; ++i) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rat x(a, b), y(c, d);
    const Rat sum = x + y;
    const Integer sn = Integer(a) * d + Integer(c) * b, sd = Integer(b) * d;
    EXPECT_EQ(sum.num() * sd, sn * sum.den());
    EXPECT_EQ(gcd(sum.num(), sum.den()), 1);
    const Rat prod = x * y;
    EXPECT_EQ(prod.num() * sd, Integer(a) * c * prod.den());
    EXPECT_EQ(gcd(prod.num(), prod.den()), 1);
  }
}

TEST(RatArithmetic, NegativeDifferenceRejected) {
  EXPECT_EQ(Rat(3, 2) - Rat(1, 2), Rat(1));
  EXPECT_THROW(Rat(1, 2) - Rat(3, 2), DomainError);
}

TEST(RatText, OmitsUnitDenominatorAndRoundTrips) {
  EXPECT_EQ(to_string(Rat(3, 2)), "3/2");
  EXPECT_EQ(to_string(Rat(4, 2)), "2");
  EXPECT_EQ(to_string(Rat(0)), "0");
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(0, 500), den(1, 500);
  for (int i = 0; i < 200; ++i) {
    const Rat r(num(rng), den(rng));
    EXPECT_EQ(parse_rat(to_string(r)), r);
  }
}

class PrimeFieldAxioms : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PrimeFieldAxioms, Exhaustive) {
  const std::uint64_t p = GetParam();
  std::vector<PrimeFieldElem> all;
  for (std::uint64_t v = 0; v < p; ++v) all.emplace_back(static_cast<std::int64_t>(v), p);
  const PrimeFieldElem zero(0, p), one(1, p);
  for (const auto& a : all) {
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(a + (-a), zero);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), one);
    }
    for (const auto& b : all) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - b, a + (-b));
      for (const auto& c : all) {
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, PrimeFieldAxioms, ::testing::Values(2, 3, 5));

TEST(PrimeField, ReducesAndRejectsComposites) {
  EXPECT_EQ(PrimeFieldElem(-1, 7).value(), 6u);
  EXPECT_EQ(PrimeFieldElem(16, 7).value(), 2u);
  EXPECT_THROW(PrimeFieldElem(1, 4), DomainError);
  EXPECT_THROW(PrimeFieldElem(1, (std::uint64_t{1} << 31) + 11), DomainError);
  EXPECT_THROW(PrimeFieldElem(0, 5).inverse(), DomainError);
  EXPECT_THROW(PrimeFieldElem(1, 5) + PrimeFieldElem(1, 7), DomainError);
  EXPECT_TRUE(is_small_prime(2147483647));
}
