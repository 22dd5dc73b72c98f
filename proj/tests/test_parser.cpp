#include <gtest/gtest.h>

#include <random>

#include "puiseux/parser.hpp"
#include "support/random_objects.hpp"

using namespace puiseux;

namespace {

std::size_t error_offset(const std::string& text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return 0;
}

std::string error_message(const std::string& text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParsePoly, Examples) {
  EXPECT_EQ(parse_poly("X^(1/2) - 1"), PuiseuxPoly({{Rat(1, 2), 1}, {Rat(0), -1}}));
  EXPECT_EQ(parse_poly("X^3+X+2"), PuiseuxPoly::from_qpoly(QPoly{2, 1, 0, 1}));
  EXPECT_EQ(parse_poly("  3 * X^( 2 / 4 ) "), PuiseuxPoly::monomial(3, Rat(1, 2)));
  EXPECT_EQ(parse_poly("2X + X - 3X"), PuiseuxPoly{});
  EXPECT_EQ(parse_poly("-1/2"), PuiseuxPoly::constant(Coeff(-1, 2)));
  EXPECT_EQ(parse_poly("X^(3)"), parse_poly("X^3"));
  EXPECT_EQ(parse_poly("010X^(08/012)"), PuiseuxPoly::monomial(10, Rat(2, 3)));
}

TEST(ParsePoly, SemanticErrors) {
  EXPECT_EQ(error_message("X^(-1)"), "negative exponent at offset 3");
  EXPECT_EQ(error_message("X^-1"), "negative exponent at offset 2");
  EXPECT_EQ(error_message("X^(1/0)"), "zero denominator at offset 5");
  EXPECT_EQ(error_message("1/0*X"), "zero denominator at offset 2");
}

TEST(ParsePoly, SyntaxErrorsCarryOffsets) {
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("Y"), 0u);
  EXPECT_EQ(error_offset("X+"), 2u);
  EXPECT_EQ(error_offset("X^"), 2u);
  EXPECT_EQ(error_offset("2*"), 2u);
  EXPECT_EQ(error_offset("X^(1/2"), 6u);
  EXPECT_EQ(error_offset("X X"), 2u);
  EXPECT_EQ(error_offset("X^1/2"), 3u);
  EXPECT_EQ(error_message("X^").rfind("syntax error", 0), 0u);
}

TEST(ParseMonoid, Examples) {
  EXPECT_EQ(parse_monoid("<2, 3>").generators(), (std::vector<Rat>{Rat(2), Rat(3)}));
  EXPECT_EQ(parse_monoid("<1/2, 2/3>").generators(), (std::vector<Rat>{Rat(1, 2), Rat(2, 3)}));
  EXPECT_EQ(parse_monoid(" < 3 , 2 , 3 > ").generators(), (std::vector<Rat>{Rat(2), Rat(3)}));
  try {
    parse_monoid("<0>");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()), "generator must be positive at offset 1");
  }
  EXPECT_THROW(parse_monoid("<>"), ParseError);
  EXPECT_THROW(parse_monoid("<2, 3"), ParseError);
  EXPECT_THROW(parse_monoid("<1/0>"), ParseError);
  EXPECT_THROW(parse_monoid("<-2>"), ParseError);
}

TEST(FormatPoly, Examples) {
  EXPECT_EQ(format_poly(parse_poly("X^(1/2)-1")), "X^(1/2) - 1");
  EXPECT_EQ(format_poly(PuiseuxPoly{}), "0");
  EXPECT_EQ(format_poly(PuiseuxPoly::monomial(Coeff(3, 2), Rat(2))), "3/2*X^2");
  EXPECT_EQ(format_poly(parse_poly("2 - X")), "-X + 2");
  EXPECT_EQ(format_poly(parse_poly("X^3+X+2")), "X^3 + X + 2");
  EXPECT_EQ(format_poly(parse_poly("-1/3X^(5/3) - 2X")), "-1/3*X^(5/3) - 2*X");
  EXPECT_EQ(format_monoid(parse_monoid("<3,1/2>")), "<1/2, 3>");
}

TEST(FormatPoly, RoundTripsAndIsDeterministic) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 1000; ++i) {
    const PuiseuxPoly f = i % 10 == 0 ? PuiseuxPoly{} : testsupport::random_puiseux(rng, 6, 9, 40);
    const std::string text = format_poly(f);
    EXPECT_EQ(parse_poly(text), f) << text;
    EXPECT_EQ(format_poly(parse_poly(text)), text);
  }
}

TEST(ParseRat, Examples) {
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(parse_rat(" 7 "), Rat(7));
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_THROW(parse_rat("-1"), ParseError);
  EXPECT_THROW(parse_rat("1/2x"), ParseError);
}

// Arbitrary byte strings and mutations of valid inputs may only raise the
// library's own error types.
TEST(Parser, FuzzRaisesOnlyParseErrors) {
  std::mt19937_64 rng(82);
  const std::string alphabet = "X^()/+-*<>,0123456789 \t\x01\xff";
  const std::vector<std::string> seeds{"X^(1/2) - 1", "3/2*X^2 + X^(7/3)", "<1/2, 2/3>", "-X^3 + 5"};
  int accepted = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string s;
    if (i % 2) {
      s = seeds[static_cast<std::size_t>(i / 2) % seeds.size()];
      for (long k = testsupport::uniform(rng, 1, 3); k > 0; --k) {
        const auto at = static_cast<std::size_t>(testsupport::uniform(rng, 0, static_cast<long>(s.size())));
        const char c = alphabet[static_cast<std::size_t>(testsupport::uniform(rng, 0, static_cast<long>(alphabet.size()) - 1))];
        switch (testsupport::uniform(rng, 0, 2)) {
          case 0: s.insert(s.begin() + static_cast<long>(at), c); break;
          case 1: if (at < s.size()) s.erase(at, 1); break;
          default: if (at < s.size()) s[at] = c;
        }
      }
    } else {
      for (long k = testsupport::uniform(rng, 0, 16); k > 0; --k) s.push_back(static_cast<char>(testsupport::uniform(rng, 0, 255)));
    }
    for (int which = 0; which < 2; ++which) {
      try {
        if (which == 0) {
          const auto f = parse_poly(s);
          ++accepted;
          EXPECT_EQ(parse_poly(format_poly(f)), f);
        } else {
          parse_monoid(s);
        }
      } catch (const ParseError& e) {
        EXPECT_LE(e.offset(), s.size());
      } catch (const DomainError&) {
      } catch (const ResourceLimitError&) {
      } catch (const std::exception& e) {
        ADD_FAILURE() << "unexpected " << e.what() << " for '" << s << "'";
      }
    }
  }
  EXPECT_GT(accepted, 500);
}
