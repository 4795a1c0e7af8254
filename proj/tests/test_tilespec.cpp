#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "tiletopo/errors.hpp"
#include "tiletopo/tilespec.hpp"
#include "tiletopo/word.hpp"

using namespace tiletopo;

namespace {

BigInt cofactor_determinant(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  BigInt sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const BigInt term = a[0][c] * cofactor_determinant(minor);
    sum += (c % 2 == 0) ? term : BigInt(-term);
  }
  return sum;
}

SpecErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_tile_system(text);
  } catch (const SpecError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return SpecErrorKind::kSyntax;
}

}  // namespace

TEST(Determinant, IdentityAndCatalog) {
  EXPECT_EQ(determinant(IntMatrix::identity(3)), 1);
  for (char letter : kTwindragonLetters) EXPECT_EQ(abs(determinant(twindragon(letter).M)), 2) << letter;
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<long long>> a(4, std::vector<long long>(4));
    IntMatrix m(4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = a[r][c] = entry(rng);
    EXPECT_EQ(determinant(m), cofactor_determinant(a));
  }
}

TEST(Adjugate, ProductIsDeterminantTimesIdentity) {
  for (char letter : kTwindragonLetters) {
    const IntMatrix m = twindragon(letter).M;
    EXPECT_EQ(m * adjugate(m), IntMatrix::identity(3).scaled(determinant(m))) << letter;
  }
}

TEST(Parse, UnitIntervalAndSierpinski) {
  const TileSystem interval = parse_tile_system(R"({"dimension":1,"matrix":[[2]],"digits":[[0],[1]]})");
  EXPECT_EQ(interval.n, 1u);
  EXPECT_EQ(interval.m(), 2u);
  const TileSystem s = parse_tile_system(
      R"({"dimension":2,"matrix":[[2,0],[0,2]],"digits":[[0,0],[1,0],[0,1],[-1,-1]],"name":"sierpinski"})");
  EXPECT_EQ(s.m(), 4u);
  EXPECT_EQ(s.name, "sierpinski");
  EXPECT_TRUE(is_standard_digit_set(s));
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error_kind(R"({"dimension":2,"matrix":[[2,0],[0,2]],"digits":[[0,0],[2,0],[0,1],[1,1]]})"),
            SpecErrorKind::kNonStandardDigits);
  EXPECT_EQ(parse_error_kind(R"({"dimension":2,"matrix":[[2,0],[0,2]],"digits":[[0,0],[2,0]]})"),
            SpecErrorKind::kDeterminantMismatch);
  EXPECT_EQ(parse_error_kind(R"({"dimension":2,"matrix":[[1,0],[0,2]],"digits":[[0,0],[0,1]]})"),
            SpecErrorKind::kNonExpanding);
  EXPECT_EQ(parse_error_kind(R"({"dimension":2,"matrix":[[2,0]],"digits":[[0,0],[1,0]]})"),
            SpecErrorKind::kDimensionMismatch);
  EXPECT_EQ(parse_error_kind("{not json"), SpecErrorKind::kSyntax);
  EXPECT_EQ(parse_error_kind(R"({"dimension":1,"matrix":[[2]]})"), SpecErrorKind::kSyntax);
}

TEST(StandardDigits, EvenPairIsRejected) {
  TileSystem ts;
  ts.n = 2;
  ts.M = IntMatrix{{2, 0}, {0, 2}};
  ts.digits = {make_vector({0, 0}), make_vector({2, 0})};
  EXPECT_FALSE(is_standard_digit_set(ts));
  EXPECT_TRUE(in_image_lattice(ts.M, make_vector({2, 0})));
}

TEST(Catalog, ParametersAndCharpoly) {
  EXPECT_EQ(twindragon_parameters('A'), std::make_pair(0, 0));
  EXPECT_EQ(twindragon_parameters('D'), std::make_pair(0, 1));
  EXPECT_EQ(twindragon_parameters('G'), std::make_pair(0, 2));
  EXPECT_THROW(twindragon('H'), SpecError);
  for (char letter : kTwindragonLetters) {
    const auto [a, b] = twindragon_parameters(letter);
    const TileSystem ts = twindragon(letter);
    EXPECT_TRUE(is_standard_digit_set(ts)) << letter;
    const std::vector<BigInt> expected{1, -a, -b, -2};
    EXPECT_EQ(characteristic_polynomial(ts.M), expected) << letter;
  }
}

TEST(Spectrum, TwindragonC) {
  const auto rep = spectrum(twindragon('C').M);
  ASSERT_EQ(rep.root_moduli.size(), 3u);
  EXPECT_NEAR(rep.root_moduli[0], 1.35, 0.01);
  EXPECT_NEAR(rep.root_moduli[1], 1.22, 0.01);
  EXPECT_NEAR(rep.root_moduli[2], 1.22, 0.01);
  EXPECT_TRUE(rep.is_expanding);
  EXPECT_FALSE(rep.is_selfsimilar_conjugate);
}

TEST(Spectrum, CubeIsRotationCase) {
  const auto rep = spectrum(twindragon('A').M);
  for (double x : rep.root_moduli) EXPECT_NEAR(x, std::cbrt(2.0), 1e-9);
  EXPECT_TRUE(rep.is_selfsimilar_conjugate);
  EXPECT_EQ(rep.thm23_case, CubicCase::kRotation);
}

TEST(Spectrum, ScalarTwo) {
  const auto rep = spectrum(IntMatrix::identity(3).scaled(2));
  for (double x : rep.root_moduli) EXPECT_NEAR(x, 2.0, 1e-9);
  EXPECT_TRUE(rep.is_expanding);
  EXPECT_EQ(rep.thm23_case, CubicCase::kCubic);
}

TEST(Spectrum, ModuliProductIsDeterminant) {
  for (char letter : kTwindragonLetters) {
    const auto rep = spectrum(twindragon(letter).M);
    double product = 1.0;
    for (double x : rep.root_moduli) product *= x;
    EXPECT_NEAR(product, 2.0, 2e-9) << letter;
    EXPECT_EQ(rep.is_selfsimilar_conjugate, letter == 'A') << letter;
  }
}

TEST(Words, FormatParseFlip) {
  EXPECT_EQ(format_word({1, 2, 1}), "121");
  EXPECT_EQ(parse_word("2211"), (Word{2, 2, 1, 1}));
  EXPECT_EQ(flip_word({1, 1, 2}), (Word{2, 2, 1}));
  EXPECT_EQ(concat({1}, {2, 2}), (Word{1, 2, 2}));
}

TEST(Addresses, Canonicalization) {
  EXPECT_EQ(Address({1, 2, 1, 2}, {1, 2}), Address({}, {1, 2}));
  EXPECT_EQ(Address({}, {2, 2}).str(), "(2)w");
  EXPECT_EQ(Address::parse("1(212)w"), Address({1, 2, 1, 2}, {2, 1, 2}));
  EXPECT_EQ(Address::parse("1(212)w").str(), "1(212)w");
  EXPECT_EQ(Address::parse("2(1)").prefix(4), (Word{2, 1, 1, 1}));
  EXPECT_EQ(Address::parse("1(212)w").flipped().str(), "2(121)w");
  EXPECT_EQ(Address::parse("(12)w").prefixed({2}).str(), "(21)w");
}
