#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "boolecode/boolfn.hpp"
#include "boolecode/error.hpp"
#include "oracles.hpp"

using namespace boolecode;

namespace {

BooleanFunction or2() { return BooleanFunction(2, {0, 1, 1, 1}); }

}  // namespace

TEST(BooleanFunction, And3AnfIsSingleMonomial) {
  const auto anf = anf_from_truth_table(and_function(3));
  EXPECT_EQ(anf.subsets(), (std::vector<std::vector<std::size_t>>{{1, 2, 3}}));
  EXPECT_EQ(anf.sparsity(), 1u);
  EXPECT_EQ(anf.degree(), 3u);
}

TEST(BooleanFunction, Or2AnfMatchesMobiusOracle) {
  const auto anf = anf_from_truth_table(or2());
  auto got = anf.subsets();
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::vector<std::size_t>>{{1}, {1, 2}, {2}}));
  auto masks = anf.masks();
  std::sort(masks.begin(), masks.end());
  EXPECT_EQ(masks, oracle::mobius_monomials(or2()));
}

TEST(BooleanFunction, ConstantZeroHasEmptyAnfAndSupport) {
  const auto f = BooleanFunction::constant(4, false);
  EXPECT_EQ(anf_from_truth_table(f).sparsity(), 0u);
  EXPECT_EQ(anf_from_truth_table(f).degree(), 0u);
  EXPECT_EQ(dnf_from_truth_table(f).weight(), 0u);
}

TEST(BooleanFunction, ConstantOneIsTheEmptyMonomial) {
  const auto anf = anf_from_truth_table(BooleanFunction::constant(3, true));
  ASSERT_EQ(anf.sparsity(), 1u);
  EXPECT_EQ(anf.masks().front(), 0u);
  EXPECT_EQ(anf.degree(), 0u);
}

TEST(BooleanFunction, And3Support) {
  const auto dnf = dnf_from_truth_table(and_function(3));
  ASSERT_EQ(dnf.weight(), 1u);
  EXPECT_EQ(dnf.vectors().front(), (BitVector{1, 1, 1}));
}

TEST(BooleanFunction, AllEqualHasWeightTwoAndFullSparsity) {
  for (std::size_t m = 2; m <= 8; ++m) {
    const auto f = all_equal_function(m);
    EXPECT_EQ(dnf_from_truth_table(f).weight(), 2u);
    EXPECT_EQ(anf_from_truth_table(f).sparsity(), (std::size_t{1} << m) - 1) << "m=" << m;
  }
}

TEST(BooleanFunction, AllEqualAtZeroViaItsAnf) {
  // X1X2X3X4 xor (X1+1)(X2+1)(X3+1)(X4+1), evaluated by hand at 0000.
  const BitVector x{0, 0, 0, 0};
  const bool direct = (x[0] & x[1] & x[2] & x[3]) ^ ((x[0] ^ 1) & (x[1] ^ 1) & (x[2] ^ 1) & (x[3] ^ 1));
  EXPECT_TRUE(direct);
  EXPECT_TRUE(all_equal_function(4).evaluate(x));
}

TEST(BooleanFunction, EvaluateAnd3) {
  const auto f = and_function(3);
  EXPECT_TRUE(f.evaluate(BitVector{1, 1, 1}));
  EXPECT_FALSE(f.evaluate(BitVector{1, 0, 1}));
}

TEST(BooleanFunction, EvaluateRejectsWrongLength) {
  EXPECT_THROW(and_function(3).evaluate(BitVector{1, 1}), Error);
}

TEST(BooleanFunction, TableLengthIsChecked) {
  EXPECT_THROW(BooleanFunction(3, std::vector<std::uint8_t>(7, 0)), Error);
  EXPECT_THROW(BooleanFunction(2, {0, 1, 2, 0}), Error);
  EXPECT_THROW(BooleanFunction::constant(21, false), Error);
}

TEST(BooleanFunction, HexRoundTrip) {
  const auto f = BooleanFunction::from_hex(3, "80");
  EXPECT_EQ(f, and_function(3));
  EXPECT_EQ(f.to_hex(), "80");
  EXPECT_EQ(BooleanFunction::from_hex(2, "e").weight(), 3u);
  EXPECT_THROW(BooleanFunction::from_hex(3, "8"), Error);
  EXPECT_THROW(BooleanFunction::from_hex(3, "8g"), Error);
  EXPECT_THROW(BooleanFunction::from_hex(2, "f0"), Error);
}

TEST(BooleanFunction, FromAnfUsesOneBasedIndices) {
  EXPECT_EQ(function_from_anf(3, {{1, 2, 3}}), and_function(3));
  EXPECT_EQ(function_from_anf(2, {{1}, {2}, {1, 2}}), or2());
  EXPECT_EQ(function_from_anf(2, {{}}), BooleanFunction::constant(2, true));
  EXPECT_THROW(function_from_anf(2, {{3}}), Error);
  EXPECT_THROW(function_from_anf(2, {{0}}), Error);
}

TEST(BooleanFunction, PairedXorWeightAndDegree) {
  const auto f = paired_xor_function(16);
  EXPECT_EQ(f.weight(), 256u);  // 2^(number of pairs), roughly m^2
  EXPECT_EQ(anf_from_truth_table(f).degree(), 16u - 8u);
}

TEST(BooleanFunctionProperty, AnfRoundTripAndCounts) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng.below(10);
    const auto f = oracle::random_function(m, rng, rng.unit());
    const auto anf = anf_from_truth_table(f);
    EXPECT_EQ(anf.to_truth_table(), f);
    EXPECT_LE(anf.degree(), m);
    auto masks = anf.masks();
    std::sort(masks.begin(), masks.end());
    EXPECT_EQ(masks, oracle::mobius_monomials(f));
    EXPECT_EQ(std::adjacent_find(masks.begin(), masks.end()), masks.end());

    std::size_t pop = 0;
    for (std::size_t i = 0; i < f.size(); ++i) pop += f.at(i) ? 1 : 0;
    const auto dnf = dnf_from_truth_table(f);
    EXPECT_EQ(dnf.weight(), pop);
    EXPECT_EQ(f.weight(), pop);
    for (std::size_t i = 0; i + 1 < dnf.vectors().size(); ++i) {
      EXPECT_LT(index_of(dnf.vectors()[i]), index_of(dnf.vectors()[i + 1]));
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto x = bits_of(i, m);
      EXPECT_EQ(dnf.evaluate(x), f.at(i));
      EXPECT_EQ(anf.evaluate(x), f.at(i));
      EXPECT_EQ(f.evaluate(x), f.at(index_of(x)));
    }
    EXPECT_EQ(BooleanFunction::from_hex(m, f.to_hex()), f);
  }
}

TEST(BooleanFunctionProperty, SingleAllOnesSupportHasOneMonomial) {
  for (std::size_t m = 1; m <= 12; ++m) {
    EXPECT_EQ(anf_from_truth_table(and_function(m)).sparsity(), 1u);
  }
}

TEST(DnfSupport, RejectsDuplicates) {
  EXPECT_THROW(DnfSupport(2, {{1, 0}, {1, 0}}), Error);
  EXPECT_THROW(DnfSupport(2, {{1, 0, 1}}), Error);
}
