#include <gtest/gtest.h>

#include "boolecode/field.hpp"
#include "boolecode/security.hpp"
#include "boolecode/threshold.hpp"
#include "oracles.hpp"

using namespace boolecode;

namespace {

// floor(log2 w) by repeated halving.
std::size_t log2_floor(std::size_t w) {
  std::size_t r = 0;
  while (w >= 2) {
    w /= 2;
    ++r;
  }
  return r;
}

std::int64_t value2(const LinearThresholdFunction& l, const BitVector& x) {
  std::int64_t v = l.bias2;
  for (std::size_t j = 0; j < x.size(); ++j) v += 2 * l.z[j] * x[j];
  return v;
}

}  // namespace

TEST(Ltf, And3Monomial) {
  const std::vector<std::size_t> s{1, 2, 3};
  const auto l = ltf_for_monomial(std::span<const std::size_t>(s), 3);
  EXPECT_EQ(l.to_string(), "sgn(X[1]+X[2]+X[3]-5/2)");
  EXPECT_EQ(l.bias2, -5);
}

TEST(Ltf, EmptyMonomialAlwaysFires) {
  const auto l = ltf_for_monomial(0u, 4);
  EXPECT_EQ(l.bias2, 1);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_TRUE(l.fires(bits_of(i, 4)));
}

TEST(Ltf, SingleVariableMonomial) {
  const std::vector<std::size_t> s{2};
  const auto l = ltf_for_monomial(std::span<const std::size_t>(s), 4);
  EXPECT_EQ(l.z, (std::vector<std::int8_t>{0, 1, 0, 0}));
  EXPECT_EQ(l.bias2, -1);
  EXPECT_THROW(ltf_for_monomial(0x10u, 4), Error);
}

TEST(Ltf, ClauseExamples) {
  const BitVector ones(5, 1), zeros(5, 0);
  const auto a = ltf_for_clause(ones);
  EXPECT_EQ(a.z, std::vector<std::int8_t>(5, 1));
  EXPECT_EQ(a.bias2, -2 * 5 + 1);
  const auto b = ltf_for_clause(zeros);
  EXPECT_EQ(b.z, std::vector<std::int8_t>(5, -1));
  EXPECT_EQ(b.bias2, 1);
  const BitVector y{1, 0};
  const auto c = ltf_for_clause(y);
  EXPECT_EQ(c.z, (std::vector<std::int8_t>{1, -1}));
  EXPECT_EQ(c.bias2, -1);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto x = bits_of(i, 2);
    if (x == y) EXPECT_EQ(value2(c, x), 1);
    else EXPECT_LE(value2(c, x), -1);
  }
}

TEST(LtfProperty, GapHoldsExhaustively) {
  for (std::size_t m = 1; m <= 8; ++m) {
    const std::size_t size = std::size_t{1} << m;
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      const auto l = ltf_for_monomial(mask, m);
      for (std::size_t i = 0; i < size; ++i) {
        const bool mono = (i & mask) == mask;
        const auto v = value2(l, bits_of(i, m));
        EXPECT_EQ(l.value2(bits_of(i, m)), v);
        if (mono) EXPECT_EQ(v, 1);
        else EXPECT_LE(v, -1);
      }
      const auto c = ltf_for_clause(bits_of(mask, m));
      for (std::size_t i = 0; i < size; ++i) {
        const auto v = value2(c, bits_of(i, m));
        if (i == mask) EXPECT_EQ(v, 1);
        else EXPECT_LE(v, -1);
      }
    }
  }
}

TEST(DecisionTree, SingleSupportIsOneLeaf) {
  const auto t = build_decision_tree(dnf_from_truth_table(and_function(3)));
  EXPECT_EQ(t.nodes().size(), 1u);
  EXPECT_TRUE(t.nodes().front().is_leaf());
  EXPECT_EQ(t.depth(), 0u);
}

TEST(DecisionTree, AllEqualSplitsOnFirstVariable) {
  const auto t = build_decision_tree(dnf_from_truth_table(all_equal_function(4)));
  const auto& root = t.nodes()[t.root()];
  EXPECT_EQ(root.var, 0u);
  EXPECT_TRUE(t.nodes()[root.child[0]].is_leaf());
  EXPECT_TRUE(t.nodes()[root.child[1]].is_leaf());
  EXPECT_EQ(t.ltf_leaf_count(), 2u);
  EXPECT_EQ(t.depth(), 1u);
}

TEST(DecisionTree, FullSupportIsCompleteTree) {
  const auto t = build_decision_tree(dnf_from_truth_table(BooleanFunction::constant(4, true)));
  EXPECT_EQ(t.ltf_leaf_count(), 16u);
  EXPECT_EQ(t.depth(), 4u);
  EXPECT_EQ(t.nodes().size(), 31u);
}

TEST(DecisionTree, EmptySupportRejected) {
  EXPECT_THROW(build_decision_tree(dnf_from_truth_table(BooleanFunction::constant(3, false))), Error);
}

TEST(DecisionList, SingleEntryForWeightOne) {
  const auto l = tree_to_decision_list(build_decision_tree(dnf_from_truth_table(and_function(3))));
  ASSERT_EQ(l.size(), 1u);
  EXPECT_TRUE(l.entries().front().monomial.empty());
}

TEST(DecisionList, AllEqualHasOneLiteralMonomials) {
  const auto f = all_equal_function(4);
  const auto l = tree_to_decision_list(build_decision_tree(dnf_from_truth_table(f)));
  ASSERT_EQ(l.size(), 2u);
  EXPECT_LE(l.max_monomial_length(), 1u);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(l.evaluate(bits_of(i, 4)), f.at(i));
  EXPECT_EQ(l.entries()[0].monomial, (Monomial{Literal{0, false}}));
}

TEST(DecisionList, BalancedFourLeafTree) {
  // Support {0000, 1000, 0100, 1100}: split on X1 then X2.
  std::vector<std::uint8_t> t(16, 0);
  t[0] = t[1] = t[2] = t[3] = 1;
  const BooleanFunction f(4, t);
  const auto tree = build_decision_tree(dnf_from_truth_table(f));
  EXPECT_EQ(tree.depth(), 2u);
  const auto l = tree_to_decision_list(tree);
  EXPECT_EQ(l.size(), 4u);
  EXPECT_LE(l.max_monomial_length(), 2u);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(l.evaluate(bits_of(i, 4)), f.at(i));
}

TEST(Ptf, WeightOneIsLinear) {
  const auto p = ptf_for_support(dnf_from_truth_table(and_function(3)));
  ASSERT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_EQ(p.terms().front().weight, 1);
  EXPECT_EQ(p.terms().front().ltf.to_string(), "sgn(X[1]+X[2]+X[3]-5/2)");
  for (std::size_t i = 0; i < 8; ++i) {
    const auto x = bits_of(i, 3);
    EXPECT_EQ(p.eval2(x), 2 * (x[0] + x[1] + x[2]) - 5);
  }
}

TEST(Ptf, AllEqualDegreeAtMostTwo) {
  const auto f = all_equal_function(4);
  const auto p = ptf_for_support(dnf_from_truth_table(f));
  EXPECT_LE(p.degree(), 2u);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(p.classify(bits_of(i, 4)), f.at(i));
}

TEST(Ptf, WeightsAreGeometric) {
  const auto f = all_equal_function(3);
  const auto p = ptf_for_support(dnf_from_truth_table(f));
  ASSERT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(p.terms()[0].weight, 4 * 3 + 4);
  EXPECT_EQ(p.terms()[1].weight, 1);
  EXPECT_EQ(p.magnitude_bound(), (16 + 1) * (2 * 3 + 1));
}

TEST(Ptf, ConstantZeroIsEmpty) {
  const auto p = ptf_for_support(dnf_from_truth_table(BooleanFunction::constant(3, false)));
  EXPECT_TRUE(p.terms().empty());
  EXPECT_EQ(p.degree(), 0u);
  EXPECT_FALSE(p.classify(BitVector{1, 1, 1}));
}

TEST(Partition, BalancedAndOrderPreserving) {
  std::vector<std::uint8_t> t(8, 0);
  for (auto i : {1, 2, 4, 6, 7}) t[i] = 1;
  const auto supp = dnf_from_truth_table(BooleanFunction(3, t));
  const auto two = partition_dnf(supp, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].weight(), 3u);
  EXPECT_EQ(two[1].weight(), 2u);
  std::vector<BitVector> joined = two[0].vectors();
  joined.insert(joined.end(), two[1].vectors().begin(), two[1].vectors().end());
  EXPECT_EQ(joined, supp.vectors());
  EXPECT_EQ(partition_dnf(supp, 1).front().vectors(), supp.vectors());
  for (const auto& g : partition_dnf(supp, 5)) EXPECT_EQ(g.weight(), 1u);
  EXPECT_THROW(partition_dnf(supp, 0), Error);
  EXPECT_THROW(partition_dnf(supp, 6), Error);
}

TEST(PtfProperty, RandomFunctionsExhaustive) {
  Rng rng(2024);
  int checked = 0;
  while (checked < 200) {
    const std::size_t m = 1 + rng.below(10);
    const auto f = oracle::random_function(m, rng, rng.unit() * 0.6);
    const auto supp = dnf_from_truth_table(f);
    if (supp.weight() == 0) continue;
    ++checked;
    const std::size_t w = supp.weight();
    const auto tree = build_decision_tree(supp);
    EXPECT_EQ(tree.ltf_leaf_count(), w);
    const auto list = tree_to_decision_list(tree);
    EXPECT_EQ(list.size(), w);
    EXPECT_LE(list.max_monomial_length(), log2_floor(w));
    const auto ptf = build_ptf(list);
    EXPECT_LE(ptf.degree(), log2_floor(w) + 1);
    EXPECT_TRUE(ptf.dominance_holds());
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto x = bits_of(i, m);
      ASSERT_EQ(tree.evaluate(x), f.at(i));
      ASSERT_EQ(list.evaluate(x), f.at(i));
      ASSERT_EQ(ptf.classify(x), f.at(i)) << "m=" << m << " i=" << i;
    }
  }
}

TEST(PtfProperty, DominanceAsIntegerInequality) {
  Rng rng(99);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 2 + rng.below(7);
    const auto f = oracle::random_function(m, rng, 0.3);
    const auto supp = dnf_from_truth_table(f);
    if (supp.weight() == 0) continue;
    const auto p = ptf_for_support(supp);
    const auto& terms = p.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
      BigInt tail = 0;
      for (std::size_t j = i + 1; j < terms.size(); ++j) tail += terms[j].weight * (2 * m + 1);
      EXPECT_GT(terms[i].weight, tail);
      BigInt expected = 1;
      for (std::size_t j = i + 1; j < terms.size(); ++j) expected *= 4 * m + 4;
      EXPECT_EQ(terms[i].weight, expected);
    }
  }
}

TEST(PtfProperty, PartitionedOrEqualsFunction) {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = 2 + rng.below(7);
    const auto f = oracle::random_function(m, rng, 0.4);
    const auto supp = dnf_from_truth_table(f);
    const std::size_t w = supp.weight();
    if (w == 0) continue;
    const std::size_t d = 1 + rng.below(w);
    std::vector<PolynomialThresholdFunction> groups;
    for (const auto& g : partition_dnf(supp, d)) {
      groups.push_back(ptf_for_support(g));
      EXPECT_LE(groups.back().degree(), dptf_degree(w, d));
      EXPECT_LE(groups.back().degree(), log2_floor((w + d - 1) / d) + 1);
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      bool any = false;
      for (const auto& g : groups) any = any || g.classify(bits_of(i, m));
      EXPECT_EQ(any, f.at(i));
    }
  }
}

TEST(PtfProperty, FieldEvaluationMatchesIntegers) {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 2 + rng.below(6);
    const auto f = oracle::random_function(m, rng, 0.4);
    const auto supp = dnf_from_truth_table(f);
    if (supp.weight() == 0) continue;
    const auto p = ptf_for_support(supp);
    const auto spec = modulus_for_bound(p.magnitude_bound());
    const BigPrimeField field(spec.modulus());
    std::vector<BigInt> weights;
    for (const auto& term : p.terms()) weights.push_back(field.from_big(term.weight));
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto x = bits_of(i, m);
      std::vector<BigInt> xf(x.begin(), x.end());
      const auto v = ptf_eval_field(field, p, std::span<const BigInt>(weights), std::span<const BigInt>(xf));
      EXPECT_EQ(field.lift(v), p.eval2(x));
      EXPECT_LE(abs(p.eval2(x)), p.magnitude_bound());
    }
  }
}
