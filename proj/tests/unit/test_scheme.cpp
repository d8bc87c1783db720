#include <gtest/gtest.h>

#include "boolecode/config.hpp"
#include "boolecode/scheme.hpp"
#include "boolecode/simulator.hpp"
#include "oracles.hpp"

using namespace boolecode;

namespace {

SchemeInstance make(SchemeId id, std::size_t n, std::size_t k, TargetFunction f, std::size_t d = 0, unsigned q = 0) {
  SchemeConfig c;
  c.scheme = id;
  c.n = n;
  c.k = k;
  c.d = d;
  c.q = q;
  return SchemeInstance(c, std::move(f));
}

SweepPoint at(const SchemeInstance& s, std::size_t b, std::size_t trials, std::uint64_t seed = 7,
              AdversaryStrategy strategy = AdversaryStrategy::random_replace) {
  SweepOptions o;
  o.trials = trials;
  o.seed = seed;
  o.b_values = {b};
  o.strategy = strategy;
  return sweep_threshold(s, o).points.front();
}

BooleanFunction weight_four() {
  // Support {0000, 0011, 1100, 1111} (bit j of the index is X[j+1]).
  std::vector<std::uint8_t> t(16, 0);
  t[0] = t[3] = t[12] = t[15] = 1;
  return BooleanFunction(4, t);
}

}  // namespace

TEST(Scheme, ThresholdsFollowTheScheme) {
  const auto f = all_equal_function(4);
  EXPECT_EQ(make(SchemeId::anf, 10, 4, f).threshold().beta, 3);
  EXPECT_EQ(make(SchemeId::dnf, 10, 4, f).threshold().beta, 3);
  EXPECT_EQ(make(SchemeId::ptf, 8, 2, f).threshold().beta, 2);
  EXPECT_EQ(make(SchemeId::lcc, 10, 2, and_function(3)).threshold().beta, 3);
  EXPECT_EQ(make(SchemeId::dataaug, 40, 3, single_output(augmentation_example()), 0, 2).threshold().beta, 15);
  EXPECT_EQ(make(SchemeId::lcc, 40, 3, single_output(augmentation_example())).threshold().beta, 11);
  EXPECT_EQ(make(SchemeId::datalog, 5, 2, matrix_square_system(2)).threshold().beta, 1);
  EXPECT_EQ(make(SchemeId::anf, 10, 4, f).outer_bound(), 3);
}

TEST(Scheme, StreamCounts) {
  const auto f = all_equal_function(4);
  EXPECT_EQ(make(SchemeId::anf, 10, 2, f).streams(), 15u);
  EXPECT_EQ(make(SchemeId::dnf, 10, 2, f).streams(), 2u);
  EXPECT_EQ(make(SchemeId::ptf, 10, 2, f).streams(), 1u);
  EXPECT_EQ(make(SchemeId::dptf, 10, 2, f, 2).streams(), 2u);
  EXPECT_EQ(make(SchemeId::datalog, 5, 2, matrix_square_system(2)).streams(), 7u);
}

TEST(Scheme, RejectsBadConfigurations) {
  const auto f = and_function(3);
  EXPECT_THROW(make(SchemeId::anf, 3, 4, f), Error);
  EXPECT_THROW(make(SchemeId::anf, 3, 0, f), Error);
  EXPECT_THROW(make(SchemeId::dptf, 10, 2, f, 2), Error);  // w = 1 < D
  EXPECT_THROW(make(SchemeId::ptf, 10, 2, BooleanFunction::constant(3, false)), Error);
  EXPECT_THROW(make(SchemeId::datalog, 5, 2, f), Error);
  EXPECT_THROW(make(SchemeId::datalog, 25, 2, matrix_square_system(2)), Error);
}

TEST(Scheme, DefaultsFillPartitionAndAugmentation) {
  SchemeConfig c;
  c.scheme = SchemeId::dptf;
  EXPECT_EQ(with_defaults(c).d, 1u);
  c.scheme = SchemeId::dataaug;
  EXPECT_EQ(with_defaults(c).q, 2u);
}

TEST(AnfPipeline, And3SingleBlockExhaustive) {
  const auto s = make(SchemeId::anf, 3, 1, and_function(3));
  ASSERT_EQ(s.threshold().beta, 1);
  for (std::size_t i = 0; i < 8; ++i) {
    const TrialInputs in = std::vector<BitVector>{bits_of(i, 3)};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto out = run_trial(s, in, AdversaryModel{1, AdversaryStrategy::random_replace, seed});
      ASSERT_TRUE(out.success) << "input " << i << " seed " << seed;
      EXPECT_EQ(out.decoded, std::vector<std::string>{i == 7 ? "1" : "0"});
    }
  }
}

TEST(AnfPipeline, NoCorruptionAlwaysCorrect) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto f = oracle::random_function(1 + rng.below(6), rng);
    const auto s = make(SchemeId::anf, 4 + rng.below(6), 1 + rng.below(3), f);
    EXPECT_TRUE(at(s, 0, 20).all_success());
  }
}

TEST(AnfPipeline, SixTwoAtBetaRandomCorruption) {
  Rng rng(5);
  const auto f = oracle::random_function(5, rng);
  const auto s = make(SchemeId::anf, 6, 2, f);
  ASSERT_EQ(s.threshold().beta, 2);
  EXPECT_TRUE(at(s, 2, 500).all_success());
}

TEST(DnfPipeline, AllEqualAtBeta) {
  const auto s = make(SchemeId::dnf, 8, 2, all_equal_function(4));
  ASSERT_EQ(s.threshold().beta, 3);
  EXPECT_TRUE(at(s, 3, 300).all_success());
  EXPECT_TRUE(at(s, 3, 100, 9, AdversaryStrategy::additive_offset).all_success());
}

TEST(DnfPipeline, ConstantZeroNeedsNoStreams) {
  const auto s = make(SchemeId::dnf, 6, 2, BooleanFunction::constant(3, false));
  EXPECT_EQ(s.streams(), 0u);
  Rng rng(1);
  const auto in = s.random_inputs(rng);
  const auto honest = s.prepare(in);
  EXPECT_EQ(honest->decoded_values(), (std::vector<std::string>{"0", "0"}));
  EXPECT_TRUE(at(s, 2, 20).all_success());
}

TEST(DnfPipeline, CodewordTargetedBeyondBetaGivesWrongValues) {
  const auto s = make(SchemeId::dnf, 10, 4, all_equal_function(4));
  const auto p = at(s, 4, 100, 3, AdversaryStrategy::codeword_targeted);
  EXPECT_GT(p.wrong_values, 0u);
}

TEST(PtfPipeline, AllEqualAtBeta) {
  const auto s = make(SchemeId::ptf, 8, 2, all_equal_function(4));
  ASSERT_EQ(s.threshold().beta, 2);
  EXPECT_TRUE(at(s, 2, 300).all_success());
}

TEST(PtfPipeline, SingleBlockIsReplication) {
  Rng rng(14);
  const auto s = make(SchemeId::ptf, 5, 1, oracle::random_function(5, rng));
  ASSERT_EQ(s.threshold().beta, 2);
  EXPECT_TRUE(at(s, 2, 200).all_success());
}

TEST(DptfPipeline, TwoGroupsOfTwo) {
  const auto f = weight_four();
  const auto s = make(SchemeId::dptf, 10, 3, f, 2);
  EXPECT_EQ(s.payload_degree(), 2u);
  ASSERT_EQ(s.threshold().beta, oracle::beta_dptf_ratio(10, 3, 4, 2));
  EXPECT_TRUE(at(s, static_cast<std::size_t>(s.threshold().beta), 300).all_success());
}

TEST(DptfPipeline, EndpointsMatchPtfAndDnf) {
  const auto f = weight_four();
  const auto one = make(SchemeId::dptf, 12, 3, f, 1), ptf = make(SchemeId::ptf, 12, 3, f);
  EXPECT_EQ(one.threshold().beta, ptf.threshold().beta);
  EXPECT_EQ(one.payload_degree(), ptf.payload_degree());
  const auto all = make(SchemeId::dptf, 12, 3, f, 4), dnf = make(SchemeId::dnf, 12, 3, f);
  EXPECT_EQ(all.threshold().beta, dnf.threshold().beta);
  EXPECT_EQ(all.payload_degree(), 1u);
  EXPECT_TRUE(at(all, static_cast<std::size_t>(all.threshold().beta), 100).all_success());
}

TEST(LccPipeline, And3OverBinaryField) {
  const auto s = make(SchemeId::lcc, 10, 2, and_function(3));
  EXPECT_NE(s.field_description().find("GF(2^"), std::string::npos);
  SweepOptions o;
  o.trials = 100;
  o.seed = 1;
  const auto r = sweep_threshold(s, o);
  EXPECT_EQ(r.b_hat, 3);
  EXPECT_TRUE(r.sound);
}

TEST(LccPipeline, InfeasibleIsFlagged) {
  const auto s = make(SchemeId::lcc, 10, 3, and_function(7));
  EXPECT_FALSE(s.threshold().feasible);
  SweepOptions o;
  o.trials = 10;
  const auto r = sweep_threshold(s, o);
  EXPECT_TRUE(r.infeasible());
  EXPECT_EQ(r.b_hat, 0);
  EXPECT_EQ(r.to_json()["feasible"], false);
}

TEST(DataAugPipeline, ExampleAtBetaAndLccFailsBeyondIts) {
  const auto f = single_output(augmentation_example());
  const auto aug = make(SchemeId::dataaug, 40, 3, f, 0, 2);
  EXPECT_EQ(aug.payload_degree(), 4u);
  EXPECT_TRUE(at(aug, 15, 50).all_success());
  const auto lcc = make(SchemeId::lcc, 40, 3, f);
  EXPECT_TRUE(at(lcc, 11, 50).all_success());
  EXPECT_FALSE(at(lcc, 15, 50).all_success());
}

TEST(DataLogPipeline, MatrixSquare) {
  const auto s = make(SchemeId::datalog, 5, 2, matrix_square_system(2));
  EXPECT_TRUE(at(s, 1, 100).all_success());
  const TrialInputs in = std::vector<std::vector<double>>{{1, 2, 3, 4}, {0, -1, 0.5, 2}};
  const auto out = run_trial(s, in, AdversaryModel{0, AdversaryStrategy::random_replace, 0});
  EXPECT_TRUE(out.success);
}

TEST(Simulator, ChooseAdversariesIsSortedAndDistinct) {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(30), b = rng.below(n + 1);
    const auto a = choose_adversaries(n, b, rng);
    ASSERT_EQ(a.size(), b);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_LT(a[i], n);
      if (i > 0) EXPECT_LT(a[i - 1], a[i]);
    }
  }
}

TEST(Simulator, RunTrialDoesNotModifyHonestPayloads) {
  const auto s = make(SchemeId::anf, 8, 2, all_equal_function(3));
  Rng rng(9);
  const auto in = s.random_inputs(rng);
  const auto honest = s.prepare(in);
  const auto before = honest->decoded_values();
  const auto out = run_trial(*honest, AdversaryModel{6, AdversaryStrategy::random_replace, 4});
  EXPECT_EQ(out.adversaries.size(), 6u);
  EXPECT_EQ(honest->decoded_values(), before);
  EXPECT_TRUE(honest->decode().correct || in.index() != 0);
}

TEST(Simulator, SweepIsDeterministic) {
  const auto s = make(SchemeId::ptf, 9, 2, all_equal_function(4));
  SweepOptions o;
  o.trials = 40;
  o.seed = 77;
  const auto a = sweep_threshold(s, o), b = sweep_threshold(s, o);
  EXPECT_EQ(a.to_csv(), b.to_csv());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  o.seed = 78;
  EXPECT_EQ(sweep_threshold(s, o).points.size(), a.points.size());
}

TEST(Simulator, SeedsAreIndependentOfTestedBSet) {
  // The outcome at a given b must not depend on which other b values are swept.
  const auto s = make(SchemeId::anf, 10, 4, all_equal_function(4));
  SweepOptions o;
  o.trials = 50;
  o.seed = 5;
  o.b_values = {4};
  const auto alone = sweep_threshold(s, o).points.front();
  o.b_values = {0, 1, 2, 3, 4};
  const auto in_sweep = sweep_threshold(s, o).points.back();
  EXPECT_EQ(alone.successes, in_sweep.successes);
  EXPECT_EQ(alone.wrong_values, in_sweep.wrong_values);
}

TEST(Simulator, BHatIsContiguousPrefix) {
  const auto s = make(SchemeId::anf, 10, 4, all_equal_function(4));
  SweepOptions o;
  o.trials = 100;
  o.seed = 11;
  o.strategy = AdversaryStrategy::codeword_targeted;
  const auto r = sweep_threshold(s, o);
  ASSERT_EQ(r.points.size(), 5u);  // b = 0..beta+1
  EXPECT_EQ(r.b_hat, 3);
  EXPECT_TRUE(r.sound);
  EXPECT_FALSE(r.points.back().all_success());
}

TEST(Simulator, CsvHeaderAndRows) {
  const auto s = make(SchemeId::dptf, 10, 2, weight_four(), 2);
  SweepOptions o;
  o.trials = 5;
  o.b_values = {0, 1};
  const auto csv = sweep_threshold(s, o).to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "scheme,N,K,D,q,b,trials,successes,beta_theory,outer_bound");
  EXPECT_NE(csv.find("\ndptf,10,2,2,,0,5,5,"), std::string::npos);
}

TEST(Simulator, StrategyNames) {
  for (auto s : {AdversaryStrategy::random_replace, AdversaryStrategy::additive_offset,
                 AdversaryStrategy::codeword_targeted, AdversaryStrategy::erase}) {
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  }
  EXPECT_THROW(parse_strategy("gentle"), Error);
}

TEST(SchemeProperty, RandomFunctionsAtBeta) {
  Rng rng(21);
  const SchemeId ids[] = {SchemeId::anf, SchemeId::dnf, SchemeId::ptf, SchemeId::dptf, SchemeId::lcc};
  int checked = 0;
  while (checked < 25) {
    const auto f = oracle::random_function(2 + rng.below(5), rng, 0.3);
    const std::size_t w = f.weight();
    if (w == 0) continue;
    const auto id = ids[rng.below(5)];
    const std::size_t d = id == SchemeId::dptf ? 1 + rng.below(w) : 0;
    const auto s = make(id, 8 + rng.below(8), 1 + rng.below(3), f, d);
    if (!s.threshold().feasible) continue;
    ++checked;
    SweepOptions o;
    o.trials = 30;
    o.seed = rng.next();
    for (std::int64_t b = 0; b <= s.threshold().beta; ++b) o.b_values.push_back(static_cast<std::size_t>(b));
    const auto r = sweep_threshold(s, o);
    EXPECT_TRUE(r.sound) << to_string(id) << " N=" << s.config().n << " K=" << s.config().k;
  }
}
