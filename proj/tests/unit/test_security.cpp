#include <gtest/gtest.h>

#include "boolecode/error.hpp"
#include "boolecode/security.hpp"
#include "oracles.hpp"

using namespace boolecode;

TEST(Threshold, Examples) {
  EXPECT_EQ(threshold_mds(100, 10).beta, 45);
  EXPECT_EQ(threshold_lcc(100, 10, 7).beta, 18);
  EXPECT_EQ(threshold_ptf(100, 10, 2).beta, 40);
  EXPECT_EQ(threshold_lcc(10, 2, 3).beta, 3);
  EXPECT_EQ(threshold_ptf(8, 2, 2).beta, 2);
  EXPECT_EQ(threshold_dataaug(40, 3, 8, 2).beta, 15);
  EXPECT_EQ(threshold_lcc(40, 3, 8).beta, 11);
}

TEST(Threshold, OuterBound) {
  EXPECT_EQ(outer_bound(100, 10), 45);
  EXPECT_EQ(outer_bound(6, 6), 0);
  EXPECT_THROW(outer_bound(5, 6), Error);
}

TEST(Threshold, InfeasibleClampsToZero) {
  const auto t = threshold_lcc(5, 3, 4);  // 5 - 8 - 1 < 0
  EXPECT_EQ(t.beta, 0);
  EXPECT_FALSE(t.feasible);
  EXPECT_EQ(t.interior, -4);
  const auto ok = threshold_lcc(5, 3, 2);  // interior 0
  EXPECT_TRUE(ok.feasible);
  EXPECT_EQ(ok.beta, 0);
}

TEST(Threshold, RejectsDegenerateWeights) {
  EXPECT_THROW(threshold_ptf(10, 2, 0), Error);
  EXPECT_THROW(threshold_dptf(10, 2, 3, 4), Error);
  EXPECT_THROW(threshold_dptf(10, 2, 3, 0), Error);
  EXPECT_THROW(threshold_dataaug(10, 2, 3, 0), Error);
}

TEST(Threshold, DptfEndpoints) {
  for (std::size_t w = 1; w <= 40; ++w) {
    EXPECT_EQ(threshold_dptf(30, 4, w, w).beta, threshold_mds(30, 4).beta);
    EXPECT_EQ(threshold_dptf(30, 4, w, 1).beta, threshold_ptf(30, 4, w).beta);
  }
}

TEST(Threshold, DptfUsesCeilingOfRatio) {
  // w = 7, D = 2: ceil(7/2) = 4 gives degree 3, while floor(log2 3.5) + 1 = 2.
  EXPECT_EQ(dptf_degree(7, 2), 3u);
  EXPECT_EQ(dptf_degree(8, 2), 3u);
  EXPECT_EQ(dptf_degree(6, 2), 2u);
}

TEST(ThresholdProperty, MatchesHandFormulasOnGrid) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      const auto N = static_cast<std::size_t>(n), K = static_cast<std::size_t>(k);
      ASSERT_EQ(threshold_mds(N, K).beta, oracle::beta_mds(n, k));
      ASSERT_EQ(outer_bound(N, K), oracle::beta_mds(n, k));
      for (std::int64_t deg = 1; deg <= 8; ++deg) {
        ASSERT_EQ(threshold_lcc(N, K, deg).beta, oracle::beta_lcc(n, k, deg));
        for (std::int64_t q = 1; q <= 4; ++q) {
          ASSERT_EQ(threshold_dataaug(N, K, deg, q).beta, oracle::beta_dataaug(n, k, deg, q));
        }
      }
      for (std::int64_t w = 1; w <= 64; ++w) {
        ASSERT_EQ(threshold_ptf(N, K, w).beta, oracle::beta_ptf(n, k, w));
        for (std::int64_t d = 1; d <= w; ++d) {
          if (w % d == 0) ASSERT_EQ(threshold_dptf(N, K, w, d).beta, oracle::beta_dptf_ratio(n, k, w, d));
        }
      }
    }
  }
}

TEST(ThresholdProperty, NeverExceedsOuterBound) {
  for (std::size_t n = 1; n <= 30; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const auto outer = outer_bound(n, k);
      EXPECT_EQ(threshold_mds(n, k).beta, outer);
      for (std::size_t w = 1; w <= 32; ++w) {
        EXPECT_LE(threshold_ptf(n, k, w).beta, outer);
        for (std::size_t d = 1; d <= w; ++d) EXPECT_LE(threshold_dptf(n, k, w, d).beta, outer);
      }
      for (std::size_t deg = 1; deg <= 8; ++deg) {
        EXPECT_LE(threshold_lcc(n, k, deg).beta, outer);
        for (std::size_t q = 1; q <= 4; ++q) EXPECT_LE(threshold_dataaug(n, k, deg, q).beta, outer);
      }
    }
  }
}

TEST(ThresholdProperty, Monotone) {
  for (std::size_t n = 2; n <= 30; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t deg = 1; deg <= 6; ++deg) {
        // Non-increasing in K, non-decreasing in N.
        EXPECT_GE(threshold_lcc(n, k, deg).beta, threshold_lcc(n, k + 1, deg).beta);
        EXPECT_LE(threshold_lcc(n - 1, k, deg).beta, threshold_lcc(n, k, deg).beta);
      }
      for (std::size_t w = 1; w <= 16; ++w) {
        EXPECT_GE(threshold_ptf(n, k, w).beta, threshold_ptf(n, k + 1, w).beta);
        EXPECT_LE(threshold_ptf(n - 1, k, w).beta, threshold_ptf(n, k, w).beta);
        for (std::size_t d = 1; d < w; ++d) {
          // More partitions never lowers the threshold.
          EXPECT_LE(threshold_dptf(n, k, w, d).beta, threshold_dptf(n, k, w, d + 1).beta);
        }
      }
      EXPECT_GE(threshold_mds(n, k).beta, threshold_mds(n, k + 1).beta);
    }
  }
}

TEST(SchemeIds, RoundTrip) {
  for (auto id : {SchemeId::lcc, SchemeId::anf, SchemeId::dnf, SchemeId::ptf, SchemeId::dptf, SchemeId::datalog,
                  SchemeId::dataaug}) {
    EXPECT_EQ(parse_scheme_id(to_string(id)), id);
    EXPECT_FALSE(documented_complexity(id).empty());
  }
  EXPECT_THROW(parse_scheme_id("nope"), Error);
}
