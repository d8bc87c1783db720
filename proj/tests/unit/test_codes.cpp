#include <gtest/gtest.h>

#include "boolecode/codes.hpp"
#include "boolecode/field_impl.hpp"
#include "oracles.hpp"

using namespace boolecode;

namespace {

using E = std::uint64_t;

ReceivedVector<E> received(std::vector<E> v) { return received_from(std::span<const E>(v)); }

std::vector<E> corrupt(const PrimeField64& f, std::vector<E> cw, std::size_t errors, Rng& rng,
                       std::vector<std::size_t>* where = nullptr) {
  std::vector<std::size_t> idx(cw.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < errors; ++i) {
    std::swap(idx[i], idx[i + rng.below(idx.size() - i)]);
    cw[idx[i]] = f.add(cw[idx[i]], 1 + rng.below(f.modulus() - 1));
    if (where != nullptr) where->push_back(idx[i]);
  }
  return cw;
}

}  // namespace

TEST(MdsEncode, ReplicationForKEqualsOne) {
  const PrimeField64 f(11);
  const auto code = MdsCode<PrimeField64>::canonical(f, 5, 1);
  const std::vector<E> data{7};
  EXPECT_EQ(code.encode(data), (std::vector<E>(5, 7)));
}

TEST(MdsEncode, LinearInterpolantExample) {
  const PrimeField64 f(7);
  const MdsCode<PrimeField64> code(f, 4, 2, {0, 1, 2, 3});
  const std::vector<E> data{1, 2};
  EXPECT_EQ(code.encode(data), (std::vector<E>{1, 2, 3, 4}));
  const std::vector<E> zero{0, 0};
  EXPECT_EQ(code.encode(zero), (std::vector<E>(4, 0)));
}

TEST(MdsEncode, RejectsBadShapes) {
  const PrimeField64 f(7);
  EXPECT_THROW(MdsCode<PrimeField64>(f, 2, 3, {1, 2}), Error);
  EXPECT_THROW(MdsCode<PrimeField64>(f, 3, 2, {1, 1, 2}), Error);
  EXPECT_THROW(MdsCode<PrimeField64>::canonical(f, 8, 2), Error);  // only 7 points exist
}

TEST(RsDecode, MajorityOfConstants) {
  const PrimeField64 f(7);
  const std::vector<E> xs{1, 2, 3};
  const auto p = rs_decode_poly(f, std::span<const E>(xs), received({5, 5, 2}), 0);
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p.value.coeffs, (std::vector<E>{5}));
}

TEST(RsDecode, CorrectsOneErrorInLengthFour) {
  const PrimeField64 f(7);
  const MdsCode<PrimeField64> code(f, 4, 2, {0, 1, 2, 3});
  const auto d = code.decode(received({1, 2, 3, 0}));
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d.value, (std::vector<E>{1, 2}));

  const oracle::Zp z{7};
  const auto brute = oracle::subset_decode(z, {0, 1, 2, 3}, {1, 2, 3, 0}, 1, 1, {0, 1});
  ASSERT_TRUE(brute);
  EXPECT_EQ((std::vector<E>(brute->begin(), brute->end())), d.value);
}

TEST(RsDecode, TwoErrorsBeyondRadiusNeverClaimUniqueTruth) {
  // 2b > N - K: the decoder may fail or return another codeword, but if it
  // returns something it must be a codeword within distance 1.
  const PrimeField64 f(7);
  const MdsCode<PrimeField64> code(f, 4, 2, {0, 1, 2, 3});
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::vector<E> data{rng.below(7), rng.below(7)};
    const auto r = corrupt(f, code.encode(data), 2, rng);
    const auto d = code.decode(received(r));
    if (!d.ok()) continue;
    const auto cw = code.encode(d.value);
    std::size_t diff = 0;
    for (std::size_t i = 0; i < 4; ++i) diff += cw[i] != r[i] ? 1 : 0;
    EXPECT_LE(diff, 1u);
  }
}

TEST(RsDecode, DegreeMustBeBelowLength) {
  const PrimeField64 f(7);
  const std::vector<E> xs{1, 2, 3};
  EXPECT_FALSE(rs_decode_poly(f, std::span<const E>(xs), received({1, 2, 3}), 3).ok());
}

TEST(RsDecodeProperty, ErrorsAndErasuresWithinRadius) {
  const PrimeField64 f(1000003);
  Rng rng(42);
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{6, 2}, {10, 4}, {16, 8}}) {
    const auto code = MdsCode<PrimeField64>::canonical(f, n, k);
    const auto dec = code.decoder(k - 1);
    for (int t = 0; t < 1000; ++t) {
      std::vector<E> data(k);
      for (auto& v : data) v = f.random(rng);
      const std::size_t budget = n - k;
      const std::size_t b = rng.below(budget / 2 + 1);
      const std::size_t e = rng.below(budget - 2 * b + 1);
      auto r = received(corrupt(f, code.encode(data), b, rng));
      std::size_t erased = 0;
      while (erased < e) {
        const auto i = rng.below(n);
        if (r.slots[i]) {
          r.slots[i].reset();
          ++erased;
        }
      }
      const auto d = dec.decode(r);
      ASSERT_TRUE(d.ok()) << "n=" << n << " k=" << k << " b=" << b << " e=" << e;
      EXPECT_EQ(d.value, data);
    }
  }
}

TEST(RsDecodeProperty, SuspectsDoNotChangeResults) {
  const PrimeField64 f(101);
  Rng rng(8);
  const auto code = MdsCode<PrimeField64>::canonical(f, 10, 4);
  const auto dec = code.decoder(3);
  std::vector<bool> suspects(10, false);
  for (int t = 0; t < 500; ++t) {
    std::vector<E> data(4);
    for (auto& v : data) v = f.random(rng);
    const auto r = received(corrupt(f, code.encode(data), rng.below(4), rng));
    const auto with = dec.decode(r, &suspects);
    const auto without = dec.decode(r);
    ASSERT_TRUE(with.ok());
    EXPECT_EQ(with.value, data);
    EXPECT_EQ(without.value, data);
  }
}

TEST(RsDecodeProperty, TightnessAgainstSecondCodeword) {
  // Replace b = floor((N-K)/2) + 1 slots by a different codeword that agrees
  // with the true one elsewhere on enough positions: decoding returns it.
  const PrimeField64 f(1009);
  Rng rng(77);
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{6, 2}, {9, 3}, {10, 4}, {16, 8}}) {
    const auto code = MdsCode<PrimeField64>::canonical(f, n, k);
    const auto alpha = code.evaluation_points();
    const std::size_t b = (n - k) / 2 + 1;
    int wrong = 0;
    for (int t = 0; t < 50; ++t) {
      std::vector<E> data(k);
      for (auto& v : data) v = f.random(rng);
      const auto cw = code.encode(data);
      // Second codeword = first + c * prod_{a in A}(x - alpha_a), |A| = K - 1,
      // so it agrees on A and differs on the b corrupted slots.
      std::vector<E> r = cw;
      const E c = 1 + rng.below(f.modulus() - 1);
      for (std::size_t w = 0; w < b; ++w) {
        E delta = c;
        for (std::size_t a = b; a < b + k - 1; ++a) delta = f.mul(delta, f.sub(alpha[w], alpha[a]));
        r[w] = f.add(r[w], delta);
      }
      const auto d = code.decode(received(r));
      if (d.ok() && d.value != data) ++wrong;
    }
    // N - K is even in every case here, so the planted codeword sits exactly
    // at the decoding radius and is always the one returned.
    EXPECT_EQ(wrong, 50) << "n=" << n << " k=" << k;
  }
}

TEST(LccEncode, ReplicationForKEqualsOne) {
  const PrimeField64 f(13);
  const auto code = LccCode<PrimeField64>::canonical(f, 4, 1);
  const auto enc = code.encode({{3, 4, 5}});
  for (const auto& row : enc) EXPECT_EQ(row, (std::vector<E>{3, 4, 5}));
}

TEST(LccEncode, LinearInterpolantFormula) {
  const PrimeField64 f(13);
  const LccCode<PrimeField64> code(f, 3, 2, {0, 1}, {2, 3, 4});
  const std::vector<E> x1{1, 5}, x2{4, 2};
  const auto enc = code.encode({x1, x2});
  for (std::size_t n = 0; n < 3; ++n) {
    const E a = code.evaluation_points()[n];
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(enc[n][j], f.add(x1[j], f.mul(a, f.sub(x2[j], x1[j]))));
  }
  const auto same = code.encode({x1, x1});
  for (const auto& row : same) EXPECT_EQ(row, x1);
}

TEST(LccEncode, PointsMustBeDistinct) {
  const PrimeField64 f(13);
  EXPECT_THROW(LccCode<PrimeField64>(f, 2, 2, {1, 2}, {2, 3}), Error);
}

TEST(LccDecode, QuadraticCorrectsTwoOfEight) {
  const PrimeField64 f(10007);
  const auto code = LccCode<PrimeField64>::canonical(f, 8, 2);
  Rng rng(9);
  for (std::size_t b = 0; b <= 3; ++b) {
    std::size_t ok = 0;
    for (int t = 0; t < 200; ++t) {
      const std::vector<E> x1{f.random(rng)}, x2{f.random(rng)};
      const auto enc = code.encode({x1, x2});
      std::vector<E> payload;
      for (const auto& row : enc) payload.push_back(f.mul(row[0], row[0]));
      const auto r = received(corrupt(f, payload, b, rng));
      const auto d = code.decode(r, 2);
      if (d.ok() && d.value == std::vector<E>{f.mul(x1[0], x1[0]), f.mul(x2[0], x2[0])}) ++ok;
    }
    if (b <= 2) EXPECT_EQ(ok, 200u) << "b=" << b;
    else EXPECT_LT(ok, 200u);
  }
}

TEST(LccDecode, LinearMatchesMdsRadius) {
  const PrimeField64 f(10007);
  const auto code = LccCode<PrimeField64>::canonical(f, 10, 4);
  Rng rng(10);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::vector<E>> data(4, std::vector<E>(1));
    for (auto& v : data) v[0] = f.random(rng);
    const auto enc = code.encode(data);
    std::vector<E> payload;
    for (const auto& row : enc) payload.push_back(row[0]);
    const auto d = code.decode(received(corrupt(f, payload, 3, rng)), 1);
    ASSERT_TRUE(d.ok());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(d.value[i], data[i][0]);
  }
}

TEST(Consensus, ExactCodeword) {
  const auto code = MdsCode<RealField>::canonical(RealField{}, 5, 2);
  const std::vector<double> data{0.25, -1.5};
  const auto cw = code.encode(data);
  const auto d = real_consensus_decode(code.evaluation_points(), received_from(std::span<const double>(cw)), 2, 0,
                                       code.data_points());
  ASSERT_TRUE(d.ok());
  EXPECT_NEAR(d.value[0], 0.25, 1e-9);
  EXPECT_NEAR(d.value[1], -1.5, 1e-9);
}

TEST(Consensus, OneCorruptedSlotOfFive) {
  const auto code = MdsCode<RealField>::canonical(RealField{}, 5, 2);
  Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    const std::vector<double> data{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    auto cw = code.encode(data);
    cw[rng.below(5)] += rng.uniform(0.5, 5.0);
    const auto d = real_consensus_decode(code.evaluation_points(), received_from(std::span<const double>(cw)), 2, 1,
                                         code.data_points());
    ASSERT_TRUE(d.ok());
    EXPECT_NEAR(d.value[0], data[0], 1e-6 * std::max(1.0, std::abs(data[0])));
    EXPECT_NEAR(d.value[1], data[1], 1e-6 * std::max(1.0, std::abs(data[1])));
  }
}

TEST(Consensus, TwoCorruptedOfFourIsNotUnique) {
  const auto code = MdsCode<RealField>::canonical(RealField{}, 4, 2);
  const std::vector<double> data{1.0, 2.0};
  auto cw = code.encode(data);
  // Put slots 0 and 1 on a second line: two fits with 2 agreements each.
  const std::vector<double> other{-4.0, 7.0};
  const auto cw2 = code.encode(other);
  cw[0] = cw2[0];
  cw[1] = cw2[1];
  const auto d = real_consensus_decode(code.evaluation_points(), received_from(std::span<const double>(cw)), 2, 2,
                                       code.data_points());
  EXPECT_EQ(d.status, DecodeStatus::ambiguous);
}

TEST(Consensus, NoFitIsDistinctFromAmbiguity) {
  const auto code = MdsCode<RealField>::canonical(RealField{}, 5, 2);
  const std::vector<double> junk{1.0, 5.0, -2.0, 8.0, 0.5};
  const auto d = real_consensus_decode(code.evaluation_points(), received_from(std::span<const double>(junk)), 2, 1,
                                       code.data_points());
  EXPECT_EQ(d.status, DecodeStatus::no_consistent_codeword);
}

TEST(Consensus, LengthLimit) {
  const std::vector<double> pts(25, 0.0);
  ReceivedVector<double> r;
  r.slots.resize(25, 0.0);
  EXPECT_THROW(real_consensus_decode(std::span<const double>(pts), r, 2, 1, std::span<const double>(pts).first(2)),
               Error);
}
