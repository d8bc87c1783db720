#include "boolecode/codes.hpp"

#include <cmath>

namespace boolecode {

const char* to_string(DecodeStatus s) noexcept {
  switch (s) {
    case DecodeStatus::ok: return "ok";
    case DecodeStatus::too_few_symbols: return "too_few_symbols";
    case DecodeStatus::no_consistent_codeword: return "no_consistent_codeword";
    case DecodeStatus::ambiguous: return "ambiguous";
  }
  return "unknown";
}

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(a)); }

// Advances `c` (indices into a pool of size n, strictly increasing) to the
// next k-combination in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Decoded<std::vector<double>> real_consensus_decode(std::span<const double> points,
                                                   const ReceivedVector<double>& received, std::size_t k,
                                                   std::size_t b_max, std::span<const double> data_points,
                                                   double tol) {
  require(points.size() == received.size(), "received vector length does not match the code length");
  require(points.size() <= kMaxConsensusLength, "consensus decoding supports at most 24 symbols");
  require(k >= 1, "consensus decoding needs K >= 1");
  const RealField f;

  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < received.size(); ++i) {
    if (received.slots[i]) live.push_back(i);
  }
  const std::size_t n = live.size();
  if (n < k) return {DecodeStatus::too_few_symbols, {}};
  const std::size_t need = std::max(k, n > b_max ? n - b_max : std::size_t{0});
  // Two distinct fits would share at least 2*need - n slots; when that is
  // at least K they coincide, so the first fit found is the only one.
  const bool unique = 2 * need >= n + k;

  std::vector<std::uint32_t> found_masks;
  std::optional<std::vector<double>> best;
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  std::vector<double> xs(k), ys(k);
  do {
    std::uint32_t sub = 0;
    for (auto c : comb) sub |= std::uint32_t{1} << live[c];
    bool covered = false;
    for (auto m : found_masks) covered = covered || (sub & m) == sub;
    if (covered) continue;

    for (std::size_t i = 0; i < k; ++i) {
      xs[i] = points[live[comb[i]]];
      ys[i] = *received.slots[live[comb[i]]];
    }
    const auto p = lagrange_interpolate(f, std::span<const double>(xs), std::span<const double>(ys));
    std::uint32_t mask = 0;
    std::size_t agree = 0;
    for (auto i : live) {
      if (close(*received.slots[i], poly_eval(f, p, points[i]), tol)) {
        mask |= std::uint32_t{1} << i;
        ++agree;
      }
    }
    if (agree < need) continue;
    auto values = poly_eval_batch(f, p, data_points);
    if (best) {
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (!close((*best)[j], values[j], tol)) return {DecodeStatus::ambiguous, {}};
      }
    } else {
      best = std::move(values);
      if (unique) break;
    }
    found_masks.push_back(mask);
  } while (next_combination(comb, n));

  if (!best) return {DecodeStatus::no_consistent_codeword, {}};
  return {DecodeStatus::ok, std::move(*best)};
}

}  // namespace boolecode
