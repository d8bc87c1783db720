#pragma once

// 8-bit S-box case study: per-output-bit thresholds for each scheme.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolecode/boolfn.hpp"
#include "boolecode/field.hpp"
#include "boolecode/security.hpp"

namespace boolecode {

using Sbox = std::array<std::uint8_t, 256>;

/// The AES S-box; every output bit has algebraic degree 7.
const Sbox& aes_sbox() noexcept;

/// Parses 512 hex digits, entry 0 first.
Sbox sbox_from_hex(std::string_view hex);

/// Output bit `bit` (0 = least significant) as a function of the 8 input bits,
/// input bit j being X[j+1].
BooleanFunction sbox_bit(const Sbox& s, unsigned bit);

struct SboxBitRow {
  unsigned bit = 0;
  std::size_t degree = 0;
  std::size_t sparsity = 0;
  std::size_t weight = 0;
  Threshold lcc, anf, dnf, ptf;
};

struct DptfRow {
  std::size_t d = 0;
  std::size_t degree = 0;
  Threshold beta;
};

struct SboxCaseStudy {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<SboxBitRow> bits;
  /// Maximum per-bit algebraic degree.
  std::size_t degree = 0;
  /// Fixture degree is the expected 7.
  bool degree_matches = false;
  Threshold lcc, anf, dnf;
  /// (beta_ANF - beta_LCC) / beta_LCC; zero when beta_LCC is zero.
  Rational improvement = 0;
  /// D-PTF thresholds for D = 1, 2, 4, ..., w of the first bit (and w itself).
  std::vector<DptfRow> dptf;
  /// beta(D) non-decreasing in D over every D in [1, w].
  bool dptf_monotone = true;

  nlohmann::ordered_json to_json() const;
};

inline constexpr std::size_t kSboxExpectedDegree = 7;

SboxCaseStudy sbox_casestudy(const Sbox& s, std::size_t n = 100, std::size_t k = 10);

}  // namespace boolecode
