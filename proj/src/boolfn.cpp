#include "boolecode/boolfn.hpp"

#include <algorithm>
#include <bit>

#include "boolecode/error.hpp"

namespace boolecode {

std::size_t index_of(std::span<const std::uint8_t> x) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0) idx |= std::size_t{1} << j;
  }
  return idx;
}

BitVector bits_of(std::size_t index, std::size_t m) {
  BitVector x(m);
  for (std::size_t j = 0; j < m; ++j) x[j] = static_cast<std::uint8_t>((index >> j) & 1U);
  return x;
}

BooleanFunction::BooleanFunction(std::size_t m, std::vector<std::uint8_t> table)
    : m_(m), table_(std::move(table)) {
  require(m >= 1 && m <= kMaxVariables, "variable count must be in [1, 20], got " + std::to_string(m));
  require(table_.size() == (std::size_t{1} << m), "truth table length must be 2^m");
  for (auto b : table_) require(b <= 1, "truth table entries must be 0 or 1");
}

BooleanFunction BooleanFunction::constant(std::size_t m, bool value) {
  require(m >= 1 && m <= kMaxVariables, "variable count must be in [1, 20]");
  return BooleanFunction(m, std::vector<std::uint8_t>(std::size_t{1} << m, value ? 1 : 0));
}

static int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

BooleanFunction BooleanFunction::from_hex(std::size_t m, std::string_view hex) {
  if (m < 1 || m > kMaxVariables) fail(ErrorCode::parse_error, "variable count must be in [1, 20]");
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  const std::size_t bits = std::size_t{1} << m;
  const std::size_t digits = (bits + 3) / 4;
  if (hex.size() != digits) {
    fail(ErrorCode::parse_error, "truth table for m=" + std::to_string(m) + " needs " +
                                     std::to_string(digits) + " hex digits, got " +
                                     std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> table(bits, 0);
  for (std::size_t pos = 0; pos < digits; ++pos) {
    const int v = hex_value(hex[pos]);
    if (v < 0) fail(ErrorCode::parse_error, "invalid hex digit at position " + std::to_string(pos));
    const std::size_t base = (digits - 1 - pos) * 4;
    for (std::size_t b = 0; b < 4; ++b) {
      if (((v >> b) & 1) == 0) continue;
      if (base + b >= bits) fail(ErrorCode::parse_error, "hex truth table has bits beyond 2^m");
      table[base + b] = 1;
    }
  }
  return BooleanFunction(m, std::move(table));
}

std::string BooleanFunction::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (table_.size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t pos = 0; pos < digits; ++pos) {
    const std::size_t base = (digits - 1 - pos) * 4;
    int v = 0;
    for (std::size_t b = 0; b < 4 && base + b < table_.size(); ++b) v |= table_[base + b] << b;
    out[pos] = kDigits[v];
  }
  return out;
}

bool BooleanFunction::evaluate(std::span<const std::uint8_t> x) const {
  require(x.size() == m_, "input length " + std::to_string(x.size()) + " does not match m=" +
                              std::to_string(m_));
  return table_[index_of(x)] != 0;
}

std::size_t BooleanFunction::weight() const {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), std::uint8_t{1}));
}

AnfForm::AnfForm(std::size_t m, std::vector<std::uint32_t> masks) : m_(m), masks_(std::move(masks)) {
  require(m >= 1 && m <= kMaxVariables, "variable count must be in [1, 20]");
  std::sort(masks_.begin(), masks_.end());
  require(std::adjacent_find(masks_.begin(), masks_.end()) == masks_.end(), "duplicate ANF monomial");
  for (auto mask : masks_) require((mask >> m) == 0, "ANF monomial uses a variable beyond m");
}

std::size_t AnfForm::degree() const {
  std::size_t d = 0;
  for (auto mask : masks_) d = std::max<std::size_t>(d, std::popcount(mask));
  return d;
}

std::vector<std::vector<std::size_t>> AnfForm::subsets() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(masks_.size());
  for (auto mask : masks_) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < m_; ++j) {
      if ((mask >> j) & 1U) s.push_back(j + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool AnfForm::evaluate(std::span<const std::uint8_t> x) const {
  require(x.size() == m_, "input length does not match m");
  const auto idx = static_cast<std::uint32_t>(index_of(x));
  bool acc = false;
  for (auto mask : masks_) acc ^= ((idx & mask) == mask);
  return acc;
}

BooleanFunction AnfForm::to_truth_table() const {
  // Inverse Moebius transform is the transform itself over GF(2).
  std::vector<std::uint8_t> t(std::size_t{1} << m_, 0);
  for (auto mask : masks_) t[mask] = 1;
  for (std::size_t j = 0; j < m_; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i & bit) t[i] ^= t[i ^ bit];
    }
  }
  return BooleanFunction(m_, std::move(t));
}

DnfSupport::DnfSupport(std::size_t m, std::vector<BitVector> support) : m_(m), support_(std::move(support)) {
  for (const auto& y : support_) require(y.size() == m_, "support vector length does not match m");
  std::vector<std::size_t> idx;
  idx.reserve(support_.size());
  for (const auto& y : support_) idx.push_back(index_of(y));
  std::sort(idx.begin(), idx.end());
  require(std::adjacent_find(idx.begin(), idx.end()) == idx.end(), "duplicate support vector");
}

bool DnfSupport::evaluate(std::span<const std::uint8_t> x) const {
  return std::any_of(support_.begin(), support_.end(),
                     [&](const BitVector& y) { return std::equal(y.begin(), y.end(), x.begin(), x.end()); });
}

AnfForm anf_from_truth_table(const BooleanFunction& f) {
  std::vector<std::uint8_t> t = f.table();
  for (std::size_t j = 0; j < f.variables(); ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i & bit) t[i] ^= t[i ^ bit];
    }
  }
  std::vector<std::uint32_t> masks;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i]) masks.push_back(static_cast<std::uint32_t>(i));
  }
  return AnfForm(f.variables(), std::move(masks));
}

DnfSupport dnf_from_truth_table(const BooleanFunction& f) {
  std::vector<BitVector> support;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.at(i)) support.push_back(bits_of(i, f.variables()));
  }
  return DnfSupport(f.variables(), std::move(support));
}

BooleanFunction function_from_anf(std::size_t m, const std::vector<std::vector<std::size_t>>& monomials) {
  if (m < 1 || m > kMaxVariables) fail(ErrorCode::parse_error, "variable count must be in [1, 20]");
  std::vector<std::uint32_t> masks;
  masks.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    std::uint32_t mask = 0;
    for (auto v : monomials[i]) {
      if (v < 1 || v > m) {
        fail(ErrorCode::parse_error, "monomial " + std::to_string(i) + " has variable index " +
                                         std::to_string(v) + " outside [1, " + std::to_string(m) + "]");
      }
      mask |= std::uint32_t{1} << (v - 1);
    }
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  if (std::adjacent_find(masks.begin(), masks.end()) != masks.end()) {
    fail(ErrorCode::parse_error, "duplicate monomial in ANF list");
  }
  return AnfForm(m, std::move(masks)).to_truth_table();
}

BooleanFunction and_function(std::size_t m) {
  auto f = BooleanFunction::constant(m, false);
  std::vector<std::uint8_t> t = f.table();
  t.back() = 1;
  return BooleanFunction(m, std::move(t));
}

BooleanFunction all_equal_function(std::size_t m) {
  auto f = BooleanFunction::constant(m, false);
  std::vector<std::uint8_t> t = f.table();
  t.front() = 1;
  t.back() = 1;
  return BooleanFunction(m, std::move(t));
}

BooleanFunction paired_xor_function(std::size_t m) {
  require(m >= 1 && m <= kMaxVariables, "variable count must be in [1, 20]");
  const std::size_t pairs = static_cast<std::size_t>(std::bit_width(m * m) - 1);
  require(2 * pairs <= m, "paired-xor function needs 2*floor(log2 m^2) <= m (m >= 16)");
  std::vector<std::uint8_t> t(std::size_t{1} << m, 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool v = true;
    for (std::size_t p = 0; p < pairs && v; ++p) v = (((i >> (2 * p)) ^ (i >> (2 * p + 1))) & 1U) != 0;
    for (std::size_t j = 2 * pairs; j < m && v; ++j) v = ((i >> j) & 1U) != 0;
    t[i] = v ? 1 : 0;
  }
  return BooleanFunction(m, std::move(t));
}

}  // namespace boolecode
