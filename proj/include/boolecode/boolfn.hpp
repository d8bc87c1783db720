#pragma once

// Boolean functions f: {0,1}^m -> {0,1} backed by a truth table, with the
// algebraic normal form (XOR of AND-monomials) and the canonical full DNF
// (one m-literal clause per support vector) derived from it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolecode {

/// One input X in {0,1}^m; entry j holds X[j+1].
using BitVector = std::vector<std::uint8_t>;

inline constexpr std::size_t kMaxVariables = 20;

/// Input index convention: bit j of the index is X[j+1].
std::size_t index_of(std::span<const std::uint8_t> x);
BitVector bits_of(std::size_t index, std::size_t m);

class BooleanFunction {
 public:
  /// table.size() must be exactly 2^m and every entry 0 or 1.
  BooleanFunction(std::size_t m, std::vector<std::uint8_t> table);

  static BooleanFunction constant(std::size_t m, bool value);

  /// Hex truth table, most significant digit first; bit i of the number is
  /// f at input index i. Exactly ceil(2^m / 4) digits are required.
  static BooleanFunction from_hex(std::size_t m, std::string_view hex);

  std::size_t variables() const noexcept { return m_; }
  std::size_t size() const noexcept { return table_.size(); }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  bool evaluate(std::span<const std::uint8_t> x) const;
  bool at(std::size_t index) const { return table_[index] != 0; }

  /// Number of inputs mapped to 1.
  std::size_t weight() const;

  std::string to_hex() const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  std::size_t m_;
  std::vector<std::uint8_t> table_;
};

/// Monomial set of the ANF. Each monomial is a variable mask (bit j = X[j+1]);
/// the empty mask is the constant-1 monomial.
class AnfForm {
 public:
  AnfForm(std::size_t m, std::vector<std::uint32_t> masks);

  std::size_t variables() const noexcept { return m_; }
  const std::vector<std::uint32_t>& masks() const noexcept { return masks_; }

  /// r(f)
  std::size_t sparsity() const noexcept { return masks_.size(); }
  /// max |S| over monomials; 0 for the empty set.
  std::size_t degree() const;

  /// Monomials as 1-based variable index sets.
  std::vector<std::vector<std::size_t>> subsets() const;

  bool evaluate(std::span<const std::uint8_t> x) const;
  BooleanFunction to_truth_table() const;

 private:
  std::size_t m_;
  std::vector<std::uint32_t> masks_;
};

/// Supp(f) in ascending input-index order; entry i is Y_{i+1}.
class DnfSupport {
 public:
  DnfSupport(std::size_t m, std::vector<BitVector> support);

  std::size_t variables() const noexcept { return m_; }
  const std::vector<BitVector>& vectors() const noexcept { return support_; }
  /// w(f)
  std::size_t weight() const noexcept { return support_.size(); }

  bool evaluate(std::span<const std::uint8_t> x) const;

 private:
  std::size_t m_;
  std::vector<BitVector> support_;
};

/// Moebius transform over GF(2).
AnfForm anf_from_truth_table(const BooleanFunction& f);
DnfSupport dnf_from_truth_table(const BooleanFunction& f);

/// Builds a function from 1-based monomial index sets.
BooleanFunction function_from_anf(std::size_t m, const std::vector<std::vector<std::size_t>>& monomials);

// Named functions used in tests, presets and the CLI.
BooleanFunction and_function(std::size_t m);
/// (X[1]...X[m]) XOR (X[1]+1)...(X[m]+1): 1 exactly on all-ones and all-zeros.
BooleanFunction all_equal_function(std::size_t m);
/// (X1^X2)(X3^X4)...(X[2m'-1]^X[2m']) X[2m'+1]...X[m], m' = floor(log2 m^2).
/// Requires 2m' <= m, i.e. m >= 16.
BooleanFunction paired_xor_function(std::size_t m);

}  // namespace boolecode
