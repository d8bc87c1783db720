#pragma once

// Threshold representations of Boolean functions: LTFs for single monomials
// and single clauses, and the decision tree -> decision list -> PTF chain.
// Biases are half-integers and are stored doubled, so every value here is
// an integer: value2(X) = 2 L(X) + bias2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "boolecode/boolfn.hpp"
#include "boolecode/field.hpp"

namespace boolecode {

struct LinearThresholdFunction {
  /// Z[j] in {-1, 0, +1}; entry j multiplies X[j+1].
  std::vector<std::int8_t> z;
  std::int64_t bias2 = 0;

  std::size_t variables() const noexcept { return z.size(); }
  /// 2 L(X).
  std::int64_t linear2(std::span<const std::uint8_t> x) const;
  /// 2 (L(X) + B).
  std::int64_t value2(std::span<const std::uint8_t> x) const { return linear2(x) + bias2; }
  bool fires(std::span<const std::uint8_t> x) const { return value2(x) > 0; }
  /// Number of nonzero coefficients.
  std::size_t support_size() const;

  std::string to_string() const;
};

/// Z = indicator of the monomial mask, B = -|S| + 1/2.
LinearThresholdFunction ltf_for_monomial(std::uint32_t mask, std::size_t m);
/// Same, from 1-based variable indices.
LinearThresholdFunction ltf_for_monomial(std::span<const std::size_t> subset, std::size_t m);
/// Z[j] = +1 where Y[j] = 1 and -1 elsewhere, B = -|Y| + 1/2.
LinearThresholdFunction ltf_for_clause(std::span<const std::uint8_t> y);

/// Greedy decision tree separating the support vectors. Leaf i holds the
/// index of the single support vector that reaches it.
class DecisionTree {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Node {
    /// Split variable (0-based) or kNone for a leaf.
    std::size_t var = kNone;
    std::size_t child[2] = {kNone, kNone};
    /// Leaves only: index into the support, or kNone for a constant-0 leaf.
    std::size_t support_index = kNone;

    bool is_leaf() const noexcept { return var == kNone; }
  };

  DecisionTree(std::size_t m, std::vector<BitVector> support, std::vector<Node> nodes);

  std::size_t variables() const noexcept { return m_; }
  const std::vector<BitVector>& support() const noexcept { return support_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t root() const noexcept { return 0; }

  /// Leaves labelled with a support vector.
  std::size_t ltf_leaf_count() const;
  std::size_t depth() const;

  /// Leaf reached by x, then the leaf's clause LTF (false at constant-0 leaves).
  bool evaluate(std::span<const std::uint8_t> x) const;

 private:
  std::size_t m_;
  std::vector<BitVector> support_;
  std::vector<Node> nodes_;
};

/// Splits on the free variable minimising the larger child support count,
/// lowest index on ties. Throws on an empty support.
DecisionTree build_decision_tree(const DnfSupport& supp);

struct Literal {
  /// 0-based variable.
  std::size_t var = 0;
  bool positive = true;

  bool evaluate(std::span<const std::uint8_t> x) const { return (x[var] != 0) == positive; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Conjunction of literals; empty means constant 1.
using Monomial = std::vector<Literal>;

bool evaluate_monomial(const Monomial& c, std::span<const std::uint8_t> x);
std::string monomial_to_string(const Monomial& c);

struct DecisionListEntry {
  Monomial monomial;
  LinearThresholdFunction ltf;
};

class DecisionList {
 public:
  DecisionList(std::size_t m, std::vector<DecisionListEntry> entries);

  std::size_t variables() const noexcept { return m_; }
  const std::vector<DecisionListEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Longest monomial (the list's rank).
  std::size_t max_monomial_length() const;

  /// First entry whose monomial fires decides via its LTF; 0 if none fires.
  bool evaluate(std::span<const std::uint8_t> x) const;

 private:
  std::size_t m_;
  std::vector<DecisionListEntry> entries_;
};

/// Repeatedly emits a leaf of depth <= floor(log2 #leaves) reached by
/// following minimum-rank children, then prunes it.
DecisionList tree_to_decision_list(const DecisionTree& tree);

struct PtfTerm {
  Monomial monomial;
  LinearThresholdFunction ltf;
  BigInt weight;
};

/// P2(X) = sum_i A_i C_i(X) (2 L_i(X) + bias2_i), with negated literals as (1 - X[j]).
class PolynomialThresholdFunction {
 public:
  PolynomialThresholdFunction(std::size_t m, std::vector<PtfTerm> terms);

  std::size_t variables() const noexcept { return m_; }
  const std::vector<PtfTerm>& terms() const noexcept { return terms_; }

  /// max_i |C_i| + 1; 0 for the empty (constant-0) PTF.
  std::size_t degree() const;
  /// sum_i A_i (2m + 1), an upper bound on |P2(X)| over {0,1}^m.
  BigInt magnitude_bound() const;

  BigInt eval2(std::span<const std::uint8_t> x) const;
  /// P2(X) > 0; zero is classified as 0.
  bool classify(std::span<const std::uint8_t> x) const { return eval2(x) > 0; }

  /// A_i > sum_{j>i} A_j (2m+1) for every i.
  bool dominance_holds() const;

 private:
  std::size_t m_;
  std::vector<PtfTerm> terms_;
};

/// Weights A_i = (4m+4)^(w-i).
PolynomialThresholdFunction build_ptf(const DecisionList& list);

/// Support -> tree -> list -> PTF. A constant-0 function yields the empty PTF.
PolynomialThresholdFunction ptf_for_support(const DnfSupport& supp);

/// Balanced split preserving order: the first (w mod D) groups get ceil(w/D).
std::vector<DnfSupport> partition_dnf(const DnfSupport& supp, std::size_t d);

/// P2 evaluated at field-valued inputs; `weights[i]` is A_i embedded in F.
template <Field F>
typename F::Element ptf_eval_field(const F& f, const PolynomialThresholdFunction& ptf,
                                   std::span<const typename F::Element> weights,
                                   std::span<const typename F::Element> x) {
  auto acc = f.zero();
  const auto& terms = ptf.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    auto c = weights[i];
    for (const auto& lit : t.monomial) {
      c = f.mul(c, lit.positive ? x[lit.var] : f.sub(f.one(), x[lit.var]));
    }
    if (f.is_zero(c)) continue;
    auto l = f.from_int(t.ltf.bias2);
    for (std::size_t j = 0; j < t.ltf.z.size(); ++j) {
      if (t.ltf.z[j] == 1) l = f.add(l, f.add(x[j], x[j]));
      else if (t.ltf.z[j] == -1) l = f.sub(l, f.add(x[j], x[j]));
    }
    acc = f.add(acc, f.mul(c, l));
  }
  return acc;
}

/// 2 L(X) at field-valued inputs (the bias is added after decoding).
template <Field F>
typename F::Element ltf_linear2_field(const F& f, const LinearThresholdFunction& ltf,
                                      std::span<const typename F::Element> x) {
  auto l = f.zero();
  for (std::size_t j = 0; j < ltf.z.size(); ++j) {
    if (ltf.z[j] == 1) l = f.add(l, x[j]);
    else if (ltf.z[j] == -1) l = f.sub(l, x[j]);
  }
  return f.add(l, l);
}

}  // namespace boolecode
