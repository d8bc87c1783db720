#pragma once

// Multivariate polynomials with exact rational coefficients, the degree-q
// data augmentation rewrite, and the logarithmic input transform.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boolecode/boolfn.hpp"
#include "boolecode/field.hpp"

namespace boolecode {

/// Exponent of each variable; entry j belongs to x_{j+1}.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

struct PolyTerm {
  Rational coeff;
  Exponents exps;
};

class MultivariatePolynomial {
 public:
  MultivariatePolynomial() = default;
  /// Merges repeated exponent vectors and drops zero coefficients; terms are
  /// kept in first-appearance order.
  MultivariatePolynomial(std::size_t vars, std::vector<PolyTerm> terms);

  /// x1..xm monomials of the ANF, each with coefficient 1.
  static MultivariatePolynomial from_anf(const AnfForm& anf);

  std::size_t variables() const noexcept { return vars_; }
  const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
  /// r(f)
  std::size_t sparsity() const noexcept { return terms_.size(); }
  /// deg f; 0 for constants and the zero polynomial.
  std::size_t degree() const;

  Rational evaluate(std::span<const Rational> x) const;
  double evaluate(std::span<const double> x) const;

  /// Lowest common denominator of the coefficients.
  BigInt common_denominator() const;
  /// Upper bound on |f(x)| over integer inputs with |x_j| <= radius.
  Rational magnitude_bound(const BigInt& radius) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  std::size_t vars_ = 0;
  std::vector<PolyTerm> terms_;
};

/// Vector-valued polynomial map; each output component is decoded on its own.
struct PolynomialSystem {
  std::size_t vars = 0;
  std::vector<MultivariatePolynomial> components;

  std::size_t degree() const;
  std::size_t outputs() const noexcept { return components.size(); }
};

PolynomialSystem single_output(MultivariatePolynomial f);

/// f(X) = X^2 for an n x n matrix X with entries in row-major order.
PolynomialSystem matrix_square_system(std::size_t n);

/// Exact evaluation of a precompiled polynomial over a field.
template <Field F>
struct FieldPolynomial {
  struct Term {
    typename F::Element coeff;
    std::vector<std::pair<std::size_t, unsigned>> powers;
  };
  std::vector<Term> terms;

  FieldPolynomial(const F& f, const MultivariatePolynomial& p) {
    for (const auto& t : p.terms()) {
      Term c{field_from_rational(f, t.coeff), {}};
      for (std::size_t j = 0; j < t.exps.size(); ++j) {
        if (t.exps[j] != 0) c.powers.emplace_back(j, t.exps[j]);
      }
      terms.push_back(std::move(c));
    }
  }

  typename F::Element operator()(const F& f, std::span<const typename F::Element> x) const {
    auto acc = f.zero();
    for (const auto& t : terms) {
      auto v = t.coeff;
      for (auto [j, e] : t.powers) {
        for (unsigned i = 0; i < e; ++i) v = f.mul(v, x[j]);
      }
      acc = f.add(acc, v);
    }
    return acc;
  }
};

// ---------------------------------------------------------------------------
// Data augmentation.

/// Slots of the augmented input: the original variables followed by every
/// monomial of total degree 2..q. Within one degree, monomials with fewer
/// distinct variables come first, then lexicographic order, so q = 2 over
/// three variables appends x1^2, x2^2, x3^2, x1x2, x1x3, x2x3.
class AugmentationLayout {
 public:
  AugmentationLayout(std::size_t vars, unsigned q);

  std::size_t variables() const noexcept { return vars_; }
  unsigned q() const noexcept { return q_; }
  /// Exponent vector stored in each slot.
  const std::vector<Exponents>& slots() const noexcept { return slots_; }
  std::size_t size() const noexcept { return slots_.size(); }
  /// Slot holding exponent vector e (total degree 1..q); throws if absent.
  std::size_t slot_of(const Exponents& e) const;

  /// Augmented vector X-bar for input x.
  template <class T, class Mul>
  std::vector<T> augment(std::span<const T> x, Mul mul) const {
    std::vector<T> out;
    out.reserve(slots_.size());
    for (const auto& e : slots_) {
      std::size_t first = 0;
      while (e[first] == 0) ++first;
      T v = x[first];
      for (std::size_t j = 0; j < e.size(); ++j) {
        for (unsigned i = (j == first ? 1U : 0U); i < e[j]; ++i) v = mul(v, x[j]);
      }
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t vars_;
  unsigned q_;
  std::vector<Exponents> slots_;
};

struct AugmentedPolynomial {
  AugmentationLayout layout;
  /// h over the augmented slots, with h(X-bar) = f(X).
  MultivariatePolynomial h;
};

/// Rewrites f by cutting each monomial's sorted variable-occurrence list
/// into consecutive chunks of q; each chunk becomes one augmented slot.
/// deg h = ceil(deg f / q).
AugmentedPolynomial augment_polynomial(const MultivariatePolynomial& f, unsigned q);

/// Renders h using the augmented-slot naming x1..xm, y1, y2, ...
std::string augmented_to_string(const AugmentedPolynomial& a);

// ---------------------------------------------------------------------------
// Logarithmic input.

struct LogarithmicInput {
  /// log|x_j|; zero entries are replaced by log 1 = 0.
  std::vector<double> w;
  std::vector<bool> negative;
  std::vector<bool> zero;
};

LogarithmicInput logarithmic_input(std::span<const double> x);

/// Largest sum of |w_j| e_j over monomials that exp() may safely take.
inline constexpr double kMaxLogMagnitude = 700.0;

}  // namespace boolecode
