#pragma once

// Univariate polynomials over a Field, lowest degree first. Operations are
// free functions taking the field explicitly so that Poly stays a plain value.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "boolecode/field.hpp"

namespace boolecode {

template <Field F>
struct Poly {
  using Element = typename F::Element;

  /// No trailing zero coefficient; the zero polynomial has no coefficients.
  std::vector<Element> coeffs;

  bool is_zero() const noexcept { return coeffs.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs.size()) - 1; }
};

template <Field F>
void normalize(const F& f, Poly<F>& p) {
  while (!p.coeffs.empty() && f.is_zero(p.coeffs.back())) p.coeffs.pop_back();
}

template <Field F>
Poly<F> make_poly(const F& f, std::vector<typename F::Element> coeffs) {
  Poly<F> p{std::move(coeffs)};
  normalize(f, p);
  return p;
}

template <Field F>
typename F::Element poly_eval(const F& f, const Poly<F>& p, const typename F::Element& x) {
  typename F::Element acc = f.zero();
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

template <Field F>
std::vector<typename F::Element> poly_eval_batch(const F& f, const Poly<F>& p,
                                                 std::span<const typename F::Element> xs) {
  std::vector<typename F::Element> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(poly_eval(f, p, x));
  return out;
}

template <Field F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  std::vector<typename F::Element> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = f.add(c[i], b.coeffs[i]);
  return make_poly(f, std::move(c));
}

template <Field F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  std::vector<typename F::Element> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = f.sub(c[i], b.coeffs[i]);
  return make_poly(f, std::move(c));
}

template <Field F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<typename F::Element> c(a.coeffs.size() + b.coeffs.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
  }
  return make_poly(f, std::move(c));
}

/// Quotient and remainder; `den` must be nonzero.
template <Field F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, const Poly<F>& num, const Poly<F>& den) {
  require(!den.is_zero(), "polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly<F>{}, num};
  auto rem = num.coeffs;
  const std::size_t dd = den.coeffs.size() - 1;
  std::vector<typename F::Element> quo(rem.size() - dd, f.zero());
  const auto lead_inv = f.inv(den.coeffs.back());
  for (std::size_t i = rem.size(); i-- > dd;) {
    const auto q = f.mul(rem[i], lead_inv);
    quo[i - dd] = q;
    if (f.is_zero(q)) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(q, den.coeffs[j]));
  }
  rem.resize(dd);
  return {make_poly(f, std::move(quo)), make_poly(f, std::move(rem))};
}

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
/// Newton divided differences; throws on a repeated abscissa.
template <Field F>
Poly<F> lagrange_interpolate(const F& f, std::span<const typename F::Element> xs,
                             std::span<const typename F::Element> ys) {
  require(xs.size() == ys.size(), "interpolation needs as many values as points");
  const std::size_t n = xs.size();
  if (n == 0) return {};
  std::vector<typename F::Element> c(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const auto dx = f.sub(xs[i], xs[i - j]);
      if (f.is_zero(dx)) fail(ErrorCode::invalid_argument, "duplicate abscissa in interpolation");
      c[i] = f.mul(f.sub(c[i], c[i - 1]), f.inv(dx));
    }
  }
  // Newton form -> monomial basis.
  std::vector<typename F::Element> p(n, f.zero());
  p[0] = c[n - 1];
  std::size_t deg = 0;
  for (std::size_t i = n - 1; i-- > 0;) {
    // p <- p * (z - xs[i]) + c[i]
    for (std::size_t k = deg + 1; k-- > 0;) {
      const auto shifted = p[k];
      p[k + 1] = f.add(p[k + 1], shifted);
      p[k] = f.neg(f.mul(shifted, xs[i]));
    }
    ++deg;
    p[0] = f.add(p[0], c[i]);
  }
  return make_poly(f, std::move(p));
}

/// matrix[t][s] = L_s(to[t]) where L_s is the Lagrange basis polynomial on
/// `from`. Multiplying by data values at `from` gives the interpolant's
/// values at `to`.
template <Field F>
std::vector<std::vector<typename F::Element>> lagrange_basis_matrix(const F& f,
                                                                    std::span<const typename F::Element> from,
                                                                    std::span<const typename F::Element> to) {
  const std::size_t k = from.size();
  std::vector<typename F::Element> denom_inv(k);
  for (std::size_t s = 0; s < k; ++s) {
    auto d = f.one();
    for (std::size_t l = 0; l < k; ++l) {
      if (l == s) continue;
      const auto dx = f.sub(from[s], from[l]);
      if (f.is_zero(dx)) fail(ErrorCode::invalid_argument, "duplicate interpolation point");
      d = f.mul(d, dx);
    }
    denom_inv[s] = f.inv(d);
  }
  std::vector<std::vector<typename F::Element>> out(to.size(), std::vector<typename F::Element>(k, f.zero()));
  for (std::size_t t = 0; t < to.size(); ++t) {
    for (std::size_t s = 0; s < k; ++s) {
      auto num = denom_inv[s];
      for (std::size_t l = 0; l < k; ++l) {
        if (l != s) num = f.mul(num, f.sub(to[t], from[l]));
      }
      out[t][s] = num;
    }
  }
  return out;
}

}  // namespace boolecode
