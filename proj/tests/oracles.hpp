#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately naive so they share no logic with the library.

#include <cstdint>
#include <optional>
#include <vector>

#include "boolecode/boolfn.hpp"
#include "boolecode/rng.hpp"

namespace oracle {

/// Modular arithmetic over a small prime p, written out directly.
struct Zp {
  std::int64_t p;

  std::int64_t norm(std::int64_t a) const { return ((a % p) + p) % p; }
  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t r = 1;
    a = norm(a);
    while (e > 0) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }
  std::int64_t inv(std::int64_t a) const { return pow(a, p - 2); }
};

/// Value at x of the Lagrange interpolant through (xs[i], ys[i]) over Z_p,
/// from the textbook product formula.
inline std::int64_t lagrange_at(const Zp& z, const std::vector<std::int64_t>& xs,
                                const std::vector<std::int64_t>& ys, std::int64_t x) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::int64_t num = 1, den = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      num = num * z.norm(x - xs[j]) % z.p;
      den = den * z.norm(xs[i] - xs[j]) % z.p;
    }
    acc = (acc + ys[i] * num % z.p * z.inv(den)) % z.p;
  }
  return acc;
}

/// Brute-force decoding: among all (d+1)-subsets of the received positions,
/// the degree-d interpolants agreeing with at least n - t positions. Returns
/// the values at `targets` when exactly one distinct such polynomial exists.
inline std::optional<std::vector<std::int64_t>> subset_decode(const Zp& z, const std::vector<std::int64_t>& xs,
                                                              const std::vector<std::int64_t>& ys, std::size_t d,
                                                              std::size_t t, const std::vector<std::int64_t>& targets) {
  const std::size_t n = xs.size();
  std::optional<std::vector<std::int64_t>> found;
  std::vector<std::size_t> pick(d + 1);
  for (std::size_t i = 0; i <= d; ++i) pick[i] = i;
  while (true) {
    std::vector<std::int64_t> px, py;
    for (auto i : pick) {
      px.push_back(xs[i]);
      py.push_back(ys[i]);
    }
    std::size_t agree = 0;
    for (std::size_t i = 0; i < n; ++i) agree += lagrange_at(z, px, py, xs[i]) == ys[i] ? 1 : 0;
    if (agree + t >= n) {
      std::vector<std::int64_t> vals;
      for (auto x : targets) vals.push_back(lagrange_at(z, px, py, x));
      if (found && *found != vals) return std::nullopt;
      found = vals;
    }
    std::size_t i = d + 1;
    while (i > 0 && pick[i - 1] == n - (d + 1) + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j <= d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return found;
}

/// mu_f(S) = XOR of f(T) over all T subset of S (S, T as index masks).
inline std::vector<std::uint32_t> mobius_monomials(const boolecode::BooleanFunction& f) {
  std::vector<std::uint32_t> out;
  const std::uint32_t size = static_cast<std::uint32_t>(f.size());
  for (std::uint32_t s = 0; s < size; ++s) {
    bool mu = false;
    for (std::uint32_t t = s;; t = (t - 1) & s) {
      mu ^= f.at(t);
      if (t == 0) break;
    }
    if (mu) out.push_back(s);
  }
  return out;
}

inline boolecode::BooleanFunction random_function(std::size_t m, boolecode::Rng& rng, double density = 0.5) {
  std::vector<std::uint8_t> t(std::size_t{1} << m);
  for (auto& b : t) b = rng.unit() < density ? 1 : 0;
  return boolecode::BooleanFunction(m, std::move(t));
}

/// Hand-written threshold formulas, evaluated with plain signed integers.
inline std::int64_t floor_half_clamped(std::int64_t interior) { return interior < 0 ? 0 : interior / 2; }
inline std::int64_t ilog2(std::int64_t x) {
  std::int64_t r = -1;
  while (x > 0) {
    x >>= 1;
    ++r;
  }
  return r;
}
inline std::int64_t beta_mds(std::int64_t n, std::int64_t k) { return floor_half_clamped(n - k); }
inline std::int64_t beta_lcc(std::int64_t n, std::int64_t k, std::int64_t deg) {
  return floor_half_clamped(n - (k - 1) * deg - 1);
}
inline std::int64_t beta_ptf(std::int64_t n, std::int64_t k, std::int64_t w) {
  return floor_half_clamped(n - (k - 1) * (ilog2(w) + 1) - 1);
}
/// floor(log2(w / D)) computed on the exact rational w / D.
inline std::int64_t floor_log2_ratio(std::int64_t w, std::int64_t d) {
  std::int64_t r = 0;
  while (w >= 2 * d) {
    d *= 2;
    ++r;
  }
  return r;
}
inline std::int64_t beta_dptf_ratio(std::int64_t n, std::int64_t k, std::int64_t w, std::int64_t d) {
  return floor_half_clamped(n - (k - 1) * (floor_log2_ratio(w, d) + 1) - 1);
}
inline std::int64_t beta_dataaug(std::int64_t n, std::int64_t k, std::int64_t deg, std::int64_t q) {
  const std::int64_t u = deg / q, r = deg % q;
  return floor_half_clamped(n - (k - 1) * (u + (r > 0 ? 1 : 0)) - 1);
}

}  // namespace oracle
