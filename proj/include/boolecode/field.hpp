#pragma once

// Exact arithmetic substrate. Three finite fields share one compile-time
// interface (the Field concept) so that codes and pipelines are written once:
//
//   PrimeField64   prime p < 2^62, residues in uint64_t
//   BigPrimeField  arbitrary-precision prime p, residues in cpp_int
//   BinaryField    GF(2^s), s <= 16, log/antilog tables
//
// RealField models the same interface over double for the real-valued
// (logarithm) pipeline; it is not exact and is never used for threshold tests.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "boolecode/error.hpp"
#include "boolecode/rng.hpp"

namespace boolecode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Miller-Rabin with 64 rounds (after trial division), seeded deterministically.
bool is_probable_prime(const BigInt& n);
/// Smallest prime strictly greater than n.
BigInt next_prime_above(const BigInt& n);

template <class F>
concept Field = std::copy_constructible<F> &&
    requires(const F& f, const typename F::Element& a, const typename F::Element& b, Rng& rng,
             std::int64_t z, std::size_t i) {
      { f.zero() } -> std::convertible_to<typename F::Element>;
      { f.one() } -> std::convertible_to<typename F::Element>;
      { f.add(a, b) } -> std::convertible_to<typename F::Element>;
      { f.sub(a, b) } -> std::convertible_to<typename F::Element>;
      { f.mul(a, b) } -> std::convertible_to<typename F::Element>;
      { f.neg(a) } -> std::convertible_to<typename F::Element>;
      { f.inv(a) } -> std::convertible_to<typename F::Element>;
      { f.is_zero(a) } -> std::convertible_to<bool>;
      { f.equal(a, b) } -> std::convertible_to<bool>;
      { f.from_int(z) } -> std::convertible_to<typename F::Element>;
      { f.random(rng) } -> std::convertible_to<typename F::Element>;
      { f.point(i, i) } -> std::convertible_to<typename F::Element>;
      { f.describe() } -> std::convertible_to<std::string>;
    };

/// Prime fields additionally support lifting residues to signed integers.
template <class F>
concept PrimeFieldLike = Field<F> && requires(const F& f, const typename F::Element& a) {
  { f.signum(a) } -> std::convertible_to<int>;
  { f.lift(a) } -> std::convertible_to<BigInt>;
  { f.modulus_big() } -> std::convertible_to<BigInt>;
};

class PrimeField64 {
 public:
  using Element = std::uint64_t;

  /// p must be a prime below 2^62; primality is checked by FieldSpec.
  explicit PrimeField64(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  BigInt modulus_big() const { return BigInt(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element add(Element a, Element b) const noexcept {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    if (small_) return (a * b) % p_;
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Element inv(Element a) const;
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool equal(Element a, Element b) const noexcept { return a == b; }
  Element from_int(std::int64_t z) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = z % p;
    return static_cast<Element>(r < 0 ? r + p : r);
  }
  Element from_big(const BigInt& z) const;
  Element random(Rng& rng) const { return rng.below(p_); }
  /// Canonical evaluation points 1, 2, 3, ...
  Element point(std::size_t i, std::size_t /*count*/) const noexcept { return (i + 1) % p_; }

  /// Representative in (-p/2, p/2].
  std::int64_t lift_small(Element a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                      : static_cast<std::int64_t>(a);
  }
  BigInt lift(Element a) const { return BigInt(lift_small(a)); }
  int signum(Element a) const noexcept {
    const auto z = lift_small(a);
    return (z > 0) - (z < 0);
  }
  std::string to_string(Element a) const { return std::to_string(a); }
  std::string describe() const { return "GF(" + std::to_string(p_) + ")"; }

 private:
  std::uint64_t p_;
  bool small_;
};

class BigPrimeField {
 public:
  using Element = BigInt;

  explicit BigPrimeField(BigInt p);

  const BigInt& modulus() const noexcept { return *p_; }
  BigInt modulus_big() const { return *p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const {
    Element s = a + b;
    if (s >= *p_) s -= *p_;
    return s;
  }
  Element sub(const Element& a, const Element& b) const {
    if (a >= b) return a - b;
    return a + *p_ - b;
  }
  Element neg(const Element& a) const { return a == 0 ? Element(0) : Element(*p_ - a); }
  Element mul(const Element& a, const Element& b) const { return (a * b) % *p_; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_int(std::int64_t z) const { return from_big(BigInt(z)); }
  Element from_big(const BigInt& z) const {
    BigInt r = z % *p_;
    if (r < 0) r += *p_;
    return r;
  }
  Element random(Rng& rng) const;
  Element point(std::size_t i, std::size_t /*count*/) const { return from_big(BigInt(i + 1)); }

  BigInt lift(const Element& a) const { return a > half_ ? BigInt(a - *p_) : a; }
  int signum(const Element& a) const { return a == 0 ? 0 : (a > half_ ? -1 : 1); }
  std::string to_string(const Element& a) const { return a.str(); }
  std::string describe() const { return "GF(" + p_->str() + ")"; }

 private:
  std::shared_ptr<const BigInt> p_;
  BigInt half_;
  std::size_t bits_;
};

class BinaryField {
 public:
  using Element = std::uint32_t;
  static constexpr unsigned kMaxDegree = 16;

  /// `poly` includes the x^s term; it must be irreducible of degree s.
  BinaryField(unsigned s, std::uint32_t poly);

  unsigned degree() const noexcept { return s_; }
  std::uint32_t reduction_poly() const noexcept { return poly_; }
  std::uint32_t order() const noexcept { return std::uint32_t{1} << s_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element add(Element a, Element b) const noexcept { return a ^ b; }
  Element sub(Element a, Element b) const noexcept { return a ^ b; }
  Element neg(Element a) const noexcept { return a; }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return tables_->exp[tables_->log[a] + tables_->log[b]];
  }
  Element inv(Element a) const;
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool equal(Element a, Element b) const noexcept { return a == b; }
  /// Image of the integer z, i.e. z mod 2.
  Element from_int(std::int64_t z) const noexcept { return static_cast<Element>(z & 1); }
  Element random(Rng& rng) const { return static_cast<Element>(rng.below(order())); }
  /// Canonical evaluation points: the elements whose polynomial-basis
  /// encodings are the integers 1, 2, 3, ...
  Element point(std::size_t i, std::size_t /*count*/) const noexcept {
    return static_cast<Element>((i + 1) & (order() - 1));
  }
  std::string to_string(Element a) const { return std::to_string(a); }
  std::string describe() const;

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;  // doubled length so exp[log a + log b] needs no reduction
  };
  unsigned s_;
  std::uint32_t poly_;
  std::shared_ptr<const Tables> tables_;
};

/// Carry-less arithmetic on GF(2)[x] polynomials encoded as bit masks.
bool is_irreducible_gf2(std::uint64_t poly);
/// Smallest irreducible polynomial of degree s (as a bit mask including x^s).
std::uint32_t default_binary_poly(unsigned s);

class RealField {
 public:
  using Element = double;

  Element zero() const noexcept { return 0.0; }
  Element one() const noexcept { return 1.0; }
  Element add(Element a, Element b) const noexcept { return a + b; }
  Element sub(Element a, Element b) const noexcept { return a - b; }
  Element neg(Element a) const noexcept { return -a; }
  Element mul(Element a, Element b) const noexcept { return a * b; }
  Element inv(Element a) const {
    if (a == 0.0) fail(ErrorCode::invalid_argument, "division by zero");
    return 1.0 / a;
  }
  bool is_zero(Element a) const noexcept { return a == 0.0; }
  bool equal(Element a, Element b) const noexcept { return a == b; }
  Element from_int(std::int64_t z) const noexcept { return static_cast<double>(z); }
  /// Uniform in [-10, 10].
  Element random(Rng& rng) const { return rng.uniform(-10.0, 10.0); }
  /// Chebyshev nodes on [-1, 1] keep the small real interpolation problems
  /// well conditioned.
  Element point(std::size_t i, std::size_t count) const noexcept {
    return std::cos((2.0 * static_cast<double>(i) + 1.0) * std::numbers::pi / (2.0 * static_cast<double>(count)));
  }
  std::string to_string(Element a) const { return std::to_string(a); }
  std::string describe() const { return "R (double)"; }
};

/// Runtime description of a finite field.
class FieldSpec {
 public:
  enum class Kind { prime, binary };

  /// Throws unless p is prime.
  static FieldSpec prime(const BigInt& p);
  /// GF(2^s) with the canonical (smallest) irreducible polynomial.
  static FieldSpec binary(unsigned s);
  /// GF(2^s) modulo `poly`; throws unless `poly` is irreducible of degree s.
  static FieldSpec binary(unsigned s, std::uint32_t poly);
  /// Smallest s with 2^s >= points + 1 (so `points` distinct nonzero elements exist).
  static FieldSpec binary_for_points(std::size_t points);

  Kind kind() const noexcept { return kind_; }
  const BigInt& modulus() const noexcept { return modulus_; }
  unsigned binary_degree() const noexcept { return s_; }
  std::uint32_t reduction_poly() const noexcept { return poly_; }
  /// Number of elements, as an arbitrary-precision integer.
  BigInt order() const;
  std::string describe() const;

 private:
  Kind kind_ = Kind::prime;
  BigInt modulus_;
  unsigned s_ = 0;
  std::uint32_t poly_ = 0;
};

/// Smallest prime p > 2B + 1, so every integer z with |z| <= B survives the
/// embedding into GF(p) and lifts back unchanged.
FieldSpec modulus_for_bound(const BigInt& bound);

/// Prime field large enough for both the lift bound and `points` distinct
/// canonical evaluation points 1..points.
FieldSpec prime_field_for(const BigInt& bound, std::size_t points);

/// Signed representative in (-p/2, p/2] of a residue of a prime FieldSpec.
BigInt lift_signed(const FieldSpec& spec, const BigInt& residue);

inline constexpr std::uint64_t kSmallPrimeLimit = std::uint64_t{1} << 62;

/// Calls fn with the concrete field type for `spec`.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind() == FieldSpec::Kind::binary) {
    return fn(BinaryField(spec.binary_degree(), spec.reduction_poly()));
  }
  if (spec.modulus() < kSmallPrimeLimit) {
    return fn(PrimeField64(spec.modulus().convert_to<std::uint64_t>()));
  }
  return fn(BigPrimeField(spec.modulus()));
}

/// Converts an exact rational to a prime-field element (requires p not
/// dividing the denominator) or, for GF(2^s), to its image in the prime
/// subfield (requires an odd denominator).
template <Field F>
typename F::Element field_from_rational(const F& f, const Rational& q);

}  // namespace boolecode

#include "boolecode/field_impl.hpp"
