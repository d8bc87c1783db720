#pragma once

// Included at the end of field.hpp; not a standalone header.

#include <type_traits>

namespace boolecode {

template <Field F>
typename F::Element field_from_rational(const F& f, const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if constexpr (std::is_same_v<F, RealField>) {
    return q.template convert_to<double>();
  } else if constexpr (std::is_same_v<F, BinaryField>) {
    if ((den & 1) == 0) fail(ErrorCode::invalid_argument, "even denominator has no image in GF(2^s)");
    return static_cast<typename F::Element>((num & 1) != 0 ? 1 : 0);
  } else {
    const auto d = f.from_big(den);
    if (f.is_zero(d)) fail(ErrorCode::invalid_argument, "field characteristic divides a coefficient denominator");
    return f.mul(f.from_big(num), f.inv(d));
  }
}

}  // namespace boolecode
