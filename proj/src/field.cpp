#include "boolecode/field.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <bit>
#include <random>
#include <sstream>

namespace boolecode {

namespace mp = boost::multiprecision;

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  // Fixed seed: the test is a pure function of n.
  std::mt19937_64 gen(0x5eed5eedULL);
  return mp::miller_rabin_test(n, 64, gen);
}

BigInt next_prime_above(const BigInt& n) {
  if (n < 2) return 2;
  BigInt c = n + 1;
  if (c > 2 && (c & 1) == 0) ++c;
  while (!is_probable_prime(c)) c += 2;
  return c;
}

// ---------------------------------------------------------------------------

PrimeField64::PrimeField64(std::uint64_t p) : p_(p), small_(p < (std::uint64_t{1} << 32)) {
  require(p >= 2 && p < kSmallPrimeLimit, "PrimeField64 modulus out of range");
}

PrimeField64::Element PrimeField64::inv(Element a) const {
  if (a == 0) fail(ErrorCode::invalid_argument, "inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<Element>(t);
}

PrimeField64::Element PrimeField64::from_big(const BigInt& z) const {
  BigInt r = z % p_;
  if (r < 0) r += p_;
  return r.convert_to<std::uint64_t>();
}

// ---------------------------------------------------------------------------

BigPrimeField::BigPrimeField(BigInt p)
    : p_(std::make_shared<const BigInt>(std::move(p))), half_(*p_ / 2), bits_(mp::msb(*p_) + 1) {
  require(*p_ >= 2, "prime modulus must be >= 2");
}

BigPrimeField::Element BigPrimeField::inv(const Element& a) const {
  if (a == 0) fail(ErrorCode::invalid_argument, "inverse of zero");
  BigInt t = 0, new_t = 1, r = *p_, new_r = a;
  while (new_r != 0) {
    BigInt q = r / new_r;
    BigInt tmp = t - q * new_t;
    t = std::move(new_t);
    new_t = std::move(tmp);
    tmp = r - q * new_r;
    r = std::move(new_r);
    new_r = std::move(tmp);
  }
  if (t < 0) t += *p_;
  return t;
}

BigPrimeField::Element BigPrimeField::random(Rng& rng) const {
  // Rejection sampling on bits_ random bits.
  for (;;) {
    BigInt x = 0;
    std::size_t have = 0;
    while (have < bits_) {
      x <<= 64;
      x |= rng.next();
      have += 64;
    }
    x >>= (have - bits_);
    if (x < *p_) return x;
  }
}

// ---------------------------------------------------------------------------

namespace {

unsigned poly_degree(std::uint64_t a) { return a == 0 ? 0 : static_cast<unsigned>(std::bit_width(a) - 1); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = poly_degree(m);
  while (a != 0 && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t r = 0;
  a = poly_mod(a, m);
  const unsigned dm = poly_degree(m);
  while (b != 0) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> dm) & 1U) a ^= m;
  }
  return r;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = poly_mod(a, b);
    a = b;
    b = t;
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible_gf2(std::uint64_t poly) {
  const unsigned s = poly_degree(poly);
  if (s == 0 || s > 31) return false;
  if (s == 1) return true;
  // Ben-Or: gcd(x^(2^i) - x mod f, f) == 1 for i = 1..floor(s/2).
  std::uint64_t xp = 2;  // x
  for (unsigned i = 1; i <= s / 2; ++i) {
    xp = poly_mulmod(xp, xp, poly);
    if (poly_gcd(poly, xp ^ 2U) != 1) return false;
  }
  return true;
}

std::uint32_t default_binary_poly(unsigned s) {
  require(s >= 1 && s <= BinaryField::kMaxDegree, "binary field degree must be in [1, 16]");
  for (std::uint32_t tail = 1; tail < (std::uint32_t{1} << s); ++tail) {
    const std::uint32_t poly = (std::uint32_t{1} << s) | tail;
    if (is_irreducible_gf2(poly)) return poly;
  }
  fail(ErrorCode::internal, "no irreducible polynomial found");
}

BinaryField::BinaryField(unsigned s, std::uint32_t poly) : s_(s), poly_(poly) {
  require(s >= 1 && s <= kMaxDegree, "binary field degree must be in [1, 16]");
  require(poly_degree(poly) == s && is_irreducible_gf2(poly), "reduction polynomial is not irreducible of degree s");
  const std::uint32_t q = order();
  const std::uint32_t group = q - 1;
  const auto factors = prime_factors(group);
  auto pow = [&](std::uint64_t g, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1U) r = poly_mulmod(r, g, poly);
      g = poly_mulmod(g, g, poly);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t gen = 0;
  for (std::uint32_t g = (s == 1 ? 1U : 2U); g < q; ++g) {
    bool full = true;
    for (auto f : factors) {
      if (pow(g, group / f) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      gen = g;
      break;
    }
  }
  if (gen == 0) fail(ErrorCode::internal, "no generator found for GF(2^s)");
  auto t = std::make_shared<Tables>();
  t->log.assign(q, 0);
  t->exp.assign(2 * static_cast<std::size_t>(group) + 1, 0);
  std::uint64_t x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    t->exp[i] = static_cast<std::uint32_t>(x);
    t->log[x] = i;
    x = poly_mulmod(x, gen, poly);
  }
  for (std::uint32_t i = group; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - group];
  tables_ = std::move(t);
}

BinaryField::Element BinaryField::inv(Element a) const {
  if (a == 0) fail(ErrorCode::invalid_argument, "inverse of zero");
  const std::uint32_t group = order() - 1;
  return tables_->exp[(group - tables_->log[a]) % group];
}

std::string BinaryField::describe() const {
  std::ostringstream os;
  os << "GF(2^" << s_ << ") mod 0x" << std::hex << poly_;
  return os.str();
}

// ---------------------------------------------------------------------------

FieldSpec FieldSpec::prime(const BigInt& p) {
  require(is_probable_prime(p), "field modulus " + p.str() + " is not prime");
  FieldSpec s;
  s.kind_ = Kind::prime;
  s.modulus_ = p;
  return s;
}

FieldSpec FieldSpec::binary(unsigned s) { return binary(s, default_binary_poly(s)); }

FieldSpec FieldSpec::binary(unsigned s, std::uint32_t poly) {
  require(s >= 1 && s <= BinaryField::kMaxDegree, "binary field degree must be in [1, 16]");
  require(poly_degree(poly) == s && is_irreducible_gf2(poly), "reduction polynomial is not irreducible of degree s");
  FieldSpec f;
  f.kind_ = Kind::binary;
  f.s_ = s;
  f.poly_ = poly;
  return f;
}

FieldSpec FieldSpec::binary_for_points(std::size_t points) {
  unsigned s = 1;
  while ((std::size_t{1} << s) < points + 1) ++s;
  require(s <= BinaryField::kMaxDegree, "too many evaluation points for GF(2^16)");
  return binary(s);
}

BigInt FieldSpec::order() const {
  if (kind_ == Kind::binary) return BigInt(1) << s_;
  return modulus_;
}

std::string FieldSpec::describe() const {
  return visit_field(*this, [](const auto& f) { return f.describe(); });
}

FieldSpec modulus_for_bound(const BigInt& bound) {
  require(bound >= 1, "magnitude bound must be >= 1");
  return FieldSpec::prime(next_prime_above(2 * bound + 1));
}

FieldSpec prime_field_for(const BigInt& bound, std::size_t points) {
  FieldSpec spec = modulus_for_bound(bound);
  if (spec.modulus() <= points) spec = FieldSpec::prime(next_prime_above(BigInt(points)));
  return spec;
}

BigInt lift_signed(const FieldSpec& spec, const BigInt& residue) {
  require(spec.kind() == FieldSpec::Kind::prime, "lift_signed needs a prime field");
  const BigInt& p = spec.modulus();
  require(residue >= 0 && residue < p, "residue out of range");
  return residue > p / 2 ? BigInt(residue - p) : residue;
}

}  // namespace boolecode
