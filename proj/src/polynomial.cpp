#include "boolecode/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace boolecode {

namespace mp = boost::multiprecision;

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

MultivariatePolynomial::MultivariatePolynomial(std::size_t vars, std::vector<PolyTerm> terms) : vars_(vars) {
  std::map<Exponents, std::size_t> seen;
  for (auto& t : terms) {
    require(t.exps.size() == vars, "monomial exponent vector has the wrong length");
    auto [it, fresh] = seen.emplace(t.exps, terms_.size());
    if (fresh) {
      terms_.push_back(std::move(t));
    } else {
      terms_[it->second].coeff += t.coeff;
    }
  }
  std::erase_if(terms_, [](const PolyTerm& t) { return t.coeff == 0; });
}

MultivariatePolynomial MultivariatePolynomial::from_anf(const AnfForm& anf) {
  std::vector<PolyTerm> terms;
  for (auto mask : anf.masks()) {
    Exponents e(anf.variables(), 0);
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = (mask >> j) & 1U;
    terms.push_back({Rational(1), std::move(e)});
  }
  return MultivariatePolynomial(anf.variables(), std::move(terms));
}

std::size_t MultivariatePolynomial::degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max<std::size_t>(d, total_degree(t.exps));
  return d;
}

Rational MultivariatePolynomial::evaluate(std::span<const Rational> x) const {
  require(x.size() == vars_, "input length does not match the polynomial");
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t j = 0; j < vars_; ++j) {
      for (unsigned i = 0; i < t.exps[j]; ++i) v *= x[j];
    }
    acc += v;
  }
  return acc;
}

double MultivariatePolynomial::evaluate(std::span<const double> x) const {
  require(x.size() == vars_, "input length does not match the polynomial");
  double acc = 0;
  for (const auto& t : terms_) {
    double v = t.coeff.convert_to<double>();
    for (std::size_t j = 0; j < vars_; ++j) v *= std::pow(x[j], static_cast<double>(t.exps[j]));
    acc += v;
  }
  return acc;
}

BigInt MultivariatePolynomial::common_denominator() const {
  BigInt l = 1;
  for (const auto& t : terms_) l = mp::lcm(l, mp::denominator(t.coeff));
  return l;
}

Rational MultivariatePolynomial::magnitude_bound(const BigInt& radius) const {
  Rational s = 0;
  for (const auto& t : terms_) {
    BigInt r = mp::pow(radius, total_degree(t.exps));
    s += mp::abs(t.coeff) * r;
  }
  return s;
}

std::string MultivariatePolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coeff < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << '-';
    first = false;
    const Rational mag = mp::abs(t.coeff);
    const bool constant = total_degree(t.exps) == 0;
    if (mag != 1 || constant) os << mag;
    for (std::size_t j = 0; j < t.exps.size(); ++j) {
      if (t.exps[j] == 0) continue;
      os << var << j + 1;
      if (t.exps[j] > 1) os << '^' << t.exps[j];
    }
  }
  return os.str();
}

std::size_t PolynomialSystem::degree() const {
  std::size_t d = 0;
  for (const auto& c : components) d = std::max(d, c.degree());
  return d;
}

PolynomialSystem single_output(MultivariatePolynomial f) {
  PolynomialSystem s;
  s.vars = f.variables();
  s.components.push_back(std::move(f));
  return s;
}

PolynomialSystem matrix_square_system(std::size_t n) {
  require(n >= 1 && n <= 4, "matrix size must be in [1, 4]");
  PolynomialSystem s;
  s.vars = n * n;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<PolyTerm> terms;
      for (std::size_t t = 0; t < n; ++t) {
        Exponents e(n * n, 0);
        ++e[r * n + t];
        ++e[t * n + c];
        terms.push_back({Rational(1), std::move(e)});
      }
      s.components.emplace_back(n * n, std::move(terms));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

// Sorted variable-occurrence list of an exponent vector.
std::vector<std::size_t> occurrences(const Exponents& e) {
  std::vector<std::size_t> occ;
  for (std::size_t j = 0; j < e.size(); ++j) occ.insert(occ.end(), e[j], j);
  return occ;
}

std::size_t distinct(const Exponents& e) {
  return static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [](unsigned v) { return v != 0; }));
}

// All multisets of `deg` variables out of `vars`, as occurrence lists.
void multisets(std::size_t vars, unsigned deg, std::size_t from, std::vector<std::size_t>& cur,
               std::vector<Exponents>& out) {
  if (cur.size() == deg) {
    Exponents e(vars, 0);
    for (auto j : cur) ++e[j];
    out.push_back(std::move(e));
    return;
  }
  for (std::size_t j = from; j < vars; ++j) {
    cur.push_back(j);
    multisets(vars, deg, j, cur, out);
    cur.pop_back();
  }
}

}  // namespace

AugmentationLayout::AugmentationLayout(std::size_t vars, unsigned q) : vars_(vars), q_(q) {
  require(vars >= 1, "augmentation needs at least one variable");
  require(q >= 1 && q <= 8, "augmentation degree q must be in [1, 8]");
  for (std::size_t j = 0; j < vars; ++j) {
    Exponents e(vars, 0);
    e[j] = 1;
    slots_.push_back(std::move(e));
  }
  for (unsigned deg = 2; deg <= q; ++deg) {
    std::vector<Exponents> level;
    std::vector<std::size_t> cur;
    multisets(vars, deg, 0, cur, level);
    std::stable_sort(level.begin(), level.end(), [](const Exponents& a, const Exponents& b) {
      const auto da = distinct(a), db = distinct(b);
      if (da != db) return da < db;
      return occurrences(a) < occurrences(b);
    });
    slots_.insert(slots_.end(), level.begin(), level.end());
    require(slots_.size() <= 20000, "augmented input is too large");
  }
}

std::size_t AugmentationLayout::slot_of(const Exponents& e) const {
  const auto it = std::find(slots_.begin(), slots_.end(), e);
  if (it == slots_.end()) fail(ErrorCode::invalid_argument, "monomial is not an augmented slot");
  return static_cast<std::size_t>(it - slots_.begin());
}

AugmentedPolynomial augment_polynomial(const MultivariatePolynomial& f, unsigned q) {
  AugmentationLayout layout(f.variables(), q);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < layout.size(); ++i) index.emplace(layout.slots()[i], i);

  std::vector<PolyTerm> terms;
  for (const auto& t : f.terms()) {
    const auto occ = occurrences(t.exps);
    Exponents h(layout.size(), 0);
    for (std::size_t at = 0; at < occ.size(); at += q) {
      Exponents chunk(f.variables(), 0);
      for (std::size_t i = at; i < std::min<std::size_t>(at + q, occ.size()); ++i) ++chunk[occ[i]];
      ++h[index.at(chunk)];
    }
    terms.push_back({t.coeff, std::move(h)});
  }
  return {std::move(layout), MultivariatePolynomial(index.size(), std::move(terms))};
}

std::string augmented_to_string(const AugmentedPolynomial& a) {
  const auto& p = a.h;
  const std::size_t m = a.layout.variables();
  if (p.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = t.coeff < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << '-';
    first = false;
    const Rational mag = mp::abs(t.coeff);
    if (mag != 1 || total_degree(t.exps) == 0) os << mag;
    for (std::size_t j = 0; j < t.exps.size(); ++j) {
      if (t.exps[j] == 0) continue;
      if (j < m) os << 'x' << j + 1;
      else os << 'y' << j - m + 1;
      if (t.exps[j] > 1) os << '^' << t.exps[j];
    }
  }
  return os.str();
}

LogarithmicInput logarithmic_input(std::span<const double> x) {
  LogarithmicInput in;
  in.w.reserve(x.size());
  for (double v : x) {
    require(std::isfinite(v), "logarithmic input needs finite entries");
    in.zero.push_back(v == 0.0);
    in.negative.push_back(v < 0.0);
    in.w.push_back(v == 0.0 ? 0.0 : std::log(std::abs(v)));
  }
  return in;
}

}  // namespace boolecode
