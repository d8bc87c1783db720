#pragma once

// Systematic MDS (Reed-Solomon) codes, Lagrange coded computing, and
// error-and-erasure decoding by Berlekamp-Welch.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "boolecode/poly.hpp"

namespace boolecode {

enum class DecodeStatus {
  ok,
  /// Fewer non-erased symbols than the payload polynomial has coefficients.
  too_few_symbols,
  /// No polynomial of the payload degree lies within the correction radius.
  no_consistent_codeword,
  /// Two different interpolants both explain enough symbols (real decoder).
  ambiguous,
};

const char* to_string(DecodeStatus s) noexcept;

template <class T>
struct Decoded {
  DecodeStatus status = DecodeStatus::ok;
  T value{};

  bool ok() const noexcept { return status == DecodeStatus::ok; }
};

/// One symbol per worker; std::nullopt marks an erasure (no response).
template <class E>
struct ReceivedVector {
  std::vector<std::optional<E>> slots;

  std::size_t size() const noexcept { return slots.size(); }
  std::size_t erasures() const noexcept {
    return static_cast<std::size_t>(std::count(slots.begin(), slots.end(), std::nullopt));
  }
};

template <class E>
ReceivedVector<E> received_from(std::span<const E> values) {
  ReceivedVector<E> r;
  r.slots.assign(values.begin(), values.end());
  return r;
}

/// Largest e with 2e + (degree+1) <= available.
inline std::size_t correction_radius(std::size_t available, std::size_t degree) {
  return available < degree + 1 ? 0 : (available - degree - 1) / 2;
}

namespace detail {

/// Solves the square-or-wide system rows * u = rhs by Gauss-Jordan
/// elimination, free variables set to zero. Returns nullopt if inconsistent.
template <Field F>
std::optional<std::vector<typename F::Element>> solve_linear(const F& f,
                                                             std::vector<std::vector<typename F::Element>> a,
                                                             std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && f.is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const auto inv = f.inv(a[r][c]);
    for (std::size_t k = c; k <= cols; ++k) a[r][k] = f.mul(a[r][k], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || f.is_zero(a[i][c])) continue;
      const auto factor = a[i][c];
      for (std::size_t k = c; k <= cols; ++k) a[i][k] = f.sub(a[i][k], f.mul(factor, a[r][k]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!f.is_zero(a[i][cols])) return std::nullopt;
  }
  std::vector<typename F::Element> u(cols, f.zero());
  for (std::size_t i = 0; i < r; ++i) u[pivot_col[i]] = a[i][cols];
  return u;
}

}  // namespace detail

/// Berlekamp-Welch in linear-system form. Finds the polynomial of degree
/// <= `degree` within Hamming distance e = correction_radius(non-erased,
/// degree) of the received word, or nullopt if none exists.
template <Field F>
std::optional<Poly<F>> berlekamp_welch(const F& f, std::span<const typename F::Element> xs,
                                       const ReceivedVector<typename F::Element>& received, std::size_t degree) {
  using E = typename F::Element;
  require(xs.size() == received.size(), "received vector length does not match the code length");
  std::vector<E> px, py;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (received.slots[i]) {
      px.push_back(xs[i]);
      py.push_back(*received.slots[i]);
    }
  }
  const std::size_t n = px.size();
  if (n < degree + 1) return std::nullopt;
  const std::size_t e = correction_radius(n, degree);
  const std::size_t q_terms = e + degree + 1;
  const std::size_t cols = q_terms + e;

  // Q(x_i) - y_i (E_0 + ... + E_{e-1} x_i^{e-1}) = y_i x_i^e
  std::vector<std::vector<E>> a(n, std::vector<E>(cols + 1, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    E pw = f.one();
    for (std::size_t j = 0; j < q_terms; ++j) {
      a[i][j] = pw;
      if (j < e) a[i][q_terms + j] = f.neg(f.mul(py[i], pw));
      if (j == e) a[i][cols] = f.mul(py[i], pw);
      pw = f.mul(pw, px[i]);
    }
  }
  auto sol = detail::solve_linear(f, std::move(a), cols);
  if (!sol) return std::nullopt;

  Poly<F> q = make_poly(f, std::vector<E>(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(q_terms)));
  std::vector<E> loc(sol->begin() + static_cast<std::ptrdiff_t>(q_terms), sol->end());
  loc.push_back(f.one());
  Poly<F> locator = make_poly(f, std::move(loc));
  auto [p, rem] = poly_divmod(f, q, locator);
  if (!rem.is_zero() || p.degree() > static_cast<std::ptrdiff_t>(degree)) return std::nullopt;

  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!f.equal(poly_eval(f, p, px[i]), py[i])) ++disagreements;
  }
  if (disagreements > e) return std::nullopt;
  return p;
}

/// Unique decoding within radius correction_radius(non-erased, degree).
/// Tries the interpolant of the first degree+1 symbols before falling back
/// to Berlekamp-Welch; both return the same polynomial whenever one exists.
template <Field F>
Decoded<Poly<F>> rs_decode_poly(const F& f, std::span<const typename F::Element> xs,
                                const ReceivedVector<typename F::Element>& received, std::size_t degree) {
  using E = typename F::Element;
  require(xs.size() == received.size(), "received vector length does not match the code length");
  std::vector<E> px, py;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (received.slots[i]) {
      px.push_back(xs[i]);
      py.push_back(*received.slots[i]);
    }
  }
  const std::size_t n = px.size();
  if (n < degree + 1) return {DecodeStatus::too_few_symbols, {}};
  const std::size_t e = correction_radius(n, degree);

  auto head = lagrange_interpolate(f, std::span<const E>(px.data(), degree + 1),
                                   std::span<const E>(py.data(), degree + 1));
  std::size_t disagreements = 0;
  for (std::size_t i = degree + 1; i < n && disagreements <= e; ++i) {
    if (!f.equal(poly_eval(f, head, px[i]), py[i])) ++disagreements;
  }
  if (disagreements <= e) return {DecodeStatus::ok, std::move(head)};

  auto p = berlekamp_welch(f, xs, received, degree);
  if (!p) return {DecodeStatus::no_consistent_codeword, {}};
  return {DecodeStatus::ok, std::move(*p)};
}

/// Decodes many received words that share evaluation points and payload
/// degree, returning the payload's values at fixed target points.
///
/// The first attempt interpolates through degree+1 symbols avoiding known
/// suspects and accepts the result if it lies within the correction radius;
/// otherwise Berlekamp-Welch runs. A polynomial within the radius is unique,
/// so the shortcut never changes the answer. Interpolation matrices are
/// cached per choice of points.
template <Field F>
class RsDecoder {
 public:
  using Element = typename F::Element;

  RsDecoder(F field, std::vector<Element> eval_points, std::vector<Element> targets, std::size_t degree)
      : field_(std::move(field)),
        alpha_(std::move(eval_points)),
        targets_(std::move(targets)),
        degree_(degree),
        cache_(std::make_shared<Cache>()) {}

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return alpha_.size(); }

  /// `suspects` (optional, length N) is read to steer the shortcut and
  /// extended with the positions found in error.
  Decoded<std::vector<Element>> decode(const ReceivedVector<Element>& r, std::vector<bool>* suspects = nullptr) const {
    const auto& f = field_;
    require(r.size() == alpha_.size(), "received vector length does not match the code length");
    std::vector<std::size_t> live;
    live.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r.slots[i]) live.push_back(i);
    }
    const std::size_t d = degree_;
    if (live.size() < d + 1) return {DecodeStatus::too_few_symbols, {}};
    const std::size_t e = correction_radius(live.size(), d);

    std::vector<std::size_t> basis;
    basis.reserve(d + 1);
    for (std::size_t pass = 0; pass < 2 && basis.size() < d + 1; ++pass) {
      for (auto i : live) {
        if (basis.size() == d + 1) break;
        const bool suspect = suspects != nullptr && (*suspects)[i];
        if (suspect == (pass == 1)) basis.push_back(i);
      }
    }
    const auto& m = matrix(basis);
    auto predict = [&](std::size_t row) {
      Element acc = f.zero();
      for (std::size_t s = 0; s <= d; ++s) acc = f.add(acc, f.mul(m[row][s], *r.slots[basis[s]]));
      return acc;
    };
    std::vector<std::size_t> bad;
    for (auto i : live) {
      if (!f.equal(predict(i), *r.slots[i])) {
        bad.push_back(i);
        if (bad.size() > e) break;
      }
    }
    if (bad.size() <= e) {
      std::vector<Element> out;
      out.reserve(targets_.size());
      for (std::size_t t = 0; t < targets_.size(); ++t) out.push_back(predict(alpha_.size() + t));
      note(suspects, bad);
      return {DecodeStatus::ok, std::move(out)};
    }

    auto p = berlekamp_welch(f, std::span<const Element>(alpha_), r, d);
    if (!p) return {DecodeStatus::no_consistent_codeword, {}};
    bad.clear();
    for (auto i : live) {
      if (!f.equal(poly_eval(f, *p, alpha_[i]), *r.slots[i])) bad.push_back(i);
    }
    note(suspects, bad);
    return {DecodeStatus::ok, poly_eval_batch(f, *p, std::span<const Element>(targets_))};
  }

 private:
  using Matrix = std::vector<std::vector<Element>>;
  struct Cache {
    std::mutex mu;
    std::map<std::vector<std::size_t>, std::shared_ptr<const Matrix>> entries;
  };

  static void note(std::vector<bool>* suspects, const std::vector<std::size_t>& bad) {
    if (suspects == nullptr) return;
    for (auto i : bad) (*suspects)[i] = true;
  }

  /// Rows: all N evaluation points, then the targets.
  const Matrix& matrix(const std::vector<std::size_t>& basis) const {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->entries.find(basis);
    if (it != cache_->entries.end()) return *it->second;
    std::vector<Element> from;
    for (auto i : basis) from.push_back(alpha_[i]);
    std::vector<Element> to(alpha_);
    to.insert(to.end(), targets_.begin(), targets_.end());
    auto mat = std::make_shared<const Matrix>(
        lagrange_basis_matrix(field_, std::span<const Element>(from), std::span<const Element>(to)));
    return *cache_->entries.emplace(basis, std::move(mat)).first->second;
  }

  F field_;
  std::vector<Element> alpha_;
  std::vector<Element> targets_;
  std::size_t degree_;
  std::shared_ptr<Cache> cache_;
};

/// Canonical points 0..count-1 of a field.
template <Field F>
std::vector<typename F::Element> canonical_points(const F& f, std::size_t count) {
  std::vector<typename F::Element> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(f.point(i, count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      require(!f.equal(pts[i], pts[j]), "field too small for " + std::to_string(count) + " distinct points");
    }
  }
  return pts;
}

/// Systematic (N, K) MDS code: the codeword is the degree-(K-1) interpolant
/// through (omega_k, data_k) evaluated at alpha_1..alpha_N, with omega = the
/// first K alphas.
template <Field F>
class MdsCode {
 public:
  using Element = typename F::Element;

  MdsCode(F field, std::size_t n, std::size_t k, std::vector<Element> points)
      : field_(std::move(field)), n_(n), k_(k), alpha_(std::move(points)) {
    require(k >= 1 && n >= k, "MDS code needs N >= K >= 1");
    require(alpha_.size() == n, "MDS code needs exactly N evaluation points");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) require(!field_.equal(alpha_[i], alpha_[j]), "evaluation points must be distinct");
    }
    generator_ = lagrange_basis_matrix(field_, data_points(), std::span<const Element>(alpha_));
  }

  /// Points 1..N (or Chebyshev nodes for RealField).
  static MdsCode canonical(F field, std::size_t n, std::size_t k) {
    auto pts = canonical_points(field, n);
    return MdsCode(std::move(field), n, k, std::move(pts));
  }

  const F& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::span<const Element> evaluation_points() const noexcept { return alpha_; }
  std::span<const Element> data_points() const noexcept { return {alpha_.data(), k_}; }

  std::vector<Element> encode(std::span<const Element> data) const {
    require(data.size() == k_, "MDS encode needs exactly K data symbols");
    std::vector<Element> out(n_, field_.zero());
    for (std::size_t t = 0; t < n_; ++t) {
      if (t < k_) {
        out[t] = data[t];
        continue;
      }
      for (std::size_t s = 0; s < k_; ++s) out[t] = field_.add(out[t], field_.mul(generator_[t][s], data[s]));
    }
    return out;
  }

  /// Recovers the payload polynomial (degree `degree`, default K-1) and
  /// returns its values at the K data points.
  Decoded<std::vector<Element>> decode(const ReceivedVector<Element>& received, std::size_t degree) const {
    return decoder(degree).decode(received);
  }
  Decoded<std::vector<Element>> decode(const ReceivedVector<Element>& received) const {
    return decode(received, k_ - 1);
  }

  /// Reusable decoder for payloads of the given degree.
  RsDecoder<F> decoder(std::size_t degree) const {
    const auto w = data_points();
    return RsDecoder<F>(field_, alpha_, std::vector<Element>(w.begin(), w.end()), degree);
  }

 private:
  F field_;
  std::size_t n_, k_;
  std::vector<Element> alpha_;
  std::vector<std::vector<Element>> generator_;
};

template <Field F>
Decoded<std::vector<typename F::Element>> rs_decode(const MdsCode<F>& code,
                                                    const ReceivedVector<typename F::Element>& received,
                                                    std::size_t payload_degree) {
  return code.decode(received, payload_degree);
}

/// Lagrange coded computing: data X_1..X_K placed at beta_1..beta_K, worker n
/// stores the coordinate-wise interpolant evaluated at alpha_n.
template <Field F>
class LccCode {
 public:
  using Element = typename F::Element;

  LccCode(F field, std::size_t n, std::size_t k, std::vector<Element> beta, std::vector<Element> alpha)
      : field_(std::move(field)), n_(n), k_(k), beta_(std::move(beta)), alpha_(std::move(alpha)) {
    require(k >= 1 && n >= 1, "LCC needs N >= 1 and K >= 1");
    require(beta_.size() == k && alpha_.size() == n, "LCC point counts do not match N and K");
    std::vector<Element> all(beta_);
    all.insert(all.end(), alpha_.begin(), alpha_.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) require(!field_.equal(all[i], all[j]), "LCC points must be distinct");
    }
    basis_ = lagrange_basis_matrix(field_, std::span<const Element>(beta_), std::span<const Element>(alpha_));
  }

  /// beta = canonical points 0..K-1, alpha = canonical points K..K+N-1.
  static LccCode canonical(F field, std::size_t n, std::size_t k) {
    auto pts = canonical_points(field, n + k);
    std::vector<Element> beta(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Element> alpha(pts.begin() + static_cast<std::ptrdiff_t>(k), pts.end());
    return LccCode(std::move(field), n, k, std::move(beta), std::move(alpha));
  }

  const F& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::span<const Element> evaluation_points() const noexcept { return alpha_; }
  std::span<const Element> data_points() const noexcept { return beta_; }

  std::vector<std::vector<Element>> encode(const std::vector<std::vector<Element>>& data) const {
    require(data.size() == k_, "LCC encode needs exactly K data vectors");
    const std::size_t len = data.front().size();
    for (const auto& v : data) require(v.size() == len, "LCC data vectors must have equal length");
    std::vector<std::vector<Element>> out(n_, std::vector<Element>(len, field_.zero()));
    for (std::size_t t = 0; t < n_; ++t) {
      for (std::size_t s = 0; s < k_; ++s) {
        const auto& c = basis_[t][s];
        if (field_.is_zero(c)) continue;
        for (std::size_t j = 0; j < len; ++j) {
          if (!field_.is_zero(data[s][j])) out[t][j] = field_.add(out[t][j], field_.mul(c, data[s][j]));
        }
      }
    }
    return out;
  }

  /// Payload f(X~_n) for f of total degree f_degree: decode the composed
  /// polynomial of degree (K-1) f_degree and evaluate it at beta.
  Decoded<std::vector<Element>> decode(const ReceivedVector<Element>& received, std::size_t f_degree) const {
    return decoder(f_degree).decode(received);
  }

  /// Reusable decoder for f of total degree f_degree.
  RsDecoder<F> decoder(std::size_t f_degree) const {
    return RsDecoder<F>(field_, alpha_, beta_, (k_ - 1) * f_degree);
  }

 private:
  F field_;
  std::size_t n_, k_;
  std::vector<Element> beta_, alpha_;
  std::vector<std::vector<Element>> basis_;
};

template <Field F>
Decoded<std::vector<typename F::Element>> lcc_decode(const LccCode<F>& code,
                                                     const ReceivedVector<typename F::Element>& received,
                                                     std::size_t f_degree) {
  return code.decode(received, f_degree);
}

// ---------------------------------------------------------------------------
// Real-valued consensus decoding.

inline constexpr std::size_t kMaxConsensusLength = 24;
inline constexpr double kDefaultConsensusTolerance = 1e-6;

/// Finds a degree-(K-1) real interpolant agreeing (relative tolerance `tol`)
/// with at least (non-erased - b_max) symbols, by exhaustive search over
/// K-subsets, and returns its values at `data_points`.
Decoded<std::vector<double>> real_consensus_decode(std::span<const double> points,
                                                   const ReceivedVector<double>& received, std::size_t k,
                                                   std::size_t b_max, std::span<const double> data_points,
                                                   double tol = kDefaultConsensusTolerance);

}  // namespace boolecode
