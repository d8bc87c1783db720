#include "boolecode/scheme.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "boolecode/threshold.hpp"
#include "pipeline.hpp"

namespace boolecode {

std::string_view to_string(AdversaryStrategy s) noexcept {
  switch (s) {
    case AdversaryStrategy::random_replace: return "random-replace";
    case AdversaryStrategy::additive_offset: return "additive-offset";
    case AdversaryStrategy::codeword_targeted: return "codeword-targeted";
    case AdversaryStrategy::erase: return "erase";
  }
  return "unknown";
}

AdversaryStrategy parse_strategy(std::string_view name) {
  if (name == "random-replace" || name == "random") return AdversaryStrategy::random_replace;
  if (name == "additive-offset" || name == "offset") return AdversaryStrategy::additive_offset;
  if (name == "codeword-targeted" || name == "codeword") return AdversaryStrategy::codeword_targeted;
  if (name == "erase") return AdversaryStrategy::erase;
  fail(ErrorCode::parse_error, "unknown adversary strategy '" + std::string(name) + "'");
}

SchemeConfig with_defaults(SchemeConfig config) {
  if (config.scheme == SchemeId::dptf && config.d == 0) config.d = 1;
  if (config.scheme == SchemeId::dataaug && config.q == 0) config.q = 2;
  return config;
}

namespace detail {
namespace {

using Bits = std::vector<BitVector>;
using RationalInputs = std::vector<std::vector<Rational>>;
using RealInputs = std::vector<std::vector<double>>;

template <class T>
const T& inputs_as(const TrialInputs& in, std::size_t k, std::size_t width, const char* what) {
  const T* v = std::get_if<T>(&in);
  if (v == nullptr) fail(ErrorCode::invalid_argument, std::string("scheme expects ") + what + " inputs");
  require(v->size() == k, "expected exactly K input blocks");
  for (const auto& x : *v) require(x.size() == width, "input block has the wrong length");
  return *v;
}

Bits random_bits(const std::vector<BitVector>& support, std::size_t m, std::size_t k, Rng& rng) {
  Bits out;
  for (std::size_t i = 0; i < k; ++i) {
    if (!support.empty() && rng.coin()) {
      out.push_back(support[rng.below(support.size())]);
    } else {
      BitVector x(m);
      for (auto& b : x) b = rng.coin() ? 1 : 0;
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::string bit_text(bool b) { return b ? "1" : "0"; }

std::string real_text(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

/// Prime field for integers of magnitude <= bound and `points` canonical
/// points, honouring an explicit override.
FieldSpec choose_prime(const SchemeConfig& cfg, const BigInt& bound, std::size_t points) {
  if (cfg.prime == 0) return prime_field_for(bound, points);
  FieldSpec spec = FieldSpec::prime(cfg.prime);
  require(spec.modulus() > 2 * bound + 1, "field override is too small for the payload magnitude bound");
  require(spec.modulus() > points, "field override has fewer elements than evaluation points");
  return spec;
}

FieldSpec choose_binary(const SchemeConfig& cfg, std::size_t points) {
  if (cfg.binary_degree == 0) return FieldSpec::binary_for_points(points);
  FieldSpec spec = FieldSpec::binary(cfg.binary_degree);
  require((BigInt(1) << cfg.binary_degree) >= points + 1, "binary field override has too few elements");
  return spec;
}

template <template <class> class P, class... Args>
std::shared_ptr<const Pipeline> make_prime_pipeline(const FieldSpec& spec, Args&&... args) {
  if (spec.modulus() < kSmallPrimeLimit) {
    return std::make_shared<P<PrimeField64>>(PrimeField64(spec.modulus().convert_to<std::uint64_t>()),
                                             std::forward<Args>(args)...);
  }
  return std::make_shared<P<BigPrimeField>>(BigPrimeField(spec.modulus()), std::forward<Args>(args)...);
}

template <Field F>
std::vector<typename F::Element> bits_to_field(const F& f, const BitVector& x) {
  std::vector<typename F::Element> out;
  out.reserve(x.size());
  for (auto b : x) out.push_back(b != 0 ? f.one() : f.zero());
  return out;
}

/// Decodes all streams with one decoder, sharing suspect positions.
template <Field F>
std::optional<std::vector<std::vector<typename F::Element>>> decode_all(const RsDecoder<F>& dec,
                                                                         const StreamMatrix<typename F::Element>& s,
                                                                         DecodeStatus& status) {
  std::vector<bool> suspects(dec.length(), false);
  std::vector<std::vector<typename F::Element>> out;
  out.reserve(s.size());
  for (const auto& r : s) {
    auto d = dec.decode(r, &suspects);
    if (!d.ok()) {
      status = d.status;
      return std::nullopt;
    }
    out.push_back(std::move(d.value));
  }
  status = DecodeStatus::ok;
  return out;
}

// ---------------------------------------------------------------------------
// Coded ANF / coded DNF: one LTF per monomial or clause, MDS-encoded bits.

template <Field F>
class LtfPipeline final : public Pipeline {
 public:
  using E = typename F::Element;

  LtfPipeline(F field, const SchemeConfig& cfg, const BooleanFunction& f)
      : state_(std::make_shared<State>(std::move(field), cfg, f)) {
    auto& st = *state_;
    const auto dnf = dnf_from_truth_table(f);
    st.support = dnf.vectors();
    if (cfg.scheme == SchemeId::anf) {
      const auto anf = anf_from_truth_table(f);
      for (auto mask : anf.masks()) st.ltfs.push_back(ltf_for_monomial(mask, st.m));
    } else {
      for (const auto& y : dnf.vectors()) st.ltfs.push_back(ltf_for_clause(y));
    }
    st.code = std::make_shared<MdsCode<F>>(MdsCode<F>::canonical(st.field, cfg.n, cfg.k));
    st.decoder = std::make_shared<RsDecoder<F>>(st.code->decoder(cfg.k - 1));
    st.alpha = std::make_shared<const std::vector<E>>(st.code->evaluation_points().begin(),
                                                      st.code->evaluation_points().end());
  }

  Threshold threshold() const override { return threshold_mds(state_->cfg.n, state_->cfg.k); }
  std::size_t payload_degree() const override { return 1; }
  std::size_t streams() const override { return state_->ltfs.size(); }
  std::string field_description() const override { return state_->field.describe(); }
  std::vector<std::string> notes() const override {
    std::vector<std::string> out;
    for (const auto& l : state_->ltfs) out.push_back(l.to_string());
    return out;
  }

  TrialInputs random_inputs(Rng& rng) const override {
    return random_bits(state_->support, state_->m, state_->cfg.k, rng);
  }

  std::vector<std::string> expected_values(const TrialInputs& in) const override {
    const auto& x = inputs_as<Bits>(in, state_->cfg.k, state_->m, "Boolean");
    std::vector<std::string> out;
    for (const auto& v : x) out.push_back(bit_text(state_->f.evaluate(v)));
    return out;
  }

  std::unique_ptr<WorkerResponses> prepare(const TrialInputs& in) const override {
    const auto& st = *state_;
    const auto& x = inputs_as<Bits>(in, st.cfg.k, st.m, "Boolean");
    const auto& f = st.field;
    // Column j of the data is bit j of every block.
    std::vector<std::vector<E>> encoded(st.cfg.n, std::vector<E>(st.m));
    std::vector<E> column(st.cfg.k);
    for (std::size_t j = 0; j < st.m; ++j) {
      for (std::size_t b = 0; b < st.cfg.k; ++b) column[b] = x[b][j] != 0 ? f.one() : f.zero();
      const auto cw = st.code->encode(column);
      for (std::size_t n = 0; n < st.cfg.n; ++n) encoded[n][j] = cw[n];
    }
    StreamMatrix<E> streams(st.ltfs.size());
    for (std::size_t s = 0; s < st.ltfs.size(); ++s) {
      streams[s].slots.resize(st.cfg.n);
      for (std::size_t n = 0; n < st.cfg.n; ++n) {
        streams[s].slots[n] = ltf_linear2_field(f, st.ltfs[s], std::span<const E>(encoded[n]));
      }
    }
    std::vector<bool> expected;
    for (const auto& v : x) expected.push_back(st.f.evaluate(v));

    auto fn = std::make_shared<const typename StreamResponses<F>::DecodeFn>(
        [state = state_, expected](const StreamMatrix<E>& s) {
          const auto& st = *state;
          StreamVerdict v;
          auto decoded = decode_all(*st.decoder, s, v.report.status);
          if (!decoded) return v;
          const bool anf = st.cfg.scheme == SchemeId::anf;
          v.report.correct = true;
          for (std::size_t b = 0; b < st.cfg.k; ++b) {
            bool out = false;
            for (std::size_t i = 0; i < st.ltfs.size(); ++i) {
              const bool fires = st.field.signum(st.field.add((*decoded)[i][b], st.field.from_int(st.ltfs[i].bias2))) > 0;
              out = anf ? (out != fires) : (out || fires);
            }
            v.values.push_back(bit_text(out));
            v.report.correct = v.report.correct && out == expected[b];
          }
          return v;
        });
    std::vector<std::size_t> degrees(st.ltfs.size(), st.cfg.k - 1);
    return std::make_unique<StreamResponses<F>>(f, st.alpha, std::move(degrees), std::move(streams), std::move(fn));
  }

 private:
  struct State {
    State(F fld, const SchemeConfig& c, const BooleanFunction& fn)
        : cfg(c), f(fn), field(std::move(fld)), m(fn.variables()) {}

    SchemeConfig cfg;
    BooleanFunction f;
    F field;
    std::size_t m;
    std::vector<LinearThresholdFunction> ltfs;
    std::vector<BitVector> support;
    std::shared_ptr<MdsCode<F>> code;
    std::shared_ptr<RsDecoder<F>> decoder;
    std::shared_ptr<const std::vector<E>> alpha;
  };
  std::shared_ptr<State> state_;
};

// ---------------------------------------------------------------------------
// Coded PTF and coded D-partitioned PTF: one PTF per clause group, LCC-encoded bits.

template <Field F>
class PtfPipeline final : public Pipeline {
 public:
  using E = typename F::Element;

  PtfPipeline(F field, const SchemeConfig& cfg, const BooleanFunction& f,
              std::shared_ptr<const std::vector<PolynomialThresholdFunction>> ptfs)
      : field_(field), cfg_(cfg), f_(f), ptfs_(std::move(ptfs)), m_(f.variables()) {
    const std::size_t w = f.weight();
    degree_ = cfg.scheme == SchemeId::ptf ? ptf_degree(w) : dptf_degree(w, cfg.d);
    for (const auto& p : *ptfs_) {
      if (p.degree() > degree_) fail(ErrorCode::internal, "PTF degree exceeds its bound");
      std::vector<E> ws;
      for (const auto& t : p.terms()) ws.push_back(field_.from_big(t.weight));
      weights_.push_back(std::move(ws));
    }
    support_ = dnf_from_truth_table(f).vectors();
    code_ = std::make_shared<LccCode<F>>(LccCode<F>::canonical(field_, cfg.n, cfg.k));
    decoder_ = std::make_shared<RsDecoder<F>>(code_->decoder(degree_));
    alpha_ = std::make_shared<const std::vector<E>>(code_->evaluation_points().begin(),
                                                    code_->evaluation_points().end());
  }

  Threshold threshold() const override {
    const std::size_t w = f_.weight();
    return cfg_.scheme == SchemeId::ptf ? threshold_ptf(cfg_.n, cfg_.k, w) : threshold_dptf(cfg_.n, cfg_.k, w, cfg_.d);
  }
  std::size_t payload_degree() const override { return degree_; }
  std::size_t streams() const override { return ptfs_->size(); }
  std::string field_description() const override { return field_.describe(); }
  std::vector<std::string> notes() const override {
    std::vector<std::string> out;
    for (std::size_t g = 0; g < ptfs_->size(); ++g) {
      const auto& p = (*ptfs_)[g];
      out.push_back("group " + std::to_string(g + 1) + ": " + std::to_string(p.terms().size()) +
                    " terms, degree " + std::to_string(p.degree()));
    }
    return out;
  }

  TrialInputs random_inputs(Rng& rng) const override { return random_bits(support_, m_, cfg_.k, rng); }

  std::vector<std::string> expected_values(const TrialInputs& in) const override {
    const auto& x = inputs_as<Bits>(in, cfg_.k, m_, "Boolean");
    std::vector<std::string> out;
    for (const auto& v : x) out.push_back(bit_text(f_.evaluate(v)));
    return out;
  }

  std::unique_ptr<WorkerResponses> prepare(const TrialInputs& in) const override {
    const auto& x = inputs_as<Bits>(in, cfg_.k, m_, "Boolean");
    std::vector<std::vector<E>> data;
    for (const auto& v : x) data.push_back(bits_to_field(field_, v));
    const auto encoded = code_->encode(data);
    StreamMatrix<E> streams(ptfs_->size());
    for (std::size_t g = 0; g < ptfs_->size(); ++g) {
      streams[g].slots.resize(cfg_.n);
      for (std::size_t n = 0; n < cfg_.n; ++n) {
        streams[g].slots[n] = ptf_eval_field(field_, (*ptfs_)[g], std::span<const E>(weights_[g]),
                                             std::span<const E>(encoded[n]));
      }
    }
    std::vector<bool> expected;
    for (const auto& v : x) expected.push_back(f_.evaluate(v));
    auto fn = std::make_shared<const typename StreamResponses<F>::DecodeFn>(
        [field = field_, decoder = decoder_, k = cfg_.k, expected](const StreamMatrix<E>& s) {
          StreamVerdict v;
          auto decoded = decode_all(*decoder, s, v.report.status);
          if (!decoded) return v;
          v.report.correct = true;
          for (std::size_t b = 0; b < k; ++b) {
            bool out = false;
            for (const auto& g : *decoded) out = out || field.signum(g[b]) > 0;
            v.values.push_back(bit_text(out));
            v.report.correct = v.report.correct && out == expected[b];
          }
          return v;
        });
    std::vector<std::size_t> degrees(ptfs_->size(), (cfg_.k - 1) * degree_);
    return std::make_unique<StreamResponses<F>>(field_, alpha_, std::move(degrees), std::move(streams), std::move(fn));
  }

 private:
  F field_;
  SchemeConfig cfg_;
  BooleanFunction f_;
  std::shared_ptr<const std::vector<PolynomialThresholdFunction>> ptfs_;
  std::size_t m_;
  std::size_t degree_ = 0;
  std::vector<std::vector<E>> weights_;
  std::vector<BitVector> support_;
  std::shared_ptr<LccCode<F>> code_;
  std::shared_ptr<RsDecoder<F>> decoder_;
  std::shared_ptr<const std::vector<E>> alpha_;
};

// ---------------------------------------------------------------------------
// LCC-direct and coded data augmentation: worker evaluates a polynomial map
// on the LCC-encoded (optionally augmented) input.

struct PolyTarget {
  /// Boolean target evaluated through its ANF over GF(2^s).
  std::optional<BooleanFunction> boolean;
  /// Original map; the oracle for rational targets.
  PolynomialSystem system;
  /// Maps actually evaluated by workers (h when augmenting, else f).
  std::vector<MultivariatePolynomial> worker_maps;
  std::optional<AugmentationLayout> layout;
  std::size_t degree = 0;
  BigInt denominator = 1;
};

template <Field F>
class PolyPipeline final : public Pipeline {
 public:
  using E = typename F::Element;

  PolyPipeline(F field, const SchemeConfig& cfg, std::shared_ptr<const PolyTarget> target)
      : field_(field), cfg_(cfg), target_(std::move(target)) {
    for (const auto& p : target_->worker_maps) maps_.emplace_back(field_, p);
    code_ = std::make_shared<LccCode<F>>(LccCode<F>::canonical(field_, cfg.n, cfg.k));
    decoder_ = std::make_shared<RsDecoder<F>>(code_->decoder(target_->degree));
    alpha_ = std::make_shared<const std::vector<E>>(code_->evaluation_points().begin(),
                                                    code_->evaluation_points().end());
    if (target_->boolean) support_ = dnf_from_truth_table(*target_->boolean).vectors();
  }

  Threshold threshold() const override { return threshold_for_degree(cfg_.n, cfg_.k, target_->degree); }
  std::size_t payload_degree() const override { return target_->degree; }
  std::size_t streams() const override { return maps_.size(); }
  std::string field_description() const override { return field_.describe(); }
  std::vector<std::string> notes() const override {
    std::vector<std::string> out;
    if (target_->layout) {
      out.push_back("augmented input length " + std::to_string(target_->layout->size()));
      for (const auto& h : target_->worker_maps) {
        out.push_back("h = " + augmented_to_string(AugmentedPolynomial{*target_->layout, h}));
      }
    }
    return out;
  }

  TrialInputs random_inputs(Rng& rng) const override {
    const std::size_t vars = target_->system.vars;
    if (target_->boolean) return random_bits(support_, vars, cfg_.k, rng);
    RationalInputs out(cfg_.k, std::vector<Rational>(vars));
    for (auto& x : out) {
      for (auto& v : x) v = Rational(rng.range(-cfg_.input_radius, cfg_.input_radius));
    }
    return out;
  }

  std::vector<std::string> expected_values(const TrialInputs& in) const override {
    std::vector<std::string> out;
    if (target_->boolean) {
      for (const auto& v : inputs_as<Bits>(in, cfg_.k, target_->system.vars, "Boolean")) {
        out.push_back(bit_text(target_->boolean->evaluate(v)));
      }
      return out;
    }
    for (const auto& x : inputs_as<RationalInputs>(in, cfg_.k, target_->system.vars, "rational")) {
      std::string row;
      for (const auto& c : target_->system.components) {
        if (!row.empty()) row += ',';
        row += c.evaluate(std::span<const Rational>(x)).str();
      }
      out.push_back(row);
    }
    return out;
  }

  std::unique_ptr<WorkerResponses> prepare(const TrialInputs& in) const override {
    const auto& f = field_;
    const std::size_t vars = target_->system.vars;
    std::vector<std::vector<E>> data;
    // Expected outputs in field form, plus their text.
    std::vector<std::vector<E>> expected;
    if (target_->boolean) {
      for (const auto& v : inputs_as<Bits>(in, cfg_.k, vars, "Boolean")) {
        data.push_back(bits_to_field(f, v));
        expected.push_back({target_->boolean->evaluate(v) ? f.one() : f.zero()});
      }
    } else {
      for (const auto& x : inputs_as<RationalInputs>(in, cfg_.k, vars, "rational")) {
        std::vector<E> row;
        for (const auto& v : x) row.push_back(field_from_rational(f, v));
        data.push_back(std::move(row));
        std::vector<E> want;
        for (const auto& c : target_->system.components) {
          want.push_back(field_from_rational(f, c.evaluate(std::span<const Rational>(x))));
        }
        expected.push_back(std::move(want));
      }
    }
    if (target_->layout) {
      for (auto& row : data) {
        row = target_->layout->augment(std::span<const E>(row), [&](const E& a, const E& b) { return f.mul(a, b); });
      }
    }
    const auto encoded = code_->encode(data);
    StreamMatrix<E> streams(maps_.size());
    for (std::size_t s = 0; s < maps_.size(); ++s) {
      streams[s].slots.resize(cfg_.n);
      for (std::size_t n = 0; n < cfg_.n; ++n) streams[s].slots[n] = maps_[s](f, std::span<const E>(encoded[n]));
    }
    auto fn = std::make_shared<const typename StreamResponses<F>::DecodeFn>(
        [field = field_, decoder = decoder_, target = target_, k = cfg_.k, expected](const StreamMatrix<E>& s) {
          StreamVerdict v;
          auto decoded = decode_all(*decoder, s, v.report.status);
          if (!decoded) return v;
          v.report.correct = true;
          for (std::size_t b = 0; b < k; ++b) {
            std::string row;
            for (std::size_t c = 0; c < decoded->size(); ++c) {
              const E& got = (*decoded)[c][b];
              v.report.correct = v.report.correct && field.equal(got, expected[b][c]);
              if (!row.empty()) row += ',';
              row += render(field, *target, got);
            }
            v.values.push_back(row);
          }
          return v;
        });
    std::vector<std::size_t> degrees(maps_.size(), (cfg_.k - 1) * target_->degree);
    return std::make_unique<StreamResponses<F>>(f, alpha_, std::move(degrees), std::move(streams), std::move(fn));
  }

 private:
  static std::string render(const F& field, const PolyTarget& t, const E& v) {
    if constexpr (PrimeFieldLike<F>) {
      if (!t.boolean) {
        const BigInt scaled = field.lift(field.mul(v, field.from_big(t.denominator)));
        return Rational(scaled, t.denominator).str();
      }
    }
    if (field.is_zero(v)) return "0";
    if (field.equal(v, field.one())) return "1";
    return "?" + field.to_string(v);
  }

  F field_;
  SchemeConfig cfg_;
  std::shared_ptr<const PolyTarget> target_;
  std::vector<FieldPolynomial<F>> maps_;
  std::vector<BitVector> support_;
  std::shared_ptr<LccCode<F>> code_;
  std::shared_ptr<RsDecoder<F>> decoder_;
  std::shared_ptr<const std::vector<E>> alpha_;
};

// ---------------------------------------------------------------------------
// Coded data logarithm: real MDS code on log-magnitudes, one stream per
// distinct non-constant monomial.

class LogPipeline final : public Pipeline {
 public:
  static constexpr double kTolerance = 1e-6;

  LogPipeline(const SchemeConfig& cfg, const PolynomialSystem& sys)
      : cfg_(cfg), sys_(sys), code_(MdsCode<RealField>::canonical(RealField{}, cfg.n, cfg.k)) {
    require(cfg.n <= kMaxConsensusLength, "coded data logarithm supports at most 24 workers");
    for (const auto& c : sys_.components) {
      for (const auto& t : c.terms()) {
        if (total_degree(t.exps) == 0) continue;
        if (std::find(monomials_.begin(), monomials_.end(), t.exps) == monomials_.end()) monomials_.push_back(t.exps);
      }
    }
    alpha_ = std::make_shared<const std::vector<double>>(code_.evaluation_points().begin(),
                                                         code_.evaluation_points().end());
  }

  Threshold threshold() const override { return threshold_mds(cfg_.n, cfg_.k); }
  std::size_t payload_degree() const override { return 1; }
  std::size_t streams() const override { return monomials_.size(); }
  std::string field_description() const override { return RealField{}.describe(); }
  std::vector<std::string> notes() const override {
    std::vector<std::string> out;
    for (const auto& e : monomials_) {
      out.push_back("stream " + MultivariatePolynomial(sys_.vars, {{Rational(1), e}}).to_string());
    }
    return out;
  }

  TrialInputs random_inputs(Rng& rng) const override {
    RealInputs out(cfg_.k, std::vector<double>(sys_.vars));
    for (auto& x : out) {
      for (auto& v : x) v = (rng.coin() ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
    }
    return out;
  }

  std::vector<std::string> expected_values(const TrialInputs& in) const override {
    std::vector<std::string> out;
    for (const auto& x : inputs_as<RealInputs>(in, cfg_.k, sys_.vars, "real")) {
      std::string row;
      for (const auto& c : sys_.components) {
        if (!row.empty()) row += ',';
        row += real_text(c.evaluate(std::span<const double>(x)));
      }
      out.push_back(row);
    }
    return out;
  }

  std::unique_ptr<WorkerResponses> prepare(const TrialInputs& in) const override {
    const auto& x = inputs_as<RealInputs>(in, cfg_.k, sys_.vars, "real");
    std::vector<LogarithmicInput> logs;
    for (const auto& v : x) {
      logs.push_back(logarithmic_input(v));
      for (const auto& e : monomials_) {
        double s = 0;
        for (std::size_t j = 0; j < e.size(); ++j) s += e[j] * std::abs(logs.back().w[j]);
        require(s <= kMaxLogMagnitude, "input magnitude would overflow exp() in coded data logarithm");
      }
    }
    std::vector<std::vector<double>> encoded(cfg_.n, std::vector<double>(sys_.vars));
    std::vector<double> column(cfg_.k);
    for (std::size_t j = 0; j < sys_.vars; ++j) {
      for (std::size_t b = 0; b < cfg_.k; ++b) column[b] = logs[b].w[j];
      const auto cw = code_.encode(column);
      for (std::size_t n = 0; n < cfg_.n; ++n) encoded[n][j] = cw[n];
    }
    StreamMatrix<double> streams(monomials_.size());
    for (std::size_t s = 0; s < monomials_.size(); ++s) {
      streams[s].slots.resize(cfg_.n);
      for (std::size_t n = 0; n < cfg_.n; ++n) {
        double acc = 0;
        for (std::size_t j = 0; j < sys_.vars; ++j) acc += monomials_[s][j] * encoded[n][j];
        streams[s].slots[n] = acc;
      }
    }
    auto fn = std::make_shared<const StreamResponses<RealField>::DecodeFn>(
        [this_cfg = cfg_, sys = sys_, monomials = monomials_, alpha = alpha_, x, logs](const StreamMatrix<double>& s) {
          StreamVerdict v;
          const std::span<const double> points(*alpha);
          const std::span<const double> data_points(alpha->data(), this_cfg.k);
          const auto b_max = static_cast<std::size_t>(threshold_mds(this_cfg.n, this_cfg.k).beta);
          std::vector<std::vector<double>> sums;
          for (const auto& r : s) {
            auto d = real_consensus_decode(points, r, this_cfg.k, b_max, data_points);
            if (!d.ok()) {
              v.report.status = d.status;
              return v;
            }
            sums.push_back(std::move(d.value));
          }
          v.report.correct = true;
          for (std::size_t b = 0; b < this_cfg.k; ++b) {
            std::string row;
            for (const auto& c : sys.components) {
              double got = 0, scale = 0;
              for (const auto& t : c.terms()) {
                const double coeff = t.coeff.convert_to<double>();
                double mono = 1.0;
                if (total_degree(t.exps) != 0) {
                  const auto idx = static_cast<std::size_t>(
                      std::find(monomials.begin(), monomials.end(), t.exps) - monomials.begin());
                  bool negative = false, zero = false;
                  for (std::size_t j = 0; j < t.exps.size(); ++j) {
                    if (t.exps[j] == 0) continue;
                    zero = zero || logs[b].zero[j];
                    negative = negative != (logs[b].negative[j] && t.exps[j] % 2 == 1);
                  }
                  mono = zero ? 0.0 : (negative ? -1.0 : 1.0) * std::exp(sums[idx][b]);
                }
                got += coeff * mono;
                double exact = coeff;
                for (std::size_t j = 0; j < t.exps.size(); ++j) exact *= std::pow(x[b][j], t.exps[j]);
                scale += std::abs(exact);
              }
              const double want = c.evaluate(std::span<const double>(x[b]));
              const double tol = kTolerance * std::max(scale, 1e-300);
              v.report.correct = v.report.correct && std::abs(got - want) <= tol;
              if (!row.empty()) row += ',';
              row += real_text(got);
            }
            v.values.push_back(row);
          }
          return v;
        });
    std::vector<std::size_t> degrees(monomials_.size(), cfg_.k - 1);
    return std::make_unique<StreamResponses<RealField>>(RealField{}, alpha_, std::move(degrees), std::move(streams),
                                                        std::move(fn));
  }

 private:
  SchemeConfig cfg_;
  PolynomialSystem sys_;
  MdsCode<RealField> code_;
  std::vector<Exponents> monomials_;
  std::shared_ptr<const std::vector<double>> alpha_;
};

// ---------------------------------------------------------------------------

std::shared_ptr<const Pipeline> build_pipeline(const SchemeConfig& cfg, const TargetFunction& target) {
  require(cfg.k >= 1, "K must be at least 1");
  require(cfg.n >= cfg.k, "N must be at least K");
  const auto* boolean = std::get_if<BooleanFunction>(&target);
  const auto* system = std::get_if<PolynomialSystem>(&target);

  switch (cfg.scheme) {
    case SchemeId::anf:
    case SchemeId::dnf: {
      if (boolean == nullptr) fail(ErrorCode::invalid_argument, "coded ANF/DNF needs a Boolean function");
      const BigInt bound = 2 * boolean->variables() + 1;
      return make_prime_pipeline<LtfPipeline>(choose_prime(cfg, bound, cfg.n), cfg, *boolean);
    }
    case SchemeId::ptf:
    case SchemeId::dptf: {
      if (boolean == nullptr) fail(ErrorCode::invalid_argument, "coded PTF needs a Boolean function");
      const auto supp = dnf_from_truth_table(*boolean);
      require(supp.weight() >= 1, "coded PTF needs w(f) >= 1");
      const std::size_t groups = cfg.scheme == SchemeId::ptf ? 1 : cfg.d;
      require(groups >= 1 && groups <= supp.weight(), "partition count D must be in [1, w(f)]");
      auto ptfs = std::make_shared<std::vector<PolynomialThresholdFunction>>();
      BigInt bound = 1;
      for (const auto& g : partition_dnf(supp, groups)) {
        ptfs->push_back(ptf_for_support(g));
        bound = std::max(bound, ptfs->back().magnitude_bound());
      }
      return make_prime_pipeline<PtfPipeline>(choose_prime(cfg, bound, cfg.n + cfg.k), cfg, *boolean,
                                              std::shared_ptr<const std::vector<PolynomialThresholdFunction>>(ptfs));
    }
    case SchemeId::lcc:
    case SchemeId::dataaug: {
      auto t = std::make_shared<PolyTarget>();
      if (boolean != nullptr) {
        t->boolean = *boolean;
        t->system = single_output(MultivariatePolynomial::from_anf(anf_from_truth_table(*boolean)));
      } else {
        t->system = *system;
      }
      require(!t->system.components.empty(), "polynomial map has no outputs");
      if (cfg.scheme == SchemeId::dataaug) {
        require(cfg.q >= 1, "data augmentation needs q >= 1");
        for (const auto& c : t->system.components) {
          auto a = augment_polynomial(c, cfg.q);
          if (!t->layout) t->layout = a.layout;
          t->worker_maps.push_back(std::move(a.h));
        }
        t->degree = dataaug_degree(t->system.degree(), cfg.q);
        for (const auto& h : t->worker_maps) {
          if (h.degree() > t->degree) fail(ErrorCode::internal, "augmented polynomial exceeds its degree bound");
        }
      } else {
        t->worker_maps = t->system.components;
        t->degree = t->system.degree();
      }
      if (boolean != nullptr) {
        const FieldSpec spec = choose_binary(cfg, cfg.n + cfg.k);
        return std::make_shared<PolyPipeline<BinaryField>>(BinaryField(spec.binary_degree(), spec.reduction_poly()),
                                                           cfg, std::shared_ptr<const PolyTarget>(t));
      }
      BigInt bound = 1;
      for (const auto& c : t->system.components) {
        t->denominator = boost::multiprecision::lcm(t->denominator, c.common_denominator());
      }
      for (const auto& c : t->system.components) {
        const Rational b = c.magnitude_bound(BigInt(cfg.input_radius)) * t->denominator;
        const BigInt ceil_b = boost::multiprecision::numerator(b) / boost::multiprecision::denominator(b) + 1;
        bound = std::max(bound, ceil_b);
      }
      return make_prime_pipeline<PolyPipeline>(choose_prime(cfg, bound, cfg.n + cfg.k), cfg,
                                               std::shared_ptr<const PolyTarget>(t));
    }
    case SchemeId::datalog: {
      if (system == nullptr) fail(ErrorCode::invalid_argument, "coded data logarithm needs a polynomial map");
      return std::make_shared<LogPipeline>(cfg, *system);
    }
  }
  fail(ErrorCode::internal, "unhandled scheme");
}

}  // namespace
}  // namespace detail

// ---------------------------------------------------------------------------

SchemeInstance::SchemeInstance(const SchemeConfig& config, TargetFunction target) {
  const SchemeConfig cfg = with_defaults(config);
  require(cfg.input_radius >= 1, "input radius must be >= 1");
  impl_ = detail::build_pipeline(cfg, target);
  config_ = cfg;
  target_ = std::make_shared<const TargetFunction>(std::move(target));
}

const SchemeConfig& SchemeInstance::config() const noexcept { return config_; }
const TargetFunction& SchemeInstance::target() const noexcept { return *target_; }
Threshold SchemeInstance::threshold() const { return impl_->threshold(); }
std::int64_t SchemeInstance::outer_bound() const { return boolecode::outer_bound(config_.n, config_.k); }
std::size_t SchemeInstance::payload_degree() const { return impl_->payload_degree(); }
std::size_t SchemeInstance::streams() const { return impl_->streams(); }
std::string SchemeInstance::field_description() const { return impl_->field_description(); }
std::vector<std::string> SchemeInstance::notes() const { return impl_->notes(); }
TrialInputs SchemeInstance::random_inputs(Rng& rng) const { return impl_->random_inputs(rng); }
std::unique_ptr<WorkerResponses> SchemeInstance::prepare(const TrialInputs& inputs) const {
  return impl_->prepare(inputs);
}
std::vector<std::string> SchemeInstance::expected_values(const TrialInputs& inputs) const {
  return impl_->expected_values(inputs);
}

}  // namespace boolecode
