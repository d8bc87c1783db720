#include "boolecode/simulator.hpp"

#include <algorithm>
#include <sstream>

namespace boolecode {

namespace {

constexpr std::uint64_t kInputStream = 1;
constexpr std::uint64_t kAdversaryStream = 0x100;

std::uint64_t adversary_seed(std::uint64_t master, std::size_t b, std::size_t trial) {
  return derive_seed(master, kAdversaryStream + b, trial);
}

}  // namespace

std::string_view to_string(FailureKind k) noexcept {
  switch (k) {
    case FailureKind::none: return "none";
    case FailureKind::wrong_value: return "wrong-value";
    case FailureKind::decode_failure: return "decode-failure";
  }
  return "unknown";
}

std::vector<std::size_t> choose_adversaries(std::size_t n, std::size_t b, Rng& rng) {
  require(b <= n, "cannot corrupt more workers than exist");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < b; ++i) std::swap(idx[i], idx[i + rng.below(n - i)]);
  idx.resize(b);
  std::sort(idx.begin(), idx.end());
  return idx;
}

TrialOutcome run_trial(const WorkerResponses& honest, const AdversaryModel& adversary, bool record_values,
                       const SchemeInstance* instance, const TrialInputs* inputs) {
  TrialOutcome out;
  Rng rng(adversary.seed);
  out.adversaries = choose_adversaries(honest.workers(), adversary.b, rng);
  std::unique_ptr<WorkerResponses> owned;
  const WorkerResponses* received = &honest;
  if (adversary.b > 0) {
    owned = honest.clone();
    owned->corrupt(adversary.strategy, out.adversaries, rng);
    received = owned.get();
  }
  const DecodeReport report = received->decode();
  out.status = report.status;
  out.success = report.status == DecodeStatus::ok && report.correct;
  if (!out.success) {
    out.failure = report.status == DecodeStatus::ok ? FailureKind::wrong_value : FailureKind::decode_failure;
  }
  if (record_values) {
    if (report.status == DecodeStatus::ok) out.decoded = received->decoded_values();
    if (instance != nullptr && inputs != nullptr) out.expected = instance->expected_values(*inputs);
  }
  return out;
}

TrialOutcome run_trial(const SchemeInstance& instance, const TrialInputs& inputs, const AdversaryModel& adversary,
                       bool record_values) {
  const auto honest = instance.prepare(inputs);
  return run_trial(*honest, adversary, record_values, &instance, &inputs);
}

TrialOutcome run_seeded_trial(const SchemeInstance& instance, std::size_t b, AdversaryStrategy strategy,
                              std::uint64_t seed) {
  Rng input_rng(derive_seed(seed, kInputStream, 0));
  const TrialInputs inputs = instance.random_inputs(input_rng);
  return run_trial(instance, inputs, AdversaryModel{b, strategy, adversary_seed(seed, b, 0)});
}

ExperimentReport sweep_threshold(const SchemeInstance& instance, const SweepOptions& options) {
  require(options.trials >= 1, "a sweep needs at least one trial");
  const auto& cfg = instance.config();
  ExperimentReport rep;
  rep.config = cfg;
  rep.field = instance.field_description();
  rep.streams = instance.streams();
  rep.payload_degree = instance.payload_degree();
  rep.threshold = instance.threshold();
  rep.outer_bound = instance.outer_bound();
  rep.strategy = options.strategy;
  rep.seed = options.seed;
  rep.trials = options.trials;

  std::vector<std::size_t> bs = options.b_values;
  if (bs.empty()) {
    const auto top = std::min<std::size_t>(static_cast<std::size_t>(rep.threshold.beta) + 1, cfg.n);
    for (std::size_t b = 0; b <= top; ++b) bs.push_back(b);
  }
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  for (auto b : bs) require(b <= cfg.n, "corruption count b exceeds N");

  rep.points.resize(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) rep.points[i].b = bs[i];

  // Honest payloads are computed once per trial and shared by every b.
  for (std::size_t t = 0; t < options.trials; ++t) {
    Rng input_rng(derive_seed(options.seed, kInputStream, t));
    const TrialInputs inputs = instance.random_inputs(input_rng);
    const auto honest = instance.prepare(inputs);
    for (auto& p : rep.points) {
      const auto o = run_trial(*honest, AdversaryModel{p.b, options.strategy, adversary_seed(options.seed, p.b, t)});
      ++p.trials;
      if (o.success) ++p.successes;
      else if (o.failure == FailureKind::wrong_value) ++p.wrong_values;
      else ++p.decode_failures;
    }
  }

  rep.b_hat = 0;
  for (const auto& p : rep.points) {
    if (!p.all_success()) break;
    rep.b_hat = static_cast<std::int64_t>(p.b);
  }
  if (rep.threshold.feasible) {
    for (const auto& p : rep.points) {
      if (static_cast<std::int64_t>(p.b) <= rep.threshold.beta && !p.all_success()) rep.sound = false;
    }
  }
  return rep;
}

nlohmann::ordered_json ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["scheme"] = std::string(to_string(config.scheme));
  j["n"] = config.n;
  j["k"] = config.k;
  if (config.scheme == SchemeId::dptf) j["d"] = config.d;
  if (config.scheme == SchemeId::dataaug) j["q"] = config.q;
  j["field"] = field;
  j["streams"] = streams;
  j["payload_degree"] = payload_degree;
  j["beta_theory"] = threshold.beta;
  j["feasible"] = threshold.feasible;
  j["outer_bound"] = outer_bound;
  j["strategy"] = std::string(to_string(strategy));
  j["seed"] = seed;
  j["trials"] = trials;
  j["b_hat"] = b_hat;
  j["sound"] = sound;
  auto& pts = j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : points) {
    pts.push_back({{"b", p.b},
                   {"trials", p.trials},
                   {"successes", p.successes},
                   {"success_rate", p.rate()},
                   {"wrong_values", p.wrong_values},
                   {"decode_failures", p.decode_failures}});
  }
  return j;
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream os;
  os << "scheme,N,K,D,q,b,trials,successes,beta_theory,outer_bound\n";
  const std::string d = config.scheme == SchemeId::dptf ? std::to_string(config.d) : "";
  const std::string q = config.scheme == SchemeId::dataaug ? std::to_string(config.q) : "";
  for (const auto& p : points) {
    os << to_string(config.scheme) << ',' << config.n << ',' << config.k << ',' << d << ',' << q << ',' << p.b << ','
       << p.trials << ',' << p.successes << ',' << threshold.beta << ',' << outer_bound << '\n';
  }
  return os.str();
}

nlohmann::ordered_json to_json(const TrialOutcome& o) {
  nlohmann::ordered_json j;
  j["success"] = o.success;
  j["failure"] = std::string(to_string(o.failure));
  j["status"] = to_string(o.status);
  j["adversaries"] = o.adversaries;
  j["expected"] = o.expected;
  j["decoded"] = o.decoded;
  return j;
}

}  // namespace boolecode
