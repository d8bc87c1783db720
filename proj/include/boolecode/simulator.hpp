#pragma once

// Master-worker trials with Byzantine workers and threshold sweeps.
//
// Seeding: trial t draws its inputs from derive_seed(seed, 1, t) and the
// adversary for corruption count b from derive_seed(seed, 0x100 + b, t), so
// every (trial, b) pair is independent of execution order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolecode/scheme.hpp"

namespace boolecode {

struct AdversaryModel {
  std::size_t b = 0;
  AdversaryStrategy strategy = AdversaryStrategy::random_replace;
  std::uint64_t seed = 0;
};

enum class FailureKind { none, wrong_value, decode_failure };

std::string_view to_string(FailureKind k) noexcept;

struct TrialOutcome {
  bool success = false;
  FailureKind failure = FailureKind::none;
  DecodeStatus status = DecodeStatus::ok;
  /// Corrupted worker indices, ascending.
  std::vector<std::size_t> adversaries;
  /// Filled only when values were requested.
  std::vector<std::string> expected;
  std::vector<std::string> decoded;
};

/// b randomly chosen distinct workers out of n.
std::vector<std::size_t> choose_adversaries(std::size_t n, std::size_t b, Rng& rng);

/// One trial from precomputed honest payloads (not modified).
TrialOutcome run_trial(const WorkerResponses& honest, const AdversaryModel& adversary, bool record_values = false,
                       const SchemeInstance* instance = nullptr, const TrialInputs* inputs = nullptr);

/// encode -> honest payloads -> corrupt -> decode -> compare.
TrialOutcome run_trial(const SchemeInstance& instance, const TrialInputs& inputs, const AdversaryModel& adversary,
                       bool record_values = true);

/// Trial 0 of a sweep with master seed `seed`, at corruption count b.
TrialOutcome run_seeded_trial(const SchemeInstance& instance, std::size_t b, AdversaryStrategy strategy,
                              std::uint64_t seed);

struct SweepOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  /// Corruption counts to test; empty means 0..min(beta + 1, N).
  std::vector<std::size_t> b_values;
  AdversaryStrategy strategy = AdversaryStrategy::random_replace;
};

struct SweepPoint {
  std::size_t b = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t wrong_values = 0;
  std::size_t decode_failures = 0;

  double rate() const { return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials); }
  bool all_success() const { return successes == trials; }
};

struct ExperimentReport {
  SchemeConfig config;
  std::string field;
  std::size_t streams = 0;
  std::size_t payload_degree = 0;
  Threshold threshold;
  std::int64_t outer_bound = 0;
  AdversaryStrategy strategy = AdversaryStrategy::random_replace;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<SweepPoint> points;
  /// Largest b such that every tested b' <= b succeeded in all trials; 0 if none.
  std::int64_t b_hat = 0;
  /// 100% success at every tested b <= beta (vacuous when infeasible).
  bool sound = true;

  bool infeasible() const noexcept { return !threshold.feasible; }
  nlohmann::ordered_json to_json() const;
  /// Columns: scheme,N,K,D,q,b,trials,successes,beta_theory,outer_bound.
  std::string to_csv() const;
};

ExperimentReport sweep_threshold(const SchemeInstance& instance, const SweepOptions& options);

nlohmann::ordered_json to_json(const TrialOutcome& outcome);

}  // namespace boolecode
