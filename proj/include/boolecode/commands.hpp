#pragma once

// Command executors behind both the C API and the command-line tool.

#include <string>

#include <json.hpp>

#include "boolecode/config.hpp"

namespace boolecode {

/// Boolean: m, r(f), w(f), deg f, PTF degree bound and decision-list facts.
/// Polynomial: variables, outputs, sparsity, degree and per-scheme stream facts.
nlohmann::ordered_json analyze_function(const TargetFunction& f, unsigned q = 2);

struct CompareRow {
  SchemeId scheme = SchemeId::lcc;
  std::size_t d = 0;
  unsigned q = 0;
  std::size_t payload_degree = 0;
  Threshold threshold;
};

struct Comparison {
  std::size_t n = 0;
  std::size_t k = 0;
  std::int64_t outer_bound = 0;
  std::vector<CompareRow> rows;
  /// D-PTF thresholds for every D in [1, w(f)] (Boolean targets only).
  std::vector<CompareRow> dptf_sweep;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

/// Closed-form thresholds for every scheme applicable to f.
Comparison compare_schemes(const TargetFunction& f, std::size_t n, std::size_t k, std::size_t d = 1, unsigned q = 2);

struct ExecutionResult {
  std::string output;
  /// run / sweep observed a failure at some b <= beta of a feasible scheme.
  bool violation = false;
};

ExecutionResult execute(const RunRequest& request);

}  // namespace boolecode
