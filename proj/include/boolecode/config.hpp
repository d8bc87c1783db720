#pragma once

// Request schema shared by the C API and the command-line front end.
//
// A request is one JSON object. Recognised keys:
//   command   analyze | run | sweep | compare | sbox
//   scheme    lcc | anf | dnf | ptf | dptf | datalog | dataaug
//   n, k, d, q, trials, seed, b, b_max, strategy, format, out,
//   function, field, input_radius, sbox
// Anything else is rejected.
//
// `function` is one of
//   {"hex": "80", "m": 3}
//   {"anf": [[1, 2, 3]], "m": 3}            1-based indices, [] = constant 1
//   {"poly": {"vars": 3, "terms": [{"coeff": "2", "exps": [0, 0, 0]}]}}
//   {"poly": {"vars": 2, "outputs": [{"terms": [...]}, ...]}}
//   {"preset": "and3", "param": 3}

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolecode/scheme.hpp"

namespace boolecode {

enum class Command { analyze, run, sweep, compare, sbox };

std::string_view to_string(Command c) noexcept;
Command parse_command(std::string_view name);

enum class OutputFormat { json, csv };

struct RunRequest {
  Command command = Command::analyze;
  std::optional<SchemeId> scheme;
  std::optional<std::size_t> n, k, d;
  std::optional<unsigned> q;
  std::optional<nlohmann::json> function;
  std::size_t trials = 0;  // 0 = command default
  std::uint64_t seed = 0;
  std::optional<std::vector<std::size_t>> b;
  std::optional<std::size_t> b_max;
  AdversaryStrategy strategy = AdversaryStrategy::random_replace;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> out;
  BigInt prime = 0;
  unsigned binary_degree = 0;
  std::int64_t input_radius = 5;
  std::optional<std::string> sbox;
};

/// Validates types and keys; throws Error(parse_error) with the offending key.
RunRequest parse_request(const nlohmann::json& j);

/// Function descriptors.
TargetFunction parse_function(const nlohmann::json& j);
PolynomialSystem parse_polynomial(const nlohmann::json& j);
TargetFunction make_preset(std::string_view name, std::optional<std::size_t> param = std::nullopt);
/// Names accepted by make_preset.
std::vector<std::string> preset_names();

/// x1^5 x2^3 + x2 x3^3 + 2
MultivariatePolynomial augmentation_example();

}  // namespace boolecode
