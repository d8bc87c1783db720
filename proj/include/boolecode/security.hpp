#pragma once

// Closed-form security thresholds. Each formula is floor(interior / 2); a
// negative interior means the scheme cannot tolerate even b = 0 at these
// parameters, reported as beta = 0 with feasible = false.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace boolecode {

enum class SchemeId { lcc, anf, dnf, ptf, dptf, datalog, dataaug };

std::string_view to_string(SchemeId id) noexcept;
/// Accepts lcc, anf, dnf, ptf, dptf, datalog, dataaug (and a few aliases).
SchemeId parse_scheme_id(std::string_view name);

struct Threshold {
  std::int64_t beta = 0;
  bool feasible = true;
  /// Value inside the floor, before halving.
  std::int64_t interior = 0;
};

std::size_t floor_log2(std::size_t n);
std::size_t ceil_div(std::size_t a, std::size_t b);

/// floor((N - K) / 2); the bound no scheme can exceed.
std::int64_t outer_bound(std::size_t n, std::size_t k);

/// Degree of the payload polynomial in the encoded input, per scheme:
/// 1 for ANF/DNF/data-log, deg f for LCC, floor(log2 w)+1 for PTF,
/// floor(log2 ceil(w/D))+1 for D-PTF, ceil(deg f / q) for data-aug.
Threshold threshold_for_degree(std::size_t n, std::size_t k, std::size_t payload_degree);

Threshold threshold_mds(std::size_t n, std::size_t k);
Threshold threshold_lcc(std::size_t n, std::size_t k, std::size_t deg);
Threshold threshold_ptf(std::size_t n, std::size_t k, std::size_t w);
Threshold threshold_dptf(std::size_t n, std::size_t k, std::size_t w, std::size_t d);
Threshold threshold_dataaug(std::size_t n, std::size_t k, std::size_t deg, std::size_t q);

std::size_t ptf_degree(std::size_t w);
std::size_t dptf_degree(std::size_t w, std::size_t d);
std::size_t dataaug_degree(std::size_t deg, std::size_t q);

/// Decoding / worker cost expressions as documented for each scheme (not measured).
std::string_view documented_complexity(SchemeId id) noexcept;

}  // namespace boolecode
