#include "boolecode/security.hpp"

#include <bit>

#include "boolecode/error.hpp"

namespace boolecode {

std::string_view to_string(SchemeId id) noexcept {
  switch (id) {
    case SchemeId::lcc: return "lcc";
    case SchemeId::anf: return "anf";
    case SchemeId::dnf: return "dnf";
    case SchemeId::ptf: return "ptf";
    case SchemeId::dptf: return "dptf";
    case SchemeId::datalog: return "datalog";
    case SchemeId::dataaug: return "dataaug";
  }
  return "unknown";
}

SchemeId parse_scheme_id(std::string_view name) {
  if (name == "lcc" || name == "lcc-direct") return SchemeId::lcc;
  if (name == "anf") return SchemeId::anf;
  if (name == "dnf") return SchemeId::dnf;
  if (name == "ptf") return SchemeId::ptf;
  if (name == "dptf" || name == "d-ptf") return SchemeId::dptf;
  if (name == "datalog" || name == "data-log") return SchemeId::datalog;
  if (name == "dataaug" || name == "data-aug") return SchemeId::dataaug;
  fail(ErrorCode::parse_error, "unknown scheme '" + std::string(name) + "'");
}

std::size_t floor_log2(std::size_t n) {
  require(n >= 1, "log2 of zero");
  return static_cast<std::size_t>(std::bit_width(n) - 1);
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::int64_t outer_bound(std::size_t n, std::size_t k) {
  require(k >= 1 && n >= k, "outer bound needs N >= K >= 1");
  return static_cast<std::int64_t>(n - k) / 2;
}

Threshold threshold_for_degree(std::size_t n, std::size_t k, std::size_t payload_degree) {
  require(k >= 1 && n >= 1, "N and K must be positive");
  const auto interior = static_cast<std::int64_t>(n) -
                        static_cast<std::int64_t>((k - 1) * payload_degree) - 1;
  if (interior < 0) return {0, false, interior};
  return {interior / 2, true, interior};
}

Threshold threshold_mds(std::size_t n, std::size_t k) {
  require(k >= 1 && n >= 1, "N and K must be positive");
  const auto interior = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k);
  if (interior < 0) return {0, false, interior};
  return {interior / 2, true, interior};
}

Threshold threshold_lcc(std::size_t n, std::size_t k, std::size_t deg) { return threshold_for_degree(n, k, deg); }

std::size_t ptf_degree(std::size_t w) {
  require(w >= 1, "PTF threshold needs w(f) >= 1");
  return floor_log2(w) + 1;
}

std::size_t dptf_degree(std::size_t w, std::size_t d) {
  require(w >= 1, "D-partitioned threshold needs w(f) >= 1");
  require(d >= 1 && d <= w, "partition count D must be in [1, w(f)]");
  return floor_log2(ceil_div(w, d)) + 1;
}

std::size_t dataaug_degree(std::size_t deg, std::size_t q) {
  require(q >= 1, "augmentation degree q must be >= 1");
  return ceil_div(deg, q);
}

Threshold threshold_ptf(std::size_t n, std::size_t k, std::size_t w) {
  return threshold_for_degree(n, k, ptf_degree(w));
}

Threshold threshold_dptf(std::size_t n, std::size_t k, std::size_t w, std::size_t d) {
  return threshold_for_degree(n, k, dptf_degree(w, d));
}

Threshold threshold_dataaug(std::size_t n, std::size_t k, std::size_t deg, std::size_t q) {
  return threshold_for_degree(n, k, dataaug_degree(deg, q));
}

std::string_view documented_complexity(SchemeId id) noexcept {
  switch (id) {
    case SchemeId::lcc: return "O(mN log^3 N loglog N)";
    case SchemeId::anf: return "O(r(f) N log^2 N loglog N)";
    case SchemeId::dnf: return "O(w(f) N log^2 N loglog N)";
    case SchemeId::ptf: return "O(N log^2 N loglog N)";
    case SchemeId::dptf: return "O(D N log^2 N loglog N)";
    case SchemeId::datalog: return "O(r(f) N log^2 N loglog N)";
    case SchemeId::dataaug: return "O(N log^2 N loglog N)";
  }
  return "";
}

}  // namespace boolecode
