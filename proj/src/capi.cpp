#include "boolecode.h"

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>

#include "boolecode/commands.hpp"
#include "boolecode/sbox.hpp"
#include "boolecode/simulator.hpp"

struct bc_function {
  boolecode::TargetFunction target;
};

struct bc_scheme {
  boolecode::SchemeInstance instance;
};

namespace {

thread_local std::string last_error;

bc_status status_of(boolecode::ErrorCode c) {
  switch (c) {
    case boolecode::ErrorCode::invalid_argument: return BC_ERR_INVALID_ARGUMENT;
    case boolecode::ErrorCode::parse_error: return BC_ERR_PARSE;
    case boolecode::ErrorCode::out_of_range: return BC_ERR_OUT_OF_RANGE;
    case boolecode::ErrorCode::internal: return BC_ERR_INTERNAL;
  }
  return BC_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
bc_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return BC_OK;
  } catch (const boolecode::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return BC_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BC_ERR_INTERNAL;
  }
}

bc_status null_pointer(const char* what) {
  last_error = std::string(what) + " must not be NULL";
  return BC_ERR_NULL_POINTER;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* bc_version(void) { return "1.0.0"; }

const char* bc_last_error(void) { return last_error.c_str(); }

const char* bc_status_name(bc_status status) {
  switch (status) {
    case BC_OK: return "ok";
    case BC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BC_ERR_PARSE: return "parse error";
    case BC_ERR_OUT_OF_RANGE: return "out of range";
    case BC_ERR_INTERNAL: return "internal error";
    case BC_ERR_NULL_POINTER: return "null pointer";
  }
  return "unknown";
}

void bc_string_free(char* s) { std::free(s); }

bc_status bc_function_from_hex(unsigned m, const char* hex, bc_function** out) {
  if (hex == nullptr || out == nullptr) return null_pointer("hex and out");
  return guarded([&] { *out = new bc_function{boolecode::BooleanFunction::from_hex(m, hex)}; });
}

bc_status bc_function_from_anf_json(unsigned m, const char* anf_json, bc_function** out) {
  if (anf_json == nullptr || out == nullptr) return null_pointer("anf_json and out");
  return guarded([&] {
    nlohmann::json j{{"m", m}, {"anf", nlohmann::json::parse(anf_json)}};
    *out = new bc_function{boolecode::parse_function(j)};
  });
}

bc_status bc_function_from_poly_json(const char* poly_json, bc_function** out) {
  if (poly_json == nullptr || out == nullptr) return null_pointer("poly_json and out");
  return guarded([&] { *out = new bc_function{boolecode::parse_polynomial(nlohmann::json::parse(poly_json))}; });
}

bc_status bc_function_preset(const char* name, long param, bc_function** out) {
  if (name == nullptr || out == nullptr) return null_pointer("name and out");
  return guarded([&] {
    std::optional<std::size_t> p;
    if (param >= 0) p = static_cast<std::size_t>(param);
    *out = new bc_function{boolecode::make_preset(name, p)};
  });
}

void bc_function_free(bc_function* f) { delete f; }

bc_status bc_function_analyze_json(const bc_function* f, char** json_out) {
  if (f == nullptr || json_out == nullptr) return null_pointer("function and json_out");
  return guarded([&] { *json_out = dup(boolecode::analyze_function(f->target).dump(2)); });
}

bc_status bc_scheme_create(const bc_function* f, const char* scheme, size_t n, size_t k, size_t d, unsigned q,
                           bc_scheme** out) {
  if (f == nullptr || scheme == nullptr || out == nullptr) return null_pointer("function, scheme and out");
  return guarded([&] {
    boolecode::SchemeConfig c;
    c.scheme = boolecode::parse_scheme_id(scheme);
    c.n = n;
    c.k = k;
    c.d = d;
    c.q = q;
    *out = new bc_scheme{boolecode::SchemeInstance(c, f->target)};
  });
}

void bc_scheme_free(bc_scheme* s) { delete s; }

bc_status bc_scheme_threshold(const bc_scheme* s, int64_t* beta, int* feasible) {
  if (s == nullptr || beta == nullptr) return null_pointer("scheme and beta");
  return guarded([&] {
    const auto t = s->instance.threshold();
    *beta = t.beta;
    if (feasible != nullptr) *feasible = t.feasible ? 1 : 0;
  });
}

bc_status bc_outer_bound(size_t n, size_t k, int64_t* out) {
  if (out == nullptr) return null_pointer("out");
  return guarded([&] { *out = boolecode::outer_bound(n, k); });
}

bc_status bc_run_trial(const bc_scheme* s, size_t b, const char* strategy, uint64_t seed, int* success,
                       char** json_out) {
  if (s == nullptr || success == nullptr) return null_pointer("scheme and success");
  return guarded([&] {
    const auto strat = strategy == nullptr ? boolecode::AdversaryStrategy::random_replace
                                           : boolecode::parse_strategy(strategy);
    const auto o = boolecode::run_seeded_trial(s->instance, b, strat, seed);
    *success = o.success ? 1 : 0;
    if (json_out != nullptr) *json_out = dup(boolecode::to_json(o).dump(2));
  });
}

bc_status bc_sweep(const bc_scheme* s, size_t trials, uint64_t seed, size_t b_max, const char* format, char** out,
                   int* sound) {
  if (s == nullptr || out == nullptr) return null_pointer("scheme and out");
  return guarded([&] {
    const std::string fmt = format == nullptr ? "json" : format;
    boolecode::require(fmt == "json" || fmt == "csv", "format must be 'json' or 'csv'");
    boolecode::SweepOptions opt;
    opt.trials = trials;
    opt.seed = seed;
    if (b_max != SIZE_MAX) {
      for (std::size_t b = 0; b <= b_max; ++b) opt.b_values.push_back(b);
    }
    const auto rep = boolecode::sweep_threshold(s->instance, opt);
    *out = dup(fmt == "csv" ? rep.to_csv() : rep.to_json().dump(2));
    if (sound != nullptr) *sound = rep.sound ? 1 : 0;
  });
}

bc_status bc_compare(const bc_function* f, size_t n, size_t k, char** json_out) {
  if (f == nullptr || json_out == nullptr) return null_pointer("function and json_out");
  return guarded([&] { *json_out = dup(boolecode::compare_schemes(f->target, n, k).to_json().dump(2)); });
}

bc_status bc_sbox_casestudy(size_t n, size_t k, char** json_out) {
  if (json_out == nullptr) return null_pointer("json_out");
  return guarded([&] { *json_out = dup(boolecode::sbox_casestudy(boolecode::aes_sbox(), n, k).to_json().dump(2)); });
}

bc_status bc_execute(const char* request_json, char** out, int* violation) {
  if (request_json == nullptr || out == nullptr) return null_pointer("request_json and out");
  return guarded([&] {
    const auto req = boolecode::parse_request(nlohmann::json::parse(request_json));
    const auto res = boolecode::execute(req);
    *out = dup(res.output);
    if (violation != nullptr) *violation = res.violation ? 1 : 0;
  });
}

}  // extern "C"
