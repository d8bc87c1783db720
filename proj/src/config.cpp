#include "boolecode/config.hpp"

#include <set>

#include "boolecode/sbox.hpp"

namespace boolecode {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorCode::parse_error, where + ": " + what);
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(where, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (ok.count(key) == 0) bad(where, "unknown key '" + key + "'");
  }
}

std::uint64_t unsigned_of(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "expected a non-negative integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto s = v.get<std::int64_t>();
  if (s < 0) bad(where, "expected a non-negative integer");
  return static_cast<std::uint64_t>(s);
}

std::string string_of(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "expected a string");
  return v.get<std::string>();
}

Rational rational_of(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Rational(v.get<std::uint64_t>()) : Rational(v.get<std::int64_t>());
  if (!v.is_string()) bad(where, "coefficient must be an integer or a string like \"-3/2\"");
  const auto s = v.get<std::string>();
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) bad(where, "zero denominator");
    return Rational(BigInt(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    bad(where, "malformed coefficient '" + s + "'");
  }
}

MultivariatePolynomial polynomial_terms(const json& terms, std::size_t vars, const std::string& where) {
  if (!terms.is_array()) bad(where, "'terms' must be an array");
  std::vector<PolyTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = where + ".terms[" + std::to_string(i) + "]";
    const auto& t = terms[i];
    only_keys(t, at, {"coeff", "exps"});
    if (!t.contains("coeff") || !t.contains("exps")) bad(at, "needs 'coeff' and 'exps'");
    const auto& e = t["exps"];
    if (!e.is_array() || e.size() != vars) bad(at, "'exps' must list one exponent per variable");
    Exponents exps;
    for (std::size_t j = 0; j < e.size(); ++j) {
      const auto x = unsigned_of(e[j], at + ".exps[" + std::to_string(j) + "]");
      if (x > 64) bad(at, "exponent too large");
      exps.push_back(static_cast<unsigned>(x));
    }
    out.push_back({rational_of(t["coeff"], at + ".coeff"), std::move(exps)});
  }
  return MultivariatePolynomial(vars, std::move(out));
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::analyze: return "analyze";
    case Command::run: return "run";
    case Command::sweep: return "sweep";
    case Command::compare: return "compare";
    case Command::sbox: return "sbox";
  }
  return "unknown";
}

Command parse_command(std::string_view name) {
  if (name == "analyze") return Command::analyze;
  if (name == "run") return Command::run;
  if (name == "sweep") return Command::sweep;
  if (name == "compare") return Command::compare;
  if (name == "sbox") return Command::sbox;
  fail(ErrorCode::parse_error, "unknown command '" + std::string(name) + "'");
}

MultivariatePolynomial augmentation_example() {
  return MultivariatePolynomial(3, {{Rational(1), {5, 3, 0}}, {Rational(1), {0, 1, 3}}, {Rational(2), {0, 0, 0}}});
}

std::vector<std::string> preset_names() {
  return {"and3", "example-dnf", "example-ptf", "aes-sbox-bit", "matrix-square", "aug-example"};
}

TargetFunction make_preset(std::string_view name, std::optional<std::size_t> param) {
  auto m_or = [&](std::size_t dflt) {
    const std::size_t m = param.value_or(dflt);
    require(m >= 1 && m <= kMaxVariables, "preset variable count must be in [1, 20]");
    return m;
  };
  if (name == "and3") return and_function(m_or(3));
  if (name == "example-dnf") return all_equal_function(m_or(4));
  if (name == "example-ptf") return paired_xor_function(m_or(16));
  if (name == "aes-sbox-bit") {
    const std::size_t bit = param.value_or(0);
    require(bit < 8, "S-box bit must be in [0, 8)");
    return sbox_bit(aes_sbox(), static_cast<unsigned>(bit));
  }
  if (name == "matrix-square") return matrix_square_system(param.value_or(2));
  if (name == "aug-example") return single_output(augmentation_example());
  fail(ErrorCode::parse_error, "unknown preset '" + std::string(name) + "'");
}

PolynomialSystem parse_polynomial(const json& j) {
  only_keys(j, "function.poly", {"vars", "terms", "outputs"});
  if (!j.contains("vars")) bad("function.poly", "missing 'vars'");
  const auto vars = unsigned_of(j["vars"], "function.poly.vars");
  if (vars < 1 || vars > 64) bad("function.poly.vars", "must be in [1, 64]");
  if (j.contains("terms") == j.contains("outputs")) bad("function.poly", "give exactly one of 'terms' or 'outputs'");
  PolynomialSystem sys;
  sys.vars = vars;
  if (j.contains("terms")) {
    sys.components.push_back(polynomial_terms(j["terms"], vars, "function.poly"));
  } else {
    const auto& outs = j["outputs"];
    if (!outs.is_array() || outs.empty()) bad("function.poly.outputs", "must be a non-empty array");
    for (std::size_t i = 0; i < outs.size(); ++i) {
      const std::string at = "function.poly.outputs[" + std::to_string(i) + "]";
      only_keys(outs[i], at, {"terms"});
      if (!outs[i].contains("terms")) bad(at, "missing 'terms'");
      sys.components.push_back(polynomial_terms(outs[i]["terms"], vars, at));
    }
  }
  return sys;
}

TargetFunction parse_function(const json& j) {
  only_keys(j, "function", {"hex", "anf", "m", "poly", "preset", "param"});
  const int kinds = static_cast<int>(j.contains("hex")) + static_cast<int>(j.contains("anf")) +
                    static_cast<int>(j.contains("poly")) + static_cast<int>(j.contains("preset"));
  if (kinds != 1) bad("function", "give exactly one of 'hex', 'anf', 'poly' or 'preset'");
  if (j.contains("hex") || j.contains("anf")) {
    if (!j.contains("m")) bad("function", "truth-table and ANF sources need 'm'");
    if (j.contains("param")) bad("function", "'param' only applies to presets");
    const auto m = unsigned_of(j["m"], "function.m");
    if (m < 1 || m > kMaxVariables) bad("function.m", "must be in [1, 20]");
    if (j.contains("hex")) return BooleanFunction::from_hex(m, string_of(j["hex"], "function.hex"));
    const auto& a = j["anf"];
    if (!a.is_array()) bad("function.anf", "expected an array of index arrays");
    std::vector<std::vector<std::size_t>> monomials;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string at = "function.anf[" + std::to_string(i) + "]";
      if (!a[i].is_array()) bad(at, "expected an array of 1-based variable indices");
      std::vector<std::size_t> mono;
      for (const auto& v : a[i]) mono.push_back(unsigned_of(v, at));
      monomials.push_back(std::move(mono));
    }
    return function_from_anf(m, monomials);
  }
  if (j.contains("m")) bad("function", "'m' only applies to hex and ANF sources");
  if (j.contains("poly")) {
    if (j.contains("param")) bad("function", "'param' only applies to presets");
    return parse_polynomial(j["poly"]);
  }
  std::optional<std::size_t> param;
  if (j.contains("param")) param = unsigned_of(j["param"], "function.param");
  return make_preset(string_of(j["preset"], "function.preset"), param);
}

RunRequest parse_request(const json& j) {
  only_keys(j, "config", {"command", "scheme", "n", "k", "d", "q", "function", "trials", "seed", "b", "b_max",
                          "strategy", "format", "out", "field", "input_radius", "sbox"});
  RunRequest r;
  if (!j.contains("command")) bad("config", "missing 'command'");
  r.command = parse_command(string_of(j["command"], "config.command"));
  if (j.contains("scheme")) r.scheme = parse_scheme_id(string_of(j["scheme"], "config.scheme"));
  if (j.contains("n")) r.n = unsigned_of(j["n"], "config.n");
  if (j.contains("k")) r.k = unsigned_of(j["k"], "config.k");
  if (j.contains("d")) r.d = unsigned_of(j["d"], "config.d");
  if (j.contains("q")) {
    const auto q = unsigned_of(j["q"], "config.q");
    if (q < 1 || q > 8) bad("config.q", "must be in [1, 8]");
    r.q = static_cast<unsigned>(q);
  }
  if (j.contains("function")) r.function = j["function"];
  if (j.contains("trials")) {
    r.trials = unsigned_of(j["trials"], "config.trials");
    if (r.trials < 1) bad("config.trials", "must be at least 1");
  }
  if (j.contains("seed")) r.seed = unsigned_of(j["seed"], "config.seed");
  if (j.contains("b")) {
    std::vector<std::size_t> bs;
    if (j["b"].is_array()) {
      for (const auto& v : j["b"]) bs.push_back(unsigned_of(v, "config.b"));
      if (bs.empty()) bad("config.b", "must not be empty");
    } else {
      bs.push_back(unsigned_of(j["b"], "config.b"));
    }
    r.b = std::move(bs);
  }
  if (j.contains("b_max")) r.b_max = unsigned_of(j["b_max"], "config.b_max");
  if (r.b && r.b_max) bad("config", "give at most one of 'b' and 'b_max'");
  if (j.contains("strategy")) r.strategy = parse_strategy(string_of(j["strategy"], "config.strategy"));
  if (j.contains("format")) {
    const auto f = string_of(j["format"], "config.format");
    if (f == "json") r.format = OutputFormat::json;
    else if (f == "csv") r.format = OutputFormat::csv;
    else bad("config.format", "must be 'json' or 'csv'");
  }
  if (j.contains("out")) r.out = string_of(j["out"], "config.out");
  if (j.contains("field")) {
    const auto& f = j["field"];
    only_keys(f, "config.field", {"prime", "binary_degree"});
    if (f.contains("prime") && f.contains("binary_degree")) bad("config.field", "give one of 'prime' or 'binary_degree'");
    if (f.contains("prime")) {
      const auto& p = f["prime"];
      try {
        r.prime = p.is_string() ? BigInt(p.get<std::string>()) : BigInt(unsigned_of(p, "config.field.prime"));
      } catch (const std::runtime_error&) {
        bad("config.field.prime", "not an integer");
      }
      FieldSpec::prime(r.prime);
    }
    if (f.contains("binary_degree")) {
      const auto s = unsigned_of(f["binary_degree"], "config.field.binary_degree");
      if (s < 1 || s > 16) bad("config.field.binary_degree", "must be in [1, 16]");
      r.binary_degree = static_cast<unsigned>(s);
    }
  }
  if (j.contains("input_radius")) {
    const auto radius = unsigned_of(j["input_radius"], "config.input_radius");
    if (radius < 1 || radius > 1000000) bad("config.input_radius", "must be in [1, 1000000]");
    r.input_radius = static_cast<std::int64_t>(radius);
  }
  if (j.contains("sbox")) r.sbox = string_of(j["sbox"], "config.sbox");
  return r;
}

}  // namespace boolecode
