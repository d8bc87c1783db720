// Command-line front end. Builds one JSON request from --config, the
// BOOLECODE_SEED environment variable and flags (in increasing precedence)
// and hands it to the C API.
//
// Exit codes: 0 success, 1 runtime failure or a run/sweep failure at
// b <= beta, 2 usage, configuration or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolecode.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string config;
  std::string scheme;
  std::size_t n = 0, k = 0, d = 0;
  unsigned q = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> b;
  std::size_t b_max = 0;
  std::string strategy;
  std::string out;
  std::string format;
  std::string tt;
  unsigned m = 0;
  std::string anf;
  std::string poly;
  std::string preset;
  std::size_t param = 0;
  std::string prime;
  unsigned binary_degree = 0;
  std::string sbox;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Flag values that hold JSON may also name a file with a leading '@'.
nlohmann::json json_arg(const std::string& text, const char* flag) {
  const std::string body = !text.empty() && text.front() == '@' ? slurp(text.substr(1)) : text;
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void add_common(CLI::App* cmd, Flags& f, bool experiment) {
  cmd->add_option("--config", f.config, "JSON request file");
  cmd->add_option("--out", f.out, "Write output to this path instead of stdout");
  cmd->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--tt", f.tt, "Truth table as hex (needs --m)");
  cmd->add_option("--m", f.m, "Variable count for --tt / --anf");
  cmd->add_option("--anf", f.anf, "ANF monomials as JSON, e.g. [[1,2,3]] (or @file)");
  cmd->add_option("--poly", f.poly, "Polynomial map as JSON (or @file)");
  cmd->add_option("--preset", f.preset, "Named function: and3, example-dnf, example-ptf, aes-sbox-bit, matrix-square, aug-example");
  cmd->add_option("--param", f.param, "Preset parameter");
  cmd->add_option("--q", f.q, "Augmentation degree");
  if (!experiment) return;
  cmd->add_option("--scheme", f.scheme, "lcc, anf, dnf, ptf, dptf, datalog, dataaug");
  cmd->add_option("--n", f.n, "Number of workers N");
  cmd->add_option("--k", f.k, "Number of data blocks K");
  cmd->add_option("--d", f.d, "Partition count D for dptf");
  cmd->add_option("--trials", f.trials, "Trials per b");
  cmd->add_option("--seed", f.seed, "Master seed (overrides BOOLECODE_SEED and the config)");
  cmd->add_option("--strategy", f.strategy, "random-replace, additive-offset, codeword-targeted, erase");
  cmd->add_option("--prime", f.prime, "Force a prime field modulus");
  cmd->add_option("--binary-degree", f.binary_degree, "Force GF(2^s)");
}

bool given(const CLI::App* cmd, const char* name) {
  const auto* opt = cmd->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

nlohmann::json build_request(const CLI::App* cmd, const Flags& f) {
  nlohmann::json req = nlohmann::json::object();
  if (!f.config.empty()) {
    try {
      req = nlohmann::json::parse(slurp(f.config));
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError("config '" + f.config + "': " + e.what());
    }
    if (!req.is_object()) throw UsageError("config '" + f.config + "': expected a JSON object");
    if (req.contains("command") && req["command"] != cmd->get_name()) {
      throw UsageError("config command '" + req["command"].dump() + "' does not match '" + cmd->get_name() + "'");
    }
  }
  req["command"] = cmd->get_name();

  if (const char* env = std::getenv("BOOLECODE_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::strlen(env)) throw std::invalid_argument("trailing characters");
      req["seed"] = v;
    } catch (const std::exception&) {
      throw UsageError(std::string("BOOLECODE_SEED is not a non-negative integer: '") + env + "'");
    }
  }

  if (given(cmd, "--scheme")) req["scheme"] = f.scheme;
  if (given(cmd, "--n")) req["n"] = f.n;
  if (given(cmd, "--k")) req["k"] = f.k;
  if (given(cmd, "--d")) req["d"] = f.d;
  if (given(cmd, "--q")) req["q"] = f.q;
  if (given(cmd, "--trials")) req["trials"] = f.trials;
  if (given(cmd, "--seed")) req["seed"] = f.seed;
  if (given(cmd, "--b")) {
    req.erase("b_max");
    req["b"] = f.b.size() == 1 ? nlohmann::json(f.b.front()) : nlohmann::json(f.b);
  }
  if (given(cmd, "--b-max")) {
    req.erase("b");
    req["b_max"] = f.b_max;
  }
  if (given(cmd, "--strategy")) req["strategy"] = f.strategy;
  if (given(cmd, "--format")) req["format"] = f.format;
  if (given(cmd, "--out")) req["out"] = f.out;
  if (given(cmd, "--prime")) req["field"] = {{"prime", f.prime}};
  if (given(cmd, "--binary-degree")) req["field"] = {{"binary_degree", f.binary_degree}};
  if (given(cmd, "--sbox")) req["sbox"] = f.sbox;

  const int sources = static_cast<int>(given(cmd, "--tt")) + static_cast<int>(given(cmd, "--anf")) +
                      static_cast<int>(given(cmd, "--poly")) + static_cast<int>(given(cmd, "--preset"));
  if (sources > 1) throw UsageError("give at most one of --tt, --anf, --poly, --preset");
  if (given(cmd, "--tt")) {
    if (!given(cmd, "--m")) throw UsageError("--tt needs --m");
    req["function"] = {{"hex", f.tt}, {"m", f.m}};
  } else if (given(cmd, "--anf")) {
    if (!given(cmd, "--m")) throw UsageError("--anf needs --m");
    req["function"] = {{"anf", json_arg(f.anf, "--anf")}, {"m", f.m}};
  } else if (given(cmd, "--poly")) {
    req["function"] = {{"poly", json_arg(f.poly, "--poly")}};
  } else if (given(cmd, "--preset")) {
    req["function"] = {{"preset", f.preset}};
    if (given(cmd, "--param")) req["function"]["param"] = f.param;
  } else if (given(cmd, "--param")) {
    throw UsageError("--param needs --preset");
  }
  return req;
}

int emit(const std::string& text, const nlohmann::json& req) {
  if (req.contains("out") && req["out"].is_string()) {
    const auto path = req["out"].get<std::string>();
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "error: cannot write '" << path << "'\n";
      return kExitFailure;
    }
    return kExitOk;
  }
  std::cout << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Byzantine-robust coded computation of Boolean functions and polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bc_version());
  Flags f;

  auto* analyze = app.add_subcommand("analyze", "Print sparsity, weight, degree and PTF facts of a function");
  add_common(analyze, f, false);

  auto* compare = app.add_subcommand("compare", "Closed-form thresholds of every applicable scheme");
  add_common(compare, f, false);
  compare->add_option("--n", f.n, "Number of workers N");
  compare->add_option("--k", f.k, "Number of data blocks K");
  compare->add_option("--d", f.d, "Partition count D for the dptf row");

  auto* run = app.add_subcommand("run", "Run seeded trials at one corruption count");
  add_common(run, f, true);
  run->add_option("--b", f.b, "Number of Byzantine workers")->expected(1);

  auto* sweep = app.add_subcommand("sweep", "Sweep b and estimate the empirical threshold");
  add_common(sweep, f, true);
  sweep->add_option("--b", f.b, "Corruption counts to test")->expected(1, -1);
  sweep->add_option("--b-max", f.b_max, "Test b = 0..b-max");

  auto* sbox = app.add_subcommand("sbox", "8-bit S-box case study");
  sbox->add_option("--config", f.config, "JSON request file");
  sbox->add_option("--out", f.out, "Write output to this path instead of stdout");
  sbox->add_option("--n", f.n, "Number of workers N (default 100)");
  sbox->add_option("--k", f.k, "Number of data blocks K (default 10)");
  sbox->add_option("--sbox", f.sbox, "Custom S-box as 512 hex digits (default AES)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const CLI::App* cmd = app.get_subcommands().front();
  nlohmann::json req;
  try {
    req = build_request(cmd, f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  char* out = nullptr;
  int violation = 0;
  const bc_status st = bc_execute(req.dump().c_str(), &out, &violation);
  if (st != BC_OK) {
    std::cerr << "error: " << bc_last_error() << "\n";
    return st == BC_ERR_INTERNAL ? kExitFailure : kExitUsage;
  }
  const std::string text(out);
  bc_string_free(out);
  const int rc = emit(text, req);
  if (rc != kExitOk) return rc;
  if (violation != 0) {
    std::cerr << "error: a trial failed at b <= beta\n";
    return kExitFailure;
  }
  return kExitOk;
}
