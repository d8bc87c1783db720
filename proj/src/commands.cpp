#include "boolecode/commands.hpp"

#include <sstream>

#include "boolecode/sbox.hpp"
#include "boolecode/simulator.hpp"
#include "boolecode/threshold.hpp"

namespace boolecode {

using nlohmann::ordered_json;

namespace {

constexpr std::size_t kDecisionListLimit = 4096;

ordered_json analyze_boolean(const BooleanFunction& f) {
  const auto anf = anf_from_truth_table(f);
  const auto dnf = dnf_from_truth_table(f);
  ordered_json j;
  j["kind"] = "boolean";
  j["m"] = f.variables();
  j["sparsity"] = anf.sparsity();
  j["weight"] = dnf.weight();
  j["degree"] = anf.degree();
  if (dnf.weight() == 0) {
    j["ptf_degree_bound"] = nullptr;
    return j;
  }
  j["ptf_degree_bound"] = ptf_degree(dnf.weight());
  if (dnf.weight() <= kDecisionListLimit) {
    const auto tree = build_decision_tree(dnf);
    const auto list = tree_to_decision_list(tree);
    const auto ptf = build_ptf(list);
    j["decision_tree_depth"] = tree.depth();
    j["decision_list_length"] = list.size();
    j["decision_list_max_monomial"] = list.max_monomial_length();
    j["decision_list_bound"] = floor_log2(dnf.weight());
    j["ptf_degree"] = ptf.degree();
  }
  if (anf.sparsity() <= 64) j["anf"] = anf.subsets();
  return j;
}

ordered_json analyze_polynomial(const PolynomialSystem& sys, unsigned q) {
  ordered_json j;
  j["kind"] = "polynomial";
  j["vars"] = sys.vars;
  j["outputs"] = sys.outputs();
  std::size_t r = 0;
  std::vector<Exponents> streams;
  auto& comps = j["components"] = ordered_json::array();
  std::size_t h_degree = 0;
  for (const auto& c : sys.components) {
    r += c.sparsity();
    for (const auto& t : c.terms()) {
      if (total_degree(t.exps) != 0 && std::find(streams.begin(), streams.end(), t.exps) == streams.end()) {
        streams.push_back(t.exps);
      }
    }
    const auto aug = augment_polynomial(c, q);
    h_degree = std::max(h_degree, aug.h.degree());
    comps.push_back({{"polynomial", c.to_string()},
                     {"sparsity", c.sparsity()},
                     {"degree", c.degree()},
                     {"augmented", augmented_to_string(aug)},
                     {"augmented_degree", aug.h.degree()}});
  }
  j["sparsity"] = r;
  j["degree"] = sys.degree();
  j["datalog_streams"] = streams.size();
  j["q"] = q;
  j["augmented_degree"] = h_degree;
  return j;
}

SchemeConfig scheme_config(const RunRequest& r) {
  if (!r.scheme) fail(ErrorCode::invalid_argument, "this command needs a scheme");
  if (!r.n || !r.k) fail(ErrorCode::invalid_argument, "this command needs N and K");
  SchemeConfig c;
  c.scheme = *r.scheme;
  c.n = *r.n;
  c.k = *r.k;
  c.d = r.d.value_or(0);
  c.q = r.q.value_or(0);
  c.input_radius = r.input_radius;
  c.prime = r.prime;
  c.binary_degree = r.binary_degree;
  return with_defaults(c);
}

TargetFunction target_of(const RunRequest& r) {
  if (!r.function) fail(ErrorCode::invalid_argument, "this command needs a function");
  return parse_function(*r.function);
}

void json_only(const RunRequest& r) {
  if (r.format == OutputFormat::csv) {
    fail(ErrorCode::invalid_argument, std::string(to_string(r.command)) + " only produces JSON");
  }
}

std::string render(const ordered_json& j) { return j.dump(2) + "\n"; }

ExecutionResult do_sweep(const RunRequest& r) {
  const SchemeInstance inst(scheme_config(r), target_of(r));
  SweepOptions opt;
  opt.trials = r.trials == 0 ? 100 : r.trials;
  opt.seed = r.seed;
  opt.strategy = r.strategy;
  if (r.b) opt.b_values = *r.b;
  if (r.b_max) {
    for (std::size_t b = 0; b <= *r.b_max; ++b) opt.b_values.push_back(b);
  }
  const auto rep = sweep_threshold(inst, opt);
  ExecutionResult out;
  out.violation = !rep.sound;
  out.output = r.format == OutputFormat::csv ? rep.to_csv() : render(rep.to_json());
  return out;
}

ExecutionResult do_run(const RunRequest& r) {
  if (r.b_max || (r.b && r.b->size() != 1)) fail(ErrorCode::invalid_argument, "run takes a single 'b'");
  const SchemeInstance inst(scheme_config(r), target_of(r));
  const std::size_t b = r.b ? r.b->front() : 0;
  SweepOptions opt;
  opt.trials = r.trials == 0 ? 1 : r.trials;
  opt.seed = r.seed;
  opt.strategy = r.strategy;
  opt.b_values = {b};
  const auto rep = sweep_threshold(inst, opt);
  ExecutionResult out;
  out.violation = !rep.sound;
  if (r.format == OutputFormat::csv) {
    out.output = rep.to_csv();
    return out;
  }
  auto j = rep.to_json();
  j["trial"] = to_json(run_seeded_trial(inst, b, r.strategy, r.seed));
  j["notes"] = inst.notes();
  out.output = render(j);
  return out;
}

}  // namespace

ordered_json analyze_function(const TargetFunction& f, unsigned q) {
  if (const auto* b = std::get_if<BooleanFunction>(&f)) return analyze_boolean(*b);
  return analyze_polynomial(std::get<PolynomialSystem>(f), q);
}

Comparison compare_schemes(const TargetFunction& f, std::size_t n, std::size_t k, std::size_t d, unsigned q) {
  Comparison c;
  c.n = n;
  c.k = k;
  c.outer_bound = outer_bound(n, k);
  auto add = [&](SchemeId id, std::size_t deg, Threshold t, std::size_t dd = 0, unsigned qq = 0) {
    c.rows.push_back({id, dd, qq, deg, t});
  };
  if (const auto* b = std::get_if<BooleanFunction>(&f)) {
    const auto deg = anf_from_truth_table(*b).degree();
    const auto w = b->weight();
    add(SchemeId::lcc, deg, threshold_lcc(n, k, deg));
    add(SchemeId::anf, 1, threshold_mds(n, k));
    add(SchemeId::dnf, 1, threshold_mds(n, k));
    if (w >= 1) {
      add(SchemeId::ptf, ptf_degree(w), threshold_ptf(n, k, w));
      const std::size_t dd = std::min(std::max<std::size_t>(d, 1), w);
      add(SchemeId::dptf, dptf_degree(w, dd), threshold_dptf(n, k, w, dd), dd);
      for (std::size_t x = 1; x <= w; ++x) {
        c.dptf_sweep.push_back({SchemeId::dptf, x, 0, dptf_degree(w, x), threshold_dptf(n, k, w, x)});
      }
    }
  } else {
    const auto& sys = std::get<PolynomialSystem>(f);
    add(SchemeId::lcc, sys.degree(), threshold_lcc(n, k, sys.degree()));
    add(SchemeId::datalog, 1, threshold_mds(n, k));
    add(SchemeId::dataaug, dataaug_degree(sys.degree(), q), threshold_dataaug(n, k, sys.degree(), q), 0, q);
  }
  return c;
}

ordered_json Comparison::to_json() const {
  ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["outer_bound"] = outer_bound;
  auto row_json = [](const CompareRow& r) {
    ordered_json x;
    x["scheme"] = std::string(to_string(r.scheme));
    if (r.d != 0) x["d"] = r.d;
    if (r.q != 0) x["q"] = r.q;
    x["payload_degree"] = r.payload_degree;
    x["beta"] = r.threshold.beta;
    x["feasible"] = r.threshold.feasible;
    return x;
  };
  auto& rows = j["rows"] = ordered_json::array();
  for (const auto& r : this->rows) {
    auto x = row_json(r);
    x["complexity"] = std::string(documented_complexity(r.scheme));
    x["complexity_note"] = "documented, not measured";
    rows.push_back(std::move(x));
  }
  if (!dptf_sweep.empty()) {
    auto& s = j["dptf_sweep"] = ordered_json::array();
    for (const auto& r : dptf_sweep) s.push_back(row_json(r));
  }
  return j;
}

std::string Comparison::to_csv() const {
  std::ostringstream os;
  os << "scheme,N,K,D,q,payload_degree,beta,feasible,outer_bound,complexity (documented not measured)\n";
  for (const auto& r : rows) {
    os << to_string(r.scheme) << ',' << n << ',' << k << ',' << (r.d ? std::to_string(r.d) : "") << ','
       << (r.q ? std::to_string(r.q) : "") << ',' << r.payload_degree << ',' << r.threshold.beta << ','
       << (r.threshold.feasible ? "true" : "false") << ',' << outer_bound << ",\""
       << documented_complexity(r.scheme) << "\"\n";
  }
  return os.str();
}

ExecutionResult execute(const RunRequest& r) {
  switch (r.command) {
    case Command::analyze: {
      json_only(r);
      return {render(analyze_function(target_of(r), r.q.value_or(2))), false};
    }
    case Command::compare: {
      if (!r.n || !r.k) fail(ErrorCode::invalid_argument, "compare needs N and K");
      const auto c = compare_schemes(target_of(r), *r.n, *r.k, r.d.value_or(1), r.q.value_or(2));
      return {r.format == OutputFormat::csv ? c.to_csv() : render(c.to_json()), false};
    }
    case Command::sbox: {
      json_only(r);
      const Sbox s = r.sbox ? sbox_from_hex(*r.sbox) : aes_sbox();
      return {render(sbox_casestudy(s, r.n.value_or(100), r.k.value_or(10)).to_json()), false};
    }
    case Command::run: return do_run(r);
    case Command::sweep: return do_sweep(r);
  }
  fail(ErrorCode::internal, "unhandled command");
}

}  // namespace boolecode
