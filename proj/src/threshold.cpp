#include "boolecode/threshold.hpp"

#include "boolecode/security.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace boolecode {

std::int64_t LinearThresholdFunction::linear2(std::span<const std::uint8_t> x) const {
  require(x.size() == z.size(), "input length does not match the LTF");
  std::int64_t s = 0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (x[j] != 0) s += z[j];
  }
  return 2 * s;
}

std::size_t LinearThresholdFunction::support_size() const {
  return static_cast<std::size_t>(std::count_if(z.begin(), z.end(), [](std::int8_t c) { return c != 0; }));
}

std::string LinearThresholdFunction::to_string() const {
  std::ostringstream os;
  os << "sgn(";
  bool first = true;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j] == 0) continue;
    if (z[j] < 0) os << '-';
    else if (!first) os << '+';
    os << "X[" << j + 1 << ']';
    first = false;
  }
  if (bias2 != 0 || first) {
    if (bias2 >= 0 && !first) os << '+';
    if (bias2 % 2 == 0) os << bias2 / 2;
    else os << bias2 << "/2";
  }
  os << ')';
  return os.str();
}

LinearThresholdFunction ltf_for_monomial(std::uint32_t mask, std::size_t m) {
  require(m <= kMaxVariables && (mask >> m) == 0, "monomial uses a variable beyond m");
  LinearThresholdFunction ltf;
  ltf.z.assign(m, 0);
  for (std::size_t j = 0; j < m; ++j) ltf.z[j] = static_cast<std::int8_t>((mask >> j) & 1U);
  ltf.bias2 = -2 * std::popcount(mask) + 1;
  return ltf;
}

LinearThresholdFunction ltf_for_monomial(std::span<const std::size_t> subset, std::size_t m) {
  std::uint32_t mask = 0;
  for (auto v : subset) {
    require(v >= 1 && v <= m, "monomial variable index out of range");
    require(((mask >> (v - 1)) & 1U) == 0, "repeated variable in monomial");
    mask |= std::uint32_t{1} << (v - 1);
  }
  return ltf_for_monomial(mask, m);
}

LinearThresholdFunction ltf_for_clause(std::span<const std::uint8_t> y) {
  LinearThresholdFunction ltf;
  ltf.z.resize(y.size());
  std::int64_t ones = 0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    require(y[j] <= 1, "support vector entries must be 0 or 1");
    ltf.z[j] = y[j] != 0 ? 1 : -1;
    ones += y[j];
  }
  ltf.bias2 = -2 * ones + 1;
  return ltf;
}

// ---------------------------------------------------------------------------

DecisionTree::DecisionTree(std::size_t m, std::vector<BitVector> support, std::vector<Node> nodes)
    : m_(m), support_(std::move(support)), nodes_(std::move(nodes)) {
  require(!nodes_.empty(), "decision tree needs a root");
}

std::size_t DecisionTree::ltf_leaf_count() const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) {
    return n.is_leaf() && n.support_index != kNone;
  }));
}

std::size_t DecisionTree::depth() const {
  std::size_t best = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root(), 0}};
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (!nodes_[id].is_leaf()) {
      stack.emplace_back(nodes_[id].child[0], d + 1);
      stack.emplace_back(nodes_[id].child[1], d + 1);
    }
  }
  return best;
}

bool DecisionTree::evaluate(std::span<const std::uint8_t> x) const {
  require(x.size() == m_, "input length does not match the tree");
  std::size_t id = root();
  while (!nodes_[id].is_leaf()) id = nodes_[id].child[x[nodes_[id].var] != 0 ? 1 : 0];
  const auto s = nodes_[id].support_index;
  return s != kNone && ltf_for_clause(support_[s]).fires(x);
}

namespace {

std::size_t grow(std::vector<DecisionTree::Node>& nodes, const std::vector<BitVector>& support,
                 std::vector<std::size_t> members, std::vector<bool>& used, std::size_t m) {
  const std::size_t id = nodes.size();
  nodes.emplace_back();
  if (members.size() <= 1) {
    if (!members.empty()) nodes[id].support_index = members.front();
    return id;
  }
  std::size_t best_var = DecisionTree::kNone, best_cost = members.size() + 1;
  for (std::size_t v = 0; v < m; ++v) {
    if (used[v]) continue;
    std::size_t ones = 0;
    for (auto i : members) ones += support[i][v];
    const std::size_t cost = std::max(ones, members.size() - ones);
    if (cost < best_cost) {
      best_cost = cost;
      best_var = v;
    }
  }
  if (best_var == DecisionTree::kNone || best_cost == members.size()) {
    fail(ErrorCode::internal, "support vectors are not distinct");
  }
  std::vector<std::size_t> side[2];
  for (auto i : members) side[support[i][best_var]].push_back(i);
  used[best_var] = true;
  nodes[id].var = best_var;
  const std::size_t c0 = grow(nodes, support, std::move(side[0]), used, m);
  const std::size_t c1 = grow(nodes, support, std::move(side[1]), used, m);
  nodes[id].child[0] = c0;
  nodes[id].child[1] = c1;
  used[best_var] = false;
  return id;
}

}  // namespace

DecisionTree build_decision_tree(const DnfSupport& supp) {
  require(supp.weight() >= 1, "decision tree needs a nonempty support");
  std::vector<DecisionTree::Node> nodes;
  std::vector<std::size_t> members(supp.weight());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
  std::vector<bool> used(supp.variables(), false);
  grow(nodes, supp.vectors(), std::move(members), used, supp.variables());
  return DecisionTree(supp.variables(), supp.vectors(), std::move(nodes));
}

// ---------------------------------------------------------------------------

bool evaluate_monomial(const Monomial& c, std::span<const std::uint8_t> x) {
  return std::all_of(c.begin(), c.end(), [&](const Literal& l) { return l.evaluate(x); });
}

std::string monomial_to_string(const Monomial& c) {
  if (c.empty()) return "1";
  std::string out;
  for (const auto& l : c) {
    if (!out.empty()) out += '&';
    if (!l.positive) out += '~';
    out += "X[" + std::to_string(l.var + 1) + ']';
  }
  return out;
}

DecisionList::DecisionList(std::size_t m, std::vector<DecisionListEntry> entries)
    : m_(m), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    require(e.ltf.variables() == m_, "decision list LTF has the wrong arity");
    for (const auto& l : e.monomial) require(l.var < m_, "decision list literal out of range");
  }
}

std::size_t DecisionList::max_monomial_length() const {
  std::size_t best = 0;
  for (const auto& e : entries_) best = std::max(best, e.monomial.size());
  return best;
}

bool DecisionList::evaluate(std::span<const std::uint8_t> x) const {
  require(x.size() == m_, "input length does not match the decision list");
  for (const auto& e : entries_) {
    if (evaluate_monomial(e.monomial, x)) return e.ltf.fires(x);
  }
  return false;
}

namespace {

std::size_t rank_of(const std::vector<DecisionTree::Node>& nodes, std::size_t id, std::vector<std::size_t>& rank) {
  const auto& n = nodes[id];
  if (n.is_leaf()) return rank[id] = 0;
  const std::size_t a = rank_of(nodes, n.child[0], rank);
  const std::size_t b = rank_of(nodes, n.child[1], rank);
  return rank[id] = (a == b ? a + 1 : std::max(a, b));
}

}  // namespace

DecisionList tree_to_decision_list(const DecisionTree& tree) {
  using Node = DecisionTree::Node;
  constexpr auto none = DecisionTree::kNone;
  std::vector<Node> nodes = tree.nodes();
  std::vector<std::size_t> parent(nodes.size(), none);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].is_leaf()) {
      parent[nodes[i].child[0]] = i;
      parent[nodes[i].child[1]] = i;
    }
  }
  std::size_t root = tree.root();
  std::size_t remaining = tree.ltf_leaf_count();
  std::vector<std::size_t> rank(nodes.size(), 0);
  std::vector<DecisionListEntry> entries;
  entries.reserve(remaining);

  while (remaining > 0) {
    rank_of(nodes, root, rank);
    Monomial path;
    std::size_t id = root;
    while (!nodes[id].is_leaf()) {
      const auto& n = nodes[id];
      const int side = rank[n.child[1]] < rank[n.child[0]] ? 1 : 0;
      path.push_back(Literal{n.var, side == 1});
      id = n.child[side];
    }
    if (path.size() > floor_log2(remaining)) {
      fail(ErrorCode::internal, "decision list conversion found no leaf within the rank bound");
    }
    if (nodes[id].support_index == none) {
      fail(ErrorCode::internal, "decision tree has an unlabelled leaf");
    }
    entries.push_back({std::move(path), ltf_for_clause(tree.support()[nodes[id].support_index])});
    --remaining;

    // Prune: the sibling takes the parent's place.
    const std::size_t p = parent[id];
    if (p == none) break;
    const std::size_t sibling = nodes[p].child[0] == id ? nodes[p].child[1] : nodes[p].child[0];
    const std::size_t gp = parent[p];
    parent[sibling] = gp;
    if (gp == none) {
      root = sibling;
    } else if (nodes[gp].child[0] == p) {
      nodes[gp].child[0] = sibling;
    } else {
      nodes[gp].child[1] = sibling;
    }
  }
  return DecisionList(tree.variables(), std::move(entries));
}

// ---------------------------------------------------------------------------

PolynomialThresholdFunction::PolynomialThresholdFunction(std::size_t m, std::vector<PtfTerm> terms)
    : m_(m), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    require(t.ltf.variables() == m_, "PTF term LTF has the wrong arity");
    require(t.weight > 0, "PTF weights must be positive");
  }
}

std::size_t PolynomialThresholdFunction::degree() const {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.size() + (t.ltf.support_size() > 0 ? 1 : 0));
  return d;
}

BigInt PolynomialThresholdFunction::magnitude_bound() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.weight * (2 * m_ + 1);
  return s;
}

BigInt PolynomialThresholdFunction::eval2(std::span<const std::uint8_t> x) const {
  require(x.size() == m_, "input length does not match the PTF");
  BigInt s = 0;
  for (const auto& t : terms_) {
    if (evaluate_monomial(t.monomial, x)) s += t.weight * t.ltf.value2(x);
  }
  return s;
}

bool PolynomialThresholdFunction::dominance_holds() const {
  BigInt tail = 0;
  for (std::size_t i = terms_.size(); i-- > 0;) {
    if (terms_[i].weight <= tail) return false;
    tail += terms_[i].weight * (2 * m_ + 1);
  }
  return true;
}

PolynomialThresholdFunction build_ptf(const DecisionList& list) {
  const std::size_t m = list.variables();
  const BigInt base = 4 * m + 4;
  std::vector<PtfTerm> terms(list.size());
  BigInt a = 1;
  for (std::size_t i = list.size(); i-- > 0;) {
    terms[i] = PtfTerm{list.entries()[i].monomial, list.entries()[i].ltf, a};
    a *= base;
  }
  return PolynomialThresholdFunction(m, std::move(terms));
}

PolynomialThresholdFunction ptf_for_support(const DnfSupport& supp) {
  if (supp.weight() == 0) return PolynomialThresholdFunction(supp.variables(), {});
  return build_ptf(tree_to_decision_list(build_decision_tree(supp)));
}

std::vector<DnfSupport> partition_dnf(const DnfSupport& supp, std::size_t d) {
  const std::size_t w = supp.weight();
  require(d >= 1 && d <= w, "partition count D must be in [1, w(f)]");
  std::vector<DnfSupport> groups;
  groups.reserve(d);
  std::size_t at = 0;
  for (std::size_t g = 0; g < d; ++g) {
    const std::size_t size = w / d + (g < w % d ? 1 : 0);
    std::vector<BitVector> part(supp.vectors().begin() + static_cast<std::ptrdiff_t>(at),
                                supp.vectors().begin() + static_cast<std::ptrdiff_t>(at + size));
    groups.emplace_back(supp.variables(), std::move(part));
    at += size;
  }
  return groups;
}

}  // namespace boolecode
