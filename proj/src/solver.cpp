#include "nodequery/solver.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace nq {

namespace {

int depth_below(const std::vector<Strategy::Node>& nodes, int idx) {
  const Strategy::Node& nd = nodes[static_cast<size_t>(idx)];
  if (nd.query < 0) return 0;
  return 1 + std::max(depth_below(nodes, nd.on_present), depth_below(nodes, nd.on_absent));
}

}  // namespace

int Strategy::depth() const {
  if (nodes.empty()) return 0;
  return depth_below(nodes, root);
}

Playout playout(const Strategy& st, VertexSet truth) {
  Playout out;
  if (st.nodes.empty()) fail_arg("empty strategy");
  int idx = st.root;
  for (;;) {
    const Strategy::Node& nd = st.nodes[static_cast<size_t>(idx)];
    if (nd.query < 0) {
      out.output = nd.output != 0;
      return out;
    }
    if (in_set(out.queried, nd.query)) fail_domain("strategy repeats a query");
    out.queried |= bit(nd.query);
    ++out.queries;
    idx = in_set(truth, nd.query) ? nd.on_present : nd.on_absent;
  }
}

int replay_queries(const Strategy& st, VertexSet rule_present) {
  if (st.nodes.empty()) fail_arg("empty strategy");
  int idx = st.root, count = 0;
  for (;;) {
    const Strategy::Node& nd = st.nodes[static_cast<size_t>(idx)];
    if (nd.query < 0) return count;
    ++count;
    idx = in_set(rule_present, nd.query) ? nd.on_present : nd.on_absent;
  }
}

std::string strategy_to_json(const Strategy& st) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const Strategy::Node& nd : st.nodes) {
    nlohmann::json jn;
    if (nd.query < 0) {
      jn["output"] = nd.output;
    } else {
      jn["query"] = nd.query;
      jn["present"] = nd.on_present;
      jn["absent"] = nd.on_absent;
    }
    nodes.push_back(jn);
  }
  nlohmann::json j;
  j["root"] = st.root;
  j["depth"] = st.depth();
  j["nodes"] = nodes;
  return j.dump(2);
}

Solver::Solver(const Property& p, const Graph& g)
    : Solver(g.n(), truth_table(p, g), p.hereditary()) {}

Solver::Solver(int n, std::vector<uint8_t> truth, bool monotone)
    : n_(n), full_(full_set(n)), monotone_(monotone), truth_(std::move(truth)) {
  if (n < 0 || n > 13) fail_cap("exact solving is limited to n <= 13");
  if (truth_.size() != (1ull << n)) fail_arg("truth table size does not match n");
  pow3_.resize(static_cast<size_t>(n) + 1);
  pow3_[0] = 1;
  for (int i = 0; i < n; ++i) pow3_[static_cast<size_t>(i) + 1] = 3 * pow3_[static_cast<size_t>(i)];
  memo_.assign(static_cast<size_t>(pow3_[static_cast<size_t>(n)]), -1);
  if (!monotone_) kind_.assign(memo_.size(), -1);
}

int8_t Solver::region_kind(int sigma, VertexSet present, VertexSet absent) {
  int8_t& slot = kind_[static_cast<size_t>(sigma)];
  if (slot >= 0) return slot;
  VertexSet unk = full_ & ~(present | absent);
  int8_t k;
  if (!unk) {
    k = static_cast<int8_t>(truth_[present]);
  } else {
    int v = lowest(unk);
    int8_t a = region_kind(sigma + pow3_[static_cast<size_t>(v)], present | bit(v), absent);
    if (a == 2) {
      k = 2;
    } else {
      int8_t b = region_kind(sigma + 2 * pow3_[static_cast<size_t>(v)], present, absent | bit(v));
      k = (a == b) ? a : 2;
    }
  }
  slot = k;
  return k;
}

bool Solver::is_constant(int sigma, VertexSet present, VertexSet unknown) {
  if (monotone_) return truth_[present] == truth_[present | unknown];
  return region_kind(sigma, present, full_ & ~(present | unknown)) != 2;
}

int Solver::solve(int sigma, VertexSet present, VertexSet absent) {
  int8_t& me = memo_[static_cast<size_t>(sigma)];
  if (me >= 0) return me;
  VertexSet unk = full_ & ~(present | absent);
  if (is_constant(sigma, present, unk)) {
    me = 0;
    return 0;
  }
  int best = n_ + 1;
  for (VertexSet rest = unk; rest; rest &= rest - 1) {
    int v = lowest(rest);
    int cp = solve(sigma + pow3_[static_cast<size_t>(v)], present | bit(v), absent);
    if (cp + 1 >= best) continue;
    int ca = solve(sigma + 2 * pow3_[static_cast<size_t>(v)], present, absent | bit(v));
    best = std::min(best, 1 + std::max(cp, ca));
    if (best == 1) break;
  }
  me = static_cast<int8_t>(best);
  return best;
}

int Solver::cost() { return solve(0, 0, 0); }

int Solver::build_node(int sigma, VertexSet present, VertexSet absent, Strategy& st) {
  VertexSet unk = full_ & ~(present | absent);
  if (is_constant(sigma, present, unk)) {
    Strategy::Node leaf;
    leaf.output = truth_[present];
    st.nodes.push_back(leaf);
    return static_cast<int>(st.nodes.size()) - 1;
  }
  int target = solve(sigma, present, absent);
  for (VertexSet rest = unk; rest; rest &= rest - 1) {
    int v = lowest(rest);
    int cp = solve(sigma + pow3_[static_cast<size_t>(v)], present | bit(v), absent);
    int ca = solve(sigma + 2 * pow3_[static_cast<size_t>(v)], present, absent | bit(v));
    if (1 + std::max(cp, ca) != target) continue;
    int ip = build_node(sigma + pow3_[static_cast<size_t>(v)], present | bit(v), absent, st);
    int ia = build_node(sigma + 2 * pow3_[static_cast<size_t>(v)], present, absent | bit(v), st);
    Strategy::Node nd;
    nd.query = v;
    nd.on_present = ip;
    nd.on_absent = ia;
    st.nodes.push_back(nd);
    return static_cast<int>(st.nodes.size()) - 1;
  }
  fail_domain("internal: memoized cost has no achieving query");
}

Strategy Solver::optimal_strategy() {
  cost();
  Strategy st;
  st.root = build_node(0, 0, 0, st);
  return st;
}

bool Solver::adversary_answer(const PartialAssignment& pa, int v) {
  if (v < 0 || v >= n_) fail_arg("query vertex out of range");
  if (pa.present & pa.absent) fail_arg("assignment marks a vertex both present and absent");
  if (in_set(pa.present | pa.absent, v)) fail_arg("vertex already assigned");
  int sigma = 0;
  for (int u = 0; u < n_; ++u) {
    if (in_set(pa.present, u)) sigma += pow3_[static_cast<size_t>(u)];
    else if (in_set(pa.absent, u)) sigma += 2 * pow3_[static_cast<size_t>(u)];
  }
  int cp = solve(sigma + pow3_[static_cast<size_t>(v)], pa.present | bit(v), pa.absent);
  int ca = solve(sigma + 2 * pow3_[static_cast<size_t>(v)], pa.present, pa.absent | bit(v));
  return cp >= ca;
}

CostCertificate exact_cost(const Property& p, const Graph& g) {
  if (g.n() > 13) fail_cap("exact solving is limited to n <= 13");
  CostCertificate cert;
  cert.solver = std::make_shared<Solver>(p, g);
  cert.cost = cert.solver->cost();
  cert.strategy = cert.solver->optimal_strategy();
  return cert;
}

int play_strategy_vs_adversary(const CostCertificate& cert) {
  const Strategy& st = cert.strategy;
  if (st.nodes.empty()) fail_arg("empty strategy");
  PartialAssignment pa;
  int idx = st.root, count = 0;
  for (;;) {
    const Strategy::Node& nd = st.nodes[static_cast<size_t>(idx)];
    if (nd.query < 0) return count;
    bool ans = cert.solver->adversary_answer(pa, nd.query);
    if (ans) pa.present |= bit(nd.query);
    else pa.absent |= bit(nd.query);
    ++count;
    idx = ans ? nd.on_present : nd.on_absent;
  }
}

int sensitivity_of(int n, const std::vector<uint8_t>& truth) {
  if (truth.size() != (1ull << n)) fail_arg("truth table size does not match n");
  int best = 0;
  for (uint32_t x = 0; x < (1u << n); ++x) {
    int s = 0;
    for (int v = 0; v < n; ++v)
      if (truth[x] != truth[x ^ (1u << v)]) ++s;
    best = std::max(best, s);
  }
  return best;
}

int block_sensitivity_of(int n, const std::vector<uint8_t>& truth) {
  if (n > 12) fail_cap("block sensitivity is limited to n <= 12");
  if (truth.size() != (1ull << n)) fail_arg("truth table size does not match n");
  uint32_t total = 1u << n;
  std::vector<uint8_t> covered(total);
  std::vector<uint32_t> minimal;
  int best = 0;
  for (uint32_t x = 0; x < total; ++x) {
    covered[0] = 0;
    minimal.clear();
    for (uint32_t b = 1; b < total; ++b) {
      bool sens = truth[x ^ b] != truth[x];
      bool sub = false;
      for (uint32_t rem = b; rem && !sub; rem &= rem - 1)
        sub = covered[b & ~(rem & (~rem + 1))];
      covered[b] = sens || sub;
      if (sens && !sub) minimal.push_back(b);
    }
    // exact maximum disjoint packing of the minimal sensitive blocks
    int packed = 0;
    std::function<void(size_t, uint32_t, int)> dfs = [&](size_t i, uint32_t used, int cnt) {
      packed = std::max(packed, cnt);
      if (cnt + static_cast<int>(minimal.size() - i) <= packed) return;
      for (size_t j = i; j < minimal.size(); ++j)
        if (!(minimal[j] & used)) dfs(j + 1, used | minimal[j], cnt + 1);
    };
    dfs(0, 0, 0);
    best = std::max(best, packed);
  }
  return best;
}

int sensitivity(const Property& p, const Graph& g) {
  if (g.n() > 12) fail_cap("sensitivity is limited to n <= 12");
  return sensitivity_of(g.n(), truth_table(p, g));
}

int block_sensitivity(const Property& p, const Graph& g) {
  if (g.n() > 12) fail_cap("block sensitivity is limited to n <= 12");
  return block_sensitivity_of(g.n(), truth_table(p, g));
}

}  // namespace nq
