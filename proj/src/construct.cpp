#include "nodequery/construct.hpp"

#include <algorithm>
#include <random>

#include "json.hpp"
#include "nodequery/generators.hpp"
#include "nodequery/graph6.hpp"
#include "nodequery/solver.hpp"

namespace nq {

namespace {

long long choose(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

}  // namespace

UpperBoundInstance build_upper_bound_graph(const Property& p, int n) {
  if (!p.hereditary()) fail_domain("the construction needs a hereditary property");
  int dp = compute_dp(p);
  int cp = compute_cp(p);
  if (dp < 1) fail_domain("the construction needs d_P >= 1");
  int k = 0;
  for (int cand = std::max(2, dp);; ++cand) {
    long long total = cand + cand * choose(cand, dp);
    if (total > n) break;
    k = cand;
  }
  if (k == 0) fail_arg("n too small for the construction (need k >= max(2, d_P))");

  UpperBoundInstance inst;
  inst.prop = p;
  inst.k = k;
  inst.dp = dp;
  inst.cp = cp;
  int used = static_cast<int>(k + k * choose(k, dp));
  inst.padding = n - used;

  Graph g(n);
  for (int i = 0; i < k; ++i) {
    inst.clique.push_back(i);
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  }
  int next = k;
  uint64_t subset = full_set(dp);
  uint64_t last = subset << (k - dp);
  for (;;) {
    UpperBoundInstance::PetalGroup gr;
    gr.subset = subset;
    for (int copy = 0; copy < k; ++copy) gr.vertices.push_back(next++);
    inst.groups.push_back(gr);
    if (subset == last) break;
    subset = next_combination(subset);
  }
  for (int extra = 0; extra < inst.padding; ++extra)
    inst.groups[0].vertices.push_back(next++);
  for (const auto& gr : inst.groups)
    for (int u : gr.vertices)
      for (int j : set_members(gr.subset)) g.add_edge(u, inst.clique[static_cast<size_t>(j)]);
  inst.graph = std::move(g);
  return inst;
}

AlgoRun run_algorithm1(const UpperBoundInstance& inst, VertexSet truth) {
  AlgoRun run;
  uint64_t amask = 0;  // present clique vertices, as clique indices
  for (size_t i = 0; i < inst.clique.size(); ++i) {
    int v = inst.clique[i];
    run.queried |= bit(v);
    ++run.queries;
    if (in_set(truth, v)) amask |= 1ull << i;
  }
  if (set_size(amask) >= inst.cp) {
    run.output = false;  // a failing clique is already present
    return run;
  }
  for (const auto& gr : inst.groups) {
    if ((gr.subset & amask) != gr.subset) continue;
    for (int u : gr.vertices) {
      run.queried |= bit(u);
      ++run.queries;
    }
  }
  run.output = eval_subset(inst.prop, inst.graph, truth & run.queried);
  return run;
}

int nominal_budget(const UpperBoundInstance& inst) {
  return static_cast<int>(inst.k * (1 + choose(inst.cp - 1, inst.dp)));
}

int query_budget(const UpperBoundInstance& inst) {
  int rounds = static_cast<int>(choose(std::min(inst.cp - 1, inst.k), inst.dp));
  return inst.k + inst.k * rounds + (rounds > 0 ? inst.padding : 0);
}

Graph build_star_local_con(int n, int s, int t) {
  if (n < 3) fail_arg("star construction needs n >= 3");
  if (s == t || s < 1 || t < 1 || s >= n || t >= n)
    fail_arg("s and t must be distinct leaves (centre is vertex 0)");
  return star_graph(n);
}

ValidationReport validate_construction(const UpperBoundInstance& inst) {
  ValidationReport rep;
  const Graph& g = inst.graph;
  int n = g.n();
  rep.budget = query_budget(inst);

  if (n <= 20) {
    rep.relevant = graph_relevant(inst.prop, g);
    if (!rep.relevant) rep.detail += "irrelevant vertex present; ";
  } else {
    rep.relevant = true;
    rep.detail += "relevance unchecked beyond n=20; ";
  }

  std::vector<VertexSet> truths;
  if (n <= 16) {
    rep.exhaustive = true;
  } else {
    std::mt19937_64 rng(12345);
    truths.push_back(0);
    truths.push_back(full_set(n));
    for (int i = 0; i < 4096; ++i) truths.push_back(rng() & full_set(n));
  }

  rep.algorithm_correct = true;
  rep.queries_within_budget = true;
  rep.petal_condition = true;
  uint64_t total = rep.exhaustive ? (1ull << n) : truths.size();
  for (uint64_t idx = 0; idx < total; ++idx) {
    VertexSet truth = rep.exhaustive ? idx : truths[idx];
    AlgoRun run = run_algorithm1(inst, truth);
    if (run.output != eval_subset(inst.prop, g, truth)) {
      rep.algorithm_correct = false;
      rep.failing_truth = truth;
      rep.detail += "algorithm output wrong on truth " + set_to_string(truth) + "; ";
      break;
    }
    if (run.queries > rep.budget) {
      rep.queries_within_budget = false;
      rep.failing_truth = truth;
      rep.detail += "query budget exceeded on truth " + set_to_string(truth) + "; ";
      break;
    }
    // Petal rounds run only below the clique abort threshold; aborted
    // traces are correct off the clique alone, so petals are exempt there.
    VertexSet clique_mask = 0;
    for (int v : inst.clique) clique_mask |= bit(v);
    if (set_size(truth & clique_mask) >= inst.cp) continue;
    for (const auto& gr : inst.groups) {
      for (int u : gr.vertices) {
        if (in_set(run.queried, u)) continue;
        if (set_size(g.neighbors(u) & truth) > inst.dp - 1) {
          rep.petal_condition = false;
          rep.failing_truth = truth;
          rep.detail += "unqueried petal " + std::to_string(u) + " sees d_P present neighbours; ";
          break;
        }
      }
      if (!rep.petal_condition) break;
    }
    if (!rep.petal_condition) break;
  }

  if (n <= 13) {
    rep.exact_checked = true;
    rep.exact = exact_cost(inst.prop, g).cost;
    rep.cost_within_budget = rep.exact <= rep.budget;
    if (!rep.cost_within_budget) rep.detail += "exact cost exceeds the query budget; ";
  } else {
    rep.detail += "exact cost unchecked beyond the solver cap; ";
  }
  return rep;
}

std::string instance_manifest_json(const UpperBoundInstance& inst,
                                   const ValidationReport* rep) {
  nlohmann::json j;
  j["schema"] = "nodequery.instance/1";
  j["graph6"] = write_graph6(inst.graph);
  j["property"] = inst.prop.name;
  j["k"] = inst.k;
  j["d_p"] = inst.dp;
  j["c_p"] = inst.cp;
  j["padding"] = inst.padding;
  j["clique"] = inst.clique;
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& gr : inst.groups) {
    nlohmann::json jg;
    jg["subset"] = set_members(gr.subset);
    jg["vertices"] = gr.vertices;
    groups.push_back(jg);
  }
  j["groups"] = groups;
  j["nominal_budget"] = nominal_budget(inst);
  j["query_budget"] = query_budget(inst);
  if (rep) {
    nlohmann::json v;
    v["ok"] = rep->ok();
    v["relevant"] = rep->relevant;
    v["algorithm_correct"] = rep->algorithm_correct;
    v["queries_within_budget"] = rep->queries_within_budget;
    v["petal_condition"] = rep->petal_condition;
    v["exhaustive"] = rep->exhaustive;
    v["exact_checked"] = rep->exact_checked;
    if (rep->exact_checked) {
      v["exact_cost"] = rep->exact;
      v["cost_within_budget"] = rep->cost_within_budget;
    }
    if (!rep->detail.empty()) v["detail"] = rep->detail;
    j["validation"] = v;
  }
  return j.dump(2);
}

}  // namespace nq
