#pragma once
// Extremal clique-plus-petals instances and the two-round query algorithm
// they support: query the clique; on fewer than c_P present vertices, query
// exactly the petal groups whose clique subset is fully present, then
// evaluate on what was seen. Petals left unqueried have too few present
// neighbours to matter for the property.

#include <string>
#include <vector>

#include "nodequery/graph.hpp"
#include "nodequery/property.hpp"

namespace nq {

struct UpperBoundInstance {
  Graph graph;
  Property prop;
  int k = 0;        // clique size
  int dp = 0;       // petal degree
  int cp = 0;       // clique abort threshold
  int padding = 0;  // extra petals on the first group soaking up leftover n
  std::vector<int> clique;  // vertices 0..k-1
  struct PetalGroup {
    uint64_t subset = 0;        // clique indices this group attaches to
    std::vector<int> vertices;  // k petals, plus padding on the first group
  };
  std::vector<PetalGroup> groups;  // ascending subset-mask order
};

// k = largest value with k + k*C(k, d_P) <= n (k >= max(2, d_P)); leftover
// vertices become extra petals on the first group, keeping them relevant.
UpperBoundInstance build_upper_bound_graph(const Property& p, int n);

struct AlgoRun {
  bool output = false;
  int queries = 0;
  VertexSet queried = 0;
};

AlgoRun run_algorithm1(const UpperBoundInstance& inst, VertexSet truth);

// The k*(1 + C(c_P-1, d_P)) of the two-round analysis; exact for unpadded
// instances.
int nominal_budget(const UpperBoundInstance& inst);
// Worst-case queries of run_algorithm1 on this instance (adds the padding).
int query_budget(const UpperBoundInstance& inst);

// Star K_{1,n-1}, centre 0; s, t must be distinct leaves. The s-t
// connectivity cost on it is 3: query s, t, and the centre.
Graph build_star_local_con(int n, int s, int t);

struct ValidationReport {
  bool relevant = false;
  bool algorithm_correct = false;
  bool queries_within_budget = false;
  bool petal_condition = false;  // unqueried petals see <= d_P - 1 present neighbours
  bool cost_within_budget = false;
  bool exact_checked = false;  // false when n exceeds the solver cap
  bool exhaustive = false;     // all truths vs a fixed sample
  int exact = -1;
  int budget = 0;
  VertexSet failing_truth = 0;
  std::string detail;
  bool ok() const {
    return relevant && algorithm_correct && queries_within_budget && petal_condition &&
           (!exact_checked || cost_within_budget);
  }
};

ValidationReport validate_construction(const UpperBoundInstance& inst);

// rep, when given, is embedded under "validation".
std::string instance_manifest_json(const UpperBoundInstance& inst,
                                   const ValidationReport* rep = nullptr);

}  // namespace nq
