#pragma once
// Exact small-scale graph invariants. Everything here is exhaustive or
// branch-and-bound with a hard cap; exceeding a cap throws Error::Cap.

#include <vector>

#include "nodequery/graph.hpp"

namespace nq {

bool is_connected(const Graph& g);  // n <= 1 counts as connected
bool is_acyclic(const Graph& g);
bool is_bipartite(const Graph& g);
// Brute-force topological test: no subgraph is a subdivision of K5 or K3,3.
// Cap n <= 12.
bool is_planar(const Graph& g);

// True iff an injective map h -> g carries edges to edges (subgraph order,
// not induced). Caps: h.n <= cap_h, g.n <= cap_g.
bool contains_subgraph(const Graph& h, const Graph& g, int cap_h = 8, int cap_g = 20);

bool k_colorable(const Graph& g, int k);  // n <= 16
int chromatic_number(const Graph& g);     // n <= 16, clique lower bound + search
// A chromatic_number(g)-coloring as color classes (each an independent set).
std::vector<VertexSet> optimal_coloring(const Graph& g);

VertexSet max_clique(const Graph& g);           // n <= 20
VertexSet max_independent_set(const Graph& g);  // n <= 20

VertexSet min_feedback_vertex_set(const Graph& g);  // n <= 16
// Minimum-cardinality set meeting every target; universe_n <= 16.
VertexSet min_hitting_set(const std::vector<VertexSet>& targets, int universe_n);

struct TriangleSupport {
  int d1_max = 0;  // most triangles at one vertex
  int d2_max = 0;  // most triangles through one edge
  int d2_u = -1, d2_v = -1;  // an edge attaining d2_max
  int d1_vertex = -1;        // a vertex attaining d1_max
  std::vector<VertexSet> triangles;
};
TriangleSupport triangle_support(const Graph& g);

int max_matching(const Graph& g);  // n <= 16 (exhaustive over vertex masks)
std::vector<std::pair<int, int>> max_matching_edges(const Graph& g);
bool has_perfect_matching(const Graph& g);  // n <= 16

bool is_vertex_transitive(const Graph& g);  // n <= 10, automorphism search

}  // namespace nq
