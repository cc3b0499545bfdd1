#pragma once
// Graph properties: finite forbidden-subgraph families plus built-in
// predicates, hereditary or not. eval_subset(p, g, s) is the boolean
// function S -> [g[S] satisfies p] that everything downstream consumes;
// for label-free properties it equals evaluate(p, g.induced(s)), while
// st-connected(s,t) is pinned to the base labeling by design.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nodequery/graph.hpp"

namespace nq {

enum class PKind {
  Forbidden,       // finite forbidden family, antichain under subgraph order
  Acyclic,
  Bipartite,
  Planar,
  Colorable,       // a = k
  BoundedDegree,   // a = d
  Connected,       // non-hereditary; empty and one-vertex graphs count as connected
  PerfectMatching, // non-hereditary
  StConnected,     // non-hereditary; a = s, b = t in base labels
  Local,           // sub[0] must hold on every open neighborhood
  And,             // sub[0] && sub[1]
};

struct Property {
  PKind kind = PKind::Forbidden;
  int a = 0, b = 0;
  std::vector<Graph> forbidden;  // Forbidden kind only
  std::vector<Property> sub;     // Local: 1 entry, And: 2 entries
  std::string name;
  std::optional<int> declared_dp;

  bool hereditary() const;
  bool operator==(const Property&) const = default;
};

// Built-in names: emptiness, triangle-free, kt-free(t), pt-free(t),
// ct-free(t), acyclic, bipartite, planar, k-colorable(k), bounded-degree(d),
// connected, perfect-matching, st-connected(s,t), local(p), and(p,q).
Property parse_property(std::string_view text);
// Finite family from explicit graphs; normalized to an antichain (members
// containing another member as subgraph are dropped, isomorphic dups too).
Property finite_property(std::string name, std::vector<Graph> family);

// JSON document: {"name":..., "kind":"finite"|"builtin",
//                 "forbidden":[g6...] | "builtin":"name", "declared_dp":int?}
Property property_from_json(const std::string& text);
std::string property_to_json(const Property& p);

bool evaluate(const Property& p, const Graph& g);
bool eval_subset(const Property& p, const Graph& g, VertexSet s);

// Truth table of eval_subset over all 2^n subsets (n <= 20).
std::vector<uint8_t> truth_table(const Property& p, const Graph& g);

// Vertices i such that some S containing i has g[S] and g[S-i] disagree.
VertexSet relevant_vertices(const Property& p, const Graph& g);  // n <= 20
bool graph_relevant(const Property& p, const Graph& g);

// Minimum degree over the forbidden family (finite kind) or the declared
// value for built-in hereditary kinds.
int compute_dp(const Property& p);
// Smallest t with K_t failing p; incremental scan, cap 10.
int compute_cp(const Property& p);

// families[i] = all minimal failing sets of size i, for i <= k_max (<= 8).
std::vector<std::vector<VertexSet>> witness_families(const Property& p, const Graph& g, int k_max);

Property localize(const Property& p);                       // p hereditary
Property and_bounded_degree(const Property& pl, int d);

}  // namespace nq
