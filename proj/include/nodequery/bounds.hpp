#pragma once
// Certified lower bounds on decision-tree cost. A certifier returns an
// integer bound together with a replayable adversary certificate: a static
// answer rule "present iff the queried vertex is in rule_present". Replaying
// the rule against an optimal strategy must force at least `value` queries,
// which verify_bound checks whenever the exact solver can reach the instance.

#include <optional>
#include <string>
#include <vector>

#include "nodequery/graph.hpp"
#include "nodequery/property.hpp"
#include "nodequery/solver.hpp"

namespace nq {

struct Sunflower {
  VertexSet core = 0;
  std::vector<VertexSet> petals;  // full sets, each contains the core
};

// Distinct petals, every pairwise intersection equal to the core.
bool sunflower_valid(const Sunflower& sf);

// p-petal sunflower in a uniform family (member size <= 8, deduplicated
// internally). The recursive Erdos-Rado search is guaranteed to succeed
// above the k!(p-1)^k threshold; below it a complete core-enumeration
// search runs unless the family has more than 4000 members, so "not found"
// is exact except for such oversized sub-threshold families.
std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& family, int p);
// Largest p with a p-petal sunflower (family must be non-empty).
Sunflower max_sunflower(const std::vector<VertexSet>& family);

struct Bound {
  std::string certifier;
  std::string note;
  int value = 0;
  bool lower = true;
  bool asymptotic_only = false;  // trend indicator, excluded from soundness
  bool has_rule = false;
  VertexSet rule_present = 0;
  // Certificate sets; meaning depends on the certifier (witness, deletion
  // set, independent sets, matching pairs).
  std::vector<VertexSet> sets;
  std::optional<Sunflower> sunflower;
};

// Smallest X with g[V - X] satisfying p (ties to the lexicographically
// first Gosper combination).
VertexSet min_deletion_set(const Property& p, const Graph& g);

// Single forbidden graph H on <= 6 vertices; every vertex relevant.
// Value = petal count of the best sunflower among the |H|-sized witnesses.
Bound sunflower_forbidden_bound(const Property& p, const Graph& g);
// Any hereditary property, every vertex relevant. Value = the better of
// forcing one largest minimal witness and the best witness-family sunflower.
Bound general_hereditary_bound(const Property& p, const Graph& g);
// Acyclicity: value = ceil((m-n)/d_max), certificate = minimum FVS.
Bound fvs_density_bound(const Graph& g);
// Planarity: value = ceil((m-3n+6)/d_max), certificate = minimum
// planarizing deletion set. Requires n >= 3.
Bound planar_density_bound(const Graph& g);
// Emptiness: value = ceil(n / chi(g)); certificate = the independent set
// (color class or maximum independent set) forcing the most queries.
// Requires no isolated vertices.
Bound chromatic_independence_bound(const Graph& g);
// Triangle-freeness: max of apex count over an edge, minimum triangle
// hitting set, and the emptiness bound on the link graph of the vertex in
// the most triangles. Requires every vertex to lie in a triangle.
Bound triangle_freeness_bound(const Graph& g);
// Max degree <= d: max of d_max - d and the minimum (d+1)-star hitting
// set. Requires every vertex to lie in a (d+1)-star.
Bound bounded_degree_bound(const Graph& g, int d);
// Conjunction of a localized hereditary property and max degree <= d.
Bound local_property_bound(const Property& pl, const Graph& g, int d);
// Hereditary + vertex-transitive trend indicator floor(n/k^2), k = minimum
// witness size. Never sound as stated, hence asymptotic_only.
Bound mon_trans_indicator(const Property& p, const Graph& g);
// Connectedness: max of the complement's matching number and the best
// common-neighbour count over a non-adjacent pair.
Bound connectivity_bound(const Graph& g);

enum class Verdict { Pass, Fail, Unverifiable };

struct Verification {
  Verdict verdict = Verdict::Unverifiable;
  int exact = -1;
  int replayed = -1;
  std::string detail;
};

// Lower bounds: value <= exact cost, and the answer rule (when present)
// forces >= value queries out of an optimal strategy. Upper bounds:
// exact cost <= value. Asymptotic indicators and instances beyond the
// solver cap come back Unverifiable.
Verification verify_bound(const Bound& b, const Property& p, const Graph& g);

// Certifier registry. Names: sunflower-forbidden, hereditary, fvs-density,
// planar-density, chromatic, triangle, bounded-degree, local, mon-trans,
// connectivity. "all" runs every certifier whose property shape matches and
// quietly skips those whose own preconditions or caps reject the instance;
// an explicit name propagates such errors instead.
std::vector<Bound> run_certifiers(const std::string& name, const Property& p, const Graph& g);

std::string bound_to_json(const Bound& b, const Verification* v = nullptr);
const char* verdict_name(Verdict v);

}  // namespace nq
