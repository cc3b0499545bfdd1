#include "nodequery/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace nq {

namespace {

// Vertices reachable from seed inside mask.
VertexSet reach(const Graph& g, VertexSet mask, int seed) {
  VertexSet seen = bit(seed), frontier = bit(seed);
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet t = frontier; t; t &= t - 1) next |= g.neighbors(lowest(t));
    frontier = next & mask & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return reach(g, full_set(g.n()), 0) == full_set(g.n());
}

bool is_acyclic(const Graph& g) {
  // Union-find over edges; a cycle shows up as a redundant union.
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < g.n(); v++)
    for (VertexSet t = g.neighbors(v) & ~(full_set(v + 1)); t; t &= t - 1) {
      int a = find(v), b = find(lowest(t));
      if (a == b) return false;
      parent[a] = b;
    }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); s++) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (VertexSet t = g.neighbors(v); t; t &= t - 1) {
        int u = lowest(t);
        if (color[u] < 0) {
          color[u] = color[v] ^ 1;
          stack.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool contains_subgraph(const Graph& h, const Graph& g, int cap_h, int cap_g) {
  if (h.n() > cap_h) fail_cap("contains_subgraph: pattern n > " + std::to_string(cap_h));
  if (g.n() > cap_g) fail_cap("contains_subgraph: host n > " + std::to_string(cap_g));
  if (h.n() > g.n() || h.m() > g.m()) return false;
  // map pattern vertices in descending-degree order; only h-edges constrain
  std::vector<int> order(h.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> image(h.n(), -1);
  auto rec = [&](auto&& self, int idx, VertexSet used) -> bool {
    if (idx == h.n()) return true;
    int hv = order[idx];
    for (int gv = 0; gv < g.n(); gv++) {
      if (in_set(used, gv) || g.degree(gv) < h.degree(hv)) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; j++)
        if (h.edge(hv, order[j]) && !g.edge(gv, image[order[j]])) ok = false;
      if (!ok) continue;
      image[hv] = gv;
      if (self(self, idx + 1, used | bit(gv))) return true;
      image[hv] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

namespace {

// Subdivision of the pattern inside g: injective branch vertices plus
// internally disjoint paths for every pattern edge, found by backtracking.
struct SubdivisionSearch {
  const Graph& g;
  std::vector<std::pair<int, int>> pattern_edges;  // over branch slots
  std::vector<int> branch;                         // slot -> g vertex
  explicit SubdivisionSearch(const Graph& gg) : g(gg) {}

  bool route(size_t e, VertexSet used) {
    if (e == pattern_edges.size()) return true;
    auto [a, b] = pattern_edges[e];
    return path_dfs(e, branch[a], branch[b], branch[a], used);
  }

  // grow a simple path cur -> target avoiding used (branch vertices of other
  // slots are inside used)
  bool path_dfs(size_t e, int start, int target, int cur, VertexSet used) {
    if (g.edge(cur, target)) {
      if (route(e + 1, used)) return true;
    }
    VertexSet cand = g.neighbors(cur) & ~used & ~bit(target);
    for (VertexSet t = cand; t; t &= t - 1) {
      int nxt = lowest(t);
      if (path_dfs(e, start, target, nxt, used | bit(nxt))) return true;
    }
    return false;
  }

  bool try_branches(const std::vector<int>& degrees, size_t idx, VertexSet used) {
    if (idx == degrees.size()) {
      VertexSet branch_mask = 0;
      for (int v : branch) branch_mask |= bit(v);
      return route(0, branch_mask);
    }
    for (int v = 0; v < g.n(); v++) {
      if (in_set(used, v) || g.degree(v) < degrees[idx]) continue;
      // symmetry break inside interchangeable slot groups
      if (idx > 0 && degrees[idx] == degrees[idx - 1] && interchangeable(idx) && v < branch[idx - 1])
        continue;
      branch[idx] = v;
      if (try_branches(degrees, idx + 1, used | bit(v))) return true;
    }
    return false;
  }

  bool k5_mode = false;
  bool interchangeable(size_t idx) {
    if (k5_mode) return true;          // all five slots symmetric
    return idx != 3;                   // K3,3 sides {0,1,2} and {3,4,5}
  }
};

bool has_subdivision_k5(const Graph& g) {
  SubdivisionSearch s(g);
  s.k5_mode = true;
  s.branch.assign(5, -1);
  for (int a = 0; a < 5; a++)
    for (int b = a + 1; b < 5; b++) s.pattern_edges.push_back({a, b});
  return s.try_branches(std::vector<int>(5, 4), 0, 0);
}

bool has_subdivision_k33(const Graph& g) {
  SubdivisionSearch s(g);
  s.branch.assign(6, -1);
  for (int a = 0; a < 3; a++)
    for (int b = 3; b < 6; b++) s.pattern_edges.push_back({a, b});
  return s.try_branches(std::vector<int>(6, 3), 0, 0);
}

}  // namespace

bool is_planar(const Graph& g) {
  int n = g.n(), m = g.m();
  if (n > 12) fail_cap("is_planar: n > 12");
  if (n < 5 || m <= 8) return true;  // K5 needs 10 edges, a K3,3 subdivision 9
  if (m > 3 * n - 6) return false;
  if (has_subdivision_k5(g)) return false;
  if (has_subdivision_k33(g)) return false;
  return true;
}

namespace {

bool color_rec(const Graph& g, const std::vector<int>& order, std::vector<int>& color, size_t idx,
               int k, int used) {
  if (idx == order.size()) return true;
  int v = order[idx];
  int limit = std::min(k, used + 1);  // fresh colors are interchangeable
  for (int c = 0; c < limit; c++) {
    bool ok = true;
    for (VertexSet t = g.neighbors(v); t && ok; t &= t - 1)
      if (color[lowest(t)] == c) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (color_rec(g, order, color, idx + 1, k, std::max(used, c + 1))) return true;
    color[v] = -1;
  }
  return false;
}

std::vector<int> coloring_order(const Graph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace

bool k_colorable(const Graph& g, int k) {
  if (g.n() > 16) fail_cap("k_colorable: n > 16");
  if (k < 0) fail_arg("k_colorable: negative k");
  if (g.n() == 0) return true;
  if (k == 0) return false;
  std::vector<int> color(g.n(), -1);
  return color_rec(g, coloring_order(g), color, 0, k, 0);
}

VertexSet max_clique(const Graph& g) {
  if (g.n() > 20) fail_cap("max_clique: n > 20");
  VertexSet best = 0;
  auto rec = [&](auto&& self, VertexSet clique, VertexSet cand) -> void {
    if (set_size(clique) + set_size(cand) <= set_size(best)) return;
    if (!cand) {
      if (set_size(clique) > set_size(best)) best = clique;
      return;
    }
    int v = lowest(cand);
    self(self, clique | bit(v), cand & g.neighbors(v));
    self(self, clique, cand & ~bit(v));
  };
  rec(rec, 0, full_set(g.n()));
  return best;
}

VertexSet max_independent_set(const Graph& g) { return max_clique(g.complement()); }

int chromatic_number(const Graph& g) {
  if (g.n() > 16) fail_cap("chromatic_number: n > 16");
  if (g.n() == 0) return 0;
  int lo = set_size(max_clique(g));
  for (int k = lo;; k++)
    if (k_colorable(g, k)) return k;
}

std::vector<VertexSet> optimal_coloring(const Graph& g) {
  int chi = chromatic_number(g);
  std::vector<int> color(g.n(), -1);
  if (g.n() > 0 && !color_rec(g, coloring_order(g), color, 0, chi, 0))
    fail_domain("optimal_coloring: internal inconsistency");
  std::vector<VertexSet> classes(chi, 0);
  for (int v = 0; v < g.n(); v++) classes[color[v]] |= bit(v);
  return classes;
}

VertexSet min_feedback_vertex_set(const Graph& g) {
  if (g.n() > 16) fail_cap("min_feedback_vertex_set: n > 16");
  int n = g.n();
  for (int size = 0; size <= n; size++) {
    if (size == 0) {
      if (is_acyclic(g)) return 0;
      continue;
    }
    for (uint64_t s = full_set(size); s < (1ull << n); s = next_combination(s))
      if (is_acyclic(g.induced(full_set(n) & ~s))) return s;
  }
  fail_domain("min_feedback_vertex_set: unreachable");
}

VertexSet min_hitting_set(const std::vector<VertexSet>& targets, int universe_n) {
  if (universe_n > 16) fail_cap("min_hitting_set: universe > 16");
  for (VertexSet t : targets) {
    if (t & ~full_set(universe_n)) fail_arg("min_hitting_set: target outside universe");
    if (!t) fail_arg("min_hitting_set: empty target cannot be hit");
  }
  if (targets.empty()) return 0;
  for (int size = 1; size <= universe_n; size++)
    for (uint64_t s = full_set(size); s < (1ull << universe_n); s = next_combination(s)) {
      bool all = true;
      for (VertexSet t : targets)
        if (!(t & s)) {
          all = false;
          break;
        }
      if (all) return s;
    }
  fail_domain("min_hitting_set: unreachable");
}

TriangleSupport triangle_support(const Graph& g) {
  TriangleSupport out;
  std::vector<int> at_vertex(g.n(), 0);
  for (int u = 0; u < g.n(); u++)
    for (VertexSet t = g.neighbors(u) & ~full_set(u + 1); t; t &= t - 1) {
      int v = lowest(t);
      VertexSet common = g.neighbors(u) & g.neighbors(v) & ~full_set(v + 1);
      for (VertexSet w = common; w; w &= w - 1)
        out.triangles.push_back(bit(u) | bit(v) | bit(lowest(w)));
      int through_edge = set_size(g.neighbors(u) & g.neighbors(v));
      if (through_edge > out.d2_max) {
        out.d2_max = through_edge;
        out.d2_u = u;
        out.d2_v = v;
      }
    }
  for (VertexSet tri : out.triangles)
    for (VertexSet t = tri; t; t &= t - 1) at_vertex[lowest(t)]++;
  for (int v = 0; v < g.n(); v++)
    if (at_vertex[v] > out.d1_max) {
      out.d1_max = at_vertex[v];
      out.d1_vertex = v;
    }
  return out;
}

namespace {

int matching_rec(const Graph& g, VertexSet mask, std::vector<int8_t>& memo) {
  if (!mask) return 0;
  int8_t& m = memo[mask];
  if (m >= 0) return m;
  int v = lowest(mask);
  int best = matching_rec(g, mask & ~bit(v), memo);  // v unmatched
  for (VertexSet t = g.neighbors(v) & mask; t; t &= t - 1)
    best = std::max(best, 1 + matching_rec(g, mask & ~bit(v) & ~bit(lowest(t)), memo));
  m = (int8_t)best;
  return best;
}

}  // namespace

int max_matching(const Graph& g) {
  if (g.n() > 16) fail_cap("max_matching: n > 16");
  std::vector<int8_t> memo(1ull << g.n(), -1);
  return matching_rec(g, full_set(g.n()), memo);
}

std::vector<std::pair<int, int>> max_matching_edges(const Graph& g) {
  if (g.n() > 16) fail_cap("max_matching: n > 16");
  std::vector<int8_t> memo(1ull << g.n(), -1);
  std::vector<std::pair<int, int>> out;
  VertexSet mask = full_set(g.n());
  while (mask) {
    int total = matching_rec(g, mask, memo);
    int v = lowest(mask);
    if (matching_rec(g, mask & ~bit(v), memo) == total) {
      mask &= ~bit(v);
      continue;
    }
    for (VertexSet t = g.neighbors(v) & mask; t; t &= t - 1) {
      int u = lowest(t);
      if (1 + matching_rec(g, mask & ~bit(v) & ~bit(u), memo) == total) {
        out.push_back({v, u});
        mask &= ~bit(v) & ~bit(u);
        break;
      }
    }
  }
  return out;
}

bool has_perfect_matching(const Graph& g) {
  if (g.n() % 2) return false;
  return max_matching(g) == g.n() / 2;
}

bool is_vertex_transitive(const Graph& g) {
  if (g.n() > 10) fail_cap("is_vertex_transitive: n > 10");
  int n = g.n();
  if (n <= 1) return true;
  // collect the orbit of vertex 0 by backtracking over partial automorphisms
  VertexSet orbit = bit(0);
  std::vector<int> image(n, -1);
  std::vector<int> sorted_deg(n);
  for (int v = 0; v < n; v++) sorted_deg[v] = g.degree(v);
  auto extend = [&](auto&& self, int v, VertexSet used) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; w++) {
      if (in_set(used, w) || sorted_deg[w] != sorted_deg[v]) continue;
      if (v == 0 && in_set(orbit, w)) continue;  // only chase new images of 0
      bool ok = true;
      for (int u = 0; u < v && ok; u++)
        if (g.edge(u, v) != g.edge(image[u], w)) ok = false;
      if (!ok) continue;
      image[v] = w;
      if (self(self, v + 1, used | bit(w))) {
        if (v == 0) orbit |= bit(w);
        return true;
      }
    }
    return false;
  };
  // keep searching for automorphisms moving 0 somewhere new
  while (orbit != full_set(n)) {
    if (!extend(extend, 0, 0)) return false;
  }
  return true;
}

}  // namespace nq
