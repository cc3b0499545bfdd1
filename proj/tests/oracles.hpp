#pragma once
// Reference implementations for tests. Deliberately naive: plain recursion
// and full enumeration, no memoization, no shortcuts, different algorithms
// than the library where one exists (DFS where the library uses union-find,
// and so on). Slow is fine; these run at n <= 6.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "nodequery/graph.hpp"

namespace oracle {

using nq::Graph;
using nq::VertexSet;

// ---- decision-tree depth by exhaustive search over all trees ----

inline bool constant_over_completions(int n, const std::vector<uint8_t>& truth,
                                      uint64_t present, uint64_t absent) {
  uint64_t unknown = ~(present | absent) & ((n >= 64 ? ~0ull : (1ull << n) - 1));
  int first = -1;
  uint64_t sub = unknown;
  for (;;) {
    int v = truth[present | sub];
    if (first < 0) first = v;
    if (v != first) return false;
    if (sub == 0) break;
    sub = (sub - 1) & unknown;
  }
  return true;
}

inline int depth_rec(int n, const std::vector<uint8_t>& truth, uint64_t present,
                     uint64_t absent) {
  if (constant_over_completions(n, truth, present, absent)) return 0;
  int best = n + 1;
  for (int v = 0; v < n; ++v) {
    if ((present | absent) >> v & 1ull) continue;
    int hi = depth_rec(n, truth, present | (1ull << v), absent);
    int lo = depth_rec(n, truth, present, absent | (1ull << v));
    best = std::min(best, 1 + std::max(hi, lo));
  }
  return best;
}

inline int tree_depth(int n, const std::vector<uint8_t>& truth) {
  return depth_rec(n, truth, 0, 0);
}

// ---- property evaluation on induced subsets ----

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (s >> v & 1ull) out.push_back(v);
  return out;
}

inline bool empty_on(const Graph& g, VertexSet s) {
  auto vs = members(s);
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.edge(vs[i], vs[j])) return false;
  return true;
}

inline bool triangle_free_on(const Graph& g, VertexSet s) {
  auto vs = members(s);
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      for (size_t k = j + 1; k < vs.size(); ++k)
        if (g.edge(vs[i], vs[j]) && g.edge(vs[j], vs[k]) && g.edge(vs[i], vs[k]))
          return false;
  return true;
}

// DFS back-edge detection (the library uses union-find).
inline bool acyclic_dfs(const Graph& g, const std::vector<int>& vs, int v, int parent,
                        std::vector<int>& seen) {
  seen[v] = 1;
  for (int w : vs) {
    if (w == v || w == parent || !g.edge(v, w)) continue;
    if (seen[w]) return false;
    if (!acyclic_dfs(g, vs, w, v, seen)) return false;
  }
  return true;
}

inline bool acyclic_on(const Graph& g, VertexSet s) {
  auto vs = members(s);
  std::vector<int> seen(g.n(), 0);
  for (int root : vs)
    if (!seen[root] && !acyclic_dfs(g, vs, root, -1, seen)) return false;
  return true;
}

inline bool connected_on(const Graph& g, VertexSet s) {
  auto vs = members(s);
  if (vs.empty()) return true;
  std::vector<int> seen(g.n(), 0), stack{vs[0]};
  seen[vs[0]] = 1;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : vs)
      if (!seen[w] && g.edge(v, w)) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return count == static_cast<int>(vs.size());
}

// Color assignment by plain backtracking.
inline bool colorable_rec(const Graph& g, const std::vector<int>& vs, size_t i,
                          std::vector<int>& color, int k) {
  if (i == vs.size()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (size_t j = 0; j < i; ++j)
      if (g.edge(vs[i], vs[j]) && color[j] == c) ok = false;
    if (!ok) continue;
    color[i] = c;
    if (colorable_rec(g, vs, i + 1, color, k)) return true;
  }
  return false;
}

inline bool colorable_on(const Graph& g, VertexSet s, int k) {
  auto vs = members(s);
  std::vector<int> color(vs.size(), -1);
  return colorable_rec(g, vs, 0, color, k);
}

inline bool bipartite_on(const Graph& g, VertexSet s) { return colorable_on(g, s, 2); }

inline int chromatic(const Graph& g) {
  VertexSet all = nq::full_set(g.n());
  for (int k = 0;; ++k)
    if (colorable_on(g, all, k)) return k;
}

inline bool max_degree_at_most(const Graph& g, VertexSet s, int d) {
  auto vs = members(s);
  for (int v : vs) {
    int deg = 0;
    for (int w : vs)
      if (w != v && g.edge(v, w)) ++deg;
    if (deg > d) return false;
  }
  return true;
}

inline bool st_connected_on(const Graph& g, VertexSet s, int sv, int tv) {
  if (!(s >> sv & 1ull) || !(s >> tv & 1ull)) return false;
  auto vs = members(s);
  std::vector<int> seen(g.n(), 0), stack{sv};
  seen[sv] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == tv) return true;
    for (int w : vs)
      if (!seen[w] && g.edge(v, w)) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return false;
}

inline bool perfect_matching_rec(const Graph& g, std::vector<int>& vs) {
  if (vs.empty()) return true;
  int v = vs.back();
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.edge(v, vs[i])) continue;
    std::vector<int> rest;
    for (size_t j = 0; j + 1 < vs.size(); ++j)
      if (j != i) rest.push_back(vs[j]);
    if (perfect_matching_rec(g, rest)) return true;
  }
  return false;
}

inline bool perfect_matching_on(const Graph& g, VertexSet s) {
  auto vs = members(s);
  if (vs.size() % 2) return false;
  return perfect_matching_rec(g, vs);
}

// Injective edge-preserving map h -> g by direct enumeration.
inline bool map_rec(const Graph& h, const Graph& g, std::vector<int>& img, int i) {
  if (i == h.n()) return true;
  for (int cand = 0; cand < g.n(); ++cand) {
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      if (img[j] == cand) ok = false;
      if (ok && h.edge(i, j) && !g.edge(cand, img[j])) ok = false;
    }
    if (!ok) continue;
    img[i] = cand;
    if (map_rec(h, g, img, i + 1)) return true;
  }
  return false;
}

inline bool contains(const Graph& h, const Graph& g) {
  std::vector<int> img(h.n(), -1);
  return map_rec(h, g, img, 0);
}

// ---- sensitivity / block sensitivity, straight from the definitions ----

inline int sensitivity(int n, const std::vector<uint8_t>& truth) {
  int best = 0;
  for (uint64_t x = 0; x < (1ull << n); ++x) {
    int here = 0;
    for (int v = 0; v < n; ++v)
      if (truth[x] != truth[x ^ (1ull << v)]) ++here;
    best = std::max(best, here);
  }
  return best;
}

inline int bs_pack(int n, const std::vector<uint8_t>& truth, uint64_t x,
                   uint64_t used, uint64_t from) {
  int best = 0;
  uint64_t full = (1ull << n) - 1;
  for (uint64_t b = from; b <= full; ++b) {
    if (b == 0 || (b & used)) continue;
    if (truth[x ^ b] == truth[x]) continue;
    best = std::max(best, 1 + bs_pack(n, truth, x, used | b, b + 1));
  }
  return best;
}

inline int block_sensitivity(int n, const std::vector<uint8_t>& truth) {
  int best = 0;
  for (uint64_t x = 0; x < (1ull << n); ++x)
    best = std::max(best, bs_pack(n, truth, x, 0, 1));
  return best;
}

// ---- sunflowers ----

inline bool sunflower_valid(const std::vector<VertexSet>& sets) {
  if (sets.empty()) return false;
  if (sets.size() == 1) return true;
  VertexSet core = sets[0] & sets[1];
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j)
      if ((sets[i] & sets[j]) != core) return false;
  return true;
}

inline int max_sunflower_rec(const std::vector<VertexSet>& family,
                             std::vector<VertexSet>& chosen, size_t from) {
  int best = static_cast<int>(chosen.size());
  for (size_t i = from; i < family.size(); ++i) {
    chosen.push_back(family[i]);
    if (sunflower_valid(chosen))
      best = std::max(best, max_sunflower_rec(family, chosen, i + 1));
    chosen.pop_back();
  }
  return best;
}

// Largest sunflower inside the family, by trying every subfamily.
inline int max_sunflower_size(const std::vector<VertexSet>& family) {
  std::vector<VertexSet> chosen;
  return max_sunflower_rec(family, chosen, 0);
}

// ---- misc ----

// The CLI example graph "D?{" decoded by hand: n=5, '?' carries
// x01 x02 x12 x03 x13 x23 = 000000, '{' = 60 = 111100 carries
// x04 x14 x24 x34 = 1111. A 4-star with centre 4.
inline Graph star_d_brace() {
  return Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

inline Graph random_graph(int n, std::mt19937_64& rng, double p_num = 1,
                          double p_den = 2) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() % 1000) * p_den < 1000.0 * p_num) g.add_edge(u, v);
  return g;
}

// Downward-closed random table: closure of ~n random "maximal" sets.
inline std::vector<uint8_t> random_monotone_table(int n, std::mt19937_64& rng) {
  std::vector<uint8_t> truth(1ull << n, 0);
  uint64_t full = (1ull << n) - 1;
  int seeds = 1 + static_cast<int>(rng() % (n + 1));
  for (int i = 0; i < seeds; ++i) {
    uint64_t top = rng() & full;
    for (uint64_t sub = top;; sub = (sub - 1) & top) {
      truth[sub] = 1;
      if (sub == 0) break;
    }
  }
  return truth;
}

}  // namespace oracle
