#include "nodequery/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "nodequery/graph6.hpp"

namespace nq {

namespace {

uint64_t permuted_mask(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& perm,
                       int total) {
  uint64_t mask = 0;
  for (auto [u, v] : edges) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    mask |= 1ull << (total - 1 - edge_slot(a, b));
  }
  return mask;
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < g.n(); v++)
    for (int u = 0; u < v; u++)
      if (g.edge(u, v)) edges.push_back({u, v});
  return edges;
}

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.n() > 9) fail_cap("canonical_form: n > 9");
  int n = g.n(), total = edge_slots(n);
  auto edges = edge_list(g);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ull;
  do {
    best = std::min(best, permuted_mask(edges, perm, total));
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) best = 0;
  return graph_from_edge_mask(n, best);
}

std::string canonical_form(const Graph& g) { return write_graph6(canonical_graph(g)); }

std::vector<Graph> enumerate_canonical(int n) {
  if (n > 7) fail_cap("enumerate_canonical: n > 7");
  if (n < 0) fail_arg("enumerate_canonical: negative n");
  int total = edge_slots(n);
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<bool> seen(1ull << total, false);
  std::vector<Graph> out;
  for (uint64_t mask = 0; mask < (1ull << total); mask++) {
    if (seen[mask]) continue;
    Graph g = graph_from_edge_mask(n, mask);
    out.push_back(g);
    auto edges = edge_list(g);
    for (const auto& perm : perms) seen[permuted_mask(edges, perm, total)] = true;
  }
  return out;
}

}  // namespace nq
