#include "nodequery/graph.hpp"

namespace nq {

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  for (VertexSet t = s; t; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s = 0;
  for (int v : vs) {
    if (v < 0 || v >= kMaxN) fail_arg("set_of: vertex out of range");
    s |= bit(v);
  }
  return s;
}

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : set_members(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) fail_arg("graph: negative vertex count");
  if (n > kMaxN) fail_cap("graph: n > " + std::to_string(kMaxN));
  adj_.assign(n, 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) fail_arg("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

int Graph::m() const {
  int total = 0;
  for (VertexSet a : adj_) total += std::popcount(a);
  return total / 2;
}

bool Graph::edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return in_set(adj_[u], v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail_arg("self-loop rejected");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int Graph::max_degree() const {
  int d = 0;
  for (VertexSet a : adj_) d = std::max(d, std::popcount(a));
  return d;
}

Graph Graph::induced(VertexSet s) const {
  if (s & ~full_set(n_)) fail_arg("induced: subset has out-of-range vertices");
  std::vector<int> members = set_members(s);
  Graph h((int)members.size());
  for (int i = 0; i < (int)members.size(); i++)
    for (int j = i + 1; j < (int)members.size(); j++)
      if (in_set(adj_[members[i]], members[j])) h.add_edge(i, j);
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  for (int v = 0; v < n_; v++) h.adj_[v] = full_set(n_) & ~adj_[v] & ~bit(v);
  return h;
}

Graph Graph::without_vertex(int v) const {
  check_vertex(v);
  return induced(full_set(n_) & ~bit(v));
}

Graph Graph::without_edge(int u, int v) const {
  Graph h = *this;
  h.remove_edge(u, v);
  return h;
}

uint64_t edge_mask(const Graph& g) {
  int n = g.n();
  if (n > 11) fail_cap("edge_mask: n > 11");
  int total = edge_slots(n);
  uint64_t mask = 0;
  for (int v = 1; v < n; v++)
    for (int u = 0; u < v; u++)
      if (g.edge(u, v)) mask |= 1ull << (total - 1 - edge_slot(u, v));
  return mask;
}

Graph graph_from_edge_mask(int n, uint64_t mask) {
  if (n > 11) fail_cap("graph_from_edge_mask: n > 11");
  int total = edge_slots(n);
  Graph g(n);
  for (int v = 1; v < n; v++)
    for (int u = 0; u < v; u++)
      if ((mask >> (total - 1 - edge_slot(u, v))) & 1) g.add_edge(u, v);
  return g;
}

}  // namespace nq
