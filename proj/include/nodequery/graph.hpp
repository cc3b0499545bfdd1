#pragma once
// Labeled simple undirected graphs on vertices 0..n-1, n <= 64.
// Adjacency is stored as one bitmask per vertex; a VertexSet is a bitmask
// over the same labels.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nq {

constexpr int kMaxN = 64;

struct Error : std::runtime_error {
  enum Kind { Argument, Cap, Parse, Domain };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail_arg(const std::string& m) { throw Error(Error::Argument, m); }
[[noreturn]] inline void fail_cap(const std::string& m) { throw Error(Error::Cap, m); }
[[noreturn]] inline void fail_parse(const std::string& m) { throw Error(Error::Parse, m); }
[[noreturn]] inline void fail_domain(const std::string& m) { throw Error(Error::Domain, m); }

using VertexSet = uint64_t;

inline VertexSet full_set(int n) { return n >= 64 ? ~0ull : (1ull << n) - 1ull; }
inline VertexSet bit(int v) { return 1ull << v; }
inline bool in_set(VertexSet s, int v) { return (s >> v) & 1ull; }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

std::vector<int> set_members(VertexSet s);
VertexSet set_of(std::initializer_list<int> vs);
std::string set_to_string(VertexSet s);

// Gosper's hack: next larger value with the same popcount. Caller must stop
// before the bits run off the top of the universe.
inline uint64_t next_combination(uint64_t v) {
  uint64_t c = v & (~v + 1), r = v + c;
  return r | (((v ^ r) >> 2) / c);
}

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int n() const { return n_; }
  int m() const;
  bool edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
  }
  int max_degree() const;
  // Vertices of s relabeled 0..|s|-1 in ascending label order.
  Graph induced(VertexSet s) const;
  Graph complement() const;
  Graph without_vertex(int v) const;
  Graph without_edge(int u, int v) const;
  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  void check_vertex(int v) const;
};

// Edge slots follow the graph6 bit stream: x(0,1), x(0,2), x(1,2), x(0,3), ...
// Masks put slot s at bit E-1-s, so numeric order on masks equals
// lexicographic order on the encoded byte strings.
inline int edge_slots(int n) { return n * (n - 1) / 2; }
inline int edge_slot(int u, int v) { return v * (v - 1) / 2 + u; }  // u < v
uint64_t edge_mask(const Graph& g);  // n <= 11
Graph graph_from_edge_mask(int n, uint64_t mask);

}  // namespace nq
