#pragma once
// Named graph generators with fixed labelings (documented per function).

#include <cstdint>
#include <string>

#include "nodequery/graph.hpp"

namespace nq {

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);   // edges i -- i+1
Graph cycle_graph(int n);  // n >= 3, edges i -- (i+1 mod n)
Graph star_graph(int n);   // center 0, leaves 1..n-1
Graph complete_bipartite(int a, int b);  // sides 0..a-1 and a..a+b-1
Graph matching_graph(int k);             // k disjoint edges (2i, 2i+1)
Graph petersen_graph();  // outer 0..4, inner 5..9, spokes i -- i+5
// Hub 0 joined to the cycle 1..d; spoke i (to rim vertex i+1) present iff
// bit i of spoke_mask is set.
Graph wheel_graph(int d, uint64_t spoke_mask = ~0ull);
Graph grid_graph(int rows, int cols);  // vertex r*cols+c

// Parses "name" or "name:a[,b[,c]]": empty, complete, path, cycle, star,
// kab, matching, petersen, wheel, grid.
Graph standard_graph(const std::string& spec);

}  // namespace nq
