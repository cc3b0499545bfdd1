#pragma once
// Isomorphism tooling by brute-force relabeling at desk scale: canonical
// form is the minimum graph6 string over all vertex permutations.

#include <string>
#include <vector>

#include "nodequery/graph.hpp"

namespace nq {

std::string canonical_form(const Graph& g);  // n <= 9
Graph canonical_graph(const Graph& g);       // the relabeling realizing it

// All isomorphism classes on n vertices, each as its canonical labeling,
// ascending in canonical order. n <= 7 (labeled sweep over 2^C(n,2) masks).
std::vector<Graph> enumerate_canonical(int n);

}  // namespace nq
