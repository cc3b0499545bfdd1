#pragma once
// graph6 text codec. Bit layout: header char(s) encode n, then the upper
// triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian six bits
// per character, each character offset by 63. Strict: padding bits must be
// zero and every character must lie in [63, 126].

#include <string>
#include <string_view>
#include <vector>

#include "nodequery/graph.hpp"

namespace nq {

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One graph per line; blank lines rejected except a trailing newline.
std::vector<Graph> parse_graph6_lines(std::string_view text);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace nq
