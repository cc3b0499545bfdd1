#include "nodequery/generators.hpp"

#include <charconv>

namespace nq {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; v++) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) fail_arg("cycle: n >= 3 required");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int n) {
  if (n < 1) fail_arg("star: n >= 1 required");
  Graph g(n);
  for (int v = 1; v < n; v++) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) fail_arg("kab: negative side");
  Graph g(a + b);
  for (int u = 0; u < a; u++)
    for (int v = 0; v < b; v++) g.add_edge(u, a + v);
  return g;
}

Graph matching_graph(int k) {
  if (k < 0) fail_arg("matching: negative size");
  Graph g(2 * k);
  for (int i = 0; i < k; i++) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; i++) {
    g.add_edge(i, (i + 1) % 5);          // outer pentagon
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph wheel_graph(int d, uint64_t spoke_mask) {
  if (d < 3) fail_arg("wheel: rim >= 3 required");
  Graph g(d + 1);
  for (int i = 1; i <= d; i++) {
    g.add_edge(i, i % d + 1);
    if ((spoke_mask >> (i - 1)) & 1) g.add_edge(0, i);
  }
  return g;
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) fail_arg("grid: sides >= 1 required");
  Graph g(rows * cols);
  for (int r = 0; r < rows; r++)
    for (int c = 0; c < cols; c++) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

namespace {

std::vector<long> parse_params(const std::string& s) {
  std::vector<long> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    long val = 0;
    auto [p, ec] = std::from_chars(s.data() + pos, s.data() + end, val);
    if (ec != std::errc() || p != s.data() + end) fail_parse("generator: bad parameter '" + s + "'");
    out.push_back(val);
    if (end == s.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

Graph standard_graph(const std::string& spec) {
  std::string name = spec;
  std::vector<long> ps;
  if (size_t colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    ps = parse_params(spec.substr(colon + 1));
  }
  auto want = [&](size_t k) {
    if (ps.size() != k)
      fail_parse("generator '" + name + "' takes " + std::to_string(k) + " parameter(s)");
  };
  auto big = [&](long v) {
    if (v < 0 || v > kMaxN) fail_cap("generator: size out of range");
    return (int)v;
  };
  if (name == "empty") { want(1); return empty_graph(big(ps[0])); }
  if (name == "complete") { want(1); return complete_graph(big(ps[0])); }
  if (name == "path") { want(1); return path_graph(big(ps[0])); }
  if (name == "cycle") { want(1); return cycle_graph(big(ps[0])); }
  if (name == "star") { want(1); return star_graph(big(ps[0])); }
  if (name == "kab") { want(2); return complete_bipartite(big(ps[0]), big(ps[1])); }
  if (name == "matching") { want(1); return matching_graph(big(ps[0])); }
  if (name == "petersen") { want(0); return petersen_graph(); }
  if (name == "wheel") {
    if (ps.size() == 1) return wheel_graph(big(ps[0]));
    if (ps.size() == 2) return wheel_graph(big(ps[0]), (uint64_t)ps[1]);
    fail_parse("wheel takes 1 or 2 parameters");
  }
  if (name == "grid") { want(2); return grid_graph(big(ps[0]), big(ps[1])); }
  fail_parse("unknown generator '" + name + "'");
}

}  // namespace nq
