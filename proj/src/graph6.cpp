#include "nodequery/graph6.hpp"

#include <fstream>
#include <sstream>

namespace nq {

namespace {

int char_value(char c, std::string_view ctx) {
  unsigned char u = (unsigned char)c;
  if (u < 63 || u > 126) fail_parse("graph6: character out of range in " + std::string(ctx));
  return u - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) fail_parse("graph6: empty input");
  size_t pos = 0;
  long n;
  if (text[0] == 126) {
    // '~' prefix: 18-bit count in three chars. The 8-byte form ('~~') is
    // beyond the library cap, reject it as such.
    if (text.size() >= 2 && text[1] == 126) fail_cap("graph6: n exceeds library cap");
    if (text.size() < 4) fail_parse("graph6: truncated extended header");
    n = ((long)char_value(text[1], "header") << 12) |
        ((long)char_value(text[2], "header") << 6) | char_value(text[3], "header");
    pos = 4;
  } else {
    n = char_value(text[0], "header");
    pos = 1;
  }
  if (n > kMaxN) fail_cap("graph6: n=" + std::to_string(n) + " exceeds cap " + std::to_string(kMaxN));
  int bits = edge_slots((int)n);
  size_t body = (bits + 5) / 6;
  if (text.size() - pos < body) fail_parse("graph6: truncated bit field");
  if (text.size() - pos > body) fail_parse("graph6: trailing characters");
  Graph g((int)n);
  int slot = 0;
  for (size_t i = 0; i < body; i++) {
    int val = char_value(text[pos + i], "body");
    for (int b = 5; b >= 0; b--, slot++) {
      int on = (val >> b) & 1;
      if (slot >= bits) {
        if (on) fail_parse("graph6: nonzero padding bits");
        continue;
      }
      if (on) {
        // invert slot -> (u,v): find column v with v(v-1)/2 <= slot
        int v = 1;
        while ((v + 1) * v / 2 <= slot) v++;
        int u = slot - v * (v - 1) / 2;
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n < 63) {
    out.push_back((char)(n + 63));
  } else {
    out.push_back((char)126);
    out.push_back((char)(((n >> 12) & 63) + 63));
    out.push_back((char)(((n >> 6) & 63) + 63));
    out.push_back((char)((n & 63) + 63));
  }
  int bits = edge_slots(n);
  int acc = 0, filled = 0;
  for (int v = 1; v < n; v++)
    for (int u = 0; u < v; u++) {
      acc = (acc << 1) | (g.edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back((char)(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back((char)((acc << (6 - filled)) + 63));
  (void)bits;
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_graph6(line));
    else if (end != text.size() - 1 && end != text.size())
      fail_parse("graph6: blank line in corpus");
    start = end + 1;
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_arg("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph6_lines(ss.str());
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail_arg("cannot write " + path);
  for (const Graph& g : graphs) out << write_graph6(g) << '\n';
}

}  // namespace nq
