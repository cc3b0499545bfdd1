#include "nodequery/property.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>

#include "json.hpp"
#include "nodequery/generators.hpp"
#include "nodequery/graph6.hpp"
#include "nodequery/invariants.hpp"

namespace nq {

namespace {

int min_degree(const Graph& h) {
  int d = INT_MAX;
  for (int v = 0; v < h.n(); ++v) d = std::min(d, h.degree(v));
  return d;
}

bool is_complete(const Graph& h) { return h.m() == h.n() * (h.n() - 1) / 2; }

// Clique of size t with all vertices drawn from cand.
bool has_clique(const Graph& g, VertexSet cand, int t) {
  if (t <= 0) return true;
  while (set_size(cand) >= t) {
    int v = lowest(cand);
    cand &= ~bit(v);
    if (has_clique(g, g.neighbors(v) & cand, t - 1)) return true;
  }
  return false;
}

bool subset_has(const Graph& g, VertexSet s, const Graph& h) {
  if (set_size(s) < h.n()) return false;
  if (is_complete(h)) return has_clique(g, s, h.n());
  return contains_subgraph(h, g.induced(s));
}

bool subset_acyclic(const Graph& g, VertexSet s) {
  int parent[kMaxN];
  for (int v : set_members(s)) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int v : set_members(s)) {
    VertexSet lower = g.neighbors(v) & s & (bit(v) - 1);
    for (int u : set_members(lower)) {
      int a = find(u), b = find(v);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

bool subset_bipartite(const Graph& g, VertexSet s) {
  VertexSet side[2] = {0, 0};
  VertexSet todo = s;
  while (todo) {
    int start = lowest(todo);
    side[0] |= bit(start);
    VertexSet frontier = bit(start);
    int c = 0;
    while (frontier) {
      VertexSet next = 0;
      for (int v : set_members(frontier)) next |= g.neighbors(v) & s;
      if (next & side[c]) return false;
      next &= ~side[1 - c];
      side[1 - c] |= next;
      frontier = next;
      c = 1 - c;
    }
    todo &= ~(side[0] | side[1]);
  }
  return true;
}

// Vertices of s reachable from seed inside g[s].
VertexSet subset_reach(const Graph& g, VertexSet s, VertexSet seed) {
  VertexSet reach = seed & s, frontier = reach;
  while (frontier) {
    VertexSet next = 0;
    for (int v : set_members(frontier)) next |= g.neighbors(v) & s;
    next &= ~reach;
    reach |= next;
    frontier = next;
  }
  return reach;
}

struct NameParser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size()) {
      char c = s[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ++pos;
      else break;
    }
    if (pos == start) fail_parse("expected a property name at offset " + std::to_string(pos));
    std::string out(s.substr(start, pos - start));
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail_parse(std::string("expected '") + c + "' in property name");
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail_parse("expected an integer argument in property name");
    int v = 0;
    std::from_chars(s.data() + start, s.data() + pos, v);
    return v;
  }

  int int_arg() {
    expect('(');
    int v = integer();
    expect(')');
    return v;
  }

  Property parse() {
    std::string id = ident();
    if (id == "emptiness") return finite_property("emptiness", {complete_graph(2)});
    if (id == "triangle-free") return finite_property("triangle-free", {complete_graph(3)});
    if (id == "kt-free") {
      int t = int_arg();
      if (t < 2) fail_arg("kt-free needs t >= 2");
      return finite_property("kt-free(" + std::to_string(t) + ")", {complete_graph(t)});
    }
    if (id == "pt-free") {
      int t = int_arg();
      if (t < 2) fail_arg("pt-free needs t >= 2");
      return finite_property("pt-free(" + std::to_string(t) + ")", {path_graph(t)});
    }
    if (id == "ct-free") {
      int t = int_arg();
      if (t < 3) fail_arg("ct-free needs t >= 3");
      return finite_property("ct-free(" + std::to_string(t) + ")", {cycle_graph(t)});
    }
    Property p;
    p.name = id;
    if (id == "acyclic") {
      p.kind = PKind::Acyclic;
      p.declared_dp = 2;
    } else if (id == "bipartite") {
      p.kind = PKind::Bipartite;
      p.declared_dp = 2;
    } else if (id == "planar") {
      p.kind = PKind::Planar;
      p.declared_dp = 2;
    } else if (id == "k-colorable") {
      p.kind = PKind::Colorable;
      p.a = int_arg();
      if (p.a < 1) fail_arg("k-colorable needs k >= 1");
      p.declared_dp = p.a;
      p.name = "k-colorable(" + std::to_string(p.a) + ")";
    } else if (id == "bounded-degree") {
      p.kind = PKind::BoundedDegree;
      p.a = int_arg();
      if (p.a < 0) fail_arg("bounded-degree needs d >= 0");
      p.declared_dp = 1;
      p.name = "bounded-degree(" + std::to_string(p.a) + ")";
    } else if (id == "connected") {
      p.kind = PKind::Connected;
    } else if (id == "perfect-matching") {
      p.kind = PKind::PerfectMatching;
    } else if (id == "st-connected") {
      p.kind = PKind::StConnected;
      expect('(');
      p.a = integer();
      expect(',');
      p.b = integer();
      expect(')');
      if (p.a == p.b) fail_arg("st-connected needs two distinct vertices");
      p.name = "st-connected(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
    } else if (id == "local") {
      expect('(');
      Property inner = parse();
      expect(')');
      return localize(inner);
    } else if (id == "and") {
      expect('(');
      Property lhs = parse();
      expect(',');
      Property rhs = parse();
      expect(')');
      p.kind = PKind::And;
      p.sub = {std::move(lhs), std::move(rhs)};
      p.name = "and(" + p.sub[0].name + "," + p.sub[1].name + ")";
    } else {
      fail_parse("unknown property name '" + id + "'");
    }
    return p;
  }
};

}  // namespace

bool Property::hereditary() const {
  switch (kind) {
    case PKind::Forbidden:
    case PKind::Acyclic:
    case PKind::Bipartite:
    case PKind::Planar:
    case PKind::Colorable:
    case PKind::BoundedDegree:
      return true;
    case PKind::Connected:
    case PKind::PerfectMatching:
    case PKind::StConnected:
      return false;
    case PKind::Local:
      return sub[0].hereditary();
    case PKind::And:
      return sub[0].hereditary() && sub[1].hereditary();
  }
  return false;
}

Property parse_property(std::string_view text) {
  NameParser np{text};
  Property p = np.parse();
  np.skip_ws();
  if (np.pos != text.size()) fail_parse("trailing characters after property name");
  return p;
}

Property finite_property(std::string name, std::vector<Graph> family) {
  if (family.empty()) fail_arg("finite property needs at least one forbidden graph");
  for (const Graph& h : family)
    if (h.n() == 0) fail_arg("forbidden graphs must have at least one vertex");
  std::vector<Graph> keep;
  for (size_t i = 0; i < family.size(); ++i) {
    bool drop = false;
    for (size_t j = 0; j < family.size() && !drop; ++j) {
      if (i == j || !contains_subgraph(family[j], family[i])) continue;
      // j embeds into i: i is redundant, except that mutual embeddings
      // (isomorphic members) keep their first occurrence.
      drop = !contains_subgraph(family[i], family[j]) || j < i;
    }
    if (!drop) keep.push_back(family[i]);
  }
  Property p;
  p.kind = PKind::Forbidden;
  p.name = std::move(name);
  p.forbidden = std::move(keep);
  return p;
}

bool eval_subset(const Property& p, const Graph& g, VertexSet s) {
  if (s & ~full_set(g.n())) fail_arg("subset contains vertices outside the graph");
  switch (p.kind) {
    case PKind::Forbidden:
      for (const Graph& h : p.forbidden)
        if (subset_has(g, s, h)) return false;
      return true;
    case PKind::Acyclic:
      return subset_acyclic(g, s);
    case PKind::Bipartite:
      return subset_bipartite(g, s);
    case PKind::Planar:
      return is_planar(g.induced(s));
    case PKind::Colorable:
      return k_colorable(g.induced(s), p.a);
    case PKind::BoundedDegree:
      for (int v : set_members(s))
        if (set_size(g.neighbors(v) & s) > p.a) return false;
      return true;
    case PKind::Connected: {
      if (s == 0) return true;
      return subset_reach(g, s, bit(lowest(s))) == s;
    }
    case PKind::PerfectMatching:
      if (s == 0) return true;
      if (set_size(s) % 2) return false;
      return has_perfect_matching(g.induced(s));
    case PKind::StConnected: {
      if (p.a >= g.n() || p.b >= g.n()) fail_arg("st-connected endpoints outside the graph");
      if (!in_set(s, p.a) || !in_set(s, p.b)) return false;
      return in_set(subset_reach(g, s, bit(p.a)), p.b);
    }
    case PKind::Local:
      for (int v : set_members(s))
        if (!eval_subset(p.sub[0], g, g.neighbors(v) & s)) return false;
      return true;
    case PKind::And:
      return eval_subset(p.sub[0], g, s) && eval_subset(p.sub[1], g, s);
  }
  fail_arg("unhandled property kind");
}

bool evaluate(const Property& p, const Graph& g) { return eval_subset(p, g, full_set(g.n())); }

std::vector<uint8_t> truth_table(const Property& p, const Graph& g) {
  int n = g.n();
  if (n > 20) fail_cap("truth tables are limited to n <= 20");
  size_t total = 1ull << n;
  std::vector<uint8_t> out(total);
  if (p.kind == PKind::PerfectMatching) {
    // out doubles as the matchability table: strip the lowest vertex
    // together with one matched neighbour.
    out[0] = 1;
    for (size_t mask = 1; mask < total; ++mask) {
      int v = lowest(mask);
      VertexSet rest = mask & ~bit(v);
      uint8_t ok = 0;
      for (VertexSet cand = g.neighbors(v) & rest; cand && !ok; cand &= cand - 1)
        ok = out[rest & ~bit(lowest(cand))];
      out[mask] = ok;
    }
    return out;
  }
  for (size_t mask = 0; mask < total; ++mask)
    out[mask] = eval_subset(p, g, mask) ? 1 : 0;
  return out;
}

VertexSet relevant_vertices(const Property& p, const Graph& g) {
  int n = g.n();
  std::vector<uint8_t> tt = truth_table(p, g);
  VertexSet rel = 0;
  for (int v = 0; v < n; ++v) {
    for (VertexSet s = bit(v); s < (1ull << n); ++s) {
      if (!in_set(s, v)) continue;
      if (tt[s] != tt[s & ~bit(v)]) {
        rel |= bit(v);
        break;
      }
    }
  }
  return rel;
}

bool graph_relevant(const Property& p, const Graph& g) {
  return relevant_vertices(p, g) == full_set(g.n());
}

int compute_dp(const Property& p) {
  if (p.declared_dp) return *p.declared_dp;
  switch (p.kind) {
    case PKind::Forbidden: {
      int best = INT_MAX;
      for (const Graph& h : p.forbidden) best = std::min(best, min_degree(h));
      return best;
    }
    case PKind::Acyclic:
    case PKind::Bipartite:
    case PKind::Planar:
      return 2;
    case PKind::Colorable:
      return p.a;
    case PKind::BoundedDegree:
      return 1;
    case PKind::And:
      if (p.sub[0].kind == PKind::Forbidden && p.sub[1].kind == PKind::Forbidden) {
        std::vector<Graph> merged = p.sub[0].forbidden;
        merged.insert(merged.end(), p.sub[1].forbidden.begin(), p.sub[1].forbidden.end());
        return compute_dp(finite_property(p.name, std::move(merged)));
      }
      fail_domain("no forbidden-family degree for this conjunction");
    default:
      fail_domain("property has no forbidden-family degree");
  }
}

int compute_cp(const Property& p) {
  for (int t = 1; t <= 10; ++t)
    if (!evaluate(p, complete_graph(t))) return t;
  fail_cap("no complete graph on <= 10 vertices fails the property");
}

std::vector<std::vector<VertexSet>> witness_families(const Property& p, const Graph& g,
                                                     int k_max) {
  if (!p.hereditary()) fail_domain("witness families are defined for hereditary properties");
  if (k_max < 1 || k_max > 8) fail_arg("witness size bound must be in 1..8");
  int n = g.n();
  if (n > 20) fail_cap("witness enumeration is limited to n <= 20");
  std::vector<uint8_t> tt = truth_table(p, g);
  std::vector<std::vector<VertexSet>> families(static_cast<size_t>(k_max) + 1);
  for (int k = 1; k <= std::min(k_max, n); ++k) {
    VertexSet s = full_set(k);
    VertexSet last = s << (n - k);
    for (;; s = next_combination(s)) {
      if (!tt[s]) {
        bool minimal = true;
        for (VertexSet rem = s; rem && minimal; rem &= rem - 1)
          minimal = tt[s & ~bit(lowest(rem))] != 0;
        if (minimal) families[k].push_back(s);
      }
      if (s == last) break;
    }
  }
  return families;
}

Property localize(const Property& p) {
  if (!p.hereditary()) fail_domain("only hereditary properties can be localized");
  Property out;
  out.kind = PKind::Local;
  out.sub = {p};
  out.name = "local(" + p.name + ")";
  return out;
}

Property and_bounded_degree(const Property& pl, int d) {
  if (d < 0) fail_arg("degree bound must be non-negative");
  Property deg;
  deg.kind = PKind::BoundedDegree;
  deg.a = d;
  deg.declared_dp = 1;
  deg.name = "bounded-degree(" + std::to_string(d) + ")";
  Property out;
  out.kind = PKind::And;
  out.name = "and(" + pl.name + "," + deg.name + ")";
  out.sub = {pl, std::move(deg)};
  return out;
}

Property property_from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) fail_parse("property document must be a JSON object");
    std::string kind = j.value("kind", "");
    Property p;
    if (kind == "finite") {
      if (!j.contains("forbidden") || !j["forbidden"].is_array() || j["forbidden"].empty())
        fail_parse("finite property needs a non-empty \"forbidden\" array");
      std::vector<Graph> fam;
      for (const auto& e : j["forbidden"]) fam.push_back(parse_graph6(e.get<std::string>()));
      p = finite_property(j.value("name", "finite"), std::move(fam));
    } else if (kind == "builtin") {
      if (!j.contains("builtin")) fail_parse("builtin property needs a \"builtin\" field");
      p = parse_property(j["builtin"].get<std::string>());
      if (j.contains("name")) p.name = j["name"].get<std::string>();
    } else {
      fail_parse("property \"kind\" must be \"finite\" or \"builtin\"");
    }
    if (j.contains("declared_dp")) p.declared_dp = j["declared_dp"].get<int>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    fail_parse(std::string("bad property document: ") + e.what());
  }
}

std::string property_to_json(const Property& p) {
  nlohmann::json j;
  j["name"] = p.name;
  if (p.kind == PKind::Forbidden) {
    j["kind"] = "finite";
    nlohmann::json fam = nlohmann::json::array();
    for (const Graph& h : p.forbidden) fam.push_back(write_graph6(h));
    j["forbidden"] = fam;
  } else {
    // Non-finite kinds carry a re-parseable builtin expression as their name.
    j["kind"] = "builtin";
    j["builtin"] = p.name;
  }
  if (p.declared_dp) j["declared_dp"] = *p.declared_dp;
  return j.dump(2);
}

}  // namespace nq
