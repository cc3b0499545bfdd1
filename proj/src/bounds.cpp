#include "nodequery/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "json.hpp"
#include "nodequery/generators.hpp"
#include "nodequery/graph6.hpp"
#include "nodequery/invariants.hpp"

namespace nq {

namespace {

constexpr size_t kCompleteSearchLimit = 4000;

std::optional<Sunflower> er_search(const std::vector<VertexSet>& fam, int p) {
  std::vector<VertexSet> disjoint;
  VertexSet used = 0;
  for (VertexSet s : fam) {
    if (s & used) continue;
    disjoint.push_back(s);
    used |= s;
  }
  if (static_cast<int>(disjoint.size()) >= p) {
    Sunflower sf;
    sf.petals.assign(disjoint.begin(), disjoint.begin() + p);
    return sf;
  }
  if (fam.empty() || fam[0] == 0) return std::nullopt;
  int counts[kMaxN] = {0};
  for (VertexSet s : fam)
    for (int v : set_members(s)) ++counts[v];
  int x = 0;
  for (int v = 1; v < kMaxN; ++v)
    if (counts[v] > counts[x]) x = v;
  std::vector<VertexSet> sub;
  for (VertexSet s : fam)
    if (in_set(s, x)) sub.push_back(s & ~bit(x));
  std::optional<Sunflower> rec = er_search(sub, p);
  if (!rec) return std::nullopt;
  rec->core |= bit(x);
  for (VertexSet& pe : rec->petals) pe |= bit(x);
  return rec;
}

bool pack_disjoint(const std::vector<VertexSet>& red, int need, std::vector<VertexSet>& out) {
  std::function<bool(size_t, VertexSet, int)> go = [&](size_t i, VertexSet taken, int left) {
    if (left == 0) return true;
    if (red.size() - i < static_cast<size_t>(left)) return false;
    for (size_t j = i; j < red.size(); ++j) {
      if (red[j] & taken) continue;
      out.push_back(red[j]);
      if (go(j + 1, taken | red[j], left - 1)) return true;
      out.pop_back();
    }
    return false;
  };
  return go(0, 0, need);
}

std::optional<Sunflower> complete_search(const std::vector<VertexSet>& fam, int p) {
  // Any sunflower with >= 2 petals has the intersection of two members as
  // its core, so trying every pairwise intersection is exhaustive.
  std::vector<VertexSet> cores;
  for (size_t i = 0; i < fam.size(); ++i)
    for (size_t j = i + 1; j < fam.size(); ++j) cores.push_back(fam[i] & fam[j]);
  std::sort(cores.begin(), cores.end());
  cores.erase(std::unique(cores.begin(), cores.end()), cores.end());
  for (VertexSet core : cores) {
    std::vector<VertexSet> red;
    bool has_empty = false;
    for (VertexSet s : fam) {
      if ((s & core) != core) continue;
      VertexSet r = s & ~core;
      if (r) red.push_back(r);
      else has_empty = true;
    }
    int need = p - (has_empty ? 1 : 0);
    if (static_cast<int>(red.size()) < need) continue;
    std::vector<VertexSet> picked;
    if (!pack_disjoint(red, need, picked)) continue;
    Sunflower sf;
    sf.core = core;
    if (has_empty) sf.petals.push_back(core);
    for (VertexSet r : picked) sf.petals.push_back(r | core);
    return sf;
  }
  return std::nullopt;
}

int count_forced(const Graph& g, VertexSet c) {
  int forced = 0;
  for (int w : set_members(full_set(g.n()) & ~c))
    if (g.neighbors(w) & c) ++forced;
  return forced;
}

bool property_is(const Property& p, const Graph& single_forbidden) {
  return p.kind == PKind::Forbidden && p.forbidden.size() == 1 &&
         p.forbidden[0] == single_forbidden;
}

}  // namespace

bool sunflower_valid(const Sunflower& sf) {
  if (sf.petals.empty()) return false;
  for (size_t i = 0; i < sf.petals.size(); ++i) {
    if ((sf.petals[i] & sf.core) != sf.core) return false;
    for (size_t j = i + 1; j < sf.petals.size(); ++j) {
      if (sf.petals[i] == sf.petals[j]) return false;
      if ((sf.petals[i] & sf.petals[j]) != sf.core) return false;
    }
  }
  return true;
}

std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& family, int p) {
  if (p < 1) fail_arg("petal count must be positive");
  std::vector<VertexSet> fam = family;
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  if (fam.empty()) return std::nullopt;
  int k = set_size(fam[0]);
  if (k > 8) fail_cap("sunflower search is limited to sets of size <= 8");
  for (VertexSet s : fam)
    if (set_size(s) != k) fail_arg("sunflower search needs a uniform family");
  std::optional<Sunflower> out;
  if (p == 1) {
    Sunflower sf;
    sf.petals = {fam[0]};
    out = sf;
  } else {
    out = er_search(fam, p);
    if (!out && fam.size() <= kCompleteSearchLimit) out = complete_search(fam, p);
  }
  if (out && !sunflower_valid(*out)) fail_domain("internal: search produced an invalid sunflower");
  if (out && static_cast<int>(out->petals.size()) < p)
    fail_domain("internal: search produced too few petals");
  return out;
}

Sunflower max_sunflower(const std::vector<VertexSet>& family) {
  std::optional<Sunflower> best = find_sunflower(family, 1);
  if (!best) fail_arg("cannot search an empty family");
  for (int p = 2; p <= static_cast<int>(family.size()); ++p) {
    std::optional<Sunflower> nxt = find_sunflower(family, p);
    if (!nxt) break;
    best = std::move(nxt);
  }
  return *best;
}

VertexSet min_deletion_set(const Property& p, const Graph& g) {
  int n = g.n();
  VertexSet full = full_set(n);
  if (eval_subset(p, g, full)) return 0;
  for (int size = 1; size <= n; ++size) {
    VertexSet x = full_set(size);
    VertexSet last = x << (n - size);
    for (;;) {
      if (eval_subset(p, g, full & ~x)) return x;
      if (x == last) break;
      x = next_combination(x);
    }
  }
  fail_domain("property fails even on the empty subset");
}

Bound sunflower_forbidden_bound(const Property& p, const Graph& g) {
  if (p.kind != PKind::Forbidden || p.forbidden.size() != 1)
    fail_domain("sunflower-forbidden needs a single forbidden graph");
  const Graph& h = p.forbidden[0];
  int k = h.n();
  if (k > 6) fail_cap("sunflower-forbidden is limited to forbidden graphs on <= 6 vertices");
  if (!graph_relevant(p, g)) fail_domain("sunflower-forbidden needs every vertex relevant");
  int n = g.n();
  std::vector<VertexSet> family;
  if (n >= k) {
    VertexSet s = full_set(k);
    VertexSet last = s << (n - k);
    for (;;) {
      if (!eval_subset(p, g, s)) family.push_back(s);
      if (s == last) break;
      s = next_combination(s);
    }
  }
  // every vertex sits in some size-k witness, so k|F| covers V
  if (static_cast<int>(family.size()) * k < n)
    fail_domain("internal: witness family cannot cover the vertex set");
  Sunflower sf = max_sunflower(family);
  Bound b;
  b.certifier = "sunflower-forbidden";
  b.value = static_cast<int>(sf.petals.size());
  b.has_rule = true;
  b.rule_present = sf.core;
  b.sunflower = sf;
  b.note = std::to_string(sf.petals.size()) + " petals among " + std::to_string(family.size()) +
           " witnesses of size " + std::to_string(k);
  return b;
}

Bound general_hereditary_bound(const Property& p, const Graph& g) {
  if (!p.hereditary()) fail_domain("hereditary certifier needs a hereditary property");
  if (!graph_relevant(p, g)) fail_domain("hereditary certifier needs every vertex relevant");
  int n = g.n();
  int k_cap = std::min(8, n);
  std::vector<std::vector<VertexSet>> wf = witness_families(p, g, k_cap);
  int k = 0;
  for (int i = k_cap; i >= 1 && k == 0; --i)
    if (!wf[static_cast<size_t>(i)].empty()) k = i;
  if (k == 0) fail_domain("no minimal witness within the size cap");
  double threshold =
      n <= 15 ? 1.0 : std::log(static_cast<double>(n)) / (2.0 * std::log(std::log(n)));
  // largest family; its best sunflower is the alternative candidate
  size_t fi = 0;
  for (size_t i = 1; i < wf.size(); ++i)
    if (wf[i].size() > wf[fi].size()) fi = i;
  Sunflower sf = max_sunflower(wf[fi]);
  int petals = static_cast<int>(sf.petals.size());
  Bound b;
  b.certifier = "hereditary";
  if (petals > k) {
    b.value = petals;
    b.has_rule = true;
    b.rule_present = sf.core;
    b.sunflower = sf;
    b.note = "sunflower with " + std::to_string(petals) + " petals in the size-" +
             std::to_string(fi) + " family";
  } else {
    b.value = k;
    b.has_rule = true;
    b.rule_present = wf[static_cast<size_t>(k)][0];
    b.sets = {b.rule_present};
    b.note = "forced minimal witness of size " + std::to_string(k);
  }
  b.note += " (threshold " + std::to_string(threshold) + ")";
  return b;
}

Bound fvs_density_bound(const Graph& g) {
  int n = g.n(), m = g.m(), dmax = g.max_degree();
  Bound b;
  b.certifier = "fvs-density";
  b.value = m > n ? (m - n + dmax - 1) / dmax : 0;
  b.note = "ceil((m-n)/d_max), m=" + std::to_string(m) + " n=" + std::to_string(n) +
           " d_max=" + std::to_string(dmax);
  if (b.value > 0) {
    VertexSet d = min_feedback_vertex_set(g);
    b.has_rule = true;
    b.rule_present = full_set(n) & ~d;
    b.sets = {d};
    b.note += ", min FVS size " + std::to_string(set_size(d));
  }
  return b;
}

Bound planar_density_bound(const Graph& g) {
  int n = g.n();
  if (n < 3) fail_arg("planar density bound needs n >= 3");
  int m = g.m(), dmax = g.max_degree();
  int excess = m - (3 * n - 6);
  Bound b;
  b.certifier = "planar-density";
  b.value = excess > 0 ? (excess + dmax - 1) / dmax : 0;
  b.note = "ceil((m-3n+6)/d_max), m=" + std::to_string(m) + " n=" + std::to_string(n) +
           " d_max=" + std::to_string(dmax);
  if (b.value > 0) {
    VertexSet d = min_deletion_set(parse_property("planar"), g);
    b.has_rule = true;
    b.rule_present = full_set(n) & ~d;
    b.sets = {d};
    b.note += ", min planarizing set size " + std::to_string(set_size(d));
  }
  return b;
}

Bound chromatic_independence_bound(const Graph& g) {
  int n = g.n();
  if (n == 0) fail_domain("chromatic bound needs a non-empty graph");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) fail_domain("chromatic bound forbids isolated vertices");
  std::vector<VertexSet> classes = optimal_coloring(g);
  int chi = static_cast<int>(classes.size());
  Bound b;
  b.certifier = "chromatic";
  b.value = (n + chi - 1) / chi;
  VertexSet cmax = max_independent_set(g);
  VertexSet winner = cmax;
  int best = count_forced(g, cmax);
  bool from_class = false;
  for (VertexSet c : classes) {
    int f = count_forced(g, c);
    if (f > best) {
      best = f;
      winner = c;
      from_class = true;
    }
  }
  b.has_rule = true;
  b.rule_present = winner;
  b.sets.push_back(winner);
  for (VertexSet c : classes) b.sets.push_back(c);
  b.note = std::string(from_class ? "color class" : "maximum independent set") + " forcing " +
           std::to_string(best) + " of ceil(" + std::to_string(n) + "/" + std::to_string(chi) +
           ")";
  return b;
}

Bound triangle_freeness_bound(const Graph& g) {
  TriangleSupport ts = triangle_support(g);
  int n = g.n();
  VertexSet covered = 0;
  for (VertexSet t : ts.triangles) covered |= t;
  if (covered != full_set(n)) fail_domain("triangle certifier needs every vertex in a triangle");

  int va = ts.d2_max;             // apexes over the best edge
  VertexSet hs = min_hitting_set(ts.triangles, n);
  int vb = set_size(hs);          // minimum triangle hitting set

  // link of the vertex in the most triangles, isolated link vertices dropped
  std::vector<int> nbrs = set_members(g.neighbors(ts.d1_vertex));
  Graph link0 = g.induced(g.neighbors(ts.d1_vertex));
  VertexSet keep = 0;
  for (int i = 0; i < link0.n(); ++i)
    if (link0.degree(i) > 0) keep |= bit(i);
  std::vector<int> kept = set_members(keep);
  Graph link = link0.induced(keep);
  Bound inner = chromatic_independence_bound(link);
  int vc = inner.value;
  VertexSet rule_c = bit(ts.d1_vertex);
  for (int j : set_members(inner.rule_present)) rule_c |= bit(nbrs[static_cast<size_t>(kept[static_cast<size_t>(j)])]);

  Bound b;
  b.certifier = "triangle";
  b.value = std::max({va, vb, vc});
  b.has_rule = true;
  if (b.value == va) {
    b.rule_present = bit(ts.d2_u) | bit(ts.d2_v);
    b.note = "apex count " + std::to_string(va) + " over edge (" + std::to_string(ts.d2_u) +
             "," + std::to_string(ts.d2_v) + ")";
  } else if (b.value == vb) {
    b.rule_present = full_set(n) & ~hs;
    b.sets = {hs};
    b.note = "minimum triangle hitting set of size " + std::to_string(vb);
  } else {
    b.rule_present = rule_c;
    b.note = "emptiness bound " + std::to_string(vc) + " on the link of vertex " +
             std::to_string(ts.d1_vertex);
  }
  return b;
}

Bound bounded_degree_bound(const Graph& g, int d) {
  if (d < 0) fail_arg("degree cap must be non-negative");
  int n = g.n();
  for (int v = 0; v < n; ++v) {
    bool in_star = g.degree(v) > d;
    for (int u : set_members(g.neighbors(v)))
      in_star = in_star || g.degree(u) > d;
    if (!in_star) fail_domain("degree certifier needs every vertex in a (d+1)-star");
  }
  int cstar = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(cstar)) cstar = v;
  int va = g.degree(cstar) - d;
  // rule: centre plus d of its neighbours present; remaining neighbours
  // are each sensitive
  VertexSet rule_a = bit(cstar);
  VertexSet nb = g.neighbors(cstar);
  for (int i = 0; i < d && nb; ++i) {
    rule_a |= bit(lowest(nb));
    nb &= nb - 1;
  }
  Property deg = parse_property("bounded-degree(" + std::to_string(d) + ")");
  VertexSet x = min_deletion_set(deg, g);
  int vb = set_size(x);
  Bound b;
  b.certifier = "bounded-degree";
  if (va >= vb) {
    b.value = va;
    b.has_rule = true;
    b.rule_present = rule_a;
    b.note = "degree excess " + std::to_string(va) + " at vertex " + std::to_string(cstar);
  } else {
    b.value = vb;
    b.has_rule = true;
    b.rule_present = full_set(n) & ~x;
    b.sets = {x};
    b.note = "minimum (d+1)-star hitting set of size " + std::to_string(vb);
  }
  return b;
}

Bound local_property_bound(const Property& pl, const Graph& g, int d) {
  if (pl.kind != PKind::Local) fail_domain("local certifier needs a localized property");
  Property conj = and_bounded_degree(pl, d);
  if (!graph_relevant(conj, g))
    fail_domain("local certifier needs every vertex relevant for the conjunction");
  int n = g.n();
  int dmax = g.max_degree();
  int va = dmax > d ? dmax - d : 0;
  int cstar = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(cstar)) cstar = v;
  VertexSet x = min_deletion_set(conj, g);
  int vb = set_size(x);
  Bound b;
  b.certifier = "local";
  if (va >= vb) {
    b.value = va;
    b.has_rule = true;
    // centre alone: completions adding d+1 of its unqueried neighbours
    // violate the degree cap regardless of the local part
    b.rule_present = bit(cstar);
    b.note = "degree excess " + std::to_string(va) + " at vertex " + std::to_string(cstar);
  } else {
    b.value = vb;
    b.has_rule = true;
    b.rule_present = full_set(n) & ~x;
    b.sets = {x};
    b.note = "minimum witness/star hitting set of size " + std::to_string(vb);
  }
  return b;
}

Bound mon_trans_indicator(const Property& p, const Graph& g) {
  if (!p.hereditary()) fail_domain("mon-trans indicator needs a hereditary property");
  if (!is_vertex_transitive(g)) fail_domain("mon-trans indicator needs a vertex-transitive graph");
  int n = g.n();
  int k = 0;
  for (int size = 1; size <= n && k == 0; ++size) {
    VertexSet s = full_set(size);
    VertexSet last = s << (n - size);
    for (;;) {
      if (!eval_subset(p, g, s)) {
        k = size;
        break;
      }
      if (s == last) break;
      s = next_combination(s);
    }
  }
  if (k == 0) fail_domain("property never fails on this graph");
  Bound b;
  b.certifier = "mon-trans";
  b.value = n / (k * k);
  b.asymptotic_only = true;
  b.note = "n/k^2 with minimum witness size k=" + std::to_string(k);
  return b;
}

Bound connectivity_bound(const Graph& g) {
  int n = g.n();
  if (n < 2 || g.m() == n * (n - 1) / 2)
    fail_domain("connectivity is constant on this graph");
  Graph cg = g.complement();
  std::vector<std::pair<int, int>> matching = max_matching_edges(cg);
  int va = static_cast<int>(matching.size());
  int vb = 0, bu = -1, bw = -1;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      if (g.edge(u, w)) continue;
      int c = set_size(g.neighbors(u) & g.neighbors(w));
      if (c > vb) {
        vb = c;
        bu = u;
        bw = w;
      }
    }
  Bound b;
  b.certifier = "connectivity";
  if (va >= vb) {
    b.value = va;
    b.has_rule = true;
    b.rule_present = 0;  // all absent: the survivors must form a clique
    for (auto [u, w] : matching) b.sets.push_back(bit(u) | bit(w));
    b.note = "complement matching of size " + std::to_string(va);
  } else {
    b.value = vb;
    b.has_rule = true;
    b.rule_present = bit(bu) | bit(bw);
    b.sets = {g.neighbors(bu) & g.neighbors(bw)};
    b.note = std::to_string(vb) + " common neighbours of the non-adjacent pair (" +
             std::to_string(bu) + "," + std::to_string(bw) + ")";
  }
  return b;
}

Verification verify_bound(const Bound& b, const Property& p, const Graph& g) {
  Verification v;
  if (b.asymptotic_only) {
    v.detail = "asymptotic indicator, excluded from soundness";
    return v;
  }
  if (g.n() > 13) {
    v.detail = "beyond the exact solver cap";
    return v;
  }
  CostCertificate cert = exact_cost(p, g);
  v.exact = cert.cost;
  bool ok;
  if (b.lower) {
    ok = b.value <= cert.cost;
    if (!ok) {
      v.detail = "value exceeds exact cost";
    } else if (b.has_rule && b.value > 0) {
      v.replayed = replay_queries(cert.strategy, b.rule_present);
      ok = v.replayed >= b.value;
      v.detail = ok ? "replay forced " + std::to_string(v.replayed) + " queries"
                    : "replay forced only " + std::to_string(v.replayed) + " queries";
    } else {
      v.detail = "value within exact cost";
    }
  } else {
    ok = cert.cost <= b.value;
    v.detail = ok ? "exact cost within the claimed budget" : "exact cost exceeds the claim";
  }
  v.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return v;
}

std::vector<Bound> run_certifiers(const std::string& name, const Property& p, const Graph& g) {
  bool single = p.kind == PKind::Forbidden && p.forbidden.size() == 1;
  bool conj_local = p.kind == PKind::And && p.sub.size() == 2 &&
                    p.sub[0].kind == PKind::Local && p.sub[1].kind == PKind::BoundedDegree;
  struct Entry {
    const char* name;
    std::function<bool()> applicable;
    std::function<Bound()> run;
  };
  const std::vector<Entry> entries = {
      {"sunflower-forbidden", [&] { return single && p.forbidden[0].n() <= 6; },
       [&] { return sunflower_forbidden_bound(p, g); }},
      {"hereditary", [&] { return p.hereditary(); },
       [&] { return general_hereditary_bound(p, g); }},
      {"fvs-density", [&] { return p.kind == PKind::Acyclic; },
       [&] { return fvs_density_bound(g); }},
      {"planar-density", [&] { return p.kind == PKind::Planar; },
       [&] { return planar_density_bound(g); }},
      {"chromatic", [&] { return property_is(p, complete_graph(2)); },
       [&] { return chromatic_independence_bound(g); }},
      {"triangle", [&] { return property_is(p, complete_graph(3)); },
       [&] { return triangle_freeness_bound(g); }},
      {"bounded-degree", [&] { return p.kind == PKind::BoundedDegree; },
       [&] { return bounded_degree_bound(g, p.a); }},
      {"local", [&] { return conj_local; },
       [&] { return local_property_bound(p.sub[0], g, p.sub[1].a); }},
      {"mon-trans",
       [&] { return p.hereditary() && g.n() <= 10 && is_vertex_transitive(g); },
       [&] { return mon_trans_indicator(p, g); }},
      {"connectivity", [&] { return p.kind == PKind::Connected; },
       [&] { return connectivity_bound(g); }},
  };
  std::vector<Bound> out;
  if (name == "all") {
    for (const Entry& e : entries) {
      if (!e.applicable()) continue;
      try {
        out.push_back(e.run());
      } catch (const Error&) {
        // precondition or cap rejected this instance
      }
    }
    return out;
  }
  for (const Entry& e : entries) {
    if (name != e.name) continue;
    if (!e.applicable())
      fail_domain("certifier '" + name + "' does not apply to property '" + p.name + "'");
    out.push_back(e.run());
    return out;
  }
  fail_arg("unknown certifier '" + name + "'");
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unverifiable: return "unverifiable";
  }
  return "unverifiable";
}

std::string bound_to_json(const Bound& b, const Verification* v) {
  nlohmann::json j;
  j["certifier"] = b.certifier;
  j["value"] = b.value;
  j["direction"] = b.lower ? "lower" : "upper";
  j["asymptotic_only"] = b.asymptotic_only;
  j["note"] = b.note;
  if (b.has_rule) j["rule_present"] = set_members(b.rule_present);
  if (!b.sets.empty()) {
    nlohmann::json sets = nlohmann::json::array();
    for (VertexSet s : b.sets) sets.push_back(set_members(s));
    j["sets"] = sets;
  }
  if (b.sunflower) {
    nlohmann::json sf;
    sf["core"] = set_members(b.sunflower->core);
    nlohmann::json petals = nlohmann::json::array();
    for (VertexSet pe : b.sunflower->petals) petals.push_back(set_members(pe));
    sf["petals"] = petals;
    j["sunflower"] = sf;
  }
  if (v) {
    nlohmann::json jv;
    jv["verdict"] = verdict_name(v->verdict);
    if (v->exact >= 0) jv["exact_cost"] = v->exact;
    if (v->replayed >= 0) jv["replayed_queries"] = v->replayed;
    jv["detail"] = v->detail;
    j["verification"] = jv;
  }
  return j.dump(2);
}

}  // namespace nq
