// Acceptance gate: ten checks, one verdict line each, summary at the end.
// Exit status 0 only if every check passes.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nodequery/bounds.hpp"
#include "nodequery/canonical.hpp"
#include "nodequery/construct.hpp"
#include "nodequery/generators.hpp"
#include "nodequery/graph.hpp"
#include "nodequery/graph6.hpp"
#include "nodequery/invariants.hpp"
#include "nodequery/property.hpp"
#include "nodequery/solver.hpp"
#include "nodequery/sweep.hpp"
#include "oracles.hpp"

using namespace nq;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const char* const kHereditary[] = {
    "emptiness",          "triangle-free",      "kt-free(4)",
    "pt-free(3)",         "ct-free(4)",         "acyclic",
    "bipartite",          "planar",             "k-colorable(2)",
    "k-colorable(3)",     "bounded-degree(1)",  "bounded-degree(2)",
    "local(emptiness)",
};

std::string fmt(const char* pattern, long a, long b = -1, long c = -1) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// 1. The solver's answer equals exhaustive search over every decision tree.
Outcome check_oracle_equivalence() {
  long pairs = 0;
  for (const char* name : {"emptiness", "triangle-free", "acyclic"}) {
    Property p = parse_property(name);
    for (int n = 1; n <= 4; ++n)
      for (const Graph& g : enumerate_canonical(n)) {
        int got = exact_cost(p, g).cost;
        int want = oracle::tree_depth(n, truth_table(p, g));
        if (got != want)
          return {false, "mismatch on " + write_graph6(g) + " under " + name};
        ++pairs;
      }
  }
  return {true, fmt("%ld graph/property pairs match exhaustive tree search", pairs)};
}

// 2. Dropping the symmetry restriction cuts the n=6 emptiness cost from 6 to 4.
Outcome check_symmetry_drop() {
  UpperBoundInstance inst = build_upper_bound_graph(parse_property("emptiness"), 6);
  ValidationReport rep = validate_construction(inst);
  if (!rep.ok() || !rep.exact_checked)
    return {false, "constructed instance failed validation: " + rep.detail};
  if (rep.exact > 4)
    return {false, fmt("constructed instance costs %ld, wanted <= 4", rep.exact)};

  SweepConfig cfg;
  cfg.prop = parse_property("emptiness");
  cfg.n = 6;
  ReportRow plain = run_mincost(cfg);
  cfg.transitive_only = true;
  ReportRow trans = run_mincost(cfg);
  if (plain.min_cost > 4)
    return {false, fmt("unrestricted minimum is %ld, wanted <= 4", plain.min_cost)};
  if (trans.min_cost != 6)
    return {false, fmt("transitive minimum is %ld, wanted exactly 6", trans.min_cost)};
  return {true, fmt("instance cost %ld, sweep minimum %ld, transitive minimum %ld",
                    rep.exact, plain.min_cost, trans.min_cost)};
}

// 3. Every relevant vertex-transitive graph up to n=6 is evasive for all
//    three benchmark properties.
Outcome check_transitive_evasive() {
  long checked = 0;
  std::string exceptions;
  for (const char* name : {"emptiness", "triangle-free", "acyclic"}) {
    Property p = parse_property(name);
    for (int n = 2; n <= 6; ++n)
      for (const Graph& g : enumerate_canonical(n)) {
        if (!graph_relevant(p, g) || !is_vertex_transitive(g)) continue;
        ++checked;
        int c = exact_cost(p, g).cost;
        if (c != n)
          exceptions += " " + write_graph6(g) + "/" + name + "=" +
                        std::to_string(c);
      }
  }
  if (!exceptions.empty()) return {false, "non-evasive:" + exceptions};
  return {true, fmt("%ld relevant transitive graphs, all cost exactly n", checked)};
}

// 4. Depth dominates block sensitivity, and block sensitivity collapses to
//    sensitivity, on every relevant graph for every hereditary builtin.
Outcome check_sensitivity_chain() {
  long checked = 0;
  for (const char* name : kHereditary) {
    Property p = parse_property(name);
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : enumerate_canonical(n)) {
        if (!graph_relevant(p, g)) continue;
        int d = exact_cost(p, g).cost;
        int bs = block_sensitivity(p, g);
        int s = sensitivity(p, g);
        if (d < bs || bs != s)
          return {false, "chain broken on " + write_graph6(g) + " under " +
                             name + ": D=" + std::to_string(d) +
                             " bs=" + std::to_string(bs) +
                             " s=" + std::to_string(s)};
        ++checked;
      }
  }
  return {true, fmt("D >= bs = s across %ld relevant graph/property pairs", checked)};
}

// 5. Every non-asymptotic certifier bound verifies: value at most the exact
//    cost, and the packaged answer rule replays to at least the value.
Outcome check_certifier_soundness() {
  std::vector<Property> props;
  for (const char* name : kHereditary) props.push_back(parse_property(name));
  props.push_back(parse_property("connected"));

  long bounds = 0, graphs = 0;
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : enumerate_canonical(n)) {
      bool counted = false;
      for (const Property& p : props) {
        if (!graph_relevant(p, g)) continue;
        counted = true;
        for (const Bound& b : run_certifiers("all", p, g)) {
          if (b.asymptotic_only) continue;
          Verification v = verify_bound(b, p, g);
          if (v.verdict != Verdict::Pass)
            return {false, b.certifier + " on " + write_graph6(g) + " under " +
                               p.name + ": " + v.detail};
          ++bounds;
        }
      }
      graphs += counted;
    }
  return {true, fmt("%ld bounds verified across %ld relevant graphs", bounds, graphs)};
}

// 6. Above the guarantee threshold the set-family search always returns a
//    structurally valid sunflower with the requested petal count.
Outcome check_sunflower_guarantee() {
  std::mt19937 rng(20240917);
  const int universe = 12;
  long families = 0;
  for (int k = 1; k <= 3; ++k) {
    std::vector<VertexSet> pool;
    for (VertexSet m = 0; m < (1u << universe); ++m)
      if (set_size(m) == k) pool.push_back(m);
    long factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= i;
    for (int p = 2; p <= 4; ++p) {
      long threshold = factorial;
      for (int i = 0; i < k; ++i) threshold *= p - 1;
      for (int trial = 0; trial < 500; ++trial) {
        std::shuffle(pool.begin(), pool.end(), rng);
        size_t m = std::min(pool.size(),
                            static_cast<size_t>(threshold) + 1 +
                                static_cast<size_t>(rng() % 32));
        if (m <= static_cast<size_t>(threshold))
          return {false, fmt("universe too small for k=%ld p=%ld", k, p)};
        std::vector<VertexSet> family(pool.begin(), pool.begin() + m);
        auto sf = find_sunflower(family, p);
        if (!sf || !sunflower_valid(*sf) ||
            sf->petals.size() < static_cast<size_t>(p))
          return {false, fmt("no sunflower for k=%ld p=%ld |F|=%ld", k, p, m)};
        for (VertexSet petal : sf->petals) {
          if (set_size(petal) != k ||
              std::find(family.begin(), family.end(), petal) == family.end())
            return {false, fmt("petal outside the family at k=%ld p=%ld", k, p)};
        }
        ++families;
      }
    }
  }
  return {true, fmt("%ld above-threshold families all produced valid sunflowers",
                    families)};
}

// 7. The query algorithm answers every truth correctly within its budget on
//    both reference instances.
Outcome check_algorithm_total() {
  for (const char* name : {"emptiness", "triangle-free"}) {
    int n = name[0] == 'e' ? 6 : 12;
    UpperBoundInstance inst = build_upper_bound_graph(parse_property(name), n);
    if (inst.padding != 0) return {false, "reference instance unexpectedly padded"};
    auto table = truth_table(inst.prop, inst.graph);
    int budget = nominal_budget(inst);
    for (VertexSet truth = 0; truth < (1ull << n); ++truth) {
      AlgoRun run = run_algorithm1(inst, truth);
      if (run.output != static_cast<bool>(table[truth]))
        return {false, fmt("wrong answer at truth %ld on the n=%ld instance",
                           static_cast<long>(truth), n)};
      if (run.queries > budget)
        return {false, fmt("budget exceeded at truth %ld on the n=%ld instance",
                           static_cast<long>(truth), n)};
    }
  }
  return {true, "4160 truths answered correctly within budgets 4 and 6"};
}

// 8. Forbidden-family degrees give the advertised cost exponents 1/(d+1).
Outcome check_exponents() {
  struct Row {
    const char* prop;
    int dp;
  } rows[] = {{"emptiness", 1}, {"triangle-free", 2}, {"kt-free(3)", 2},
              {"kt-free(4)", 3}, {"kt-free(5)", 4},   {"kt-free(6)", 5}};
  for (const Row& r : rows) {
    int dp = compute_dp(parse_property(r.prop));
    if (dp != r.dp)
      return {false, std::string(r.prop) + ": degree " + std::to_string(dp) +
                         ", wanted " + std::to_string(r.dp)};
  }
  return {true, "exponents 1/2, 1/3, 1/t confirmed from forbidden families"};
}

// 9. Two-endpoint connectivity on stars costs 3 regardless of size, and the
//    complement-matching certificate never exceeds the global-connectivity
//    minimum.
Outcome check_connectivity() {
  Property st = parse_property("st-connected(1,2)");
  for (int n : {3, 5, 7}) {
    int c = exact_cost(st, build_star_local_con(n, 1, 2)).cost;
    if (c != 3) return {false, fmt("star n=%ld costs %ld, wanted 3", n, c)};
  }
  SweepConfig cfg;
  cfg.prop = parse_property("connected");
  for (int n = 2; n <= 5; ++n) {
    cfg.n = n;
    ReportRow row = run_mincost(cfg);
    if (row.min_cost < 0) return {false, fmt("no relevant graph at n=%ld", n)};
    Bound b = connectivity_bound(parse_graph6(row.argmin));
    if (b.value > row.min_cost)
      return {false, fmt("certificate %ld exceeds minimum %ld at n=%ld",
                         b.value, row.min_cost, n)};
  }
  return {true, "stars cost 3; certificate <= minimum for n = 2..5"};
}

// 10. The checked-in corpus re-encodes byte for byte.
Outcome check_graph6_roundtrip() {
  std::ifstream in(std::string(NQ_SOURCE_DIR) + "/data/graphs7.g6");
  if (!in) return {false, "data/graphs7.g6 is missing"};
  long count = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (write_graph6(parse_graph6(line)) != line)
      return {false, "re-encoding changed line " + std::to_string(count + 1)};
    ++count;
  }
  if (count < 1000) return {false, fmt("corpus holds only %ld graphs", count)};
  return {true, fmt("%ld corpus graphs re-encode byte-identically", count)};
}

}  // namespace

int main() {
  struct Check {
    const char* title;
    std::function<Outcome()> run;
  } checks[] = {
      {"solver matches exhaustive tree search", check_oracle_equivalence},
      {"asymmetry beats the transitive minimum", check_symmetry_drop},
      {"relevant transitive graphs are evasive", check_transitive_evasive},
      {"depth / block sensitivity / sensitivity chain", check_sensitivity_chain},
      {"certifier bounds verify against the solver", check_certifier_soundness},
      {"sunflower search meets its guarantee", check_sunflower_guarantee},
      {"query algorithm correct on all truths", check_algorithm_total},
      {"forbidden-family degrees give the exponents", check_exponents},
      {"connectivity costs and certificates", check_connectivity},
      {"graph6 corpus round-trips byte-identically", check_graph6_roundtrip},
  };

  int passed = 0;
  const int total = static_cast<int>(std::size(checks));
  for (int i = 0; i < total; ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = checks[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("[%2d/%d] %s  %-48s %s (%.1fs)\n", i + 1, total,
                out.pass ? "PASS" : "FAIL", checks[i].title,
                out.detail.c_str(), secs);
    std::fflush(stdout);
    passed += out.pass;
  }
  std::printf("ACCEPTANCE: %d/%d PASS\n", passed, total);
  return passed == total ? 0 : 1;
}
