#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "json.hpp"
#include "nodequery/canonical.hpp"
#include "nodequery/generators.hpp"
#include "nodequery/graph.hpp"
#include "nodequery/graph6.hpp"
#include "nodequery/property.hpp"
#include "nodequery/solver.hpp"
#include "oracles.hpp"

using namespace nq;

TEST_CASE("solver equals exhaustive tree search on properties") {
  for (const char* name : {"emptiness", "triangle-free", "acyclic", "connected"})
    for (int n = 1; n <= 4; ++n)
      for (const Graph& g : enumerate_canonical(n)) {
        Property p = parse_property(name);
        CHECK(exact_cost(p, g).cost == oracle::tree_depth(n, truth_table(p, g)));
      }
}

TEST_CASE("solver equals exhaustive tree search on random tables") {
  std::mt19937_64 rng(211);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<uint8_t> truth(1u << n);
      for (auto& t : truth) t = rng() & 1;
      Solver s(n, truth, false);
      CHECK(s.cost() == oracle::tree_depth(n, truth));
    }
}

TEST_CASE("monotone shortcut changes nothing") {
  std::mt19937_64 rng(223);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      auto truth = oracle::random_monotone_table(n, rng);
      Solver fast(n, truth, true);
      Solver plain(n, truth, false);
      CHECK(fast.cost() == plain.cost());
      if (n <= 4) CHECK(fast.cost() == oracle::tree_depth(n, truth));
    }
}

TEST_CASE("known exact costs") {
  Property empt = parse_property("emptiness");
  CHECK(exact_cost(empt, complete_graph(2)).cost == 2);
  CHECK(exact_cost(empt, path_graph(3)).cost == 3);
  CHECK(exact_cost(empt, complete_graph(3)).cost == 3);
  CHECK(exact_cost(empt, path_graph(4)).cost == 3);  // split at an interior vertex
  CHECK(exact_cost(empt, cycle_graph(4)).cost == 4);
  CHECK(exact_cost(empt, parse_graph6("D?{")).cost == 5);  // star: read-once AND/OR
  CHECK(exact_cost(empt, cycle_graph(5)).cost == 5);
  CHECK(exact_cost(empt, Graph(3)).cost == 0);  // constant function

  CHECK(exact_cost(parse_property("acyclic"), cycle_graph(4)).cost == 4);
  CHECK(exact_cost(parse_property("triangle-free"), complete_graph(3)).cost == 3);

  // s-t connectivity on a star is the 3-variable AND
  CHECK(exact_cost(parse_property("st-connected(1,2)"), star_graph(5)).cost == 3);
  CHECK(exact_cost(parse_property("connected"), Graph(2)).cost == 2);
}

TEST_CASE("strategies replay correctly on every truth") {
  std::mt19937_64 rng(227);
  std::vector<Property> props = {parse_property("emptiness"), parse_property("acyclic"),
                                 parse_property("connected")};
  for (const Property& p : props)
    for (int trial = 0; trial < 12; ++trial) {
      int n = 2 + static_cast<int>(rng() % 4);
      Graph g = oracle::random_graph(n, rng);
      CostCertificate cert = exact_cost(p, g);
      CHECK(cert.strategy.depth() == cert.cost);
      auto table = truth_table(p, g);
      for (VertexSet truth = 0; truth < (1ull << n); ++truth) {
        Playout run = playout(cert.strategy, truth);
        CHECK(run.output == static_cast<bool>(table[truth]));
        CHECK(run.queries <= cert.cost);
      }
    }
}

TEST_CASE("adversary play achieves the minimax cost") {
  std::mt19937_64 rng(229);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Graph g = oracle::random_graph(n, rng);
    Property p = parse_property(trial % 2 ? "emptiness" : "connected");
    CostCertificate cert = exact_cost(p, g);
    CHECK(play_strategy_vs_adversary(cert) == cert.cost);
  }
}

TEST_CASE("strategy JSON shape") {
  CostCertificate cert = exact_cost(parse_property("emptiness"), complete_graph(2));
  auto doc = nlohmann::json::parse(strategy_to_json(cert.strategy));
  CHECK(doc["depth"] == 2);
  CHECK(doc.contains("root"));
  REQUIRE(doc["nodes"].is_array());
  int queries = 0, leaves = 0;
  for (const auto& node : doc["nodes"]) {
    if (node.contains("query")) ++queries;
    else ++leaves;
  }
  CHECK(queries >= 2);
  CHECK(leaves >= 3);
}

TEST_CASE("playout rejects malformed trees") {
  Strategy st;
  st.nodes.push_back({0, -1, 1, 1});
  st.nodes.push_back({0, -1, 2, 2});  // repeats the query
  st.nodes.push_back({-1, 1, -1, -1});
  st.root = 0;
  CHECK_THROWS_AS(playout(st, 0), Error);
}

TEST_CASE("solver caps") {
  Property p = parse_property("emptiness");
  CHECK_THROWS_AS(exact_cost(p, Graph(14)), Error);
  CHECK_NOTHROW(exact_cost(p, Graph(2)));
}

TEST_CASE("sensitivity and block sensitivity match definitions") {
  std::mt19937_64 rng(233);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<uint8_t> truth(1u << n);
      for (auto& t : truth) t = rng() & 1;
      CHECK(sensitivity_of(n, truth) == oracle::sensitivity(n, truth));
      CHECK(block_sensitivity_of(n, truth) == oracle::block_sensitivity(n, truth));
    }
}

TEST_CASE("depth >= bs >= s always; bs == s for monotone tables") {
  std::mt19937_64 rng(239);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<uint8_t> truth(1u << n);
      for (auto& t : truth) t = rng() & 1;
      int d = Solver(n, truth, false).cost();
      int bs = block_sensitivity_of(n, truth);
      int s = sensitivity_of(n, truth);
      CHECK(d >= bs);
      CHECK(bs >= s);
    }
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      auto truth = oracle::random_monotone_table(n, rng);
      CHECK(block_sensitivity_of(n, truth) == sensitivity_of(n, truth));
    }
}

TEST_CASE("property-level sensitivity wrappers") {
  Property empt = parse_property("emptiness");
  Graph star = parse_graph6("D?{");
  int s = sensitivity(empt, star);
  int bs = block_sensitivity(empt, star);
  CHECK(s == bs);  // monotone
  CHECK(bs <= exact_cost(empt, star).cost);
  CHECK(s == 4);  // all-leaves-present input: flipping the centre or any leaf
  CHECK_THROWS_AS(sensitivity(empt, Graph(13)), Error);
}

TEST_CASE("optimal strategies never touch irrelevant vertices") {
  long strategies = 0;
  for (const char* name : {"emptiness", "acyclic", "connected"}) {
    Property p = parse_property(name);
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : enumerate_canonical(n)) {
        VertexSet rel = relevant_vertices(p, g);
        CostCertificate cert = exact_cost(p, g);
        CHECK(cert.cost <= set_size(rel));
        for (const Strategy::Node& nd : cert.strategy.nodes)
          if (nd.query >= 0) CHECK(in_set(rel, nd.query));
        ++strategies;
      }
  }
  CHECK(strategies == 3 * 52);
}

TEST_CASE("restrictions obey the minimax recurrence") {
  // fixing one answer never raises the cost, and the best vertex attains
  // cost = 1 + max over its two restrictions
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<uint8_t> table = oracle::random_monotone_table(n, rng);
    if (rng() & 1)  // half the trials on arbitrary tables
      for (auto& b : table) b = static_cast<uint8_t>(rng() & 1);
    int d = Solver(n, table, false).cost();

    int best = n + 1;
    for (int v = 0; v < n; ++v) {
      int child_max = 0;
      for (int a = 0; a <= 1; ++a) {
        std::vector<uint8_t> sub(1ull << (n - 1));
        for (VertexSet t = 0; t < sub.size(); ++t) {
          VertexSet low = t & (bit(v) - 1);
          VertexSet s = low | ((t & ~(bit(v) - 1)) << 1) |
                        (a ? bit(v) : 0);
          sub[t] = table[s];
        }
        int dsub = Solver(n - 1, sub, false).cost();
        CHECK(dsub <= d);
        child_max = std::max(child_max, dsub);
      }
      best = std::min(best, 1 + child_max);
    }
    if (d > 0) CHECK(d == best);
  }
}

TEST_CASE("zero-vertex and constant conventions") {
  Graph g0(0);
  CHECK(exact_cost(parse_property("connected"), g0).cost == 0);
  CHECK(exact_cost(parse_property("emptiness"), g0).cost == 0);
}
