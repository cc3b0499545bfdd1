#pragma once
// Exact decision-tree cost of the subset function S -> [g[S] satisfies p]
// under vertex queries. States are ternary words (unknown / present /
// absent) memoized over 3^n entries, so n is capped at 13.

#include <memory>
#include <string>
#include <vector>

#include "nodequery/graph.hpp"
#include "nodequery/property.hpp"

namespace nq {

struct PartialAssignment {
  VertexSet present = 0;
  VertexSet absent = 0;
};

struct Strategy {
  struct Node {
    int query = -1;  // -1 for leaves
    int output = -1;
    int on_present = -1;
    int on_absent = -1;
  };
  std::vector<Node> nodes;
  int root = 0;

  int depth() const;
};

struct Playout {
  bool output = false;
  int queries = 0;
  VertexSet queried = 0;
};

// Walks the tree against the true subset; rejects repeated queries.
Playout playout(const Strategy& st, VertexSet truth);
// Queries until a leaf, answering "present iff v is in rule_present".
int replay_queries(const Strategy& st, VertexSet rule_present);
std::string strategy_to_json(const Strategy& st);

class Solver {
 public:
  Solver(const Property& p, const Graph& g);
  Solver(int n, std::vector<uint8_t> truth, bool monotone);

  int n() const { return n_; }
  int cost();
  Strategy optimal_strategy();
  // True = answer "present". Ties between child costs answer present.
  bool adversary_answer(const PartialAssignment& pa, int v);

 private:
  bool is_constant(int sigma, VertexSet present, VertexSet unknown);
  int8_t region_kind(int sigma, VertexSet present, VertexSet absent);
  int solve(int sigma, VertexSet present, VertexSet absent);
  int build_node(int sigma, VertexSet present, VertexSet absent, Strategy& st);

  int n_ = 0;
  VertexSet full_ = 0;
  bool monotone_ = false;
  std::vector<uint8_t> truth_;
  std::vector<int> pow3_;
  std::vector<int8_t> memo_;
  std::vector<int8_t> kind_;  // 0/1 constant, 2 mixed; non-monotone only
};

struct CostCertificate {
  int cost = 0;
  Strategy strategy;
  std::shared_ptr<Solver> solver;
};

CostCertificate exact_cost(const Property& p, const Graph& g);  // n <= 13

// Depth of the certificate's strategy when the solver itself answers
// adversarially; equals cost for a correct solver.
int play_strategy_vs_adversary(const CostCertificate& cert);

int sensitivity_of(int n, const std::vector<uint8_t>& truth);
int block_sensitivity_of(int n, const std::vector<uint8_t>& truth);
int sensitivity(const Property& p, const Graph& g);        // n <= 12
int block_sensitivity(const Property& p, const Graph& g);  // n <= 12

}  // namespace nq
