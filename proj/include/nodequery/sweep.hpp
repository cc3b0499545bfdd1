#pragma once
// Min-cost sweeps: enumerate isomorphism classes at a fixed n (generated
// for n <= 7, or from a graph6 corpus), keep the graphs where every vertex
// is relevant (optionally only vertex-transitive ones), solve each exactly,
// and report the minimum with certifier bounds for the arg-min graph.

#include <string>
#include <utility>
#include <vector>

#include "nodequery/bounds.hpp"
#include "nodequery/graph.hpp"
#include "nodequery/property.hpp"

namespace nq {

struct SweepConfig {
  Property prop;
  int n = 0;
  std::string corpus_path;  // empty: generated-all (n <= 7)
  bool transitive_only = false;
  int jobs = 1;
};

struct ReportRow {
  std::string property;
  int n = 0;
  bool transitive_only = false;
  int considered = 0;  // distinct isomorphism classes seen at this n
  int qualifying = 0;  // after relevance (and transitivity) filtering
  int min_cost = -1;   // -1 when no graph qualifies
  std::string argmin;  // graph6 of the first minimiser in canonical order
  std::vector<std::pair<Bound, Verification>> bounds;  // for the arg-min
};

// Deterministic for fixed inputs regardless of cfg.jobs.
ReportRow run_mincost(const SweepConfig& cfg);

std::string report_row_json(const ReportRow& row);
// Rows for the same property and n pair up into transitive vs unrestricted
// columns; both formats carry every row passed in.
std::string report_text(const std::vector<ReportRow>& rows);
std::string report_json(const std::vector<ReportRow>& rows);

}  // namespace nq
