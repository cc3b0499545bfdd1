#include "nodequery/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "nodequery/canonical.hpp"
#include "nodequery/graph6.hpp"
#include "nodequery/invariants.hpp"
#include "nodequery/solver.hpp"

#include "json.hpp"

namespace nq {

namespace {

std::vector<Graph> corpus_classes(const std::string& path, int n) {
  std::vector<Graph> all = read_graph6_file(path);
  std::vector<std::pair<std::string, Graph>> keyed;
  for (const Graph& g : all) {
    if (g.n() != n) continue;
    // Dedup by isomorphism class where the relabeling sweep is affordable,
    // by literal encoding beyond that.
    std::string key = n <= 9 ? canonical_form(g) : write_graph6(g);
    keyed.emplace_back(std::move(key), g);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    out.push_back(keyed[i].second);
  }
  return out;
}

}  // namespace

ReportRow run_mincost(const SweepConfig& cfg) {
  if (cfg.n < 1) fail_arg("sweep needs n >= 1");
  if (cfg.n > 13) fail_cap("exact sweeps stop at n = 13");

  std::vector<Graph> classes;
  if (cfg.corpus_path.empty()) {
    if (cfg.n > 7)
      fail_cap("generated sweeps stop at n = 7; pass a corpus for larger n");
    classes = enumerate_canonical(cfg.n);
  } else {
    classes = corpus_classes(cfg.corpus_path, cfg.n);
  }

  ReportRow row;
  row.property = cfg.prop.name;
  row.n = cfg.n;
  row.transitive_only = cfg.transitive_only;
  row.considered = static_cast<int>(classes.size());

  std::vector<Graph> pool;
  for (const Graph& g : classes) {
    if (!graph_relevant(cfg.prop, g)) continue;
    if (cfg.transitive_only && !is_vertex_transitive(g)) continue;
    pool.push_back(g);
  }
  row.qualifying = static_cast<int>(pool.size());
  if (pool.empty()) return row;

  std::vector<int> costs(pool.size(), -1);
  int jobs = std::max(1, cfg.jobs);
  jobs = std::min<int>(jobs, static_cast<int>(pool.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < pool.size(); ++i)
      costs[i] = exact_cost(cfg.prop, pool[i]).cost;
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= pool.size()) return;
          try {
            costs[i] = exact_cost(cfg.prop, pool[i]).cost;
          } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!err) err = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& w : workers) w.join();
    if (err) std::rethrow_exception(err);
  }

  // First minimiser in canonical order, so output is order-stable.
  std::size_t arg = 0;
  for (std::size_t i = 1; i < pool.size(); ++i)
    if (costs[i] < costs[arg]) arg = i;
  row.min_cost = costs[arg];
  row.argmin = write_graph6(pool[arg]);

  for (Bound& b : run_certifiers("all", cfg.prop, pool[arg])) {
    Verification v = verify_bound(b, cfg.prop, pool[arg]);
    row.bounds.emplace_back(std::move(b), v);
  }
  return row;
}

std::string report_row_json(const ReportRow& row) {
  nlohmann::json j;
  j["schema"] = "nodequery.mincost/1";
  j["property"] = row.property;
  j["n"] = row.n;
  j["transitive_only"] = row.transitive_only;
  j["classes_considered"] = row.considered;
  j["qualifying"] = row.qualifying;
  j["min_cost"] = row.min_cost;
  if (row.min_cost >= 0) j["argmin_graph6"] = row.argmin;
  nlohmann::json bl = nlohmann::json::array();
  for (const auto& [b, v] : row.bounds)
    bl.push_back(nlohmann::json::parse(bound_to_json(b, &v)));
  j["bounds"] = bl;
  return j.dump(2);
}

namespace {

struct RowPair {
  const ReportRow* plain = nullptr;
  const ReportRow* transitive = nullptr;
};

std::string cost_cell(const ReportRow* r) {
  if (!r) return "-";
  if (r->min_cost < 0) return "none";
  return std::to_string(r->min_cost);
}

}  // namespace

std::string report_text(const std::vector<ReportRow>& rows) {
  std::map<std::pair<std::string, int>, RowPair> byKey;
  for (const ReportRow& r : rows) {
    RowPair& p = byKey[{r.property, r.n}];
    (r.transitive_only ? p.transitive : p.plain) = &r;
  }
  std::ostringstream out;
  out << "property                  n  min-cost  transitive  argmin\n";
  for (const auto& [key, p] : byKey) {
    const ReportRow* any = p.plain ? p.plain : p.transitive;
    std::ostringstream line;
    line << key.first;
    for (std::size_t i = key.first.size(); i < 24; ++i) line << ' ';
    line << ' ' << key.second << "  " << cost_cell(p.plain);
    std::string s = line.str();
    while (s.size() < 40) s.push_back(' ');
    s += cost_cell(p.transitive);
    while (s.size() < 52) s.push_back(' ');
    const ReportRow* src = p.plain && p.plain->min_cost >= 0 ? p.plain
                           : p.transitive && p.transitive->min_cost >= 0
                               ? p.transitive
                               : nullptr;
    s += src ? src->argmin : "-";
    out << s << '\n';
    (void)any;
  }
  return out.str();
}

std::string report_json(const std::vector<ReportRow>& rows) {
  nlohmann::json j;
  j["schema"] = "nodequery.report/1";
  nlohmann::json arr = nlohmann::json::array();
  for (const ReportRow& r : rows) arr.push_back(nlohmann::json::parse(report_row_json(r)));
  j["rows"] = arr;
  return j.dump(2);
}

}  // namespace nq
