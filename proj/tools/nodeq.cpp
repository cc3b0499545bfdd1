// nodeq: command-line driver over the shared C API. Exit codes: 0 ok,
// 1 library/domain error, 2 usage error.

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nodequery.h"

namespace {

struct CStr {
  char* p = nullptr;
  ~CStr() { nq_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GraphHandle {
  nq_graph* g = nullptr;
  ~GraphHandle() { nq_graph_free(g); }
};

struct PropHandle {
  nq_property* p = nullptr;
  ~PropHandle() { nq_property_free(p); }
};

int fail_lib() {
  std::cerr << "error: " << nq_last_error() << "\n";
  return 1;
}

int fail_msg(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 1;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_nonblank_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) return line;
  }
  return "";
}

bool looks_like_generator(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::islower(static_cast<unsigned char>(c)) && !std::isdigit(static_cast<unsigned char>(c)) &&
        c != ':' && c != ',' && c != '-' && c != '_')
      return false;
  return true;
}

// graph6 literal, @file, or generator spec such as "cycle:5".
int load_graph(const std::string& spec, GraphHandle& out) {
  if (!spec.empty() && spec[0] == '@') {
    auto text = read_file(spec.substr(1));
    if (!text) return fail_msg("cannot read graph file " + spec.substr(1));
    std::string line = first_nonblank_line(*text);
    if (line.empty()) return fail_msg("no graph6 line in " + spec.substr(1));
    if (nq_graph_parse_g6(line.c_str(), &out.g) != NQ_OK) return fail_lib();
    return 0;
  }
  if (looks_like_generator(spec)) {
    if (nq_graph_from_generator(spec.c_str(), &out.g) != NQ_OK) return fail_lib();
    return 0;
  }
  if (nq_graph_parse_g6(spec.c_str(), &out.g) != NQ_OK) return fail_lib();
  return 0;
}

int load_property(const std::string& spec, PropHandle& out) {
  if (!spec.empty() && spec[0] == '@') {
    auto text = read_file(spec.substr(1));
    if (!text) return fail_msg("cannot read property file " + spec.substr(1));
    if (nq_property_from_json(text->c_str(), &out.p) != NQ_OK) return fail_lib();
    return 0;
  }
  if (nq_property_parse(spec.c_str(), &out.p) != NQ_OK) return fail_lib();
  return 0;
}

bool parse_mask(const std::string& text, uint64_t& out) {
  try {
    size_t pos = 0;
    out = std::stoull(text, &pos, 0);
    return pos == text.size();
  } catch (...) {
    return false;
  }
}

uint64_t full_mask(int n) { return n >= 64 ? ~0ull : (1ull << n) - 1ull; }

bool write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

void print_bound_lines(const nlohmann::json& bounds) {
  for (const auto& b : bounds) {
    std::cout << "certifier " << b.value("certifier", std::string("?")) << " value "
              << b.value("value", -1);
    if (b.value("asymptotic_only", false)) std::cout << " asymptotic-only";
    if (b.contains("verification"))
      std::cout << " verdict " << b["verification"].value("verdict", std::string("?"));
    std::cout << "\n";
    if (b.contains("note")) std::cout << "  note: " << b["note"].get<std::string>() << "\n";
  }
}

struct MincostArgs {
  std::string property;
  int n = 0;
  std::string corpus;
  bool transitive_only = false;
  int jobs = 1;
  std::string out;
};

// --corpus wins; otherwise $NODEQ_CORPUS_DIR/graphs<n>.g6 when present.
std::string resolve_corpus(const std::string& flag, int n) {
  if (!flag.empty()) return flag;
  const char* dir = std::getenv("NODEQ_CORPUS_DIR");
  if (!dir || !*dir) return "";
  std::filesystem::path p = std::filesystem::path(dir) / ("graphs" + std::to_string(n) + ".g6");
  std::error_code ec;
  if (std::filesystem::exists(p, ec)) return p.string();
  return "";
}

int run_mincost_cmd(const MincostArgs& a) {
  PropHandle prop;
  if (int rc = load_property(a.property, prop)) return rc;
  std::string corpus = resolve_corpus(a.corpus, a.n);
  CStr json;
  if (nq_mincost(prop.p, a.n, corpus.empty() ? nullptr : corpus.c_str(),
                 a.transitive_only ? 1 : 0, a.jobs, &json.p) != NQ_OK)
    return fail_lib();
  nlohmann::json row = nlohmann::json::parse(json.str());
  int min_cost = row.value("min_cost", -1);
  if (min_cost < 0)
    std::cout << "min-cost none (no qualifying graph)\n";
  else
    std::cout << "min-cost " << min_cost << "\n"
              << "argmin " << row.value("argmin_graph6", std::string()) << "\n";
  std::cout << "classes " << row.value("classes_considered", 0) << " qualifying "
            << row.value("qualifying", 0) << "\n";
  if (row.contains("bounds")) print_bound_lines(row["bounds"]);
  if (!a.out.empty() && !write_output(a.out, json.str() + "\n"))
    return fail_msg("cannot write " + a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"node-query properties: exact costs, certified bounds, sweeps"};
  app.require_subcommand(1);

  std::string graph_spec, property_spec, subset_spec, certifier = "all", out_path;
  int n = 0, jobs = 1;
  bool as_json = false;
  std::vector<std::string> properties;

  CLI::App* cost = app.add_subcommand("cost", "exact decision-tree depth and an optimal strategy");
  cost->add_option("--graph", graph_spec)->required();
  cost->add_option("--property", property_spec)->required();
  cost->add_option("--out", out_path, "strategy file (default strategy.json)");

  CLI::App* eval = app.add_subcommand("eval", "evaluate the property on an induced subgraph");
  eval->add_option("--graph", graph_spec)->required();
  eval->add_option("--property", property_spec)->required();
  eval->add_option("--subset", subset_spec, "vertex bitmask, e.g. 0x1b (default: all)");

  CLI::App* bound = app.add_subcommand("bound", "lower-bound certifiers with verification");
  bound->add_option("--graph", graph_spec)->required();
  bound->add_option("--property", property_spec)->required();
  bound->add_option("--certifier", certifier, "certifier name or 'all'");
  bound->add_option("--out", out_path, "write full JSON records here");

  CLI::App* sunflower = app.add_subcommand("sunflower", "largest sunflower per witness size");
  sunflower->add_option("--graph", graph_spec)->required();
  sunflower->add_option("--property", property_spec)->required();
  sunflower->add_option("--out", out_path);

  CLI::App* construct = app.add_subcommand("construct", "clique-plus-petals instance on n vertices");
  construct->add_option("--property", property_spec)->required();
  construct->add_option("--n", n)->required();
  construct->add_option("--out", out_path, "manifest file (default instance.json)");

  CLI::App* transitive = app.add_subcommand("transitive", "vertex-transitivity check");
  transitive->add_option("--graph", graph_spec)->required();

  MincostArgs ma;
  CLI::App* mincost = app.add_subcommand("mincost", "minimum exact cost over relevant graphs at n");
  mincost->add_option("--property", ma.property)->required();
  mincost->add_option("--n", ma.n)->required();
  mincost->add_option("--corpus", ma.corpus, "graph6 file (default: generated, n <= 7)");
  mincost->add_flag("--transitive-only", ma.transitive_only);
  mincost->add_option("--jobs", ma.jobs);
  mincost->add_option("--out", ma.out, "write the JSON row here");

  CLI::App* report = app.add_subcommand("report", "min-cost table over properties x n");
  report->add_option("--property", properties, "repeatable")->required();
  report->add_option("--n", n, "largest size (rows run n=3..n)")->required();
  report->add_option("--jobs", jobs);
  report->add_flag("--json", as_json, "print JSON instead of the table");
  report->add_option("--out", out_path, "also write JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cost->parsed()) {
    GraphHandle g;
    PropHandle p;
    if (int rc = load_graph(graph_spec, g)) return rc;
    if (int rc = load_property(property_spec, p)) return rc;
    int depth = -1;
    CStr strategy;
    if (nq_exact_cost(g.g, p.p, &depth, &strategy.p) != NQ_OK) return fail_lib();
    std::string path = out_path.empty() ? "strategy.json" : out_path;
    if (!write_output(path, strategy.str() + "\n")) return fail_msg("cannot write " + path);
    std::cout << "cost " << depth << "\n" << "strategy " << path << "\n";
    return 0;
  }

  if (eval->parsed()) {
    GraphHandle g;
    PropHandle p;
    if (int rc = load_graph(graph_spec, g)) return rc;
    if (int rc = load_property(property_spec, p)) return rc;
    uint64_t subset = full_mask(nq_graph_n(g.g));
    if (!subset_spec.empty() && !parse_mask(subset_spec, subset))
      return fail_msg("bad --subset value: " + subset_spec);
    int value = 0;
    if (nq_eval(g.g, p.p, subset, &value) != NQ_OK) return fail_lib();
    std::cout << "satisfied " << value << "\n";
    return 0;
  }

  if (bound->parsed()) {
    GraphHandle g;
    PropHandle p;
    if (int rc = load_graph(graph_spec, g)) return rc;
    if (int rc = load_property(property_spec, p)) return rc;
    CStr json;
    if (nq_bounds(g.g, p.p, certifier.c_str(), 1, &json.p) != NQ_OK) return fail_lib();
    nlohmann::json records = nlohmann::json::parse(json.str());
    if (records.empty()) {
      std::cout << "no applicable certifier\n";
    } else {
      print_bound_lines(records);
    }
    if (!out_path.empty() && !write_output(out_path, json.str() + "\n"))
      return fail_msg("cannot write " + out_path);
    return 0;
  }

  if (sunflower->parsed()) {
    GraphHandle g;
    PropHandle p;
    if (int rc = load_graph(graph_spec, g)) return rc;
    if (int rc = load_property(property_spec, p)) return rc;
    CStr json;
    if (nq_sunflower(g.g, p.p, &json.p) != NQ_OK) return fail_lib();
    nlohmann::json doc = nlohmann::json::parse(json.str());
    for (const auto& fam : doc["families"]) {
      std::cout << "witness-size " << fam.value("witness_size", 0) << " family "
                << fam.value("family_size", 0) << " petals " << fam.value("petals", 0)
                << " core [";
      bool first = true;
      for (const auto& v : fam["core"]) {
        if (!first) std::cout << ",";
        std::cout << v.get<int>();
        first = false;
      }
      std::cout << "]\n";
    }
    if (!out_path.empty() && !write_output(out_path, json.str() + "\n"))
      return fail_msg("cannot write " + out_path);
    return 0;
  }

  if (construct->parsed()) {
    PropHandle p;
    if (int rc = load_property(property_spec, p)) return rc;
    CStr json;
    if (nq_construct(p.p, n, &json.p) != NQ_OK) return fail_lib();
    nlohmann::json doc = nlohmann::json::parse(json.str());
    std::cout << "graph " << doc.value("graph6", std::string()) << "\n"
              << "k " << doc.value("k", 0) << " padding " << doc.value("padding", 0)
              << " budget " << doc.value("query_budget", 0) << "\n";
    bool ok = true;
    if (doc.contains("validation")) {
      const auto& v = doc["validation"];
      ok = v.value("ok", false);
      std::cout << "valid " << (ok ? "yes" : "no");
      if (v.contains("exact_cost")) std::cout << " exact " << v["exact_cost"].get<int>();
      std::cout << "\n";
      if (!ok && v.contains("detail")) std::cout << "  " << v["detail"].get<std::string>() << "\n";
    }
    std::string path = out_path.empty() ? "instance.json" : out_path;
    if (!write_output(path, json.str() + "\n")) return fail_msg("cannot write " + path);
    std::cout << "manifest " << path << "\n";
    return ok ? 0 : 1;
  }

  if (transitive->parsed()) {
    GraphHandle g;
    if (int rc = load_graph(graph_spec, g)) return rc;
    int value = 0;
    if (nq_graph_is_vertex_transitive(g.g, &value) != NQ_OK) return fail_lib();
    std::cout << "transitive " << (value ? "yes" : "no") << "\n";
    return 0;
  }

  if (mincost->parsed()) return run_mincost_cmd(ma);

  if (report->parsed()) {
    std::vector<const char*> names;
    names.reserve(properties.size());
    for (const std::string& s : properties) names.push_back(s.c_str());
    CStr text, json;
    if (nq_report(names.data(), static_cast<int>(names.size()), n, jobs, &text.p, &json.p) != NQ_OK)
      return fail_lib();
    std::cout << (as_json ? json.str() : text.str());
    if (!out_path.empty() && !write_output(out_path, json.str() + "\n"))
      return fail_msg("cannot write " + out_path);
    return 0;
  }

  return 2;
}
