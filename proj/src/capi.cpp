#include "nodequery.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

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

#include "json.hpp"

struct nq_graph {
  nq::Graph g;
};
struct nq_property {
  nq::Property p;
};

namespace {

thread_local std::string g_last_error;

nq_status set_error(nq_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

nq_status status_of(const nq::Error& e) {
  switch (e.kind) {
    case nq::Error::Argument: return NQ_ERR_ARGUMENT;
    case nq::Error::Cap: return NQ_ERR_CAP;
    case nq::Error::Parse: return NQ_ERR_PARSE;
    case nq::Error::Domain: return NQ_ERR_DOMAIN;
  }
  return NQ_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
nq_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return NQ_OK;
  } catch (const nq::Error& e) {
    return set_error(status_of(e), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(NQ_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return set_error(NQ_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nq_status require(bool ok, const char* what) {
  if (!ok) return set_error(NQ_ERR_ARGUMENT, what);
  return NQ_OK;
}

}  // namespace

extern "C" {

const char* nq_version(void) { return "0.1.0"; }

const char* nq_last_error(void) { return g_last_error.c_str(); }

void nq_string_free(char* s) { delete[] s; }

nq_status nq_graph_parse_g6(const char* text, nq_graph** out) {
  if (nq_status s = require(text && out, "null argument")) return s;
  return guarded([&] { *out = new nq_graph{nq::parse_graph6(text)}; });
}

nq_status nq_graph_from_generator(const char* spec, nq_graph** out) {
  if (nq_status s = require(spec && out, "null argument")) return s;
  return guarded([&] { *out = new nq_graph{nq::standard_graph(spec)}; });
}

int nq_graph_n(const nq_graph* g) { return g ? g->g.n() : -1; }

int nq_graph_m(const nq_graph* g) { return g ? g->g.m() : -1; }

nq_status nq_graph_write_g6(const nq_graph* g, char** out) {
  if (nq_status s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = copy_string(nq::write_graph6(g->g)); });
}

nq_status nq_graph_canonical_g6(const nq_graph* g, char** out) {
  if (nq_status s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = copy_string(nq::canonical_form(g->g)); });
}

nq_status nq_graph_is_vertex_transitive(const nq_graph* g, int* out) {
  if (nq_status s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = nq::is_vertex_transitive(g->g) ? 1 : 0; });
}

void nq_graph_free(nq_graph* g) { delete g; }

nq_status nq_property_parse(const char* name, nq_property** out) {
  if (nq_status s = require(name && out, "null argument")) return s;
  return guarded([&] { *out = new nq_property{nq::parse_property(name)}; });
}

nq_status nq_property_from_json(const char* json, nq_property** out) {
  if (nq_status s = require(json && out, "null argument")) return s;
  return guarded([&] { *out = new nq_property{nq::property_from_json(json)}; });
}

nq_status nq_property_name(const nq_property* p, char** out) {
  if (nq_status s = require(p && out, "null argument")) return s;
  return guarded([&] { *out = copy_string(p->p.name); });
}

nq_status nq_property_is_hereditary(const nq_property* p, int* out) {
  if (nq_status s = require(p && out, "null argument")) return s;
  return guarded([&] { *out = p->p.hereditary() ? 1 : 0; });
}

nq_status nq_property_min_degree(const nq_property* p, int* out) {
  if (nq_status s = require(p && out, "null argument")) return s;
  return guarded([&] { *out = nq::compute_dp(p->p); });
}

nq_status nq_property_clique_threshold(const nq_property* p, int* out) {
  if (nq_status s = require(p && out, "null argument")) return s;
  return guarded([&] { *out = nq::compute_cp(p->p); });
}

void nq_property_free(nq_property* p) { delete p; }

nq_status nq_eval(const nq_graph* g, const nq_property* p, uint64_t subset,
                  int* out) {
  if (nq_status s = require(g && p && out, "null argument")) return s;
  return guarded([&] { *out = nq::eval_subset(p->p, g->g, subset) ? 1 : 0; });
}

nq_status nq_relevant_vertices(const nq_graph* g, const nq_property* p,
                               uint64_t* out) {
  if (nq_status s = require(g && p && out, "null argument")) return s;
  return guarded([&] { *out = nq::relevant_vertices(p->p, g->g); });
}

nq_status nq_exact_cost(const nq_graph* g, const nq_property* p, int* out_cost,
                        char** strategy_json) {
  if (nq_status s = require(g && p && out_cost, "null argument")) return s;
  return guarded([&] {
    nq::CostCertificate cert = nq::exact_cost(p->p, g->g);
    *out_cost = cert.cost;
    if (strategy_json)
      *strategy_json = copy_string(nq::strategy_to_json(cert.strategy));
  });
}

nq_status nq_bounds(const nq_graph* g, const nq_property* p,
                    const char* certifier, int verify, char** out) {
  if (nq_status s = require(g && p && certifier && out, "null argument")) return s;
  return guarded([&] {
    std::vector<nq::Bound> bounds = nq::run_certifiers(certifier, p->p, g->g);
    nlohmann::json arr = nlohmann::json::array();
    for (const nq::Bound& b : bounds) {
      if (verify) {
        nq::Verification v = nq::verify_bound(b, p->p, g->g);
        arr.push_back(nlohmann::json::parse(nq::bound_to_json(b, &v)));
      } else {
        arr.push_back(nlohmann::json::parse(nq::bound_to_json(b, nullptr)));
      }
    }
    *out = copy_string(arr.dump(2));
  });
}

nq_status nq_sunflower(const nq_graph* g, const nq_property* p, char** out) {
  if (nq_status s = require(g && p && out, "null argument")) return s;
  return guarded([&] {
    if (!p->p.hereditary())
      nq::fail_domain("sunflower search needs a hereditary property");
    int k_max = std::min(8, g->g.n());
    auto families = nq::witness_families(p->p, g->g, k_max);
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 1; k <= k_max; ++k) {
      const auto& fam = families[k];
      if (fam.empty()) continue;
      nq::Sunflower sf = nq::max_sunflower(fam);
      nlohmann::json row;
      row["witness_size"] = k;
      row["family_size"] = fam.size();
      row["petals"] = sf.petals.size();
      row["core"] = nq::set_members(sf.core);
      nlohmann::json sets = nlohmann::json::array();
      for (nq::VertexSet s : sf.petals) sets.push_back(nq::set_members(s));
      row["sets"] = sets;
      rows.push_back(row);
    }
    nlohmann::json j;
    j["schema"] = "nodequery.sunflower/1";
    j["families"] = rows;
    *out = copy_string(j.dump(2));
  });
}

nq_status nq_construct(const nq_property* p, int n, char** out) {
  if (nq_status s = require(p && out, "null argument")) return s;
  return guarded([&] {
    nq::UpperBoundInstance inst = nq::build_upper_bound_graph(p->p, n);
    nq::ValidationReport rep = nq::validate_construction(inst);
    *out = copy_string(nq::instance_manifest_json(inst, &rep));
  });
}

nq_status nq_mincost(const nq_property* p, int n, const char* corpus_path,
                     int transitive_only, int jobs, char** out) {
  if (nq_status s = require(p && out, "null argument")) return s;
  return guarded([&] {
    nq::SweepConfig cfg;
    cfg.prop = p->p;
    cfg.n = n;
    cfg.corpus_path = corpus_path ? corpus_path : "";
    cfg.transitive_only = transitive_only != 0;
    cfg.jobs = jobs;
    nq::ReportRow row = nq::run_mincost(cfg);
    *out = copy_string(nq::report_row_json(row));
  });
}

nq_status nq_report(const char* const* properties, int nproperties, int n_max,
                    int jobs, char** out_text, char** out_json) {
  if (nq_status s = require(properties != nullptr, "null argument")) return s;
  if (nproperties <= 0)
    return set_error(NQ_ERR_ARGUMENT, "report needs at least one property");
  return guarded([&] {
    std::vector<nq::ReportRow> rows;
    for (int i = 0; i < nproperties; ++i) {
      nq::Property prop = nq::parse_property(properties[i]);
      for (int n = 3; n <= n_max; ++n) {
        for (bool trans : {false, true}) {
          nq::SweepConfig cfg;
          cfg.prop = prop;
          cfg.n = n;
          cfg.transitive_only = trans;
          cfg.jobs = jobs;
          rows.push_back(nq::run_mincost(cfg));
        }
      }
    }
    if (out_text) *out_text = copy_string(nq::report_text(rows));
    if (out_json) *out_json = copy_string(nq::report_json(rows));
  });
}

}  // extern "C"
