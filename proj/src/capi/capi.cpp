#include "qlap.h"

#include <cstring>
#include <new>
#include <string>

#include "core/bounds.hpp"
#include "core/families.hpp"
#include "core/graph.hpp"
#include "core/graph6.hpp"
#include "core/jacobi.hpp"
#include "core/scan.hpp"
#include "core/search.hpp"
#include "json.hpp"

struct qlap_graph {
  qlap::Graph g;
};

namespace {

thread_local std::string t_last_error;

void set_error(const std::string& msg) { t_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
qlap_status guarded(F&& fn) {
  try {
    t_last_error.clear();
    return fn();
  } catch (const qlap::Graph6Error& e) {
    set_error(e.what());
    return QLAP_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return QLAP_ERR_INVALID_ARG;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return QLAP_ERR_INVALID_ARG;
  } catch (const std::ios_base::failure& e) {
    set_error(e.what());
    return QLAP_ERR_IO;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    std::string_view what = e.what();
    if (what.find("file") != std::string_view::npos) return QLAP_ERR_IO;
    return QLAP_ERR_NUMERIC;
  } catch (const std::exception& e) {
    set_error(e.what());
    return QLAP_ERR_INTERNAL;
  }
}

qlap_status require(bool ok, const char* msg) {
  if (ok) return QLAP_OK;
  set_error(msg);
  return QLAP_ERR_INVALID_ARG;
}

}  // namespace

extern "C" {

const char* qlap_version(void) { return "0.1.0"; }

const char* qlap_status_name(qlap_status status) {
  switch (status) {
    case QLAP_OK: return "ok";
    case QLAP_ERR_PARSE: return "parse error";
    case QLAP_ERR_INVALID_ARG: return "invalid argument";
    case QLAP_ERR_NUMERIC: return "numeric failure";
    case QLAP_ERR_IO: return "io error";
    case QLAP_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* qlap_last_error(void) { return t_last_error.c_str(); }

void qlap_string_free(char* s) { std::free(s); }

qlap_status qlap_graph_from_graph6(const char* line, qlap_graph** out) {
  if (auto st = require(line && out, "null argument")) return st;
  return guarded([&] {
    *out = new qlap_graph{qlap::parse_graph6(line)};
    return QLAP_OK;
  });
}

qlap_status qlap_graph_from_family(const char* spec, qlap_graph** out) {
  if (auto st = require(spec && out, "null argument")) return st;
  return guarded([&] {
    *out = new qlap_graph{qlap::construct_family(spec)};
    return QLAP_OK;
  });
}

void qlap_graph_free(qlap_graph* g) { delete g; }

int qlap_graph_order(const qlap_graph* g) { return g ? g->g.order() : 0; }

long long qlap_graph_edges(const qlap_graph* g) { return g ? g->g.edge_count() : 0; }

qlap_status qlap_graph_complement(const qlap_graph* g, qlap_graph** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] {
    *out = new qlap_graph{g->g.complement()};
    return QLAP_OK;
  });
}

qlap_status qlap_graph_to_graph6(const qlap_graph* g, char** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(qlap::write_graph6(g->g));
    return QLAP_OK;
  });
}

qlap_status qlap_spectrum(const qlap_graph* g, qlap_matrix_kind kind, double* values) {
  if (auto st = require(g && values, "null argument")) return st;
  if (auto st = require(kind >= QLAP_MATRIX_ADJACENCY && kind <= QLAP_MATRIX_SIGNLESS_LAPLACIAN,
                        "unknown matrix kind"))
    return st;
  return guarded([&] {
    auto spec = qlap::spectrum_of(g->g, static_cast<qlap::MatrixKind>(kind));
    if (!spec.values.empty())
      std::memcpy(values, spec.values.data(), spec.values.size() * sizeof(double));
    return QLAP_OK;
  });
}

qlap_status qlap_key_values(const qlap_graph* g, double out[4]) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] {
    auto kv = qlap::key_values(g->g);
    out[0] = kv.mu1;
    out[1] = kv.mu_n1;
    out[2] = kv.q1;
    out[3] = kv.spread;
    return QLAP_OK;
  });
}

const char* qlap_bound_ops(void) {
  static const std::string ops = [] {
    std::string s;
    for (qlap::BoundId id : qlap::all_bounds()) {
      if (!s.empty()) s += ",";
      s += qlap::bound_name(id);
    }
    return s;
  }();
  return ops.c_str();
}

qlap_status qlap_bound_json(const qlap_graph* g, const char* bound_op, double epsilon,
                            char** json_out) {
  if (auto st = require(g && bound_op && json_out, "null argument")) return st;
  return guarded([&] {
    auto id = qlap::bound_from_name(bound_op);
    if (!id) {
      set_error(std::string("unknown bound op '") + bound_op + "'; known: " + qlap_bound_ops());
      return QLAP_ERR_INVALID_ARG;
    }
    double eps = epsilon > 0 ? epsilon : qlap::kDefaultEpsilon;
    auto ctx = qlap::GraphContext::make(g->g);
    std::string all;
    std::string g6 = qlap::write_graph6(g->g);
    for (const auto& r : qlap::eval_bound(ctx, *id, eps)) {
      if (!all.empty()) all += "\n";
      all += r.to_json_line(g6);
    }
    *json_out = dup_string(all);
    return QLAP_OK;
  });
}

qlap_status qlap_scan(const char* config_json, qlap_scan_sink sink, void* user,
                      char** summary_json_out) {
  if (auto st = require(config_json, "null argument")) return st;
  return guarded([&] {
    nlohmann::json cfg_json = nlohmann::json::parse(config_json, nullptr, false);
    if (cfg_json.is_discarded()) {
      set_error("scan config is not valid JSON");
      return QLAP_ERR_PARSE;
    }
    qlap::ScanConfig cfg;
    const auto& src = cfg_json.at("source");
    std::string kind = src.at("kind").get<std::string>();
    if (kind == "exhaustive") {
      cfg.source = qlap::ScanConfig::Source::Exhaustive;
      cfg.n = src.at("n").get<int>();
    } else if (kind == "file") {
      cfg.source = qlap::ScanConfig::Source::File;
      cfg.path = src.at("path").get<std::string>();
    } else if (kind == "family") {
      cfg.source = qlap::ScanConfig::Source::Family;
      cfg.family = src.at("spec").get<std::string>();
    } else {
      set_error("unknown scan source kind '" + kind + "'");
      return QLAP_ERR_INVALID_ARG;
    }
    for (const auto& b : cfg_json.at("bounds")) {
      std::string name = b.get<std::string>();
      if (name == "all") {
        cfg.bounds = qlap::all_bounds();
        break;
      }
      auto id = qlap::bound_from_name(name);
      if (!id) {
        set_error("unknown bound op '" + name + "'; known: " + qlap_bound_ops());
        return QLAP_ERR_INVALID_ARG;
      }
      cfg.bounds.push_back(*id);
    }
    std::string emit = cfg_json.value("emit", "violations");
    if (emit == "violations")
      cfg.emit = qlap::ScanConfig::Emit::Violations;
    else if (emit == "equalities")
      cfg.emit = qlap::ScanConfig::Emit::Equalities;
    else if (emit == "all")
      cfg.emit = qlap::ScanConfig::Emit::All;
    else {
      set_error("unknown emit mode '" + emit + "'");
      return QLAP_ERR_INVALID_ARG;
    }
    if (cfg_json.contains("emit_bounds"))
      for (const auto& b : cfg_json["emit_bounds"])
        cfg.emit_bounds.push_back(b.get<std::string>());
    cfg.jobs = cfg_json.value("jobs", 1);
    cfg.epsilon = cfg_json.value("epsilon", qlap::kDefaultEpsilon);

    auto summary = qlap::run_scan(cfg, [&](std::string_view line) {
      if (sink) {
        std::string owned(line);
        sink(owned.c_str(), user);
      }
    });

    if (summary_json_out) {
      nlohmann::json js;
      js["graphs"] = summary.graphs;
      js["proved_violations"] = summary.proved_violations;
      js["conjecture_violations"] = summary.conjecture_violations;
      nlohmann::json per = nlohmann::json::object();
      for (const auto& [id, c] : summary.per_bound) {
        per[id] = {{"checked", c.checked},
                   {"held", c.held},
                   {"equality", c.equality},
                   {"violated", c.violated},
                   {"not_applicable", c.not_applicable}};
      }
      js["per_bound"] = per;
      *summary_json_out = dup_string(js.dump());
    }
    return QLAP_OK;
  });
}

qlap_status qlap_ratio_point(int n, int* best_k, double* product, double* ratio) {
  if (auto st = require(n >= 6, "ratio point needs n >= 6")) return st;
  return guarded([&] {
    auto p = qlap::ratio_point(n);
    if (best_k) *best_k = p.best_k;
    if (product) *product = p.product;
    if (ratio) *ratio = p.ratio;
    return QLAP_OK;
  });
}

qlap_status qlap_hn_point(int n, int* k, double* q1, double* q1_bar, double* product) {
  return guarded([&] {
    auto h = qlap::hn_point(n);
    if (k) *k = h.k;
    if (q1) *q1 = h.q1;
    if (q1_bar) *q1_bar = h.q1_bar;
    if (product) *product = h.product;
    return QLAP_OK;
  });
}

double qlap_ratio_limit_constant(void) { return qlap::ratio_limit_constant(); }

qlap_status qlap_search(int n, long long iterations, unsigned long long seed,
                        char** best_graph6, double* product) {
  return guarded([&] {
    auto res = qlap::search_max_q_product(n, iterations, seed);
    if (best_graph6) *best_graph6 = dup_string(res.graph6);
    if (product) *product = res.product;
    return QLAP_OK;
  });
}

}  // extern "C"
