// Command-line front end over the qlap C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlap.h"

namespace {

using nlohmann::json;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die(qlap_status st) {
  std::cerr << "error: " << qlap_status_name(st);
  const char* detail = qlap_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  std::exit(kExitUsage);
}

void check(qlap_status st) {
  if (st != QLAP_OK) die(st);
}

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct GraphHandle {
  qlap_graph* g = nullptr;
  ~GraphHandle() { qlap_graph_free(g); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { qlap_string_free(s); }
};

GraphHandle load_graph(const std::string& graph6, const std::string& family) {
  GraphHandle h;
  if (!graph6.empty() && !family.empty()) {
    std::cerr << "error: give either a graph6 string or a family spec, not both\n";
    std::exit(kExitUsage);
  }
  if (!graph6.empty())
    check(qlap_graph_from_graph6(graph6.c_str(), &h.g));
  else if (!family.empty())
    check(qlap_graph_from_family(family.c_str(), &h.g));
  else {
    std::cerr << "error: need --graph6 or --family\n";
    std::exit(kExitUsage);
  }
  return h;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) {
    std::cerr << "error: cannot open output file " << path << "\n";
    std::exit(kExitUsage);
  }
  return file;
}

json spectrum_json(qlap_graph* g) {
  const int n = qlap_graph_order(g);
  json j;
  StringHandle g6;
  check(qlap_graph_to_graph6(g, &g6.s));
  j["graph6"] = g6.s;
  j["n"] = n;
  j["edges"] = qlap_graph_edges(g);
  std::vector<double> vals(n);
  for (auto [key, kind] : {std::pair{"laplacian", QLAP_MATRIX_LAPLACIAN},
                           std::pair{"signless_laplacian", QLAP_MATRIX_SIGNLESS_LAPLACIAN}}) {
    check(qlap_spectrum(g, kind, vals.data()));
    json arr = json::array();
    for (double v : vals) arr.push_back(fmt12(v));
    j[key] = arr;
  }
  if (n >= 2) {
    double kv[4];
    check(qlap_key_values(g, kv));
    j["mu1"] = kv[0];
    j["mu_n1"] = kv[1];
    j["q1"] = kv[2];
    j["spread"] = kv[3];
    GraphHandle comp;
    check(qlap_graph_complement(g, &comp.g));
    double kvb[4];
    check(qlap_key_values(comp.g, kvb));
    j["complement"] = {{"mu1", kvb[0]}, {"mu_n1", kvb[1]}, {"q1", kvb[2]}, {"spread", kvb[3]}};
  }
  return j;
}

void print_spectrum_text(const json& j, std::ostream& os) {
  os << "graph6: " << j["graph6"].get<std::string>() << "\n";
  os << "n: " << j["n"] << "  edges: " << j["edges"] << "\n";
  for (const char* key : {"laplacian", "signless_laplacian"}) {
    os << key << ":";
    for (const auto& v : j[key]) os << " " << v.get<std::string>();
    os << "\n";
  }
  if (j.contains("mu1")) {
    os << "mu1: " << fmt12(j["mu1"]) << "  mu_n1: " << fmt12(j["mu_n1"]) << "  q1: "
       << fmt12(j["q1"]) << "  spread: " << fmt12(j["spread"]) << "\n";
    const auto& c = j["complement"];
    os << "complement: mu1: " << fmt12(c["mu1"]) << "  mu_n1: " << fmt12(c["mu_n1"])
       << "  q1: " << fmt12(c["q1"]) << "  spread: " << fmt12(c["spread"]) << "\n";
  }
}

int run_scan_cmd(const json& cfg, const std::string& output, const std::string& format) {
  std::ofstream file;
  std::ostream& records = open_output(output, file);
  auto sink = [](const char* line, void* user) {
    auto* os = static_cast<std::ostream*>(user);
    (*os) << line << "\n";
  };
  StringHandle summary;
  std::string cfg_text = cfg.dump();
  check(qlap_scan(cfg_text.c_str(), sink, &records, &summary.s));
  records.flush();

  json js = json::parse(summary.s);
  // Keep record output clean when both streams share stdout.
  std::ostream& out = (&records == &std::cout && output.empty()) ? std::cerr : std::cout;
  if (format == "json") {
    out << js.dump(2) << "\n";
  } else {
    out << "graphs scanned: " << js["graphs"] << "\n";
    out << "bound                 checked      held  equality  violated       n/a\n";
    for (auto& [id, c] : js["per_bound"].items()) {
      char line[160];
      std::snprintf(line, sizeof(line), "%-20s %9lld %9lld %9lld %9lld %9lld", id.c_str(),
                    c["checked"].get<long long>(), c["held"].get<long long>(),
                    c["equality"].get<long long>(), c["violated"].get<long long>(),
                    c["not_applicable"].get<long long>());
      out << line << "\n";
    }
    out << "proved-bound violations: " << js["proved_violations"] << "\n";
    long long cv = js["conjecture_violations"].get<long long>();
    out << "conjectured-bound violations (expected findings): " << cv << "\n";
  }
  return js["proved_violations"].get<long long>() > 0 ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian / signless Laplacian spectral bound toolkit"};
  app.require_subcommand(1);

  std::string graph6, family, output, format = "text";
  double epsilon = 1e-7;
  int jobs = 1;

  auto add_common = [&](CLI::App* cmd, bool with_eps_jobs) {
    cmd->add_option("--output", output, "Write results to this path instead of stdout");
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_eps_jobs) {
      cmd->add_option("--epsilon", epsilon, "One-sided comparison tolerance (default 1e-7)");
      cmd->add_option("--jobs", jobs, "Worker count")->check(CLI::PositiveNumber);
    }
  };

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Print spectra and key values of one graph");
  spectrum->add_option("record", graph6, "graph6 record (positional)");
  spectrum->add_option("--graph6", graph6, "graph6 record");
  spectrum->add_option("--family", family, "family spec, e.g. star:6 or thmbiph:8,3,1,2");
  add_common(spectrum, false);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a family graph, print its graph6");
  construct->add_option("--family", family, "family spec")->required();
  add_common(construct, false);

  // scan
  auto* scan = app.add_subcommand("scan", "Evaluate bounds over a graph source");
  int scan_n = 0;
  std::string scan_file, scan_family, bounds_arg = "all", emit = "violations";
  std::vector<std::string> emit_bounds;
  scan->add_option("--n", scan_n, "Exhaustive sweep over all labelled graphs of this order (<= 8)");
  scan->add_option("--file", scan_file, "graph6 file, one record per line");
  scan->add_option("--family", scan_family, "family spec; one parameter may be a range a..b");
  scan->add_option("--bounds", bounds_arg, "Comma list of bound ops, or 'all'");
  scan->add_option("--emit", emit, "Which records to emit")
      ->check(CLI::IsMember({"violations", "equalities", "all"}));
  scan->add_option("--emit-bounds", emit_bounds, "Only emit records for these bound ids")
      ->delimiter(',');
  add_common(scan, true);

  // ratio
  auto* ratio = app.add_subcommand("ratio", "Closed-form product study of the clique-join family");
  std::vector<int> ratio_ns;
  ratio->add_option("--n", ratio_ns, "Orders to evaluate (n >= 6)")
      ->required()
      ->delimiter(',');
  add_common(ratio, false);

  // search
  auto* search = app.add_subcommand("search", "Hill-climbing search maximizing q1(G)*q1(comp)");
  int search_n = 0;
  long long iterations = 20000;
  unsigned long long seed = 1;
  search->add_option("--n", search_n, "Graph order (>= 4)")->required();
  search->add_option("--iterations", iterations, "Edge-flip proposals (default 20000)");
  search->add_option("--seed", seed, "RNG seed (default 1)");
  add_common(search, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (spectrum->parsed()) {
    GraphHandle h = load_graph(graph6, family);
    json j = spectrum_json(h.g);
    std::ofstream file;
    std::ostream& os = open_output(output, file);
    if (format == "json")
      os << j.dump(2) << "\n";
    else
      print_spectrum_text(j, os);
    return 0;
  }

  if (construct->parsed()) {
    GraphHandle h = load_graph("", family);
    StringHandle g6;
    check(qlap_graph_to_graph6(h.g, &g6.s));
    std::ofstream file;
    std::ostream& os = open_output(output, file);
    os << g6.s << "\n";
    return 0;
  }

  if (scan->parsed()) {
    int sources = (scan_n > 0) + !scan_file.empty() + !scan_family.empty();
    if (sources != 1) {
      std::cerr << "error: scan needs exactly one of --n, --file, --family\n";
      return kExitUsage;
    }
    json cfg;
    if (scan_n > 0)
      cfg["source"] = {{"kind", "exhaustive"}, {"n", scan_n}};
    else if (!scan_file.empty())
      cfg["source"] = {{"kind", "file"}, {"path", scan_file}};
    else
      cfg["source"] = {{"kind", "family"}, {"spec", scan_family}};
    json blist = json::array();
    std::string token;
    std::stringstream ss(bounds_arg);
    while (std::getline(ss, token, ','))
      if (!token.empty()) blist.push_back(token);
    cfg["bounds"] = blist;
    cfg["emit"] = emit;
    if (!emit_bounds.empty()) cfg["emit_bounds"] = emit_bounds;
    cfg["jobs"] = jobs;
    cfg["epsilon"] = epsilon;
    return run_scan_cmd(cfg, output, format);
  }

  if (ratio->parsed()) {
    std::ofstream file;
    std::ostream& os = open_output(output, file);
    json rows = json::array();
    for (int n : ratio_ns) {
      int best_k = 0;
      double product = 0, rr = 0;
      check(qlap_ratio_point(n, &best_k, &product, &rr));
      rows.push_back({{"n", n}, {"best_k", best_k}, {"product", product}, {"ratio", rr}});
    }
    double limit = qlap_ratio_limit_constant();
    if (format == "json") {
      os << json{{"limit_constant", limit}, {"points", rows}}.dump(2) << "\n";
    } else {
      os << "limit constant (5/18)(4+sqrt(14)) = " << fmt12(limit) << "\n";
      os << "        n    best_k              product      ratio/n^2\n";
      for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof(line), "%9d %9d %20.6f %14.6f", r["n"].get<int>(),
                      r["best_k"].get<int>(), r["product"].get<double>(),
                      r["ratio"].get<double>());
        os << line << "\n";
      }
    }
    return 0;
  }

  if (search->parsed()) {
    StringHandle best;
    double product = 0;
    check(qlap_search(search_n, iterations, seed, &best.s, &product));
    int hk = 0;
    double hq1 = 0, hq1b = 0, hprod = 0;
    check(qlap_hn_point(search_n, &hk, &hq1, &hq1b, &hprod));
    double rr = product / (double(search_n) * search_n);
    std::ofstream file;
    std::ostream& os = open_output(output, file);
    if (format == "json") {
      os << json{{"n", search_n},
                 {"best_graph6", best.s},
                 {"product", product},
                 {"ratio", rr},
                 {"family_product", hprod},
                 {"family_k", hk}}
                .dump(2)
         << "\n";
    } else {
      os << "best graph6: " << best.s << "\n";
      os << "product q1*q1bar: " << fmt12(product) << "  ratio/n^2: " << fmt12(rr) << "\n";
      os << "clique-join family at n=" << search_n << " (k=" << hk
         << "): " << fmt12(hprod) << (product >= hprod ? "  [matched or beaten]" : "") << "\n";
    }
    return 0;
  }

  return 0;
}
