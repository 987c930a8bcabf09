#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/jacobi.hpp"
#include "core/rational.hpp"

namespace qlap {

inline constexpr double kDefaultEpsilon = 1e-7;

enum class EqualityClass {
  Star,
  Regular,
  CompleteBipartite,
  JoinK1Disconnected,
  Other,
  NotApplicable,
};

const char* to_string(EqualityClass c);

// Structural facts decided purely from the adjacency relation (degree
// sequences, components); never from floating-point spectra.
struct StructureFlags {
  bool connected = false;
  bool bipartite = false;
  bool regular = false;
  bool star = false;
  bool star_complement = false;
  bool complete_bipartite = false;
  bool bip_semiregular = false;          // both sides internally degree-constant
  bool join_k1_disconnected = false;      // K_1 v (disconnected graph on n-1)
  bool join_k1_disconnected_comp = false; // the same for the complement
};

StructureFlags classify_structure(const Graph& g, const Graph& complement);
StructureFlags classify_structure(const Graph& g);

struct BoundReport {
  std::string bound_id;
  int n = 0;
  bool applicable = true;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;  // rhs - lhs
  bool holds = true;
  bool equality = false;
  EqualityClass equality_class = EqualityClass::Other;
  // False when the statement is conjectural for this input (a violation is a
  // finding, not a failure).
  bool proved = true;
  std::string note;

  static BoundReport not_applicable(std::string id, int n, std::string note);
  // Fixed JSON schema: bound_id, n, lhs, rhs, slack, holds, equality,
  // equality_class, graph6 (lhs/rhs/slack are null when not applicable).
  std::string to_json_line(const std::string& graph6) const;
};

// Everything the bound evaluators need, computed once per graph.
struct GraphContext {
  const Graph* g = nullptr;
  Graph complement;
  DegreeStats stats;
  std::optional<BipStructure> bip;
  KeyValues kv;      // of g
  KeyValues kv_bar;  // of the complement
  StructureFlags flags;

  int n() const { return g->order(); }

  static GraphContext make(const Graph& g);  // requires n >= 2
};

enum class BoundId {
  Das,
  Merris,
  ThmBip,
  ThmMu1,
  ThmTL,
  LapSpread,
  MuProduct,
  QSum,
  QProduct,
};

const char* bound_name(BoundId id);
std::optional<BoundId> bound_from_name(std::string_view name);
const std::vector<BoundId>& all_bounds();

// True when a violation of this report refutes something the source material
// proves (as opposed to a conjecture, where violations are findings).
bool report_is_proved(BoundId id, const BoundReport& r);

// A bound op may emit one or two reports (chained inequalities, refined +
// coarse right-hand sides).
std::vector<BoundReport> eval_bound(const GraphContext& ctx, BoundId id,
                                    double eps = kDefaultEpsilon);

// Convenience single-graph entry points.
BoundReport merris_bound(const Graph& g, double eps = kDefaultEpsilon);
BoundReport das_bound(const Graph& g, double eps = kDefaultEpsilon);
BoundReport thm_bip_lower(const Graph& g, double eps = kDefaultEpsilon);
std::vector<BoundReport> thm_mu1_upper(const Graph& g, double eps = kDefaultEpsilon);
BoundReport thm_tl_cases(const Graph& g, double eps = kDefaultEpsilon);
BoundReport lap_spread_conjecture(const Graph& g, double eps = kDefaultEpsilon);
BoundReport mu_product_bound(const Graph& g, double eps = kDefaultEpsilon);
std::vector<BoundReport> q_sum_bound(const Graph& g, double eps = kDefaultEpsilon);
BoundReport q_product_check(const Graph& g, double eps = kDefaultEpsilon);

}  // namespace qlap
