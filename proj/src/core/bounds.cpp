#include "core/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace qlap {

const char* to_string(EqualityClass c) {
  switch (c) {
    case EqualityClass::Star: return "Star";
    case EqualityClass::Regular: return "Regular";
    case EqualityClass::CompleteBipartite: return "CompleteBipartite";
    case EqualityClass::JoinK1Disconnected: return "JoinK1Disconnected";
    case EqualityClass::Other: return "Other";
    case EqualityClass::NotApplicable: return "NotApplicable";
  }
  return "?";
}

namespace {

bool is_star_shape(int n, long long edges, int max_degree) {
  return n >= 2 && edges == n - 1 && max_degree == n - 1;
}

bool is_join_k1_disconnected(const Graph& g, const DegreeStats& st) {
  const int n = g.order();
  if (n < 3) return false;
  for (int v = 0; v < n; ++v)
    if (st.degree[v] == n - 1 && g.component_count_without(v) >= 2) return true;
  return false;
}

}  // namespace

StructureFlags classify_structure(const Graph& g, const Graph& complement) {
  const int n = g.order();
  StructureFlags f;
  DegreeStats st = degree_stats(g);
  DegreeStats st_bar = degree_stats(complement);
  f.connected = g.component_count() <= 1;
  f.regular = n > 0 && st.max_degree == st.min_degree;
  f.star = is_star_shape(n, st.edges, st.max_degree);
  f.star_complement = is_star_shape(n, st_bar.edges, st_bar.max_degree);
  if (auto bip = bipartition(g)) {
    f.bipartite = true;
    const int k = bip->k();
    f.complete_bipartite = k >= 1 && st.edges == static_cast<long long>(k) * (n - k);
    auto side_constant = [&](const std::vector<int>& side) {
      for (size_t i = 1; i < side.size(); ++i)
        if (st.degree[side[i]] != st.degree[side[0]]) return false;
      return true;
    };
    f.bip_semiregular = side_constant(bip->x) && side_constant(bip->y);
  }
  f.join_k1_disconnected = is_join_k1_disconnected(g, st);
  f.join_k1_disconnected_comp = is_join_k1_disconnected(complement, st_bar);
  return f;
}

StructureFlags classify_structure(const Graph& g) {
  return classify_structure(g, g.complement());
}

BoundReport BoundReport::not_applicable(std::string id, int n, std::string note) {
  BoundReport r;
  r.bound_id = std::move(id);
  r.n = n;
  r.applicable = false;
  r.lhs = r.rhs = r.slack = std::numeric_limits<double>::quiet_NaN();
  r.holds = true;
  r.equality = false;
  r.equality_class = EqualityClass::NotApplicable;
  r.note = std::move(note);
  return r;
}

std::string BoundReport::to_json_line(const std::string& graph6) const {
  nlohmann::json j;
  j["bound_id"] = bound_id;
  j["n"] = n;
  if (applicable) {
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["slack"] = slack;
  } else {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["slack"] = nullptr;
  }
  j["holds"] = holds;
  j["equality"] = equality;
  j["equality_class"] = to_string(equality_class);
  j["graph6"] = graph6;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

GraphContext GraphContext::make(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("bound context needs n >= 2");
  GraphContext ctx;
  ctx.g = &g;
  ctx.complement = g.complement();
  ctx.stats = degree_stats(g);
  ctx.bip = bipartition(g);
  ctx.kv = key_values(g);
  ctx.kv_bar = key_values(ctx.complement);
  ctx.flags = classify_structure(g, ctx.complement);
  return ctx;
}

const char* bound_name(BoundId id) {
  switch (id) {
    case BoundId::Das: return "das";
    case BoundId::Merris: return "merris";
    case BoundId::ThmBip: return "thm_bip";
    case BoundId::ThmMu1: return "thm_mu1";
    case BoundId::ThmTL: return "thm_tl";
    case BoundId::LapSpread: return "lap_spread";
    case BoundId::MuProduct: return "mu_product";
    case BoundId::QSum: return "q_sum";
    case BoundId::QProduct: return "q_product";
  }
  return "?";
}

std::optional<BoundId> bound_from_name(std::string_view name) {
  for (BoundId id : all_bounds())
    if (name == bound_name(id)) return id;
  return std::nullopt;
}

const std::vector<BoundId>& all_bounds() {
  static const std::vector<BoundId> ids = {
      BoundId::Das,       BoundId::Merris,    BoundId::ThmBip,
      BoundId::ThmMu1,    BoundId::ThmTL,     BoundId::LapSpread,
      BoundId::MuProduct, BoundId::QSum,      BoundId::QProduct,
  };
  return ids;
}

bool report_is_proved(BoundId id, const BoundReport& r) {
  if (id == BoundId::QProduct) return false;
  return r.proved;
}

namespace {

// max over positive-degree vertices of d(v) + m(v), as an exact rational.
std::optional<Rat64> max_degree_plus_avg(const Graph& g, const DegreeStats& st) {
  std::optional<Rat64> best;
  for (int v = 0; v < g.order(); ++v) {
    if (st.degree[v] == 0) continue;
    long long d = st.degree[v];
    long long s = 0;
    g.for_each_neighbor(v, [&](int u) { s += st.degree[u]; });
    Rat64 val(d * d + s, d);
    if (!best || *best < val) best = val;
  }
  return best;
}

bool das_vertex_condition(const Graph& g, const DegreeStats& st, int v) {
  const int n = g.order();
  if (st.degree[v] == n - 1) return true;
  if (st.degree[v] != st.max_degree) return false;
  bool ok = true;
  g.for_each_neighbor(v, [&](int u) {
    if (st.degree[u] != st.max_degree) ok = false;
  });
  if (!ok) return false;
  for (int u = 0; u < n; ++u)
    if (u != v && !g.has_edge(v, u) && st.degree[u] != st.min_degree) return false;
  return true;
}

// Per-component equality structure for the q1 <= max(d+m) bound: some
// component carrying the global maximum of d+m must be regular or bipartite
// semiregular.
bool merris_equality_structure(const Graph& g, const DegreeStats& st, const Rat64& global_max) {
  const int n = g.order();
  std::vector<int> label = g.component_labels();
  int comps = 0;
  for (int v = 0; v < n; ++v) comps = std::max(comps, label[v] + 1);
  std::vector<std::vector<int>> members(comps);
  for (int v = 0; v < n; ++v) members[label[v]].push_back(v);
  for (const auto& comp : members) {
    bool carries_max = false;
    for (int v : comp) {
      if (st.degree[v] == 0) continue;
      long long d = st.degree[v];
      long long s = 0;
      g.for_each_neighbor(v, [&](int u) { s += st.degree[u]; });
      if (Rat64(d * d + s, d) == global_max) {
        carries_max = true;
        break;
      }
    }
    if (!carries_max) continue;
    bool regular = true;
    for (int v : comp)
      if (st.degree[v] != st.degree[comp[0]]) regular = false;
    if (regular) return true;
    // 2-colour the component and check per-side degree constancy.
    std::vector<int> colour(n, -1);
    std::vector<int> stack{comp[0]};
    colour[comp[0]] = 0;
    bool bip = true;
    int side_deg[2] = {-1, -1};
    while (!stack.empty() && bip) {
      int v = stack.back();
      stack.pop_back();
      int& sd = side_deg[colour[v]];
      if (sd == -1) sd = st.degree[v];
      else if (sd != st.degree[v]) bip = false;
      g.for_each_neighbor(v, [&](int u) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          bip = false;
        }
      });
    }
    if (bip) return true;
  }
  return false;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

BoundReport das_impl(const GraphContext& ctx, double) {
  const int n = ctx.n();
  const DegreeStats& st = ctx.stats;
  auto lhs = max_degree_plus_avg(*ctx.g, st);
  if (!lhs)
    return BoundReport::not_applicable("das", n, "no vertex of positive degree");
  long long dd = st.max_degree - st.min_degree;
  Rat64 rhs(2 * st.edges + static_cast<long long>(n - 2) * st.max_degree +
                dd * (n - 1 - st.max_degree),
            n - 1);
  BoundReport r;
  r.bound_id = "das";
  r.n = n;
  r.lhs = lhs->to_double();
  r.rhs = rhs.to_double();
  r.slack = (rhs - *lhs).to_double();
  r.holds = *lhs <= rhs;
  if (*lhs == rhs) {
    for (int v = 0; v < n; ++v) {
      if (st.degree[v] == 0) continue;
      long long d = st.degree[v];
      long long s = 0;
      ctx.g->for_each_neighbor(v, [&](int u) { s += st.degree[u]; });
      if (Rat64(d * d + s, d) == *lhs && das_vertex_condition(*ctx.g, st, v)) {
        r.equality = true;
        break;
      }
    }
  }
  r.equality_class = !r.equality            ? EqualityClass::Other
                     : ctx.flags.star       ? EqualityClass::Star
                     : ctx.flags.regular    ? EqualityClass::Regular
                                            : EqualityClass::Other;
  return r;
}

BoundReport merris_impl(const GraphContext& ctx, double eps) {
  const int n = ctx.n();
  if (ctx.stats.edges == 0) return BoundReport::not_applicable("merris", n, "edgeless graph");
  auto rhs = max_degree_plus_avg(*ctx.g, ctx.stats);
  BoundReport r;
  r.bound_id = "merris";
  r.n = n;
  r.lhs = ctx.kv.q1;
  r.rhs = rhs->to_double();
  r.slack = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs + eps;
  if (std::abs(r.slack) <= eps && merris_equality_structure(*ctx.g, ctx.stats, *rhs))
    r.equality = true;
  r.equality_class = !r.equality                       ? EqualityClass::Other
                     : ctx.flags.regular               ? EqualityClass::Regular
                     : ctx.flags.complete_bipartite    ? EqualityClass::CompleteBipartite
                     : ctx.flags.star                  ? EqualityClass::Star
                                                       : EqualityClass::Other;
  if (!ctx.flags.connected) r.note = "disconnected";
  return r;
}

BoundReport thm_bip_impl(const GraphContext& ctx, double eps) {
  const int n = ctx.n();
  if (!ctx.bip) return BoundReport::not_applicable("thm_bip", n, "not bipartite");
  const BipStructure& b = *ctx.bip;
  if (b.t() < 1 || b.ell() < 1)
    return BoundReport::not_applicable("thm_bip", n, "hypothesis t>=1, l>=1 not met");
  Rat64 lhs(b.ell(), static_cast<long long>(b.y.size()));
  BoundReport r;
  r.bound_id = "thm_bip";
  r.n = n;
  r.lhs = lhs.to_double();
  r.rhs = ctx.kv.mu_n1;
  r.slack = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs + eps;
  r.equality = std::abs(r.slack) <= eps && ctx.flags.star;
  r.equality_class = r.equality ? EqualityClass::Star : EqualityClass::Other;
  if (!ctx.flags.connected) r.note = "disconnected";
  return r;
}

std::vector<BoundReport> thm_mu1_impl(const GraphContext& ctx, double eps) {
  const int n = ctx.n();
  if (!ctx.bip)
    return {BoundReport::not_applicable("thm_mu1:e", n, "not bipartite"),
            BoundReport::not_applicable("thm_mu1:chain", n, "not bipartite")};
  const BipStructure& b = *ctx.bip;
  const long long y = static_cast<long long>(b.y.size());
  Rat64 bound_e(y * y + ctx.stats.edges, y);
  Rat64 bound_chain(static_cast<long long>(n - 1) * y + b.ell(), y);

  BoundReport first;
  first.bound_id = "thm_mu1:e";
  first.n = n;
  first.lhs = ctx.kv.mu1;
  first.rhs = bound_e.to_double();
  first.slack = first.rhs - first.lhs;
  first.holds = first.lhs <= first.rhs + eps;
  first.equality = std::abs(first.slack) <= eps;
  first.equality_class = first.equality && ctx.flags.complete_bipartite
                             ? EqualityClass::CompleteBipartite
                             : EqualityClass::Other;

  BoundReport chain;
  chain.bound_id = "thm_mu1:chain";
  chain.n = n;
  chain.lhs = bound_e.to_double();
  chain.rhs = bound_chain.to_double();
  chain.slack = (bound_chain - bound_e).to_double();
  chain.holds = bound_e <= bound_chain;
  chain.equality = bound_e == bound_chain;
  chain.equality_class = EqualityClass::Other;
  if (std::abs(ctx.kv.mu1 - bound_chain.to_double()) <= eps) {
    chain.note = "chain_equality_mu1";
    if (ctx.flags.complete_bipartite) chain.equality_class = EqualityClass::CompleteBipartite;
  }
  return {first, chain};
}

BoundReport thm_tl_impl(const GraphContext& ctx, double eps) {
  const int n = ctx.n();
  if (!ctx.bip) return BoundReport::not_applicable("thm_tl", n, "not bipartite");
  const BipStructure& b = *ctx.bip;
  const int k = b.k(), t = b.t(), l = b.ell();
  if (k < 2) return BoundReport::not_applicable("thm_tl", n, "|X| < 2");
  BoundReport r;
  r.bound_id = "thm_tl";
  r.n = n;
  const double mu1 = ctx.kv.mu1;
  const double mu_n1 = ctx.kv.mu_n1;
  if (t == 0 || l == 0) {
    r.note = "case4";
    r.lhs = mu1;
    r.rhs = n - 1;
    r.slack = r.rhs - r.lhs;
    r.holds = mu1 <= n - 1 + eps;
    return r;
  }
  if (t >= 2 && l >= 2) {
    bool first = mu_n1 > 1 - eps;
    bool second = mu1 <= n - 1 + eps;
    r.note = first && second ? "case1:both" : first ? "case1:mu_n1>1" : "case1:mu1<=n-1";
    if (first) {
      r.lhs = 1;
      r.rhs = mu_n1;
    } else {
      r.lhs = mu1;
      r.rhs = n - 1;
    }
    r.slack = r.rhs - r.lhs;
    r.holds = first || second;
    if (!r.holds) r.note = "case1:neither";
    return r;
  }
  if (l == 1) {
    if (t > k - 1) throw std::logic_error("thm_tl: t = k forces l = n-k >= 2");
    if (t <= k - 2) {
      r.note = "case2:t<=k-2";
      r.lhs = mu1;
      r.rhs = n - 1;
      r.slack = r.rhs - r.lhs;
      r.holds = mu1 <= n - 1 + eps;
      return r;
    }
    if (2 * k < n) {
      r.note = "case2:t=k-1<n/2-1";
      Rat64 rhs(static_cast<long long>(n) * (n - 1) + 1, n);
      r.lhs = mu1;
      r.rhs = rhs.to_double();
      r.slack = r.rhs - r.lhs;
      r.holds = mu1 <= r.rhs + eps;
      return r;
    }
    // t = k-1 = n/2-1: both extreme Laplacian eigenvalues are pinned.
    r.note = "case2:t=k-1=n/2-1";
    const double root = std::sqrt(static_cast<double>(n) * n - 4.0 * n + 8.0);
    const double mu1_expected = 0.5 * (n + root);
    const double mu_n1_expected = 0.5 * (n - root);
    r.lhs = mu1;
    r.rhs = mu1_expected;
    r.slack = r.rhs - r.lhs;
    r.holds = std::abs(mu1 - mu1_expected) <= eps && std::abs(mu_n1 - mu_n1_expected) <= eps;
    r.equality = r.holds;
    return r;
  }
  // t == 1, l >= 2
  if (n < 7)
    return BoundReport::not_applicable("thm_tl", n, "case3:n<7 outside the theorem's range");
  r.note = "case3";
  Rat64 rhs(static_cast<long long>(n) * (n - 1) + l, n);
  r.lhs = mu1;
  r.rhs = rhs.to_double();
  r.slack = r.rhs - r.lhs;
  r.holds = mu1 <= r.rhs + eps;
  return r;
}

BoundReport lap_spread_impl(const GraphContext& ctx, double eps) {
  const int n = ctx.n();
  BoundReport r;
  r.bound_id = "lap_spread";
  r.n = n;
  r.lhs = ctx.kv.spread;
  r.rhs = n - 1;
  r.slack = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs + eps;
  bool structural =
      ctx.flags.join_k1_disconnected || ctx.flags.join_k1_disconnected_comp;
  r.equality = std::abs(r.slack) <= eps && structural;
  r.equality_class = r.equality ? EqualityClass::JoinK1Disconnected : EqualityClass::Other;
  r.proved = ctx.bip.has_value() || is_bipartite(ctx.complement);
  // The three equivalent forms must track each other exactly (up to solver
  // noise): mu1(comp) = n - mu_{n-1}.
  const double sum_slack = (2.0 * n - 1) - (ctx.kv.mu1 + ctx.kv_bar.mu1);
  const double third_slack = (ctx.kv.mu_n1 + ctx.kv_bar.mu_n1) - 1.0;
  if (std::abs(sum_slack - r.slack) > 2 * eps || std::abs(third_slack - r.slack) > 2 * eps)
    throw std::runtime_error("lap_spread: equivalent forms disagree beyond tolerance");
  r.note = (r.proved ? std::string("theorem-bipartite") : std::string("conjecture")) +
           ";sum=" + fmt(ctx.kv.mu1 + ctx.kv_bar.mu1) +
           ";mu_n1_sum=" + fmt(ctx.kv.mu_n1 + ctx.kv_bar.mu_n1);
  return r;
}

BoundReport mu_product_impl(const GraphContext& ctx, double eps) {
  const int n = ctx.n();
  BoundReport r;
  r.bound_id = "mu_product";
  r.n = n;
  r.lhs = ctx.kv.mu1 * ctx.kv_bar.mu1;
  r.rhs = static_cast<double>(n) * (n - 1);
  r.slack = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs + eps;
  bool structural =
      ctx.flags.join_k1_disconnected || ctx.flags.join_k1_disconnected_comp;
  r.equality = std::abs(r.slack) <= eps && structural;
  r.equality_class = !r.equality ? EqualityClass::Other
                     : (ctx.flags.star || ctx.flags.star_complement)
                         ? EqualityClass::Star
                         : EqualityClass::JoinK1Disconnected;
  r.proved = ctx.bip.has_value() || is_bipartite(ctx.complement);
  r.note = r.proved ? "theorem-bipartite" : "conjecture";
  return r;
}

std::vector<BoundReport> q_sum_impl(const GraphContext& ctx, double eps) {
  const int n = ctx.n();
  const double sum = ctx.kv.q1 + ctx.kv_bar.q1;
  const long long dd = ctx.stats.max_degree - ctx.stats.min_degree;
  Rat64 refined_rhs(2ll * (n - 1) * (n - 1) + dd * (2ll * (n - 1) - (dd + 1)), n - 1);

  BoundReport refined;
  refined.bound_id = "q_sum:refined";
  refined.n = n;
  refined.lhs = sum;
  refined.rhs = refined_rhs.to_double();
  refined.slack = refined.rhs - refined.lhs;
  refined.holds = refined.lhs <= refined.rhs + eps;
  bool star_pair = ctx.flags.star || ctx.flags.star_complement;
  refined.equality =
      std::abs(refined.slack) <= eps && (ctx.flags.regular || star_pair);
  refined.equality_class = !refined.equality   ? EqualityClass::Other
                           : ctx.flags.regular ? EqualityClass::Regular
                                               : EqualityClass::Star;

  BoundReport coarse;
  coarse.bound_id = "q_sum:3n-4";
  coarse.n = n;
  coarse.lhs = sum;
  coarse.rhs = 3.0 * n - 4;
  coarse.slack = coarse.rhs - coarse.lhs;
  coarse.holds = coarse.lhs <= coarse.rhs + eps;
  coarse.equality = std::abs(coarse.slack) <= eps && star_pair;
  coarse.equality_class = coarse.equality ? EqualityClass::Star : EqualityClass::Other;
  return {refined, coarse};
}

BoundReport q_product_impl(const GraphContext& ctx, double eps) {
  const int n = ctx.n();
  BoundReport r;
  r.bound_id = "q_product";
  r.n = n;
  r.lhs = ctx.kv.q1 * ctx.kv_bar.q1;
  r.rhs = 2.0 * n * (n - 2);
  r.slack = r.rhs - r.lhs;
  r.holds = r.lhs <= r.rhs + eps;
  bool star_pair = ctx.flags.star || ctx.flags.star_complement;
  r.equality = std::abs(r.slack) <= eps && star_pair;
  r.equality_class = r.equality ? EqualityClass::Star : EqualityClass::Other;
  r.proved = false;  // disproved conjecture: violations are findings
  return r;
}

}  // namespace

std::vector<BoundReport> eval_bound(const GraphContext& ctx, BoundId id, double eps) {
  switch (id) {
    case BoundId::Das: return {das_impl(ctx, eps)};
    case BoundId::Merris: return {merris_impl(ctx, eps)};
    case BoundId::ThmBip: return {thm_bip_impl(ctx, eps)};
    case BoundId::ThmMu1: return thm_mu1_impl(ctx, eps);
    case BoundId::ThmTL: return {thm_tl_impl(ctx, eps)};
    case BoundId::LapSpread: return {lap_spread_impl(ctx, eps)};
    case BoundId::MuProduct: return {mu_product_impl(ctx, eps)};
    case BoundId::QSum: return q_sum_impl(ctx, eps);
    case BoundId::QProduct: return {q_product_impl(ctx, eps)};
  }
  throw std::logic_error("unknown bound id");
}

BoundReport merris_bound(const Graph& g, double eps) {
  return eval_bound(GraphContext::make(g), BoundId::Merris, eps)[0];
}
BoundReport das_bound(const Graph& g, double eps) {
  return eval_bound(GraphContext::make(g), BoundId::Das, eps)[0];
}
BoundReport thm_bip_lower(const Graph& g, double eps) {
  return eval_bound(GraphContext::make(g), BoundId::ThmBip, eps)[0];
}
std::vector<BoundReport> thm_mu1_upper(const Graph& g, double eps) {
  return eval_bound(GraphContext::make(g), BoundId::ThmMu1, eps);
}
BoundReport thm_tl_cases(const Graph& g, double eps) {
  return eval_bound(GraphContext::make(g), BoundId::ThmTL, eps)[0];
}
BoundReport lap_spread_conjecture(const Graph& g, double eps) {
  return eval_bound(GraphContext::make(g), BoundId::LapSpread, eps)[0];
}
BoundReport mu_product_bound(const Graph& g, double eps) {
  return eval_bound(GraphContext::make(g), BoundId::MuProduct, eps)[0];
}
std::vector<BoundReport> q_sum_bound(const Graph& g, double eps) {
  return eval_bound(GraphContext::make(g), BoundId::QSum, eps);
}
BoundReport q_product_check(const Graph& g, double eps) {
  return eval_bound(GraphContext::make(g), BoundId::QProduct, eps)[0];
}

}  // namespace qlap
