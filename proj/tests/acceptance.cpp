// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code = number of failures.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "core/bounds.hpp"
#include "core/families.hpp"
#include "core/graph.hpp"
#include "core/graph6.hpp"
#include "core/jacobi.hpp"
#include "core/partitions.hpp"
#include "core/poly.hpp"
#include "core/scan.hpp"
#include "core/search.hpp"

using namespace qlap;

namespace {

using Failures = std::vector<std::string>;

void expect(Failures& f, bool ok, const std::string& msg) {
  if (ok) return;
  if (f.size() < 12) f.push_back(msg);
  else if (f.size() == 12) f.push_back("... further failures suppressed");
}

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// ---- criterion 1 ----------------------------------------------------------

void closed_form_spectra(Failures& f) {
  const double tol = 1e-9;
  for (int n = 2; n <= 12; ++n) {
    Graph kn = make_complete(n);
    Spectrum q = spectrum_of(kn, MatrixKind::SignlessLaplacian);
    std::vector<double> expect_q(n, n - 2.0);
    expect_q[0] = 2.0 * n - 2;
    Spectrum l = spectrum_of(kn, MatrixKind::Laplacian);
    std::vector<double> expect_l(n, double(n));
    expect_l[n - 1] = 0.0;
    for (int i = 0; i < n; ++i) {
      expect(f, std::abs(q.values[i] - expect_q[i]) <= tol,
             "Q(K_" + std::to_string(n) + ") eigenvalue " + std::to_string(i));
      expect(f, std::abs(l.values[i] - expect_l[i]) <= tol,
             "L(K_" + std::to_string(n) + ") eigenvalue " + std::to_string(i));
    }
  }
  for (int r = 1; r <= 8; ++r) {
    for (int s = 1; s <= 8; ++s) {
      Graph g = make_complete_bipartite(r, s);
      Spectrum q = spectrum_of(g, MatrixKind::SignlessLaplacian);
      std::vector<double> expected;
      expected.push_back(r + s);
      for (int i = 0; i < s - 1; ++i) expected.push_back(r);
      for (int i = 0; i < r - 1; ++i) expected.push_back(s);
      expected.push_back(0);
      std::sort(expected.begin(), expected.end(), std::greater<>());
      for (int i = 0; i < r + s; ++i)
        expect(f, std::abs(q.values[i] - expected[i]) <= tol,
               "Q(K_{" + std::to_string(r) + "," + std::to_string(s) + "}) eigenvalue " +
                   std::to_string(i));
    }
  }
}

// ---- criterion 2 ----------------------------------------------------------

struct SweepCounts {
  long long graphs = 0;
  long long ties_sum = 0, ties_spread = 0, ties_prod = 0;
  Failures failures;
};

void sweep_order(int n, SweepCounts& out) {
  const double eps = 1e-7;
  const long long total = labelled_graph_count(n);
  const int jobs = worker_count();
  std::vector<SweepCounts> parts(jobs);
  std::atomic<long long> next{0};
  const long long chunk = 4096;

  auto body = [&](SweepCounts& acc) {
    for (;;) {
      long long lo = next.fetch_add(chunk);
      if (lo >= total) return;
      long long hi = std::min(total, lo + chunk);
      for (long long m = lo; m < hi; ++m) {
        Graph g = graph_from_mask(n, static_cast<unsigned long long>(m));
        Graph gbar = g.complement();
        KeyValues kv = key_values(g);
        KeyValues kvb = key_values(gbar);
        StructureFlags flags = classify_structure(g, gbar);
        ++acc.graphs;

        // (d) coarse sum bound: tight exactly on stars and their complements
        // (the bound is complement-symmetric).
        bool tie_d = std::abs(kv.q1 + kvb.q1 - (3.0 * n - 4)) <= eps;
        bool struct_d = flags.star || flags.star_complement;
        if (tie_d) ++acc.ties_sum;
        expect(acc.failures, tie_d == struct_d,
               "q-sum tie/structure mismatch at n=" + std::to_string(n) + " graph " +
                   write_graph6(g));

        // (e) spread form, (f) product form: tight exactly on joins of K_1
        // with a disconnected graph (on either side).
        bool struct_ef = flags.join_k1_disconnected || flags.join_k1_disconnected_comp;
        bool tie_e = std::abs(kv.mu1 + kvb.mu1 - (2.0 * n - 1)) <= eps;
        bool tie_f = std::abs(kv.mu1 * kvb.mu1 - double(n) * (n - 1)) <= eps;
        if (tie_e) ++acc.ties_spread;
        if (tie_f) ++acc.ties_prod;
        expect(acc.failures, tie_e == struct_ef,
               "spread tie/structure mismatch at n=" + std::to_string(n) + " graph " +
                   write_graph6(g));
        expect(acc.failures, tie_f == struct_ef,
               "mu-product tie/structure mismatch at n=" + std::to_string(n) + " graph " +
                   write_graph6(g));
      }
    }
  };

  std::vector<std::thread> pool;
  for (int i = 0; i < jobs; ++i) pool.emplace_back([&, i] { body(parts[i]); });
  for (auto& t : pool) t.join();
  for (const auto& p : parts) {
    out.graphs += p.graphs;
    out.ties_sum += p.ties_sum;
    out.ties_spread += p.ties_spread;
    out.ties_prod += p.ties_prod;
    for (const auto& msg : p.failures) expect(out.failures, false, msg);
  }
}

void exhaustive_sweep(Failures& f) {
  // Pass A: scan machinery, zero violations of every proved statement.
  for (int n = 2; n <= 7; ++n) {
    ScanConfig cfg;
    cfg.source = ScanConfig::Source::Exhaustive;
    cfg.n = n;
    cfg.bounds = {BoundId::Das,       BoundId::Merris, BoundId::QSum,
                  BoundId::ThmBip,    BoundId::ThmMu1, BoundId::ThmTL,
                  BoundId::LapSpread, BoundId::MuProduct};
    cfg.emit = ScanConfig::Emit::Violations;
    cfg.jobs = worker_count();
    std::vector<std::string> violations;
    ScanSummary summary = run_scan(cfg, [&](std::string_view line) {
      if (violations.size() < 5) violations.emplace_back(line);
    });
    expect(f, summary.graphs == labelled_graph_count(n),
           "sweep graph count at n=" + std::to_string(n));
    expect(f, summary.proved_violations == 0,
           "proved violations at n=" + std::to_string(n) + ": " +
               std::to_string(summary.proved_violations) +
               (violations.empty() ? "" : " first: " + violations.front()));
    expect(f, summary.conjecture_violations == 0,
           "conjecture-regime violations at n=" + std::to_string(n));
    for (const auto& [id, c] : summary.per_bound)
      expect(f, c.violated == 0, "violations recorded for " + id);
  }

  // Pass B: tight sets match the structural classes, independently of the
  // report plumbing (floating spectra on one side, adjacency logic on the
  // other).
  for (int n = 2; n <= 7; ++n) {
    SweepCounts counts;
    sweep_order(n, counts);
    for (const auto& msg : counts.failures) expect(f, false, msg);
    // Every labelled star is tight for the coarse sum bound.
    long long stars = 0;
    for (int centre = 0; centre < n; ++centre) {
      GraphBuilder b(n);
      for (int v = 0; v < n; ++v)
        if (v != centre) b.add_edge(centre, v);
      Graph star = std::move(b).build();
      KeyValues kv = key_values(star);
      KeyValues kvb = key_values(star.complement());
      if (std::abs(kv.q1 + kvb.q1 - (3.0 * n - 4)) <= 1e-7) ++stars;
      if (n >= 3) {
        expect(f, std::abs(kv.mu1 + kvb.mu1 - (2.0 * n - 1)) <= 1e-7,
               "labelled star misses the spread tie at n=" + std::to_string(n));
        expect(f, std::abs(kv.mu1 * kvb.mu1 - double(n) * (n - 1)) <= 1e-7,
               "labelled star misses the product tie at n=" + std::to_string(n));
      }
    }
    expect(f, stars == n, "labelled stars tight for 3n-4 at n=" + std::to_string(n));
    expect(f, counts.ties_sum >= n, "tie count below the star count at n=" + std::to_string(n));
  }
}

// ---- criterion 3 ----------------------------------------------------------

void counterexample_family(Failures& f) {
  // No violation along the family before n = 9, violation exactly from 9 on.
  for (int n = 3; n <= 8; ++n) {
    BoundReport r = q_product_check(make_hn(n));
    expect(f, r.holds, "family order " + std::to_string(n) + " should not violate");
  }
  BoundReport h9 = q_product_check(make_hn(9));
  expect(f, !h9.holds, "family order 9 must violate the product conjecture");
  HnPoint p9 = hn_point(9);
  expect(f, p9.k == 2, "family order 9 uses k = 2");
  expect(f, std::abs(p9.product - 6 * (11 + std::sqrt(105.0))) <= 1e-9,
         "closed-form product at n = 9");
  expect(f, std::abs(h9.lhs - p9.product) <= 1e-8,
         "eigensolver vs closed form at n = 9: " + fmt(h9.lhs) + " vs " + fmt(p9.product));
  expect(f, p9.product > 126.0, "product at n = 9 exceeds 2n(n-2) = 126");

  RatioPoint r600 = ratio_point(600);
  expect(f, std::abs(r600.ratio - 2.149735) <= 0.05, "ratio at n = 600: " + fmt(r600.ratio));
  RatioPoint r6000 = ratio_point(6000);
  expect(f, std::abs(r6000.ratio - 2.149735) <= 0.005, "ratio at n = 6000: " + fmt(r6000.ratio));
  expect(f, std::abs(double(r6000.best_k) / 6000 - 1.0 / 6.0) <= 0.01,
         "best k/n at n = 6000: " + fmt(double(r6000.best_k) / 6000));

  // Full eigensolver cross-check of the closed forms at n = 600.
  Graph h600 = make_join(Graph::empty(600 - r600.best_k), make_complete(r600.best_k));
  double q1 = spectrum_of(h600, MatrixKind::SignlessLaplacian).values[0];
  expect(f, std::abs(q1 - hn_q1_closed_form(600, r600.best_k)) <= 1e-6,
         "eigensolver vs closed form q1 at n = 600");
  double q1b = spectrum_of(h600.complement(), MatrixKind::SignlessLaplacian).values[0];
  expect(f, std::abs(q1b - 2.0 * (600 - r600.best_k - 1)) <= 1e-6,
         "eigensolver vs closed form complement q1 at n = 600");
}

// ---- criterion 4 ----------------------------------------------------------

void factorization_identity(Failures& f) {
  struct Tuple {
    int n, k, t, l;
  };
  std::vector<Tuple> tuples;
  for (int n = 5; n <= 20; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      for (int t = 1; t <= k - 1; ++t)
        for (int l = 1; l <= n - k - 1; ++l) tuples.push_back({n, k, t, l});

  std::atomic<size_t> next{0};
  const int jobs = worker_count();
  std::vector<Failures> parts(jobs);
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= tuples.size()) return;
        auto [n, k, t, l] = tuples[i];
        int r = n - k;
        IntPoly expected = thm_bip_cubic(n, k, t, l).poly();
        expected = expected * IntPoly::linear_root(BigInt(0));
        expected = expected.pow_times(BigInt(r), t - 1);
        expected = expected.pow_times(BigInt(k), l - 1);
        expected = expected.pow_times(BigInt(l), k - t - 1);
        expected = expected.pow_times(BigInt(t), r - l - 1);
        Graph h = make_thm_bip_h(n, k, t, l);
        IntPoly actual = char_poly_exact(build_int_matrix(h, MatrixKind::SignlessLaplacian), n);
        expect(parts[w], expected == actual,
               "factorization mismatch at (" + std::to_string(n) + "," + std::to_string(k) + "," +
                   std::to_string(t) + "," + std::to_string(l) + ")");
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& p : parts)
    for (const auto& msg : p) expect(f, false, msg);
  expect(f, tuples.size() >= 500, "tuple coverage");
  bool has_boundary = false;
  for (const auto& t : tuples)
    if (2 * t.k == t.n) has_boundary = true;
  expect(f, has_boundary, "k = n/2 boundary present");
}

// ---- criterion 5 ----------------------------------------------------------

void identity_suite(Failures& f) {
  std::mt19937_64 rng(20240809);
  auto random_tuple = [&](int n_max) {
    for (;;) {
      int n = 5 + int(rng() % (n_max - 4));
      int k = 2 + int(rng() % (n / 2));
      if (2 * k > n || k < 2) continue;
      if (k - 1 < 1 || n - k - 1 < 1) continue;
      int t = 1 + int(rng() % (k - 1));
      int l = 1 + int(rng() % (n - k - 1));
      return std::array<int, 4>{n, k, t, l};
    }
  };
  for (int trial = 0; trial < 500; ++trial) {
    auto [n, k, t, l] = random_tuple(80);
    Cubic fc = thm_bip_cubic(n, k, t, l);
    Cubic gc = thm_tl_cubic(n, k, t, l);
    BigRat r(n - k), kk(k), tt(t), ll(l), nn(n);
    BigRat half_n = nn / 2;
    bool ok = fc.eval(r) == -2 * tt * (r - half_n) * (r - ll) &&
              fc.eval(kk) == -2 * ll * (kk - half_n) * (kk - tt) &&
              fc.eval(ll) == ll * (r - ll) * (kk - tt) &&
              fc.eval(tt) == tt * (r - ll) * (kk - tt);
    expect(f, ok, "f evaluation identities at (" + std::to_string(n) + "," + std::to_string(k) +
                      "," + std::to_string(t) + "," + std::to_string(l) + ")");
    bool okg = gc.eval(r) == tt * (2 * kk - nn) && gc.eval(kk) == ll * (nn - 2 * kk) &&
               gc.eval(nn - 1) - fc.eval(BigRat(1)) == (nn - 2) * (tt * ll - tt - ll);
    expect(f, okg, "g evaluation identities at (" + std::to_string(n) + "," + std::to_string(k) +
                       "," + std::to_string(t) + "," + std::to_string(l) + ")");
  }

  // Boundary parameters t = k-1 = n/2-1 (so l = 1, k = n/2): the cubic roots
  // are n/2 and (n +- sqrt(n^2-4n+8))/2.
  for (int trial = 0; trial < 500; ++trial) {
    int k = 2 + int(rng() % 399);
    int n = 2 * k;
    Cubic fc = thm_bip_cubic(n, k, k - 1, 1);
    expect(f, fc.eval(BigRat(n, 2)) == 0, "n/2 root at k = " + std::to_string(k));
    CubicRoots roots = isolate_roots(fc, 1e-12);
    double disc = std::sqrt(double(n) * n - 4.0 * n + 8.0);
    expect(f, std::abs(roots.z_max - 0.5 * (n + disc)) <= 1e-10,
           "largest boundary root at k = " + std::to_string(k));
    expect(f, std::abs(roots.z_min - 0.5 * (n - disc)) <= 1e-10,
           "smallest boundary root at k = " + std::to_string(k));
  }
}

// ---- criterion 6 ----------------------------------------------------------

void property_suites(Failures& f) {
  std::mt19937_64 rng(6061);
  auto random_graph = [&](int n) {
    GraphBuilder b(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (rng() & 1) b.add_edge(i, j);
    return std::move(b).build();
  };

  // Edge-removal interlacing, 1000 pairs.
  int done = 0;
  long long interlace_bad = 0;
  while (done < 1000) {
    int n = 2 + int(rng() % 11);
    Graph g = random_graph(n);
    if (g.edge_count() == 0) continue;
    int u, v;
    do {
      u = int(rng() % n);
      v = int(rng() % n);
    } while (u == v || !g.has_edge(u, v));
    Graph h = g.without_edge(u, v);
    Spectrum qg = spectrum_of(g, MatrixKind::SignlessLaplacian);
    Spectrum qh = spectrum_of(h, MatrixKind::SignlessLaplacian);
    for (int i = 0; i < n; ++i) {
      if (!(qg.values[i] >= qh.values[i] - 1e-8)) ++interlace_bad;
      if (i + 1 < n && !(qh.values[i] >= qg.values[i + 1] - 1e-8)) ++interlace_bad;
    }
    ++done;
  }
  expect(f, interlace_bad == 0, "interlacing failures: " + std::to_string(interlace_bad));

  // Complement duality, 500 graphs.
  long long dual_bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + int(rng() % 11);
    Graph g = random_graph(n);
    Spectrum mu = spectrum_of(g, MatrixKind::Laplacian);
    Spectrum mub = spectrum_of(g.complement(), MatrixKind::Laplacian);
    for (int i = 1; i <= n - 1; ++i)
      if (std::abs(mu.values[i - 1] - (n - mub.values[n - i - 1])) > 1e-8) ++dual_bad;
  }
  expect(f, dual_bad == 0, "complement duality failures: " + std::to_string(dual_bad));

  // Bipartite L/Q similarity: exhaustive n <= 6 plus 500 random bipartite.
  long long sim_bad = 0;
  for (int n = 1; n <= 6; ++n)
    for (long long m = 0; m < labelled_graph_count(n); ++m) {
      Graph g = graph_from_mask(n, m);
      if (!is_bipartite(g)) continue;
      Spectrum l = spectrum_of(g, MatrixKind::Laplacian);
      Spectrum q = spectrum_of(g, MatrixKind::SignlessLaplacian);
      for (int i = 0; i < n; ++i)
        if (std::abs(l.values[i] - q.values[i]) > 1e-8) ++sim_bad;
    }
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + int(rng() % 11);
    int a = 1 + int(rng() % n);
    GraphBuilder b(n);
    for (int i = 0; i < a; ++i)
      for (int j = a; j < n; ++j)
        if (rng() & 1) b.add_edge(i, j);
    Graph g = std::move(b).build();
    Spectrum l = spectrum_of(g, MatrixKind::Laplacian);
    Spectrum q = spectrum_of(g, MatrixKind::SignlessLaplacian);
    for (int i = 0; i < n; ++i)
      if (std::abs(l.values[i] - q.values[i]) > 1e-8) ++sim_bad;
  }
  expect(f, sim_bad == 0, "bipartite similarity failures: " + std::to_string(sim_bad));

  // Dominating quotient bound over every 2-block partition of every graph
  // with n <= 6. A double-precision closed form filters the clear cases; the
  // exact path decides anything close.
  long long dom_bad = 0;
  long long exact_calls = 0;
  for (int n = 2; n <= 6; ++n) {
    for (long long m = 0; m < labelled_graph_count(n); ++m) {
      Graph g = graph_from_mask(n, m);
      double q1 = spectrum_of(g, MatrixKind::SignlessLaplacian).values[0];
      for (unsigned subset = 1; subset < (1u << (n - 1)); ++subset) {
        std::vector<int> blocks(n, 0);
        for (int v = 1; v < n; ++v)
          if ((subset >> (v - 1)) & 1) blocks[v] = 1;
        QuotientMatrix dom = dominating_quotient(g, make_partition(std::move(blocks)));
        double a = double(dom.at(0, 0)), b2 = double(dom.at(0, 1));
        double c = double(dom.at(1, 0)), d = double(dom.at(1, 1));
        double lam = 0.5 * ((a + d) + std::sqrt((a - d) * (a - d) + 4 * b2 * c));
        if (q1 <= lam - 1e-5) continue;
        ++exact_calls;
        double exact = quotient_max_eig(dom);
        if (!(q1 <= exact + 1e-8)) ++dom_bad;
      }
    }
  }
  expect(f, dom_bad == 0, "dominating quotient failures: " + std::to_string(dom_bad));
  expect(f, exact_calls > 0, "exact path never exercised");
}

// ---- criterion 7 ----------------------------------------------------------

void search_sanity(Failures& f) {
  SearchResult big = search_max_q_product(12, 20000, 1);
  expect(f, big.product >= 246.7, "search at n = 12 reached only " + fmt(big.product));

  SearchResult small = search_max_q_product(4, 500, 12345);
  double best = 0;
  for (long long m = 0; m < labelled_graph_count(4); ++m) {
    Graph g = graph_from_mask(4, m);
    double q1 = spectrum_of(g, MatrixKind::SignlessLaplacian).values[0];
    double q1b = spectrum_of(g.complement(), MatrixKind::SignlessLaplacian).values[0];
    best = std::max(best, q1 * q1b);
  }
  expect(f, small.product == best,
         "search at n = 4: " + fmt(small.product) + " vs exhaustive " + fmt(best));
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Failures&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"closed-form spectra of complete and complete-bipartite graphs (1e-9)",
       closed_form_spectra},
      {"exhaustive labelled sweep n <= 7: proved bounds hold, tight sets match structure",
       exhaustive_sweep},
      {"clique-join family: first product violation at n = 9; ratio study at 600/6000",
       counterexample_family},
      {"exact factorization of the four-block Q characteristic polynomial, n <= 20",
       factorization_identity},
      {"exact cubic identity suite and boundary roots (500 random tuples each)",
       identity_suite},
      {"interlacing / duality / bipartite similarity / dominating quotient properties",
       property_suites},
      {"search sanity: n = 12 reaches the family value; n = 4 matches brute force",
       search_sanity},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Failures f;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(f);
    } catch (const std::exception& e) {
      f.push_back(std::string("exception: ") + e.what());
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %zu: %s (%.1fs)\n", f.empty() ? "PASS" : "FAIL", i + 1,
                criteria[i].name, sec);
    for (const auto& msg : f) std::printf("       %s\n", msg.c_str());
    if (!f.empty()) ++failed;
    std::fflush(stdout);
  }
  if (failed == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d criteria FAILED\n", failed);
  return failed;
}
