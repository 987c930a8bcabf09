#include "core/search.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "core/families.hpp"
#include "core/graph6.hpp"
#include "core/jacobi.hpp"
#include "core/partitions.hpp"

namespace qlap {

double hn_product_closed_form(int n, int k) {
  return 2.0 * (n - k - 1) * hn_q1_closed_form(n, k);
}

RatioPoint ratio_point(int n) {
  if (n < 3) throw std::invalid_argument("ratio_point: needs n >= 3");
  RatioPoint p;
  p.n = n;
  for (int k = 1; k < n; ++k) {
    double prod = hn_product_closed_form(n, k);
    if (k == 1 || prod > p.product) {
      p.product = prod;
      p.best_k = k;
    }
  }
  p.ratio = p.product / (static_cast<double>(n) * n);
  return p;
}

HnPoint hn_point(int n) {
  HnPoint h;
  h.n = n;
  h.k = hn_clique_size(n);
  h.q1 = hn_q1_closed_form(n, h.k);
  h.q1_bar = 2.0 * (n - h.k - 1);
  h.product = h.q1 * h.q1_bar;
  return h;
}

double ratio_limit_constant() { return 5.0 / 18.0 * (4.0 + std::sqrt(14.0)); }

namespace {

double q1_of(const Graph& g) {
  return spectrum_of(g, MatrixKind::SignlessLaplacian).values[0];
}

double q_product(const Graph& g) { return q1_of(g) * q1_of(g.complement()); }

Graph random_graph(int n, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng() & 1) b.add_edge(i, j);
  return std::move(b).build();
}

std::pair<int, int> decode_pair(int n, unsigned long long idx) {
  for (int j = 1; j < n; ++j) {
    unsigned long long before = static_cast<unsigned long long>(j) * (j - 1) / 2;
    if (idx < before + j) return {static_cast<int>(idx - before), j};
  }
  throw std::logic_error("pair index out of range");
}

}  // namespace

SearchResult search_max_q_product(int n, long long iterations, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("search: needs n >= 4");
  std::mt19937_64 rng(seed);
  const unsigned long long pairs = static_cast<unsigned long long>(n) * (n - 1) / 2;

  Graph current = random_graph(n, rng);
  double cur_val = q_product(current);
  Graph best = current;
  double best_val = cur_val;
  long long stale = 0;
  const long long restart_after = 50ll * n;

  for (long long it = 0; it < iterations; ++it) {
    auto [u, v] = decode_pair(n, rng() % pairs);
    Graph cand = current.toggled(u, v);
    double val = q_product(cand);
    if (val > cur_val + 1e-12) {
      current = std::move(cand);
      cur_val = val;
      stale = 0;
    } else if (val >= cur_val - 1e-12) {
      // Sideways moves keep the walk from freezing on plateaus.
      current = std::move(cand);
      cur_val = val;
      ++stale;
    } else {
      ++stale;
    }
    if (cur_val > best_val) {
      best = current;
      best_val = cur_val;
    }
    if (stale >= restart_after) {
      current = random_graph(n, rng);
      cur_val = q_product(current);
      stale = 0;
      if (cur_val > best_val) {
        best = current;
        best_val = cur_val;
      }
    }
  }

  SearchResult out;
  out.graph6 = write_graph6(best);
  out.product = best_val;
  out.ratio = best_val / (static_cast<double>(n) * n);
  return out;
}

}  // namespace qlap
