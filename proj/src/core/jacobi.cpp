#include "core/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qlap {

const char* to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::SignlessLaplacian: return "signless_laplacian";
  }
  return "?";
}

SymMatrix build_matrix(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  SymMatrix m = SymMatrix::zero(n);
  for (int v = 0; v < n; ++v) {
    double off = kind == MatrixKind::Laplacian ? -1.0 : 1.0;
    g.for_each_neighbor(v, [&](int u) { m.at(v, u) = off; });
    if (kind != MatrixKind::Adjacency) m.at(v, v) = g.degree(v);
  }
  return m;
}

std::vector<long long> build_int_matrix(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  std::vector<long long> m(size_t(n) * n, 0);
  for (int v = 0; v < n; ++v) {
    long long off = kind == MatrixKind::Laplacian ? -1 : 1;
    g.for_each_neighbor(v, [&](int u) { m[size_t(v) * n + u] = off; });
    if (kind != MatrixKind::Adjacency) m[size_t(v) * n + v] = g.degree(v);
  }
  return m;
}

namespace {

double inf_norm(const SymMatrix& m) {
  double best = 0;
  for (int i = 0; i < m.n; ++i) {
    double row = 0;
    for (int j = 0; j < m.n; ++j) row += std::abs(m.at(i, j));
    best = std::max(best, row);
  }
  return best;
}

double off_frobenius(const SymMatrix& m) {
  double s = 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) s += m.at(i, j) * m.at(i, j);
  return std::sqrt(2.0 * s);
}

}  // namespace

Spectrum eig_symmetric(SymMatrix m, MatrixKind kind, double tol) {
  const int n = m.n;
  if (tol <= 0) throw std::invalid_argument("eig_symmetric: tolerance must be positive");
  Spectrum spec;
  spec.kind = kind;
  if (n == 0) return spec;

  const double scale = std::max(1.0, inf_norm(m));
  const double thresh = tol * scale;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m.at(i, j) - m.at(j, i)) > thresh)
        throw std::invalid_argument("eig_symmetric: matrix is not symmetric");

  const long long max_sweeps = 100ll * std::max(1, n);
  double off = off_frobenius(m);
  long long sweep = 0;
  while (off > thresh) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("eig_symmetric: no convergence within the sweep cap");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m.at(p, q);
        if (apq == 0.0) continue;
        const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e153) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = m.at(p, p), aqq = m.at(q, q);
        m.at(p, p) = app - t * apq;
        m.at(q, q) = aqq + t * apq;
        m.at(p, q) = 0.0;
        m.at(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = m.at(i, p), aiq = m.at(i, q);
          m.at(i, p) = aip - s * (aiq + tau * aip);
          m.at(p, i) = m.at(i, p);
          m.at(i, q) = aiq + s * (aip - tau * aiq);
          m.at(q, i) = m.at(i, q);
        }
      }
    }
    off = off_frobenius(m);
  }

  spec.values.resize(n);
  for (int i = 0; i < n; ++i) spec.values[i] = m.at(i, i);
  std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
  spec.tol = off;
  return spec;
}

Spectrum spectrum_of(const Graph& g, MatrixKind kind, double tol) {
  return eig_symmetric(build_matrix(g, kind), kind, tol);
}

KeyValues key_values(const Graph& g, double tol) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("key_values: needs n >= 2");
  Spectrum lap = spectrum_of(g, MatrixKind::Laplacian, tol);
  Spectrum sig = spectrum_of(g, MatrixKind::SignlessLaplacian, tol);
  KeyValues kv;
  kv.mu1 = lap.values[0];
  kv.mu_n1 = lap.values[n - 2];
  kv.q1 = sig.values[0];
  kv.spread = kv.mu1 - kv.mu_n1;
  return kv;
}

}  // namespace qlap
