#pragma once

#include <vector>

#include "core/graph.hpp"

namespace qlap {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

const char* to_string(MatrixKind kind);

// Dense symmetric matrix, row-major.
struct SymMatrix {
  int n = 0;
  std::vector<double> a;

  static SymMatrix zero(int n) { return SymMatrix{n, std::vector<double>(size_t(n) * n, 0.0)}; }
  double& at(int i, int j) { return a[size_t(i) * n + j]; }
  double at(int i, int j) const { return a[size_t(i) * n + j]; }
};

// The matrices use the positive semidefinite Laplacian convention L = D - A
// (zero row sums, smallest eigenvalue 0); Q = D + A.
SymMatrix build_matrix(const Graph& g, MatrixKind kind);
std::vector<long long> build_int_matrix(const Graph& g, MatrixKind kind);

struct Spectrum {
  std::vector<double> values;  // non-increasing
  MatrixKind kind = MatrixKind::Adjacency;
  double tol = 0.0;  // achieved absolute eigenvalue error bound
};

inline constexpr double kDefaultEigTol = 1e-10;

// Cyclic Jacobi on a dense symmetric matrix. Sweeps until the off-diagonal
// Frobenius norm drops below tol * max(1, inf-norm); throws on asymmetric
// input or when 100*n sweeps do not converge.
Spectrum eig_symmetric(SymMatrix m, MatrixKind kind, double tol = kDefaultEigTol);

Spectrum spectrum_of(const Graph& g, MatrixKind kind, double tol = kDefaultEigTol);

struct KeyValues {
  double mu1 = 0;    // largest Laplacian eigenvalue
  double mu_n1 = 0;  // algebraic connectivity
  double q1 = 0;     // signless Laplacian spectral radius
  double spread = 0; // mu1 - mu_n1
};

// Requires n >= 2 (mu_{n-1} is undefined below that).
KeyValues key_values(const Graph& g, double tol = kDefaultEigTol);

}  // namespace qlap
