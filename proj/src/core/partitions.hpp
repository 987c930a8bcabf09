#pragma once

#include <array>
#include <variant>
#include <vector>

#include "core/graph.hpp"
#include "core/poly.hpp"

namespace qlap {

// Vertex partition into dense blocks 0..block_count-1, every block nonempty.
struct Partition {
  std::vector<int> block_of;
  int block_count = 0;
};

Partition make_partition(std::vector<int> block_of);

// Block row-sum matrix of Q(G). Exact mode requires constant row sums per
// block; Dominating mode takes the maximal row sum, the tightest choice for
// the q1 upper bound. Dominating quotients are only meaningful for the
// signless Laplacian (the argument scales rows by factors >= 1, which needs
// nonnegative entries), which is the only matrix built here.
struct QuotientMatrix {
  enum class Mode { Exact, Dominating };
  int m = 0;
  std::vector<long long> entries;  // row-major
  Mode mode = Mode::Exact;

  long long at(int i, int j) const { return entries[size_t(i) * m + j]; }
};

struct EquitableViolation {
  int vertex;
  int block;
};

std::variant<QuotientMatrix, EquitableViolation> check_equitable(const Graph& g,
                                                                 const Partition& p);
QuotientMatrix dominating_quotient(const Graph& g, const Partition& p);

inline constexpr int kMaxQuotientOrder = 8;

IntPoly quotient_char_poly(const QuotientMatrix& q);
// Largest real eigenvalue via the exact characteristic polynomial and Sturm
// bisection to 1e-12. Exact mode: equals q1(G); Dominating mode: >= q1(G).
double quotient_max_eig(const QuotientMatrix& q);

// ---- Cubics from the bipartite quotient analysis -------------------------

struct ComplexRootsError : std::domain_error {
  using std::domain_error::domain_error;
};

struct Cubic {
  enum class Tag { BipF, TLG };
  Tag tag = Tag::BipF;
  std::array<BigInt, 4> c;  // ascending; c[3] == 1

  IntPoly poly() const { return IntPoly({c[0], c[1], c[2], c[3]}); }
  BigRat eval(const BigRat& x) const { return poly().eval(x); }
  BigInt discriminant() const;
};

// f(x) = x^3 - (n+l+t)x^2 + (kt + nk + ln - lk + 2lt - k^2)x - ltn
Cubic thm_bip_cubic(int n, int k, int t, int l);
// g(x) = x^3 + (2-2n)x^2 + (n^2 + nk - 2n - k^2 - l - t)x
//        + (ln + nk^2 + 2nk - lk + tk - n^2k - 2k^2)
Cubic thm_tl_cubic(int n, int k, int t, int l);

struct CubicRoots {
  double z_min = 0, z_max = 0;
  RootBracket min_bracket, max_bracket;
};

// Requires three real roots; complex conjugate pairs (negative discriminant)
// throw ComplexRootsError, signalling parameters outside the theorems' range.
CubicRoots isolate_roots(const Cubic& c, double width = 1e-12);

// q1 of the complement-of-clique join: n/2 + k - 1 + sqrt(n^2+4nk-4n-4k^2+4)/2.
double hn_q1_closed_form(int n, int k);

}  // namespace qlap
