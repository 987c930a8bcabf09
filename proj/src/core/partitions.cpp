#include "core/partitions.hpp"

#include <cmath>
#include <stdexcept>

namespace qlap {

Partition make_partition(std::vector<int> block_of) {
  Partition p;
  p.block_of = std::move(block_of);
  int m = 0;
  for (int b : p.block_of) {
    if (b < 0) throw std::invalid_argument("partition: negative block index");
    m = std::max(m, b + 1);
  }
  std::vector<char> seen(m, 0);
  for (int b : p.block_of) seen[b] = 1;
  for (int b = 0; b < m; ++b)
    if (!seen[b]) throw std::invalid_argument("partition: empty block " + std::to_string(b));
  p.block_count = m;
  return p;
}

namespace {

// Row sum of Q(G) restricted to the columns of one block:
// adjacency into the block plus the degree when v itself lies in it.
long long q_block_row_sum(const Graph& g, const std::vector<int>& block_of, int v, int block) {
  long long s = block_of[v] == block ? g.degree(v) : 0;
  g.for_each_neighbor(v, [&](int u) {
    if (block_of[u] == block) ++s;
  });
  return s;
}

void check_sizes(const Graph& g, const Partition& p) {
  if (static_cast<int>(p.block_of.size()) != g.order())
    throw std::invalid_argument("partition size does not match graph order");
}

}  // namespace

std::variant<QuotientMatrix, EquitableViolation> check_equitable(const Graph& g,
                                                                 const Partition& p) {
  check_sizes(g, p);
  const int m = p.block_count;
  QuotientMatrix q;
  q.m = m;
  q.mode = QuotientMatrix::Mode::Exact;
  q.entries.assign(size_t(m) * m, -1);
  for (int v = 0; v < g.order(); ++v) {
    const int bv = p.block_of[v];
    for (int b = 0; b < m; ++b) {
      long long s = q_block_row_sum(g, p.block_of, v, b);
      long long& cell = q.entries[size_t(bv) * m + b];
      if (cell == -1)
        cell = s;
      else if (cell != s)
        return EquitableViolation{v, b};
    }
  }
  return q;
}

QuotientMatrix dominating_quotient(const Graph& g, const Partition& p) {
  check_sizes(g, p);
  const int m = p.block_count;
  QuotientMatrix q;
  q.m = m;
  q.mode = QuotientMatrix::Mode::Dominating;
  q.entries.assign(size_t(m) * m, 0);
  for (int v = 0; v < g.order(); ++v) {
    const int bv = p.block_of[v];
    for (int b = 0; b < m; ++b) {
      long long s = q_block_row_sum(g, p.block_of, v, b);
      long long& cell = q.entries[size_t(bv) * m + b];
      cell = std::max(cell, s);
    }
  }
  return q;
}

IntPoly quotient_char_poly(const QuotientMatrix& q) {
  if (q.m > kMaxQuotientOrder) throw std::invalid_argument("quotient dimension above cap");
  return char_poly_exact(std::span<const long long>(q.entries.data(), q.entries.size()), q.m);
}

double quotient_max_eig(const QuotientMatrix& q) {
  if (q.m == 0) throw std::invalid_argument("empty quotient matrix");
  return largest_real_root(quotient_char_poly(q), 1e-12);
}

// ---- Cubics ---------------------------------------------------------------

namespace {
void check_bip_params(int n, int k, int t, int l) {
  if (!(2 <= k && 2 * k <= n) || !(1 <= t && t <= k) || !(1 <= l && l <= n - k))
    throw std::invalid_argument("cubic parameters outside 2<=k<=n/2, 1<=t<=k, 1<=l<=n-k");
}
}  // namespace

Cubic thm_bip_cubic(int n_, int k_, int t_, int l_) {
  check_bip_params(n_, k_, t_, l_);
  BigInt n(n_), k(k_), t(t_), l(l_);
  Cubic c;
  c.tag = Cubic::Tag::BipF;
  c.c[3] = 1;
  c.c[2] = -(n + l + t);
  c.c[1] = k * t + n * k + l * n - l * k + 2 * l * t - k * k;
  c.c[0] = -(l * t * n);
  return c;
}

Cubic thm_tl_cubic(int n_, int k_, int t_, int l_) {
  check_bip_params(n_, k_, t_, l_);
  BigInt n(n_), k(k_), t(t_), l(l_);
  Cubic c;
  c.tag = Cubic::Tag::TLG;
  c.c[3] = 1;
  c.c[2] = 2 - 2 * n;
  c.c[1] = n * n + n * k - 2 * n - k * k - l - t;
  c.c[0] = l * n + n * k * k + 2 * n * k - l * k + t * k - n * n * k - 2 * k * k;
  return c;
}

BigInt Cubic::discriminant() const {
  // x^3 + b x^2 + c x + d
  const BigInt& b = c[2];
  const BigInt& cc = c[1];
  const BigInt& d = c[0];
  return 18 * b * cc * d - 4 * b * b * b * d + b * b * cc * cc - 4 * cc * cc * cc - 27 * d * d;
}

CubicRoots isolate_roots(const Cubic& c, double width) {
  if (c.discriminant() < 0)
    throw ComplexRootsError("cubic has a complex conjugate root pair");
  IntPoly p = c.poly();
  CubicRoots out;
  out.min_bracket = smallest_real_root_bracket(p, width);
  out.max_bracket = largest_real_root_bracket(p, width);
  out.z_min = out.min_bracket.mid();
  out.z_max = out.max_bracket.mid();
  return out;
}

double hn_q1_closed_form(int n, int k) {
  if (!(1 <= k && k < n)) throw std::invalid_argument("hn_q1_closed_form: needs 1 <= k < n");
  const double nd = n, kd = k;
  const double radicand = nd * nd + 4 * nd * kd - 4 * nd - 4 * kd * kd + 4;
  if (radicand < 0) throw std::logic_error("hn_q1_closed_form: negative radicand");
  return nd / 2 + kd - 1 + 0.5 * std::sqrt(radicand);
}

}  // namespace qlap
