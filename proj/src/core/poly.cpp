#include "core/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qlap {

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

BigRat IntPoly::eval(const BigRat& x) const {
  BigRat v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.zero() || b.zero()) return IntPoly();
  IntPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  out.trim();
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  out.trim();
  return out;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), BigInt(0));
  for (size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
  out.trim();
  return out;
}

IntPoly IntPoly::pow_times(const BigInt& root, int exponent) const {
  IntPoly out = *this;
  IntPoly lin = IntPoly::linear_root(root);
  for (int i = 0; i < exponent; ++i) out = out * lin;
  return out;
}

std::string IntPoly::to_string() const {
  if (zero()) return "0";
  std::ostringstream os;
  for (int d = degree(); d >= 0; --d) {
    if (c[d] == 0) continue;
    if (os.tellp() > 0) os << (c[d] > 0 ? " + " : " - ");
    else if (c[d] < 0) os << "-";
    BigInt a = abs(c[d]);
    if (a != 1 || d == 0) os << a.get_str();
    if (d > 0) os << "x";
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

namespace {

std::vector<BigInt> mat_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b, int n) {
  std::vector<BigInt> out(size_t(n) * n, BigInt(0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const BigInt& aik = a[size_t(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) out[size_t(i) * n + j] += aik * b[size_t(k) * n + j];
    }
  }
  return out;
}

}  // namespace

IntPoly char_poly_exact(const std::vector<BigInt>& m, int n) {
  if (n < 0 || n > kMaxCharPolyOrder)
    throw std::invalid_argument("char_poly_exact: dimension above cap");
  IntPoly p;
  p.c.assign(n + 1, BigInt(0));
  p.c[n] = 1;
  if (n == 0) return p;
  std::vector<BigInt> work(size_t(n) * n, BigInt(0));
  for (int i = 0; i < n; ++i) work[size_t(i) * n + i] = 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<BigInt> am = mat_mul(m, work, n);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += am[size_t(i) * n + i];
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), BigInt(-tr).get_mpz_t(), BigInt(k).get_mpz_t());
    if (r != 0) throw std::logic_error("char_poly_exact: inexact trace division");
    p.c[n - k] = q;
    if (k < n) {
      work = std::move(am);
      for (int i = 0; i < n; ++i) work[size_t(i) * n + i] += q;
    }
  }
  return p;
}

IntPoly char_poly_exact(std::span<const long long> m, int n) {
  std::vector<BigInt> big(m.size());
  for (size_t i = 0; i < m.size(); ++i) big[i] = BigInt(static_cast<long>(m[i]));
  return char_poly_exact(big, n);
}

bool divides_exactly(const IntPoly& divisor, const IntPoly& dividend) {
  if (divisor.zero()) return dividend.zero();
  // Rational long division; remainder must vanish.
  std::vector<BigRat> rem(dividend.c.begin(), dividend.c.end());
  const int dd = divisor.degree();
  const BigRat lead(divisor.c[dd]);
  while (static_cast<int>(rem.size()) - 1 >= dd) {
    BigRat q = rem.back() / lead;
    int shift = static_cast<int>(rem.size()) - 1 - dd;
    for (int i = 0; i <= dd; ++i) rem[shift + i] -= q * BigRat(divisor.c[i]);
    rem.pop_back();
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (static_cast<int>(rem.size()) - 1 < dd) break;
  }
  for (const auto& v : rem)
    if (v != 0) return false;
  return true;
}

std::vector<BigRat> root_power_sums(const IntPoly& monic, int k) {
  const int n = monic.degree();
  if (n < 0 || monic.c[n] != 1) throw std::invalid_argument("root_power_sums: monic input only");
  // p_k + c_{n-1} p_{k-1} + ... + c_{n-k+1} p_1 + k c_{n-k} = 0 (c_j = 0 for j < 0)
  std::vector<BigRat> p(k + 1);
  for (int i = 1; i <= k; ++i) {
    BigRat acc = 0;
    for (int j = 1; j < i; ++j) {
      int idx = n - j;
      if (idx >= 0) acc += BigRat(monic.c[idx]) * p[i - j];
    }
    int idx = n - i;
    BigRat tail = idx >= 0 ? BigRat(monic.c[idx]) * i : BigRat(0);
    p[i] = -acc - tail;
  }
  return std::vector<BigRat>(p.begin() + 1, p.end());
}

// ---- Sturm machinery -----------------------------------------------------

namespace {

struct RatPoly {
  std::vector<BigRat> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  BigRat eval(const BigRat& x) const {
    BigRat v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  }
  RatPoly derivative() const {
    RatPoly d;
    if (degree() < 1) return d;
    d.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * BigRat(static_cast<long>(i));
    return d;
  }
  void make_monic() {
    if (zero()) return;
    BigRat lead = c.back();
    for (auto& v : c) v /= lead;
  }
};

RatPoly to_rat(const IntPoly& p) {
  RatPoly r;
  r.c.assign(p.c.begin(), p.c.end());
  return r;
}

// Remainder of a by b (degree(b) >= 0), in place of a copy.
RatPoly poly_mod(const RatPoly& a, const RatPoly& b) {
  RatPoly rem = a;
  const int db = b.degree();
  const BigRat lead = b.c[db];
  while (rem.degree() >= db && !rem.zero()) {
    BigRat q = rem.c.back() / lead;
    int shift = rem.degree() - db;
    for (int i = 0; i <= db; ++i) rem.c[shift + i] -= q * b.c[i];
    rem.trim();
  }
  return rem;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  a.trim();
  b.trim();
  while (!b.zero()) {
    RatPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  a.make_monic();
  return a;
}

RatPoly poly_div_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly rem = a;
  const int db = b.degree();
  const BigRat lead = b.c[db];
  RatPoly q;
  q.c.assign(std::max(0, a.degree() - db) + 1, BigRat(0));
  while (rem.degree() >= db && !rem.zero()) {
    BigRat coeff = rem.c.back() / lead;
    int shift = rem.degree() - db;
    q.c[shift] = coeff;
    for (int i = 0; i <= db; ++i) rem.c[shift + i] -= coeff * b.c[i];
    rem.trim();
  }
  q.trim();
  return q;
}

struct SturmChain {
  std::vector<RatPoly> seq;  // squarefree part, its derivative, remainders

  explicit SturmChain(const IntPoly& p) {
    RatPoly f = to_rat(p);
    f.trim();
    if (f.degree() < 1) {
      seq.push_back(f);
      return;
    }
    RatPoly g = poly_gcd(f, f.derivative());
    if (g.degree() > 0) f = poly_div_exact(f, g);  // squarefree part
    f.make_monic();
    seq.push_back(f);
    seq.push_back(f.derivative());
    while (seq.back().degree() >= 1) {
      RatPoly r = poly_mod(seq[seq.size() - 2], seq.back());
      if (r.zero()) break;
      for (auto& v : r.c) v = -v;
      // Scaling by a positive constant keeps all signs intact.
      BigRat mag = abs(r.c.back());
      for (auto& v : r.c) v /= mag;
      seq.push_back(std::move(r));
    }
  }

  int variations_at(const BigRat& x) const {
    int prev = 0, var = 0;
    for (const auto& p : seq) {
      if (p.zero()) continue;
      BigRat v = p.eval(x);
      int s = sgn(v);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
    return var;
  }

  // Number of distinct real roots of the squarefree part in (a, b].
  int count(const BigRat& a, const BigRat& b) const { return variations_at(a) - variations_at(b); }

  const RatPoly& squarefree() const { return seq.front(); }
};

// Cauchy bound: all real roots lie in (-B, B).
BigRat cauchy_bound(const RatPoly& p) {
  BigRat lead = abs(p.c.back());
  BigRat maxc = 0;
  for (size_t i = 0; i + 1 < p.c.size(); ++i) maxc = std::max(maxc, BigRat(abs(p.c[i])));
  return 1 + maxc / lead;
}

double to_double(const BigRat& x) { return x.get_d(); }

}  // namespace

int count_distinct_real_roots(const IntPoly& p) {
  if (p.degree() < 1) return 0;
  SturmChain chain(p);
  BigRat b = cauchy_bound(chain.squarefree()) + 1;
  return chain.count(-b, b);
}

std::vector<RootBracket> isolate_real_roots(const IntPoly& p, double width) {
  std::vector<RootBracket> out;
  if (p.degree() < 1) return out;
  SturmChain chain(p);
  BigRat bound = cauchy_bound(chain.squarefree()) + 1;
  struct Item {
    BigRat lo, hi;
    int roots;
  };
  std::vector<Item> work;
  int total = chain.count(-bound, bound);
  if (total > 0) work.push_back({-bound, bound, total});
  std::vector<Item> done;
  while (!work.empty()) {
    Item it = std::move(work.back());
    work.pop_back();
    if (it.roots == 1 && to_double(it.hi - it.lo) <= width) {
      done.push_back(std::move(it));
      continue;
    }
    BigRat mid = (it.lo + it.hi) / 2;
    int left = chain.count(it.lo, mid);
    int right = it.roots - left;
    if (left > 0) work.push_back({it.lo, mid, left});
    if (right > 0) work.push_back({mid, it.hi, right});
  }
  for (const auto& it : done) out.push_back({to_double(it.lo), to_double(it.hi)});
  std::sort(out.begin(), out.end(), [](const RootBracket& a, const RootBracket& b) {
    return a.lo < b.lo;
  });
  return out;
}

namespace {

RootBracket extreme_root(const IntPoly& p, double width, bool largest) {
  if (p.degree() < 1) throw std::domain_error("no real roots");
  SturmChain chain(p);
  BigRat lo = -(cauchy_bound(chain.squarefree()) + 1);
  BigRat hi = -lo;
  if (chain.count(lo, hi) < 1) throw std::domain_error("no real roots");
  // Invariant: the sought root lies in (lo, hi].
  while (to_double(hi - lo) > width) {
    BigRat mid = (lo + hi) / 2;
    if (largest) {
      if (chain.count(mid, hi) >= 1)
        lo = mid;
      else
        hi = mid;
    } else {
      if (chain.count(lo, mid) >= 1)
        hi = mid;
      else
        lo = mid;
    }
  }
  return {to_double(lo), to_double(hi)};
}

}  // namespace

RootBracket largest_real_root_bracket(const IntPoly& p, double width) {
  return extreme_root(p, width, true);
}

RootBracket smallest_real_root_bracket(const IntPoly& p, double width) {
  return extreme_root(p, width, false);
}

double largest_real_root(const IntPoly& p, double width) {
  return largest_real_root_bracket(p, width).mid();
}

double smallest_real_root(const IntPoly& p, double width) {
  return smallest_real_root_bracket(p, width).mid();
}

}  // namespace qlap
