#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace qlap {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Integer polynomial, coefficients in ascending degree order.
struct IntPoly {
  std::vector<BigInt> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }
  static IntPoly constant(long long v) { return IntPoly({BigInt(static_cast<long>(v))}); }
  // (x - r)
  static IntPoly linear_root(const BigInt& r) { return IntPoly({-r, BigInt(1)}); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  BigInt eval(const BigInt& x) const;
  BigRat eval(const BigRat& x) const;

  IntPoly pow_times(const BigInt& root, int exponent) const;  // *this * (x-root)^exponent

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }

  std::string to_string() const;
};

// Exact characteristic polynomial det(xI - M) of an integer matrix via the
// Faddeev-LeVerrier recurrence (all divisions exact). Guarded at n <= 64.
IntPoly char_poly_exact(std::span<const long long> m, int n);
IntPoly char_poly_exact(const std::vector<BigInt>& m, int n);
inline constexpr int kMaxCharPolyOrder = 64;

// True when divisor divides dividend exactly over Z[x].
bool divides_exactly(const IntPoly& divisor, const IntPoly& dividend);

// Power sums of the roots from the coefficients (Newton's identities);
// returns p_1..p_k for a monic polynomial.
std::vector<BigRat> root_power_sums(const IntPoly& monic, int k);

// ---- Real root isolation (Sturm chains over Q) --------------------------

struct RootBracket {
  double lo = 0, hi = 0;
  double mid() const { return 0.5 * (lo + hi); }
};

int count_distinct_real_roots(const IntPoly& p);
// All distinct real roots, ascending, each bracketed within `width`.
std::vector<RootBracket> isolate_real_roots(const IntPoly& p, double width);
// Extreme real roots refined to `width`; throw std::domain_error when the
// polynomial has no real root.
double largest_real_root(const IntPoly& p, double width);
double smallest_real_root(const IntPoly& p, double width);
RootBracket largest_real_root_bracket(const IntPoly& p, double width);
RootBracket smallest_real_root_bracket(const IntPoly& p, double width);

}  // namespace qlap
