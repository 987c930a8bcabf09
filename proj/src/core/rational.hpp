#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace qlap {

// Exact rational on 64-bit words, canonical form (den > 0, gcd(|num|,den) = 1).
// Meant for quantities derived from graph statistics (degree sums, edge
// counts, bound right-hand sides), whose magnitudes stay well below the
// overflow line; comparisons and arithmetic run through 128-bit temporaries
// and throw if a result no longer fits.
struct Rat64 {
  long long num = 0;
  long long den = 1;

  Rat64() = default;
  Rat64(long long value) : num(value), den(1) {}  // NOLINT: implicit on purpose
  Rat64(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rat64: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num = n;
    den = d;
  }

  static Rat64 from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rat64: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lo = -__int128(INT64_MAX) - 1;
    constexpr __int128 hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) throw std::overflow_error("Rat64 overflow");
    Rat64 r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rat64 operator+(const Rat64& a, const Rat64& b) {
    return from_i128(__int128(a.num) * b.den + __int128(b.num) * a.den, __int128(a.den) * b.den);
  }
  friend Rat64 operator-(const Rat64& a, const Rat64& b) {
    return from_i128(__int128(a.num) * b.den - __int128(b.num) * a.den, __int128(a.den) * b.den);
  }
  friend Rat64 operator*(const Rat64& a, const Rat64& b) {
    return from_i128(__int128(a.num) * b.num, __int128(a.den) * b.den);
  }
  friend bool operator==(const Rat64& a, const Rat64& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rat64& a, const Rat64& b) {
    return __int128(a.num) * b.den < __int128(b.num) * a.den;
  }
  friend bool operator<=(const Rat64& a, const Rat64& b) {
    return __int128(a.num) * b.den <= __int128(b.num) * a.den;
  }
  friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
  friend bool operator>=(const Rat64& a, const Rat64& b) { return b <= a; }
};

}  // namespace qlap
