#pragma once

#include <cstdint>
#include <string>

#include "core/graph.hpp"

namespace qlap {

struct RatioPoint {
  int n = 0;
  int best_k = 0;     // argmax of the closed-form product over 1 <= k < n
  double product = 0; // q1 * q1(complement) at best_k
  double ratio = 0;   // product / n^2
};

// Closed-form study of the clique-join family: q1 = n/2+k-1+sqrt(...)/2 and
// q1 of the complement = 2(n-k-1).
RatioPoint ratio_point(int n);
double hn_product_closed_form(int n, int k);

struct HnPoint {
  int n = 0;
  int k = 0;  // k with n = 6k+s, s in -3..2
  double q1 = 0;
  double q1_bar = 0;
  double product = 0;
};
HnPoint hn_point(int n);

// Limit of the maximized product over n^2 along the family: (5/18)(4+sqrt 14).
double ratio_limit_constant();

struct SearchResult {
  std::string graph6;
  double product = 0;
  double ratio = 0;  // product / n^2
};

// Randomized hill climbing over single edge flips maximizing
// q1(G)*q1(complement); restarts from a fresh random graph after 50*n stale
// steps. Fully deterministic for a fixed seed.
SearchResult search_max_q_product(int n, long long iterations, std::uint64_t seed);

}  // namespace qlap
