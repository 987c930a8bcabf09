#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace qlap {

// Constructors for the graph families the bounds are exercised on.
//
// Text grammar (used by the CLI and the scan family source):
//   spec   := name ':' int (',' int)*
//           | name '(' spec ',' spec ')'
//   names  : complete, empty, star, bipartite(r,s), hn(n),
//            thmbiph(n,k,t,l), join(a,b), union(a,b)
struct FamilySpec {
  enum class Kind { Complete, Empty, Star, CompleteBipartite, Hn, ThmBipH, Join, DisjointUnion };
  Kind kind;
  std::vector<long long> params;
  std::unique_ptr<FamilySpec> left, right;

  FamilySpec(Kind k, std::vector<long long> p) : kind(k), params(std::move(p)) {}
  FamilySpec(Kind k, FamilySpec a, FamilySpec b)
      : kind(k),
        left(std::make_unique<FamilySpec>(std::move(a))),
        right(std::make_unique<FamilySpec>(std::move(b))) {}
  FamilySpec(FamilySpec&&) = default;
  FamilySpec& operator=(FamilySpec&&) = default;
};

FamilySpec parse_family(std::string_view text);
Graph construct(const FamilySpec& spec);
Graph construct_family(std::string_view text);

// One parameter may be written as "a..b"; the spec is then expanded over that
// range. A plain spec expands to itself. Nested join/union specs do not take
// ranges.
std::vector<std::string> expand_family_range(std::string_view text);

Graph make_complete(int n);
Graph make_star(int n);                   // centre is vertex 0
Graph make_complete_bipartite(int r, int s);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_join(const Graph& a, const Graph& b);
Graph make_disjoint_union(const Graph& a, const Graph& b);

// Four-block bipartite graph: t vertices of X joined to all of Y, the other
// k-t joined to Y0 only, |Y0| = l. Requires 2 <= k <= n/2, 1 <= t <= k,
// 1 <= l <= n-k.
Graph make_thm_bip_h(int n, int k, int t, int l);

// k with n = 6k+s, s in {-3..2} and k >= 1; representable only for n >= 3.
int hn_clique_size(int n);
// Complement of K_{n-k} joined with K_k, k = hn_clique_size(n).
Graph make_hn(int n);

}  // namespace qlap
