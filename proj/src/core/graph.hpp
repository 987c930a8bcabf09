#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/rational.hpp"

namespace qlap {

// Packed adjacency targets desk-scale orders only.
inline constexpr int kMaxOrder = 65536;

class Graph;

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  Graph build() &&;

 private:
  int n_;
  int words_;
  std::vector<uint64_t> bits_;
};

// Simple undirected graph on vertices 0..n-1 with adjacency stored as packed
// bit rows. Values are immutable once built; every edit returns a new graph.
class Graph {
 public:
  Graph() = default;

  static Graph empty(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  long long edge_count() const;
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  long long neighbor_degree_sum(int v) const;

  Graph complement() const;
  Graph without_edge(int u, int v) const;
  Graph with_edge(int u, int v) const;
  Graph toggled(int u, int v) const;

  const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
  int row_words() const { return words_; }

  template <typename F>
  void for_each_neighbor(int v, F&& f) const {
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
      uint64_t bits = r[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> component_labels() const;
  int component_count() const;
  bool connected() const { return component_count() <= 1; }
  // Component structure of the graph with `skip` removed.
  int component_count_without(int skip) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;

  void check_vertex(int v) const;
};

struct DegreeStats {
  std::vector<int> degree;
  // Average neighbor degree m(v) as an exact rational; empty optional when
  // d(v) = 0 (m is undefined there).
  std::vector<std::optional<Rat64>> avg_neighbor_degree;
  int max_degree = 0;
  int min_degree = 0;
  long long edges = 0;
};

DegreeStats degree_stats(const Graph& g);

// Bipartition with |Y| >= |X|, built per connected component: the smaller
// colour class of each component goes to X (ties: the class holding the
// component's smallest vertex), isolated vertices go to Y.
struct BipStructure {
  std::vector<int> x;
  std::vector<int> y;
  std::vector<int> x_full;  // vertices of X with degree |Y|
  std::vector<int> y_full;  // vertices of Y with degree |X|

  int k() const { return static_cast<int>(x.size()); }
  int t() const { return static_cast<int>(x_full.size()); }
  int ell() const { return static_cast<int>(y_full.size()); }
};

std::optional<BipStructure> bipartition(const Graph& g);

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// Labelled enumeration in edge-mask order. Pair (i,j), i<j, occupies bit
// j(j-1)/2 + i of the mask (the graph6 column-major order).
inline constexpr int kMaxEnumOrder = 8;
long long labelled_graph_count(int n);
Graph graph_from_mask(int n, unsigned long long mask);

}  // namespace qlap
