#include "core/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace qlap {

namespace {
int words_for(int n) { return (n + 63) / 64; }
}  // namespace

GraphBuilder::GraphBuilder(int n) : n_(n), words_(words_for(n)) {
  if (n < 0 || n > kMaxOrder) throw std::invalid_argument("graph order out of range");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t(1) << (v % 64);
  bits_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t(1) << (u % 64);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.bits_ = std::move(bits_);
  return g;
}

Graph Graph::empty(int n) { return GraphBuilder(n).build(); }

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (row(u)[v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v);
  const uint64_t* r = row(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (size_t i = 0; i < bits_.size(); ++i) total += std::popcount(bits_[i]);
  return total / 2;
}

long long Graph::neighbor_degree_sum(int v) const {
  long long s = 0;
  for_each_neighbor(v, [&](int u) { s += degree(u); });
  return s;
}

Graph Graph::complement() const {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.bits_.assign(bits_.size(), 0);
  if (n_ == 0) return g;
  const uint64_t tail =
      (n_ % 64 == 0) ? ~uint64_t(0) : ((uint64_t(1) << (n_ % 64)) - 1);
  for (int v = 0; v < n_; ++v) {
    uint64_t* out = g.bits_.data() + static_cast<size_t>(v) * words_;
    const uint64_t* in = row(v);
    for (int w = 0; w < words_; ++w) out[w] = ~in[w];
    out[words_ - 1] &= tail;
    out[v / 64] &= ~(uint64_t(1) << (v % 64));  // keep the diagonal empty
  }
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
  Graph g = *this;
  g.bits_[static_cast<size_t>(u) * words_ + v / 64] &= ~(uint64_t(1) << (v % 64));
  g.bits_[static_cast<size_t>(v) * words_ + u / 64] &= ~(uint64_t(1) << (u % 64));
  return g;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  Graph g = *this;
  g.bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t(1) << (v % 64);
  g.bits_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t(1) << (u % 64);
  return g;
}

Graph Graph::toggled(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  Graph g = *this;
  g.bits_[static_cast<size_t>(u) * words_ + v / 64] ^= uint64_t(1) << (v % 64);
  g.bits_[static_cast<size_t>(v) * words_ + u / 64] ^= uint64_t(1) << (u % 64);
  return g;
}

std::vector<int> Graph::component_labels() const {
  std::vector<int> label(n_, -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < n_; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for_each_neighbor(v, [&](int u) {
        if (label[u] == -1) {
          label[u] = next;
          stack.push_back(u);
        }
      });
    }
    ++next;
  }
  return label;
}

int Graph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

int Graph::component_count_without(int skip) const {
  check_vertex(skip);
  std::vector<int> label(n_, -1);
  label[skip] = -2;
  std::vector<int> stack;
  int comps = 0;
  for (int s = 0; s < n_; ++s) {
    if (label[s] != -1) continue;
    ++comps;
    label[s] = comps;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for_each_neighbor(v, [&](int u) {
        if (label[u] == -1) {
          label[u] = comps;
          stack.push_back(u);
        }
      });
    }
  }
  return comps;
}

DegreeStats degree_stats(const Graph& g) {
  const int n = g.order();
  DegreeStats st;
  st.degree.resize(n);
  st.avg_neighbor_degree.resize(n);
  long long degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    st.degree[v] = g.degree(v);
    degree_sum += st.degree[v];
  }
  st.edges = degree_sum / 2;
  st.max_degree = 0;
  st.min_degree = n == 0 ? 0 : st.degree[0];
  for (int v = 0; v < n; ++v) {
    st.max_degree = std::max(st.max_degree, st.degree[v]);
    st.min_degree = std::min(st.min_degree, st.degree[v]);
    if (st.degree[v] > 0) {
      long long s = 0;
      g.for_each_neighbor(v, [&](int u) { s += st.degree[u]; });
      st.avg_neighbor_degree[v] = Rat64(s, st.degree[v]);
    }
  }
  return st;
}

std::optional<BipStructure> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  BipStructure bip;
  std::vector<int> stack;
  std::vector<int> side0, side1;
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    side0.clear();
    side1.clear();
    colour[s] = 0;
    side0.push_back(s);
    stack.push_back(s);
    bool odd_cycle = false;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      bool failed = false;
      g.for_each_neighbor(v, [&](int u) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          (colour[u] == 0 ? side0 : side1).push_back(u);
          stack.push_back(u);
        } else if (colour[u] == colour[v]) {
          failed = true;
        }
      });
      if (failed) {
        odd_cycle = true;
        break;
      }
    }
    if (odd_cycle) return std::nullopt;
    // side0 holds the component's smallest vertex; on ties it becomes X.
    bool isolated = side0.size() == 1 && side1.empty();
    std::vector<int>* to_x = &side0;
    std::vector<int>* to_y = &side1;
    if (isolated || side0.size() > side1.size()) std::swap(to_x, to_y);
    bip.x.insert(bip.x.end(), to_x->begin(), to_x->end());
    bip.y.insert(bip.y.end(), to_y->begin(), to_y->end());
  }
  std::sort(bip.x.begin(), bip.x.end());
  std::sort(bip.y.begin(), bip.y.end());
  const int ky = static_cast<int>(bip.y.size());
  const int kx = static_cast<int>(bip.x.size());
  for (int v : bip.x)
    if (g.degree(v) == ky) bip.x_full.push_back(v);
  for (int v : bip.y)
    if (g.degree(v) == kx) bip.y_full.push_back(v);
  return bip;
}

long long labelled_graph_count(int n) {
  if (n < 0 || n > kMaxEnumOrder) throw std::invalid_argument("enumeration order out of range");
  return 1ll << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, unsigned long long mask) {
  if (n < 0 || n > kMaxEnumOrder) throw std::invalid_argument("enumeration order out of range");
  GraphBuilder b(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1) b.add_edge(i, j);
  return std::move(b).build();
}

}  // namespace qlap
