#include "core/families.hpp"

#include <cctype>
#include <stdexcept>

namespace qlap {

Graph make_complete(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph make_complete_bipartite(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("negative part size");
  GraphBuilder b(r + s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) b.add_edge(i, r + j);
  return std::move(b).build();
}

Graph make_path(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph make_join(const Graph& a, const Graph& b) {
  const int na = a.order(), nb = b.order();
  GraphBuilder out(na + nb);
  for (int u = 0; u < na; ++u)
    a.for_each_neighbor(u, [&](int v) {
      if (u < v) out.add_edge(u, v);
    });
  for (int u = 0; u < nb; ++u)
    b.for_each_neighbor(u, [&](int v) {
      if (u < v) out.add_edge(na + u, na + v);
    });
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) out.add_edge(u, na + v);
  return std::move(out).build();
}

Graph make_disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order(), nb = b.order();
  GraphBuilder out(na + nb);
  for (int u = 0; u < na; ++u)
    a.for_each_neighbor(u, [&](int v) {
      if (u < v) out.add_edge(u, v);
    });
  for (int u = 0; u < nb; ++u)
    b.for_each_neighbor(u, [&](int v) {
      if (u < v) out.add_edge(na + u, na + v);
    });
  return std::move(out).build();
}

Graph make_thm_bip_h(int n, int k, int t, int l) {
  if (!(2 <= k && 2 * k <= n)) throw std::invalid_argument("thmbiph needs 2 <= k <= n/2");
  if (!(1 <= t && t <= k)) throw std::invalid_argument("thmbiph needs 1 <= t <= k");
  if (!(1 <= l && l <= n - k)) throw std::invalid_argument("thmbiph needs 1 <= l <= n-k");
  // X = [0,k) with X0 = [0,t); Y = [k,n) with Y0 = [k,k+l).
  GraphBuilder b(n);
  for (int u = 0; u < t; ++u)
    for (int v = k; v < n; ++v) b.add_edge(u, v);
  for (int u = t; u < k; ++u)
    for (int v = k; v < k + l; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

int hn_clique_size(int n) {
  for (int s = -3; s <= 2; ++s) {
    if ((n - s) % 6 == 0 && (n - s) / 6 >= 1) return (n - s) / 6;
  }
  throw std::invalid_argument("no k >= 1 with n = 6k+s, s in -3..2 (needs n >= 3)");
}

Graph make_hn(int n) {
  const int k = hn_clique_size(n);
  return make_join(Graph::empty(n - k), make_complete(k));
}

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("family spec: " + what + " at position " + std::to_string(pos) +
                                " in '" + std::string(s) + "'");
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected a family name");
    return std::string(s.substr(start, pos - start));
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    return std::stoll(std::string(s.substr(start, pos - start)));
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  FamilySpec spec() {
    std::string name = ident();
    if (name == "join" || name == "union") {
      if (!eat('(')) fail("expected '('");
      FamilySpec a = spec();
      if (!eat(',')) fail("expected ','");
      FamilySpec b = spec();
      if (!eat(')')) fail("expected ')'");
      auto kind = name == "join" ? FamilySpec::Kind::Join : FamilySpec::Kind::DisjointUnion;
      return FamilySpec(kind, std::move(a), std::move(b));
    }
    std::vector<long long> params;
    if (eat(':')) {
      params.push_back(integer());
      // A comma only continues the list when a number follows; otherwise it
      // separates the arguments of an enclosing join/union.
      for (;;) {
        skip_ws();
        size_t peek = pos;
        if (peek >= s.size() || s[peek] != ',') break;
        ++peek;
        while (peek < s.size() && std::isspace(static_cast<unsigned char>(s[peek]))) ++peek;
        if (peek >= s.size() ||
            !(std::isdigit(static_cast<unsigned char>(s[peek])) || s[peek] == '-' || s[peek] == '+'))
          break;
        eat(',');
        params.push_back(integer());
      }
    }
    auto expect = [&](FamilySpec::Kind kind, size_t count) {
      if (params.size() != count)
        fail("'" + name + "' takes " + std::to_string(count) + " parameter(s)");
      return FamilySpec(kind, std::move(params));
    };
    if (name == "complete") return expect(FamilySpec::Kind::Complete, 1);
    if (name == "empty") return expect(FamilySpec::Kind::Empty, 1);
    if (name == "star") return expect(FamilySpec::Kind::Star, 1);
    if (name == "bipartite") return expect(FamilySpec::Kind::CompleteBipartite, 2);
    if (name == "hn") return expect(FamilySpec::Kind::Hn, 1);
    if (name == "thmbiph") return expect(FamilySpec::Kind::ThmBipH, 4);
    fail("unknown family '" + name + "'");
  }
};

int as_int(long long v) {
  if (v < 0 || v > kMaxOrder) throw std::invalid_argument("family parameter out of range");
  return static_cast<int>(v);
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  Parser p{text};
  FamilySpec spec = p.spec();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return spec;
}

Graph construct(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::Complete:
      return make_complete(as_int(spec.params[0]));
    case K::Empty:
      return Graph::empty(as_int(spec.params[0]));
    case K::Star:
      return make_star(as_int(spec.params[0]));
    case K::CompleteBipartite:
      return make_complete_bipartite(as_int(spec.params[0]), as_int(spec.params[1]));
    case K::Hn:
      return make_hn(as_int(spec.params[0]));
    case K::ThmBipH:
      return make_thm_bip_h(as_int(spec.params[0]), as_int(spec.params[1]),
                            as_int(spec.params[2]), as_int(spec.params[3]));
    case K::Join:
      return make_join(construct(*spec.left), construct(*spec.right));
    case K::DisjointUnion:
      return make_disjoint_union(construct(*spec.left), construct(*spec.right));
  }
  throw std::logic_error("unreachable family kind");
}

Graph construct_family(std::string_view text) { return construct(parse_family(text)); }

std::vector<std::string> expand_family_range(std::string_view text) {
  size_t dots = text.find("..");
  if (dots == std::string_view::npos) return {std::string(text)};
  if (text.find("..", dots + 2) != std::string_view::npos)
    throw std::invalid_argument("family spec: only one range parameter is supported");
  // Range bounds: digits immediately around "..".
  size_t lo_start = dots;
  while (lo_start > 0 && std::isdigit(static_cast<unsigned char>(text[lo_start - 1]))) --lo_start;
  size_t hi_end = dots + 2;
  while (hi_end < text.size() && std::isdigit(static_cast<unsigned char>(text[hi_end]))) ++hi_end;
  if (lo_start == dots || hi_end == dots + 2)
    throw std::invalid_argument("family spec: malformed range");
  long long lo = std::stoll(std::string(text.substr(lo_start, dots - lo_start)));
  long long hi = std::stoll(std::string(text.substr(dots + 2, hi_end - dots - 2)));
  if (lo > hi || hi - lo > 1000000) throw std::invalid_argument("family spec: bad range bounds");
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(hi - lo + 1));
  for (long long v = lo; v <= hi; ++v) {
    std::string item = std::string(text.substr(0, lo_start)) + std::to_string(v) +
                       std::string(text.substr(hi_end));
    parse_family(item);  // validate eagerly so errors carry the expanded text
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace qlap
