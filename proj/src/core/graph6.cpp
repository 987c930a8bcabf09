#include "core/graph6.hpp"

namespace qlap {

namespace {
constexpr int kLo = 63;
constexpr int kHi = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int payload_byte(std::string_view s, size_t off) {
  if (off >= s.size()) throw Graph6Error("truncated graph6 record", s.size());
  unsigned char c = static_cast<unsigned char>(s[off]);
  if (c < kLo || c > kHi) throw Graph6Error("graph6 byte out of range 63..126", off);
  return c - kLo;
}
}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  if (line.empty()) throw Graph6Error("empty graph6 record", 0);

  size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(line[0]) == 126) {
    if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126)
      throw Graph6Error("8-byte graph6 size form is not supported", 1);
    ++pos;
    for (int i = 0; i < 3; ++i) n = (n << 6) | payload_byte(line, pos++);
    if (n < 63) throw Graph6Error("non-canonical 4-byte size for n < 63", 1);
  } else {
    n = payload_byte(line, 0);
    pos = 1;
  }
  if (n > kMaxOrder) throw Graph6Error("graph order above supported range", 0);

  const long long nbits = n * (n - 1) / 2;
  const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (line.size() != pos + nbytes) {
    if (line.size() < pos + nbytes)
      throw Graph6Error("truncated graph6 bit payload", line.size());
    throw Graph6Error("trailing bytes after graph6 payload", pos + nbytes);
  }

  GraphBuilder b(static_cast<int>(n));
  long long bit = 0;
  int i = 0, j = 1;
  for (size_t byte = 0; byte < nbytes; ++byte) {
    int v = payload_byte(line, pos + byte);
    for (int k = 5; k >= 0; --k, ++bit) {
      int on = (v >> k) & 1;
      if (bit < nbits) {
        if (on) b.add_edge(i, j);
        if (++i == j) {
          i = 0;
          ++j;
        }
      } else if (on) {
        throw Graph6Error("nonzero padding bits", pos + byte);
      }
    }
  }
  return std::move(b).build();
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 258047) throw std::invalid_argument("graph order above graph6 4-byte range");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kLo));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kLo));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kLo));
    out.push_back(static_cast<char>((n & 0x3f) + kLo));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kLo));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kLo));
  return out;
}

}  // namespace qlap
