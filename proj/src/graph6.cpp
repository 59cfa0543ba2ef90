#include "eqdist/graph6.hpp"

#include "eqdist/errors.hpp"

namespace eqdist {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("truncated input", pos);
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw ParseError("byte " + std::to_string(c) + " outside 63..126", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  std::size_t n = 0;
  if (text[pos] != '~') {
    n = sextet(text, pos++);
  } else if (pos + 1 < text.size() && text[pos + 1] != '~') {
    ++pos;
    for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(text, pos++);
  } else {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | sextet(text, pos++);
  }
  const std::size_t bits = n ? n * (n - 1) / 2 : 0;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("truncated bit stream", text.size());
  if (text.size() - pos > bytes) throw ParseError("trailing bytes after bit stream", pos + bytes);

  Graph g(n);
  std::size_t k = 0;
  int cur = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      if (k % 6 == 0) cur = sextet(text, pos + k / 6);
      if ((cur >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Padding bits in the last byte must be zero.
  if (bits % 6 != 0 && (cur & ((1 << (6 - bits % 6)) - 1)) != 0)
    throw ParseError("non-zero padding bits", pos + bytes - 1);
  return g;
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int cur = 0, used = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      cur = (cur << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + cur));
        cur = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (cur << (6 - used))));
  return out;
}

}  // namespace eqdist
