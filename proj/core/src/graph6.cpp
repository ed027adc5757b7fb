#include "hng/graph6.hpp"

#include <cstdint>

#include "hng/error.hpp"

namespace hng {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(Errc::malformed_graph6, why); }

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) malformed("byte outside the printable range 63..126");
  return v;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) malformed("empty line");

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) malformed("truncated order field");
    n = (std::int64_t{sextet(text[1])} << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
  } else {
    if (text.size() < 8) malformed("truncated order field");
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | sextet(text[k]);
    pos = 8;
  }
  if (n > kMaxOrder) {
    throw Error(Errc::order_cap_exceeded, "graph6 order " + std::to_string(n) + " exceeds 32");
  }

  const auto order = static_cast<int>(n);
  const std::size_t pair_bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t expected = (pair_bits + 5) / 6;
  if (text.size() - pos != expected) {
    malformed("expected " + std::to_string(expected) + " data bytes, found " +
              std::to_string(text.size() - pos));
  }

  Graph g(order);
  std::size_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int byte = sextet(text[pos + k / 6]);
    const int pad = 6 - static_cast<int>(k % 6);
    if ((byte & ((1 << pad) - 1)) != 0) malformed("nonzero padding bits");
  }
  return g;
}

}  // namespace hng
