#ifndef HNG_GRAPH6_HPP
#define HNG_GRAPH6_HPP

#include <string>
#include <string_view>

#include "hng/graph.hpp"

namespace hng {

/// Standard graph6 encoding without header or trailing newline.
std::string graph6_encode(const Graph& g);

/// Accepts one graph6 line; a single trailing '\n' or "\r\n" and an optional
/// ">>graph6<<" header are tolerated. Throws Errc::malformed_graph6 or
/// Errc::order_cap_exceeded.
Graph graph6_decode(std::string_view text);

}  // namespace hng

#endif  // HNG_GRAPH6_HPP
