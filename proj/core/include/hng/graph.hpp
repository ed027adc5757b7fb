#ifndef HNG_GRAPH_HPP
#define HNG_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hng {

/// Bit v set means vertex v belongs to the set.
using VertexMask = std::uint32_t;
using Vertex = int;

inline constexpr int kMaxOrder = 32;

constexpr VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }

constexpr VertexMask full_mask(int order) noexcept {
  return order >= 32 ? ~VertexMask{0} : (VertexMask{1} << order) - 1;
}

constexpr int popcount(VertexMask m) noexcept { return std::popcount(m); }

constexpr Vertex lowest(VertexMask m) noexcept { return std::countr_zero(m); }

/// Calls f(v) for every vertex in m, ascending.
template <typename F>
constexpr void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

std::vector<Vertex> to_vertices(VertexMask m);

/// Simple undirected graph on at most 32 vertices, one adjacency word per vertex.
///
/// Rows beyond `order()` are always zero, so defaulted comparison is
/// structural equality of labeled graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const std::pair<Vertex, Vertex>> edges);

  int order() const noexcept { return order_; }
  VertexMask vertices() const noexcept { return full_mask(order_); }

  bool adjacent(Vertex u, Vertex v) const noexcept { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(Vertex v) const noexcept { return adj_[v]; }
  int degree(Vertex v) const noexcept { return popcount(adj_[v]); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void set_edge(Vertex u, Vertex v, bool present);

  int edge_count() const noexcept;
  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::array<VertexMask, kMaxOrder> adj_{};
};

enum class VertexRole { isolated, dominating, ordinary };

Graph complement(const Graph& g);

/// Restriction to `s`; retained vertices keep their relative (ascending) order.
Graph induced_subgraph(const Graph& g, VertexMask s);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

Graph delete_vertex(const Graph& g, Vertex v);

/// Appends vertex `order()` adjacent exactly to `neighbors`.
Graph add_vertex(const Graph& g, VertexMask neighbors);

/// Block-diagonal union; `a` occupies the low indices.
Graph disjoint_union(const Graph& a, const Graph& b);

/// A lone vertex is reported as isolated.
VertexRole vertex_role(const Graph& g, Vertex v);

/// Applies `perm` as new-index -> old-vertex: vertex i of the result is perm[i] of g.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

}  // namespace hng

#endif  // HNG_GRAPH_HPP
