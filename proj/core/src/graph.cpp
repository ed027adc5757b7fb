#include "hng/graph.hpp"

#include <string>

#include "hng/error.hpp"

namespace hng {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parameter_out_of_range: return "parameter-out-of-range";
    case Errc::order_cap_exceeded: return "order-cap-exceeded";
    case Errc::invalid_vertex: return "invalid-vertex-index";
    case Errc::malformed_graph6: return "malformed-graph6";
    case Errc::order_out_of_range: return "order-out-of-range";
    case Errc::io_error: return "io-error";
    case Errc::corrupt_catalog: return "corrupt-catalog";
    case Errc::stale_cache: return "stale-cache";
    case Errc::too_many_edges: return "too-many-edges";
    case Errc::not_in_class: return "not-in-class";
    case Errc::invalid_type_for_family: return "invalid-type-for-family";
    case Errc::missing_obstruction_set: return "missing-obstruction-set";
    case Errc::missing_dependency: return "missing-dependency";
    case Errc::usage: return "usage";
  }
  return "unknown";
}

std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
  return out;
}

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw Error(Errc::parameter_out_of_range, "negative order");
  if (order > kMaxOrder) {
    throw Error(Errc::order_cap_exceeded, "order " + std::to_string(order) + " exceeds 32");
  }
}

Graph Graph::from_edges(int order, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    throw Error(Errc::invalid_vertex,
                "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(order_));
  }
}

void Graph::add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }

void Graph::remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }

void Graph::set_edge(Vertex u, Vertex v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::invalid_vertex, "loops are not allowed");
  if (present) {
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  } else {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order_; ++u) {
    for_each_vertex(adj_[u] & ~full_mask(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  const VertexMask all = g.vertices();
  for (Vertex u = 0; u < g.order(); ++u) {
    for_each_vertex(all & ~g.neighbors(u) & ~full_mask(u + 1), [&](Vertex v) { out.add_edge(u, v); });
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexMask s) {
  if ((s & ~g.vertices()) != 0) {
    throw Error(Errc::invalid_vertex, "subset contains vertices outside the graph");
  }
  const std::vector<Vertex> keep = to_vertices(s);
  return relabel(g, keep);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexMask m = 0;
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) {
      throw Error(Errc::invalid_vertex, "vertex " + std::to_string(v) + " outside the graph");
    }
    m |= bit(v);
  }
  return induced_subgraph(g, m);
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw Error(Errc::invalid_vertex, "vertex " + std::to_string(v) + " outside the graph");
  }
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

Graph add_vertex(const Graph& g, VertexMask neighbors) {
  if (g.order() + 1 > kMaxOrder) throw Error(Errc::order_cap_exceeded, "cannot add a 33rd vertex");
  if ((neighbors & ~g.vertices()) != 0) {
    throw Error(Errc::invalid_vertex, "neighbor set contains vertices outside the graph");
  }
  Graph out(g.order() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  const Vertex fresh = g.order();
  for_each_vertex(neighbors, [&](Vertex u) { out.add_edge(u, fresh); });
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxOrder) {
    throw Error(Errc::order_cap_exceeded, "disjoint union exceeds 32 vertices");
  }
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

VertexRole vertex_role(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw Error(Errc::invalid_vertex, "vertex " + std::to_string(v) + " outside the graph");
  }
  const int d = g.degree(v);
  if (d == 0) return VertexRole::isolated;
  if (d == g.order() - 1) return VertexRole::dominating;
  return VertexRole::ordinary;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  Graph out(static_cast<int>(perm.size()));
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (g.adjacent(perm[i], perm[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return out;
}

int component_count(const Graph& g) {
  VertexMask unseen = g.vertices();
  int count = 0;
  while (unseen != 0) {
    ++count;
    VertexMask frontier = bit(lowest(unseen));
    VertexMask reached = frontier;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      frontier = next & ~reached;
      reached |= next;
    }
    unseen &= ~reached;
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

}  // namespace hng
