#include "hng/sampling.hpp"

#include <numeric>
#include <vector>

namespace hng {

int GraphSampler::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = 0;
  do {
    x = rng_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

double GraphSampler::uniform_real() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

Graph GraphSampler::gnp(int n, double p) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (coin(p)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph GraphSampler::random_threshold(int n) {
  Graph g(0);
  for (int i = 0; i < n; ++i) g = add_vertex(g, coin(0.5) ? g.vertices() : 0);
  return shuffled(g);
}

Graph GraphSampler::random_split(int n) {
  const int k = uniform_int(0, n);
  const double p = uniform_real();
  Graph g(n);
  for (Vertex v = 0; v < k; ++v) {
    for (Vertex u = 0; u < v; ++u) g.add_edge(u, v);
  }
  for (Vertex v = k; v < n; ++v) {
    for (Vertex u = 0; u < k; ++u) {
      if (coin(p)) g.add_edge(u, v);
    }
  }
  return shuffled(g);
}

Graph GraphSampler::random_family_instance(int n, DFamily* family_out) {
  const DFamily family = static_cast<DFamily>(uniform_int(0, 2));
  if (family_out != nullptr) *family_out = family;
  const auto types = family_types(family);
  std::vector<C5Type> added;
  for (int i = 5; i < n; ++i) added.push_back(types[static_cast<std::size_t>(uniform_int(0, 2))]);
  return shuffled(c5_gadget(added));
}

Graph GraphSampler::shuffled(const Graph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[static_cast<std::size_t>(uniform_int(0, static_cast<int>(i) - 1))]);
  }
  return relabel(g, perm);
}

Graph GraphSampler::flip_random_edges(const Graph& g, int flips) {
  Graph h = g;
  if (g.order() < 2) return h;
  for (int i = 0; i < flips; ++i) {
    const Vertex u = uniform_int(0, g.order() - 1);
    Vertex v = uniform_int(0, g.order() - 2);
    if (v >= u) ++v;
    h.set_edge(u, v, !h.adjacent(u, v));
  }
  return h;
}

Graph GraphSampler::mixed(int n) {
  Graph g;
  switch (uniform_int(0, 3)) {
    case 0: return gnp(n, 0.05 + 0.9 * uniform_real());
    case 1: g = random_threshold(n); break;
    case 2: g = random_split(n); break;
    default: {
      // A D-family core padded with isolated or dominating vertices.
      const int core = uniform_int(5, n);
      g = random_family_instance(core);
      while (g.order() < n) g = add_vertex(g, coin(0.5) ? g.vertices() : 0);
      g = shuffled(g);
      break;
    }
  }
  if (coin(0.5)) g = complement(g);
  return flip_random_edges(g, uniform_int(0, 2));
}

}  // namespace hng
