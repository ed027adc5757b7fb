// Properties checked over every graph of a given order, or over large random
// samples where full enumeration is out of reach.
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hng/canon.hpp"
#include "hng/enumeration.hpp"
#include "hng/families.hpp"
#include "hng/graph6.hpp"
#include "hng/invariants.hpp"
#include "hng/membership.hpp"
#include "hng/miner.hpp"
#include "hng/structure.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hng;

namespace {

const std::vector<GraphCatalog>& all_up_to_8() {
  static const std::vector<GraphCatalog> catalogs = enumerate_up_to(8);
  return catalogs;
}

template <typename F>
void for_each_graph_up_to_8(F&& f) {
  for (const GraphCatalog& c : all_up_to_8()) {
    for (const CanonicalCode& code : c.codes) f(code.graph());
  }
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

/// Tries every bijection; the degree check only skips hopeless pairs.
bool isomorphic_by_permutations(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || degree_sequence(a) != degree_sequence(b)) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < a.order() && same; ++u) {
      for (int v = u + 1; v < a.order() && same; ++v) same = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
    }
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("complement and restriction on random graphs up to order 10") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = trial % 10 + 1;
    const Graph g = testing::random_graph(rng, n);
    REQUIRE(complement(complement(g)) == g);
    const VertexMask s = rng() & full_mask(n);
    const VertexMask t = rng() & s;
    // Restricting g[s] to the positions of t inside s equals g[t].
    VertexMask inner = 0;
    int pos = 0;
    for_each_vertex(s, [&](Vertex v) {
      if (t & bit(v)) inner |= bit(pos);
      ++pos;
    });
    REQUIRE(induced_subgraph(induced_subgraph(g, s), inner) == induced_subgraph(g, t));
  }
}

TEST_CASE("graph6 round trip and role swap on every graph up to order 8") {
  for_each_graph_up_to_8([](const Graph& g) {
    const std::string text = graph6_encode(g);
    REQUIRE(text == oracle::graph6(g));
    REQUIRE(graph6_decode(text) == g);
    if (g.order() < 2) return;
    const Graph c = complement(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const VertexRole r = vertex_role(g, v);
      const VertexRole expected = r == VertexRole::isolated     ? VertexRole::dominating
                                  : r == VertexRole::dominating ? VertexRole::isolated
                                                                : VertexRole::ordinary;
      REQUIRE(vertex_role(c, v) == expected);
    }
  });
}

TEST_CASE("isomorphism agrees with a permutation oracle on 10^4 pairs") {
  std::mt19937_64 rng(102);
  int positives = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = trial % 7 + 1;
    const Graph a = testing::random_graph(rng, n);
    Graph b;
    switch (trial % 3) {
      case 0: b = relabel(a, testing::random_permutation(rng, n)); break;
      case 1: b = testing::random_graph(rng, n); break;
      default: {
        // Same edge count, one edge moved: often close to isomorphic.
        b = relabel(a, testing::random_permutation(rng, n));
        if (n >= 3 && b.edge_count() > 0) {
          const Graph c = complement(b);
          if (c.edge_count() > 0) {
            std::vector<std::pair<Vertex, Vertex>> on, off;
            for (int u = 0; u < n; ++u) {
              for (int v = u + 1; v < n; ++v) (b.adjacent(u, v) ? on : off).emplace_back(u, v);
            }
            const auto [u1, v1] = on[rng() % on.size()];
            const auto [u2, v2] = off[rng() % off.size()];
            b.remove_edge(u1, v1);
            b.add_edge(u2, v2);
          }
        }
      }
    }
    const bool expected = isomorphic_by_permutations(a, b);
    positives += expected;
    REQUIRE(are_isomorphic(a, b) == expected);
  }
  CHECK(positives > 3333);
}

TEST_CASE("containment laws") {
  CHECK(contains_subgraph(complete(4), cycle(4)).has_value());
  CHECK_FALSE(contains_induced(complete(4), cycle(4)).has_value());

  std::mt19937_64 rng(103);
  const Graph patterns[] = {path(4), cycle(4), claw(), named("2K2"), cycle(5), named("K1+P3")};
  for (int trial = 0; trial < 1500; ++trial) {
    const Graph host = testing::random_graph(rng, trial % 8 + 1);
    REQUIRE(contains_induced(host, host) == std::optional<VertexMask>(host.vertices()));
    const Graph co_host = complement(host);
    for (const Graph& p : patterns) {
      const bool induced = contains_induced(host, p).has_value();
      if (induced) REQUIRE(contains_subgraph(host, p).has_value());
      REQUIRE(induced == contains_induced(co_host, complement(p)).has_value());
    }
  }
}

TEST_CASE("invariant inequalities on every graph up to order 8") {
  for_each_graph_up_to_8([](const Graph& g) {
    const int n = g.order();
    const int omega = clique_number(g);
    const int alpha = independence_number(g);
    const int chi = chromatic_number(g);
    const int theta = clique_cover_number(g);
    REQUIRE(omega <= chi);
    REQUIRE(alpha <= theta);
    REQUIRE(chi + theta <= n + 1);
    REQUIRE(theta == chromatic_number(complement(g)));
    REQUIRE(is_threshold(g) == is_threshold_by_forbidden_triple(g));
    REQUIRE(is_perfect(g) == oracle::is_perfect(g));
  });
}

TEST_CASE("perfection on random graphs of order 9") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 3000; ++trial) {
    const Graph g = testing::random_graph(rng, 9);
    REQUIRE(is_perfect(g) == oracle::is_perfect(g));
  }
}

TEST_CASE("a vertex with stable neighborhood and no theta-distinct neighbor is theta-distinct") {
  int applicable = 0;
  for_each_graph_up_to_8([&](const Graph& g) {
    const VertexMask distinct = distinct_vertices(g, DistinctMode::theta);
    for (Vertex v = 0; v < g.order(); ++v) {
      const VertexMask nbrs = g.neighbors(v);
      bool stable = true;
      for_each_vertex(nbrs, [&](Vertex u) { stable = stable && (g.neighbors(u) & nbrs) == 0; });
      if (!stable) continue;
      // In g - v the vertices above v shift down by one.
      const VertexMask below = nbrs & (bit(v) - 1);
      const VertexMask shifted = below | ((nbrs & ~(bit(v + 1) - 1)) >> 1);
      if ((distinct_vertices(delete_vertex(g, v), DistinctMode::theta) & shifted) != 0) continue;
      ++applicable;
      REQUIRE(((distinct >> v) & 1U) == 1U);
    }
  });
  CHECK(applicable > 0);
}

TEST_CASE("hereditary defect laws on every graph up to order 8") {
  const ObstructionSet& f = testing::mined_f();
  for_each_graph_up_to_8([&](const Graph& g) {
    const DefectReport r = hereditary_ng_defect(g);
    REQUIRE(r.hereditary_defect >= r.defect);
    REQUIRE(r.hereditary_defect == hereditary_ng_defect(complement(g)).hereditary_defect);
    for (Vertex v = 0; v < g.order() && g.order() > 1; ++v) {
      REQUIRE(hereditary_ng_defect(delete_vertex(g, v)).hereditary_defect <= r.hereditary_defect);
    }
    REQUIRE((r.hereditary_defect == 0) == is_threshold(g));
    REQUIRE((r.hereditary_defect <= 1) == !find_obstruction(g, f).has_value());
  });
}

TEST_CASE("structure of 1-HNG graphs up to order 8") {
  const ObstructionSet& f = testing::mined_f();
  int members = 0;
  for_each_graph_up_to_8([&](const Graph& g) {
    if (!in_hng(g, 1)) return;
    ++members;
    const int omega = clique_number(g);
    const int chi = chromatic_number(g);
    REQUIRE(chi <= omega + 1);
    bool some_perfect = g.order() == 0;
    for (Vertex v = 0; v < g.order() && !some_perfect; ++v) some_perfect = is_perfect(delete_vertex(g, v));
    REQUIRE(some_perfect);
    REQUIRE(clique_number_fast(g, f) == omega);
    REQUIRE(chromatic_number_fast(g, f) == chi);
  });
  CHECK(members == 3145);
}
