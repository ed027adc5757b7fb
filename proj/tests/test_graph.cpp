#include <doctest.h>

#include "hng/canon.hpp"
#include "hng/error.hpp"
#include "hng/families.hpp"
#include "hng/graph.hpp"
#include "hng/graph6.hpp"
#include "hng/invariants.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hng;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("named families have the expected shape") {
  const Graph c5 = cycle(5);
  CHECK(c5.order() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(chromatic_number(c5) == 3);
  CHECK(clique_cover_number(c5) == 3);

  const Graph p1 = path(1);
  CHECK(p1.order() == 1);
  CHECK(p1.edge_count() == 0);

  const Graph s = double_star(3, 4);
  CHECK(s.order() == 7);
  CHECK(s.adjacent(0, 1));
  CHECK(s.degree(0) == 3);
  CHECK(s.degree(1) == 4);
  CHECK(sorted_degrees(s) == std::vector<int>{1, 1, 1, 1, 1, 3, 4});

  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK(claw().degree(0) == 3);
  CHECK(sun_with_pendant().edge_count() == 10);
}

TEST_CASE("family parameters are validated") {
  CHECK_THROWS_AS(cycle(2), Error);
  CHECK_THROWS_AS(path(0), Error);
  CHECK_THROWS_AS(double_star(0, 3), Error);
  try {
    cycle(40);
    FAIL("expected order_cap_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_cap_exceeded);
  }
  try {
    complete_bipartite(0, 2);
    FAIL("expected parameter_out_of_range");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parameter_out_of_range);
  }
}

TEST_CASE("graph expressions") {
  CHECK(named("3K2").edge_count() == 3);
  CHECK(named("3K2").order() == 6);
  CHECK(named("P5+P3").order() == 8);
  CHECK(named("P5+P3").edge_count() == 6);
  CHECK(component_count(named("P5+P3")) == 2);
  CHECK(are_isomorphic(named("co-C5"), cycle(5)));
  CHECK(are_isomorphic(named("K2,3"), complete_bipartite(2, 3)));
  CHECK(are_isomorphic(named("S2,3"), double_star(2, 3)));
  CHECK_THROWS_AS(named("Q4"), Error);
  CHECK_THROWS_AS(named("C5+"), Error);
  CHECK_THROWS_AS(named("S3"), Error);
}

TEST_CASE("complement") {
  CHECK(complement(complete(5)) == empty_graph(5));
  CHECK(are_isomorphic(complement(cycle(5)), cycle(5)));
  CHECK(complement(complement(path(4))) == path(4));
  CHECK(complement(Graph(0)).order() == 0);
}

TEST_CASE("induced subgraphs and vertex deletion") {
  CHECK(induced_subgraph(cycle(5), 0b01111) == path(4));
  CHECK(induced_subgraph(cycle(7), 0b0111111) == path(6));
  const Graph g = named("C4+P3");
  CHECK(induced_subgraph(g, g.vertices()) == g);
  for (Vertex v = 0; v < 3; ++v) CHECK(delete_vertex(complete(3), v) == complete(2));
  for (Vertex v = 0; v < 5; ++v) CHECK(are_isomorphic(delete_vertex(cycle(5), v), path(4)));
  CHECK(are_isomorphic(delete_vertex(claw(), 1), path(3)));
  CHECK_THROWS_AS(delete_vertex(cycle(5), 5), Error);
  CHECK_THROWS_AS(induced_subgraph(cycle(5), VertexMask{1} << 7), Error);
  const Vertex bad[] = {0, 9};
  CHECK_THROWS_AS(induced_subgraph(cycle(5), bad), Error);
}

TEST_CASE("adding vertices and disjoint unions") {
  CHECK(add_vertex(complete(2), 0) == disjoint_union(complete(2), Graph(1)));
  CHECK(add_vertex(complete(3), 0b111) == complete(4));
  CHECK(are_isomorphic(add_vertex(path(3), 0b101), cycle(4)));
  CHECK_THROWS_AS(add_vertex(Graph(kMaxOrder), 0), Error);

  const Graph k2 = complete(2);
  const Graph three = disjoint_union(disjoint_union(k2, k2), k2);
  CHECK(three.order() == 6);
  CHECK(three.edge_count() == 3);
  CHECK(disjoint_union(cycle(5), Graph(0)) == cycle(5));
  CHECK_THROWS_AS(disjoint_union(Graph(20), Graph(20)), Error);
}

TEST_CASE("vertex roles") {
  CHECK(vertex_role(claw(), 0) == VertexRole::dominating);
  for (Vertex v = 0; v < 4; ++v) CHECK(vertex_role(empty_graph(4), v) == VertexRole::isolated);
  for (Vertex v = 0; v < 5; ++v) CHECK(vertex_role(cycle(5), v) == VertexRole::ordinary);
  CHECK_THROWS_AS(vertex_role(cycle(5), 6), Error);
}

TEST_CASE("graph6 matches a reference encoder") {
  CHECK(graph6_encode(complete(2)) == "A_");
  CHECK(graph6_encode(empty_graph(2)) == "A?");
  CHECK(oracle::graph6(complete(2)) == "A_");
  CHECK(graph6_decode(graph6_encode(cycle(5))) == cycle(5));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = testing::random_graph(rng, trial % 20);
    const std::string code = graph6_encode(g);
    REQUIRE(code == oracle::graph6(g));
    REQUIRE(graph6_decode(code) == g);
  }
}

TEST_CASE("graph6 decoding rejects malformed input") {
  auto code_of = [](std::string_view text) {
    try {
      graph6_decode(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::usage;
  };
  CHECK(code_of("") == Errc::malformed_graph6);
  CHECK(code_of("D") == Errc::malformed_graph6);
  CHECK(code_of("A_x") == Errc::malformed_graph6);
  CHECK(code_of("A\x7f") == Errc::malformed_graph6);
  CHECK(graph6_decode("A_\n") == complete(2));
  CHECK(graph6_decode(">>graph6<<A_") == complete(2));
  // Order 40 is valid graph6 but exceeds the container.
  CHECK(code_of(std::string(1, static_cast<char>(63 + 40)) + std::string(130, '?')) == Errc::order_cap_exceeded);
}

TEST_CASE("relabeling preserves structure") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 9);
    const auto p = testing::random_permutation(rng, 9);
    const Graph h = relabel(g, p);
    CHECK(h.edge_count() == g.edge_count());
    for (Vertex i = 0; i < 9; ++i) {
      for (Vertex j = 0; j < 9; ++j) CHECK(h.adjacent(i, j) == g.adjacent(p[i], p[j]));
    }
  }
}
