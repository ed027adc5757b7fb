#include <doctest.h>

#include <set>

#include "hng/canon.hpp"
#include "hng/error.hpp"
#include "hng/families.hpp"
#include "hng/invariants.hpp"
#include "hng/membership.hpp"
#include "hng/sampling.hpp"
#include "hng/structure.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hng;

namespace {

Graph c5_plus(std::initializer_list<const char*> types) {
  std::vector<C5Type> ts;
  for (const char* t : types) ts.push_back(parse_type(t));
  return c5_gadget(ts);
}

}  // namespace

TEST_CASE("type names and symmetries") {
  CHECK(type_name(0) == "{}");
  CHECK(type_name(0b00101) == "{c1,c3}");
  CHECK(parse_type("{c1,c3}") == 0b00101);
  CHECK(parse_type("c2, c5") == 0b10010);
  CHECK(parse_type("") == 0);
  CHECK_THROWS_AS(parse_type("c6"), Error);
  for (int t = 0; t < 32; ++t) {
    const auto type = static_cast<C5Type>(t);
    CHECK(parse_type(type_name(type)) == type);
    CHECK(popcount(dihedral_image(type, 3, true)) == popcount(type));
    std::set<C5Type> orbit;
    for (int r = 0; r < 5; ++r) {
      for (bool f : {false, true}) orbit.insert(dihedral_image(type, r, f));
    }
    CHECK(normalize_type(type) == *orbit.begin());
  }
  CHECK(normalize_type(parse_type("c3,c4")) == normalize_type(parse_type("c1,c2")));
  CHECK(normalize_type(parse_type("c1,c3")) != normalize_type(parse_type("c1,c2")));
}

TEST_CASE("induced C5 profiles") {
  const auto p = find_induced_c5(cycle(5));
  REQUIRE(p.has_value());
  CHECK(p->types.empty());
  CHECK_FALSE(find_induced_c5(path(6)).has_value());
  const auto q = find_induced_c5(disjoint_union(cycle(5), Graph(1)));
  REQUIRE(q.has_value());
  REQUIRE(q->types.size() == 1);
  CHECK(q->types[0].second == 0);

  const Graph g = c5_plus({"c1,c3", "c2"});
  const auto r = find_induced_c5(g);
  REQUIRE(r.has_value());
  for (int i = 0; i < 5; ++i) CHECK(g.adjacent(r->c5[i], r->c5[(i + 1) % 5]));
  for (const auto& [v, t] : r->types) {
    for (int i = 0; i < 5; ++i) CHECK(((t >> i) & 1U) == g.adjacent(v, r->c5[i]));
  }
  CHECK(all_induced_c5(cycle(5)).size() == 1);
  CHECK(all_induced_c5(named("C5+C5")).size() == 2);
}

TEST_CASE("type compatibility examples") {
  const ObstructionSet& f = testing::mined_f();
  CHECK(type_compatible(0, true, parse_type("c1,c2,c3"), f));
  CHECK_FALSE(type_compatible(0, true, parse_type("c1"), f));
  CHECK(type_compatible(parse_type("c1"), true, parse_type("c3,c4"), f));
}

TEST_CASE("type compatibility is the F-freeness of the gadget") {
  const ObstructionSet& f = testing::mined_f();
  for (int a = 0; a < 32; a += 3) {
    for (int b = 0; b < 32; b += 5) {
      for (bool adj : {false, true}) {
        const C5Type ts[] = {static_cast<C5Type>(a), static_cast<C5Type>(b)};
        const std::pair<int, int> e[] = {{0, 1}};
        const Graph g = adj ? c5_gadget(ts, e) : c5_gadget(ts);
        CHECK(type_compatible(ts[0], adj, ts[1], f) == in_hng(g, 1));
      }
    }
  }
}

TEST_CASE("fast recognition") {
  const ObstructionSet& f = testing::mined_f();
  CHECK(is_1hng_fast(cycle(5), f));
  CHECK_FALSE(is_1hng_fast(path(6), f));
  CHECK(is_1hng_fast(complete(12), f));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, trial % 5 + 7);
    REQUIRE(is_1hng_fast(g, f) == in_hng(g, 1));
  }
}

TEST_CASE("apex-perfect witnesses") {
  const ObstructionSet& f = testing::mined_f();
  const auto c5 = apex_perfect_witness(cycle(5), f);
  CHECK_FALSE(c5.already_perfect);
  REQUIRE(c5.vertex.has_value());
  CHECK(is_perfect(delete_vertex(cycle(5), *c5.vertex)));
  CHECK(apex_perfect_witness(path(4), f).already_perfect);
  CHECK_THROWS_AS(apex_perfect_witness(path(6), f), Error);

  const Graph d3 = generate_family({DFamily::d3, {{parse_type("c1,c3"), 1}}});
  const auto w = apex_perfect_witness(d3, f);
  REQUIRE(w.vertex.has_value());
  CHECK(*w.vertex < 5);
  CHECK(oracle::is_perfect(delete_vertex(d3, *w.vertex)));
  for (const auto& cyc : all_induced_c5(d3)) {
    CHECK(std::find(cyc.begin(), cyc.end(), *w.vertex) != cyc.end());
  }
}

TEST_CASE("fast clique and coloring numbers") {
  const ObstructionSet& f = testing::mined_f();
  CHECK(clique_number_fast(cycle(5), f) == 2);
  CHECK(clique_number_fast(add_vertex(cycle(5), 0b11111), f) == 3);
  CHECK(chromatic_number_fast(cycle(5), f) == 3);
  CHECK_THROWS_AS(clique_number_fast(path(6), f), Error);

  // A vertex on two non-adjacent cycle vertices adds no triangle.
  const Graph g13 = c5_plus({"c1,c3"});
  CHECK(clique_number(g13) == 2);
  CHECK(chromatic_number(g13) == 3);
  CHECK(chromatic_number_fast(g13, f) == 3);
  CHECK(has_exceptional_chromatic_shape(g13));

  const Graph g12 = c5_plus({"c1,c2"});
  CHECK(clique_number(g12) == 3);
  CHECK(chromatic_number(g12) == 3);
  CHECK(chromatic_number_fast(g12, f) == 3);

  GraphSampler sampler(42);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = sampler.random_family_instance(sampler.uniform_int(5, 11));
    REQUIRE(clique_number_fast(g, f) == clique_number(g));
    REQUIRE(independence_number_fast(g, f) == independence_number(g));
    REQUIRE(chromatic_number_fast(g, f) == chromatic_number(g));
    REQUIRE(clique_cover_number_fast(g, f) == clique_cover_number(g));
  }
}

TEST_CASE("line graphs") {
  CHECK(are_isomorphic(line_graph(complete(4)), complement(named("3K2"))));
  CHECK(are_isomorphic(line_graph(cycle(6)), cycle(6)));
  CHECK(are_isomorphic(line_graph(claw()), complete(3)));
  CHECK_FALSE(in_hng(line_graph(complete(4)), 1));
  CHECK(oracle::hereditary_ng_defect(line_graph(complete(4))) == 2);
  CHECK_THROWS_AS(line_graph(complete(9)), Error);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(rng, 8, 0.3);
    const Graph l = line_graph(g);
    CHECK(l.order() == g.edge_count());
    int expected = 0;
    for (Vertex v = 0; v < g.order(); ++v) expected += g.degree(v) * (g.degree(v) - 1) / 2;
    CHECK(l.edge_count() == expected);
  }
}

TEST_CASE("D families") {
  CHECK(generate_family({DFamily::d1, {}}) == cycle(5));
  const Graph g = generate_family(
      {DFamily::d3, {{parse_type("c1"), 1}, {parse_type("c1,c3"), 1}, {parse_type("c1,c4"), 1}}});
  CHECK(g.order() == 8);
  CHECK(oracle::hereditary_ng_defect(g) <= 1);
  const Graph d2 = generate_family({DFamily::d2, {{parse_type("c4"), 2}}});
  CHECK(oracle::hereditary_ng_defect(d2) <= 1);
  CHECK(is_family_member(d2, DFamily::d2));
  CHECK_THROWS_AS(generate_family({DFamily::d1, {{parse_type("c1,c2"), 1}}}), Error);
  CHECK_THROWS_AS(generate_family({DFamily::d3, {{parse_type("c1"), 40}}}), Error);

  GraphSampler sampler(44);
  for (int trial = 0; trial < 100; ++trial) {
    DFamily fam{};
    const Graph h = sampler.random_family_instance(sampler.uniform_int(5, 10), &fam);
    CHECK(is_family_member(h, fam));
    CHECK(in_hng(h, 1));
  }
  CHECK_FALSE(is_family_member(path(5), DFamily::d1));
}

TEST_CASE("biclique and double-star subgraphs") {
  const auto three = is_biclique_or_doublestar_subgraph(named("3K2"));
  CHECK_FALSE(three.biclique);
  CHECK_FALSE(three.double_star);
  // A claw has a vertex of degree 3, which K_{2,2} lacks.
  const auto c = is_biclique_or_doublestar_subgraph(claw());
  CHECK_FALSE(c.biclique);
  CHECK(c.double_star);
  CHECK(is_biclique_or_doublestar_subgraph(cycle(4)).biclique);
  CHECK(is_biclique_or_doublestar_subgraph(named("K2,5")).biclique);
  CHECK(is_biclique_or_doublestar_subgraph(double_star(3, 4)).double_star);
  CHECK_FALSE(is_biclique_or_doublestar_subgraph(path(5)).double_star);
}

TEST_CASE("characterization clauses") {
  const ObstructionSet& f = testing::mined_f();
  const auto tri = derive_trianglefree_obstructions(f);
  const auto b = derive_claw_obstructions(f);
  const auto a = derive_line_obstructions(8);

  const auto r55 = check_characterization(Characterization::thm_5_5, cycle(5), {&f, nullptr, nullptr, &tri});
  CHECK(r55.consistent);
  for (const auto& c : r55.clauses) CHECK(c.value);

  const auto r51 = check_characterization(Characterization::thm_5_1, complete(4), {&f, &a, nullptr, nullptr});
  CHECK(r51.consistent);
  for (const auto& c : r51.clauses) CHECK_FALSE(c.value);

  const auto r53 = check_characterization(Characterization::thm_5_3, claw(), {&f, nullptr, &b, nullptr});
  CHECK(r53.consistent);
  CHECK_FALSE(r53.clauses[0].value);
  CHECK_FALSE(r53.clauses[1].value);

  try {
    check_characterization(Characterization::thm_5_3, claw(), {&f, nullptr, nullptr, nullptr});
    FAIL("expected missing_obstruction_set");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_obstruction_set);
  }
}

TEST_CASE("sampler is reproducible") {
  GraphSampler a(5);
  GraphSampler b(5);
  for (int i = 0; i < 50; ++i) CHECK(a.mixed(10) == b.mixed(10));
  GraphSampler c(6);
  bool differs = false;
  for (int i = 0; i < 10; ++i) differs = differs || a.mixed(10) != c.mixed(10);
  CHECK(differs);
  for (int i = 0; i < 200; ++i) {
    const int k = a.uniform_int(3, 7);
    CHECK(k >= 3);
    CHECK(k <= 7);
    const double x = a.uniform_real();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(is_threshold(a.random_threshold(12)));
}
