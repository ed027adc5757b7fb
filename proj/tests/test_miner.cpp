#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "hng/canon.hpp"
#include "hng/error.hpp"
#include "hng/families.hpp"
#include "hng/invariants.hpp"
#include "hng/membership.hpp"
#include "hng/miner.hpp"
#include "hng/structure.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hng;
namespace fs = std::filesystem;

namespace {

std::vector<CanonicalCode> codes_of(std::initializer_list<const char*> names) {
  std::vector<CanonicalCode> out;
  for (const char* n : names) out.push_back(canonical_code(named(n)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("minimal non-threshold graphs") {
  const auto s = mine_minimal_fis(predicate_by_name("threshold"), 4);
  CHECK(s.members == codes_of({"2K2", "P4", "C4"}));
  CHECK(s.provenance.predicate == "threshold");
  CHECK(s.provenance.order_bound == 4);
}

TEST_CASE("other predicates") {
  CHECK(mine_minimal_fis(predicate_by_name("sum-perfect"), 5).contains(canonical_code(cycle(5))));
  CHECK(mine_minimal_fis(predicate_by_name("1-hng"), 5).members.empty());
  CHECK(mine_minimal_fis(predicate_by_name("bipartite"), 7).members == codes_of({"C3", "C5", "C7"}));
  CHECK(mine_minimal_fis(predicate_by_name("claw-free"), 6).members == codes_of({"claw"}));
  CHECK_THROWS_AS(predicate_by_name("planar"), Error);
  CHECK_THROWS_AS(mine_minimal_fis(predicate_by_name("perfect"), 10), Error);
}

TEST_CASE("the order-8 obstruction set") {
  const ObstructionSet& f = testing::mined_f();
  CHECK(f.members.size() == 52);
  const auto counts = f.counts_by_order();
  CHECK(counts.at(6) == 24);
  CHECK(counts.at(7) == 24);
  CHECK(counts.at(8) == 4);
  CHECK(f.parts.at("F_S").size() == 26);
  CHECK(f.parts.at("F_C").size() == 26);
  CHECK(f.complement_closed == std::optional<bool>(true));
  CHECK(is_antichain(f));
  CHECK(f.contains(canonical_code(sun_with_pendant())));
  CHECK(f.contains(canonical_code(cycle(6))));
  CHECK(f.contains(canonical_code(path(6))));
  CHECK(f.contains(canonical_code(complement(path(6)))));
  CHECK(f.contains(canonical_code(complement(cycle(6)))));
  // Deleting a vertex of the antihole leaves the complement of P6, a member.
  CHECK_FALSE(f.contains(canonical_code(complement(cycle(7)))));
  for (const Graph& g : f.graphs()) {
    CHECK(oracle::hereditary_ng_defect(g) == 2);
    CHECK(oracle::ng_defect(g) == 2);
    for (Vertex v = 0; v < g.order(); ++v) CHECK(oracle::hereditary_ng_defect(delete_vertex(g, v)) <= 1);
    CHECK(distinct_vertices(g, DistinctMode::chi) == 0);
    CHECK(distinct_vertices(g, DistinctMode::theta) == 0);
  }
}

TEST_CASE("finding obstructions") {
  const ObstructionSet& f = testing::mined_f();
  CHECK_FALSE(find_obstruction(cycle(5), f).has_value());
  const Graph host = disjoint_union(path(6), Graph(2));
  const auto hit = find_obstruction(host, f);
  REQUIRE(hit.has_value());
  CHECK(are_isomorphic(induced_subgraph(host, hit->host_vertices), f.members[hit->member].graph()));
}

TEST_CASE("derived claw-free and triangle-free sets") {
  const ObstructionSet& f = testing::mined_f();
  const auto b = derive_claw_obstructions(f);
  // The claw plus every claw-free member of F that avoids an induced claw.
  std::size_t claw_free = 0;
  for (const Graph& g : f.graphs()) claw_free += oracle::has_induced(g, claw()) ? 0 : 1;
  CHECK(b.members.size() == claw_free + 1);
  CHECK(b.members.size() == 20);
  CHECK(b.contains(canonical_code(claw())));
  CHECK(b.contains(canonical_code(cycle(6))));
  CHECK(b.contains(canonical_code(sun_with_pendant())));
  CHECK_FALSE(b.contains(canonical_code(complement(sun_with_pendant()))));
  CHECK(is_antichain(b));

  const auto t = derive_trianglefree_obstructions(f);
  CHECK(t.members.size() == 13);
  CHECK(t.contains(canonical_code(complete(3))));
  for (const Graph& g : t.graphs()) {
    if (g.order() == 3) continue;
    CHECK(g.order() == 6);
    CHECK(oracle::chromatic_number(g) <= 2);
    CHECK(oracle::matching_number(g) == 3);
  }
}

TEST_CASE("line-graph obstructions") {
  const auto a = derive_line_obstructions(8);
  CHECK(a.containment == ContainmentOrder::subgraph);
  CHECK(a.members.size() == 16);
  for (const char* name : {"3P3", "P5+P3", "P7", "C6", "K4", "C4+P3", "2K3", "2claw", "K2,3", "K3+claw"}) {
    CHECK_MESSAGE(a.contains(canonical_code(named(name))), name);
  }
  CHECK(is_antichain(a));
  for (const Graph& h : a.graphs()) {
    const Graph l = line_graph(h);
    CHECK_FALSE(in_hng(l, 1));
    for (const auto& [u, v] : h.edges()) {
      Graph smaller = h;
      smaller.remove_edge(u, v);
      CHECK(in_hng(line_graph(smaller), 1));
    }
  }
}

TEST_CASE("persistence") {
  const fs::path dir = fs::temp_directory_path() / "hng-miner-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto s = mine_minimal_fis(predicate_by_name("threshold"), 5);
  save_obstruction_set(s, dir / "t.g6");
  const auto back = load_obstruction_set(dir / "t.g6");
  CHECK(back.members == s.members);
  CHECK(back.name == s.name);
  CHECK(back.hash() == s.hash());

  std::ifstream sidecar(dir / "t.g6.json");
  const auto j = nlohmann::json::parse(sidecar);
  CHECK(j["size"] == 3);
  CHECK(j["counts_by_order"]["4"] == 3);
  CHECK(j["provenance"]["predicate"] == "threshold");
  CHECK(j.contains("complement_closed"));

  try {
    load_obstruction_set(dir / "absent.g6");
    FAIL("expected missing_obstruction_set");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::missing_obstruction_set);
  }
  std::ofstream(dir / "bad.g6") << "C~\n";
  std::ofstream(dir / "bad.g6.json") << "{not json";
  CHECK_THROWS_AS(load_obstruction_set(dir / "bad.g6"), Error);
  fs::remove_all(dir);
}

TEST_CASE("hash depends only on membership") {
  const auto a = mine_minimal_fis(predicate_by_name("threshold"), 4);
  auto b = a;
  b.name = "renamed";
  CHECK(a.hash() == b.hash());
  b.members.pop_back();
  CHECK(a.hash() != b.hash());
}
