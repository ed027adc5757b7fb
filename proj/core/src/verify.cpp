#include "hng/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hng/canon.hpp"
#include "hng/error.hpp"
#include "hng/families.hpp"
#include "hng/graph6.hpp"
#include "hng/invariants.hpp"
#include "hng/membership.hpp"
#include "hng/sampling.hpp"

namespace hng {

using json = nlohmann::json;

namespace {

constexpr int kObstructionOrder = 8;

std::string hex_hash(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <typename T>
std::string show(const T& v) {
  if constexpr (std::is_same_v<T, bool>) {
    return v ? "true" : "false";
  } else if constexpr (std::is_convertible_v<T, std::string>) {
    return std::string(v);
  } else {
    return std::to_string(v);
  }
}

class Builder {
 public:
  explicit Builder(std::string suite) { r_.suite = std::move(suite); }

  VerificationReport& report() { return r_; }

  template <typename T>
  bool check(const std::string& name, const T& expected, const T& actual) {
    const bool pass = expected == actual;
    r_.checks.push_back({name, show(expected), show(actual), pass});
    if (!pass) fail("", {}, "check '" + name + "': expected " + show(expected) + ", got " + show(actual));
    return pass;
  }

  void fail(const std::string& graph6, std::vector<ClauseValue> clauses, std::string detail) {
    ++failures_;
    if (r_.counterexamples.size() < kMaxStoredCounterexamples) {
      r_.counterexamples.push_back({graph6, std::move(clauses), std::move(detail)});
    }
  }

  void fail_graph(const Graph& g, std::vector<ClauseValue> clauses, std::string detail = {}) {
    fail(graph6_encode(g), std::move(clauses), std::move(detail));
  }

  void stat(const std::string& key, std::int64_t value) { r_.stats[key] = value; }
  void bound(const std::string& key, std::int64_t value) { r_.bounds[key] = value; }
  void uses(const ObstructionSet& s) { r_.provenance[s.name] = hex_hash(s.hash()); }

  template <typename F>
  void phase(const std::string& name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    r_.timing.emplace_back(name, took.count());
  }

  VerificationReport finish() {
    r_.stats["counterexamples"] = failures_;
    return std::move(r_);
  }

 private:
  VerificationReport r_;
  std::int64_t failures_ = 0;
};

/// Calls f(graph, hereditary defect) for every graph of order 1..n_max.
template <typename F>
void for_each_catalog_graph(VerificationContext& ctx, int n_max, F&& f) {
  for (int n = 1; n <= n_max; ++n) {
    const auto& codes = ctx.catalog(n).codes;
    const auto& hd = ctx.hereditary_defects(n);
    for (std::size_t i = 0; i < codes.size(); ++i) f(codes[i].graph(), static_cast<int>(hd[i]));
  }
}

int sample_order(GraphSampler& s, int lo, int hi) { return s.uniform_int(lo, hi); }

// ---------------------------------------------------------------------------

VerificationReport suite_prop_1_2(VerificationContext& ctx) {
  const auto& o = ctx.options();
  Builder b("prop-1.2");
  b.bound("a_max", o.a_max);
  b.bound("n_max", o.n_max);
  b.phase("inclusion-chain", [&] {
    long long checked = 0;
    for_each_catalog_graph(ctx, o.n_max, [&](const Graph& g, int hd) {
      ++checked;
      const int d = ng_defect(g);
      for (int a = 0; a < o.a_max; ++a) {
        const std::vector<ClauseValue> clauses = {{"in " + std::to_string(a) + "-HNG", hd <= a},
                                                  {"in " + std::to_string(a) + "-NG", d <= a},
                                                  {"in " + std::to_string(a + 1) + "-HNG", hd <= a + 1}};
        if (hd <= a && d > a) b.fail_graph(g, clauses, "a-HNG not inside a-NG");
        if (d <= a && hd > a + 1) b.fail_graph(g, clauses, "a-NG not inside (a+1)-HNG");
      }
    });
    b.stat("graphs_checked", checked);
  });
  b.phase("witnesses", [&] {
    for (int a = 0; a < o.a_max; ++a) {
      const std::string tag = " (a=" + std::to_string(a) + ")";
      if (2 * a + 5 <= kMaxSubsetScanOrder) {
        const auto d = hereditary_ng_defect(cycle(2 * a + 5));
        b.check("C" + std::to_string(2 * a + 5) + " in a-NG but not a-HNG" + tag, true,
                d.defect <= a && d.hereditary_defect > a);
      }
      if (2 * a + 4 <= kMaxSubsetScanOrder) {
        const auto d = hereditary_ng_defect(path(2 * a + 4));
        b.check("P" + std::to_string(2 * a + 4) + " in (a+1)-HNG but not a-NG" + tag, true,
                d.hereditary_defect <= a + 1 && d.defect > a);
      }
    }
  });
  return b.finish();
}

VerificationReport suite_prop_1_4(VerificationContext& ctx) {
  const auto& o = ctx.options();
  Builder b("prop-1.4");
  b.bound("n_max", o.n_max);
  b.phase("threshold-equivalence", [&] {
    long long thresholds = 0;
    for_each_catalog_graph(ctx, o.n_max, [&](const Graph& g, int hd) {
      const bool peel = is_threshold(g);
      const bool triple = is_threshold_by_forbidden_triple(g);
      thresholds += peel ? 1 : 0;
      if ((hd == 0) != peel || peel != triple) {
        b.fail_graph(g, {{"hereditary defect 0", hd == 0}, {"threshold by peeling", peel},
                         {"no induced 2K2, P4, C4", triple}});
      }
    });
    b.stat("threshold_graphs", thresholds);
  });
  b.phase("threshold-obstructions", [&] {
    const auto mined = mine_minimal_fis(predicate_by_name("threshold"), std::min(4, o.n_max), o.cache);
    std::vector<CanonicalCode> expected = {canonical_code(named("2K2")), canonical_code(named("P4")),
                                           canonical_code(named("C4"))};
    std::sort(expected.begin(), expected.end());
    b.check("minimal non-threshold graphs up to order 4 are 2K2, P4, C4", true, mined.members == expected);
  });
  return b.finish();
}

VerificationReport suite_thm_3_1(VerificationContext& ctx) {
  const auto& o = ctx.options();
  Builder b("thm-3.1");
  b.bound("n_max", o.n_max);
  b.bound("obstruction_order", kObstructionOrder);
  b.bound("samples", o.samples);
  b.bound("sample_order_min", o.sample_order_min);
  b.bound("sample_order_max", o.sample_order_max);
  b.bound("seed", static_cast<std::int64_t>(o.seed));
  const ObstructionSet* f = nullptr;
  b.phase("mine", [&] { f = &ctx.f(); });
  b.uses(*f);
  const auto counts = f->counts_by_order();
  auto count_at = [&](int n) { return counts.contains(n) ? counts.at(n) : 0; };
  auto part_count = [&](const char* part, int n) {
    int c = 0;
    for (const auto& code : f->parts.at(part)) c += code.order() == n ? 1 : 0;
    return c;
  };
  b.phase("set-properties", [&] {
    b.check("size", 52, static_cast<int>(f->members.size()));
    for (int n = 1; n <= kObstructionOrder; ++n) b.stat("order_" + std::to_string(n), count_at(n));
    b.check("members of order 6", 24, count_at(6));
    b.check("members of order 7", 24, count_at(7));
    b.check("members of order 8", 4, count_at(8));
    b.check("C5-free members of order 6", 24, part_count("F_S", 6));
    b.check("C5-free members of order 7", 2, part_count("F_S", 7));
    b.check("C5-containing members of order 7", 22, part_count("F_C", 7));
    b.check("C5-containing members of order 8", 4, part_count("F_C", 8));
    b.check("closed under complement", true, f->complement_closed.value_or(false));
    b.check("3K2 is a member", true, f->contains(canonical_code(named("3K2"))));

    int bipartite_nu3 = 0;
    int complements_of_those = 0;
    for (const Graph& g : f->graphs()) {
      const int n = g.order();
      const int chi = chromatic_number(g);
      const int theta = clique_cover_number(g);
      bool min_ok = true;
      for (Vertex v = 0; v < n && min_ok; ++v) min_ok = in_hng(delete_vertex(g, v), 1);
      const bool distinct_free =
          distinct_vertices(g, DistinctMode::chi) == 0 && distinct_vertices(g, DistinctMode::theta) == 0;
      const bool in_2hng = in_hng(g, 2);
      if (chi + theta != n - 1 || !min_ok || !distinct_free || !in_2hng) {
        b.fail_graph(g, {{"chi + theta = n - 1", chi + theta == n - 1},
                         {"proper induced subgraphs have chi + theta >= order", min_ok},
                         {"no chi- or theta-distinct vertex", distinct_free},
                         {"in 2-HNG", in_2hng}});
      }
      if (n == 6) {
        if (is_bipartite(g) && matching_number(g) == 3) {
          ++bipartite_nu3;
        } else {
          const Graph co = complement(g);
          if (is_bipartite(co) && matching_number(co) == 3) ++complements_of_those;
        }
      }
    }
    b.check("order-6 members that are bipartite with matching number 3", 12, bipartite_nu3);
    b.check("remaining order-6 members are complements of those", 12, complements_of_those);

    std::vector<Graph> seven_free;
    for (const auto& code : f->parts.at("F_S")) {
      if (code.order() == 7) seven_free.push_back(code.graph());
    }
    const bool pair = seven_free.size() == 2 && are_isomorphic(complement(seven_free[0]), seven_free[1]);
    b.check("C5-free order-7 members form a complement pair", true, pair);
    const bool sun = std::any_of(seven_free.begin(), seven_free.end(),
                                 [](const Graph& g) { return are_isomorphic(g, sun_with_pendant()); });
    b.check("one C5-free order-7 member is the sun with a pendant", true, sun);
    b.check("no member contains another", true, is_antichain(*f));
  });
  b.phase("exhaustive-equivalence", [&] {
    long long checked = 0;
    long long members = 0;
    for_each_catalog_graph(ctx, o.n_max, [&](const Graph& g, int hd) {
      ++checked;
      const bool f_free = is_1hng_fast(g, *f);
      members += hd <= 1 ? 1 : 0;
      if (f_free != (hd <= 1)) b.fail_graph(g, {{"F-free", f_free}, {"hereditary defect <= 1", hd <= 1}});
    });
    b.stat("graphs_checked", checked);
    b.stat("members_up_to_n_max", members);
  });
  b.phase("sampled-equivalence", [&] {
    GraphSampler sampler(o.seed);
    long long members = 0;
    for (int i = 0; i < o.samples; ++i) {
      const Graph g = sampler.mixed(sample_order(sampler, o.sample_order_min, o.sample_order_max));
      const bool brute = in_hng(g, 1);
      const bool f_free = is_1hng_fast(g, *f);
      members += brute ? 1 : 0;
      if (brute != f_free) b.fail_graph(g, {{"F-free", f_free}, {"hereditary defect <= 1", brute}});
    }
    b.stat("sampled", o.samples);
    b.stat("sampled_members", members);
  });
  return b.finish();
}

VerificationReport suite_prop_3_3(VerificationContext& ctx) {
  Builder b("prop-3.3");
  const ObstructionSet& f = ctx.f();
  b.uses(f);
  b.phase("listing", [&] {
    int rows_matching = 0;
    long long entries = 0;
    for (const auto& row : compatibility_listing()) {
      std::set<C5Type> allowed;
      for (C5Type t : row.allowed) {
        for (int r = 0; r < 5; ++r) {
          for (bool reflect : {false, true}) {
            if (dihedral_image(row.v, r, reflect) == row.v) allowed.insert(dihedral_image(t, r, reflect));
          }
        }
      }
      bool row_ok = true;
      for (int w = 0; w < 32; ++w) {
        ++entries;
        const auto t = static_cast<C5Type>(w);
        const bool listed = allowed.contains(t);
        const bool computed = type_compatible(row.v, row.adjacent, t, f);
        if (listed != computed) {
          row_ok = false;
          const C5Type types[] = {row.v, t};
          const std::pair<int, int> edge[] = {{0, 1}};
          const Graph gadget = row.adjacent ? c5_gadget(types, edge) : c5_gadget(types);
          b.fail_graph(gadget, {{"listed", listed}, {"oracle", computed}},
                       "v " + type_name(row.v) + (row.adjacent ? " adjacent to" : " not adjacent to") +
                           " w " + type_name(t));
        }
      }
      rows_matching += row_ok ? 1 : 0;
    }
    b.stat("rows", static_cast<std::int64_t>(compatibility_listing().size()));
    b.stat("rows_matching", rows_matching);
    b.stat("entries", entries);
  });
  b.phase("examples", [&] {
    b.check("{} adjacent to {c1,c2,c3}", true, type_compatible(0, true, parse_type("c1,c2,c3"), f));
    b.check("{} adjacent to {c1}", false, type_compatible(0, true, parse_type("c1"), f));
    b.check("{c1} adjacent to {c3,c4}", true, type_compatible(parse_type("c1"), true, parse_type("c3,c4"), f));
  });
  b.phase("symmetries", [&] {
    // The complement of C_5 is the cycle c1 c3 c5 c2 c4.
    constexpr int order[5] = {0, 2, 4, 1, 3};
    auto co_type = [&](C5Type t) {
      C5Type out = 0;
      for (int k = 0; k < 5; ++k) {
        if (((t >> order[k]) & 1U) == 0) out |= static_cast<C5Type>(1U << k);
      }
      return out;
    };
    long long violations = 0;
    for (int t1 = 0; t1 < 32; ++t1) {
      for (int t2 = t1; t2 < 32; ++t2) {
        for (bool adj : {false, true}) {
          const auto a = static_cast<C5Type>(t1);
          const auto c = static_cast<C5Type>(t2);
          const bool base = type_compatible(a, adj, c, f);
          bool ok = base == type_compatible(c, adj, a, f);
          ok = ok && base == type_compatible(co_type(a), !adj, co_type(c), f);
          for (int r = 0; r < 5 && ok; ++r) {
            for (bool reflect : {false, true}) {
              ok = ok && base == type_compatible(dihedral_image(a, r, reflect), adj,
                                                 dihedral_image(c, r, reflect), f);
            }
          }
          if (!ok) {
            ++violations;
            b.fail("", {{"compatible", base}},
                   "symmetry broken for " + type_name(a) + (adj ? " ~ " : " / ") + type_name(c));
          }
        }
      }
    }
    b.stat("symmetry_violations", violations);
  });
  return b.finish();
}

template <typename F>
void for_each_member(VerificationContext& ctx, int n_max, F&& f) {
  for_each_catalog_graph(ctx, n_max, [&](const Graph& g, int hd) {
    if (hd <= 1) f(g);
  });
}

VerificationReport suite_thm_4_1(VerificationContext& ctx) {
  const auto& o = ctx.options();
  Builder b("thm-4.1");
  b.bound("n_max", o.n_max);
  const ObstructionSet& f = ctx.f();
  b.uses(f);
  b.phase("apex-perfect", [&] {
    long long members = 0;
    long long imperfect = 0;
    for_each_member(ctx, o.n_max, [&](const Graph& g) {
      ++members;
      const ApexWitness w = apex_perfect_witness(g, f);
      if (w.already_perfect) return;
      ++imperfect;
      const bool ok = w.vertex.has_value() && is_perfect(delete_vertex(g, *w.vertex));
      if (!ok) b.fail_graph(g, {{"apex-perfect witness found", ok}});
    });
    b.stat("members", members);
    b.stat("imperfect_members", imperfect);
  });
  return b.finish();
}

VerificationReport suite_thm_4_2(VerificationContext& ctx) {
  const auto& o = ctx.options();
  Builder b("thm-4.2");
  b.bound("n_max", o.n_max);
  b.phase("chi-bound", [&] {
    int max_gap = 0;
    long long at_gap = 0;
    for_each_member(ctx, o.n_max, [&](const Graph& g) {
      const int gap = chromatic_number(g) - clique_number(g);
      if (gap > 1) b.fail_graph(g, {{"chi <= omega + 1", false}});
      if (gap > max_gap) {
        max_gap = gap;
        at_gap = 0;
      }
      at_gap += gap == max_gap ? 1 : 0;
    });
    b.check("largest chi - omega over members", 1, max_gap);
    b.stat("members_with_largest_gap", at_gap);
    b.check("C5 has chi = omega + 1", 3, chromatic_number(cycle(5)));
  });
  return b.finish();
}

/// All D-family instances with at most `max_added` added vertices.
std::vector<std::pair<FamilySpec, Graph>> small_family_instances(int max_added) {
  std::vector<std::pair<FamilySpec, Graph>> out;
  for (DFamily fam : {DFamily::d1, DFamily::d2, DFamily::d3}) {
    const auto types = family_types(fam);
    for (int x = 0; x <= max_added; ++x) {
      for (int y = 0; x + y <= max_added; ++y) {
        for (int z = 0; x + y + z <= max_added; ++z) {
          FamilySpec spec{fam, {{types[0], x}, {types[1], y}, {types[2], z}}};
          out.emplace_back(spec, generate_family(spec));
        }
      }
    }
  }
  return out;
}

VerificationReport suite_lemma_5_2(VerificationContext& ctx) {
  const auto& o = ctx.options();
  Builder b("lemma-5.2");
  b.bound("order_max", o.lemma_family_order_max);
  const ObstructionSet& f = ctx.f();
  b.uses(f);
  b.phase("families", [&] {
    long long count = 0;
    for (const auto& [spec, g] : small_family_instances(o.lemma_family_order_max - 5)) {
      ++count;
      const bool fast = is_1hng_fast(g, f);
      const bool brute = in_hng(g, 1);
      if (!fast || !brute) b.fail_graph(g, {{"F-free", fast}, {"hereditary defect <= 1", brute}});
    }
    b.stat("instances", count);
  });
  return b.finish();
}

VerificationReport suite_lemma_5_4(VerificationContext& ctx) {
  const auto& o = ctx.options();
  Builder b("lemma-5.4");
  b.bound("n_max", o.n_max);
  const Graph three_k2 = named("3K2");
  b.phase("exhaustive", [&] {
    long long positives = 0;
    for_each_catalog_graph(ctx, o.n_max, [&](const Graph& g, int) {
      const bool lhs = is_bipartite(g) && !contains_subgraph(g, three_k2).has_value();
      const auto c = is_biclique_or_doublestar_subgraph(g);
      const bool rhs = c.biclique || c.double_star;
      positives += lhs ? 1 : 0;
      if (lhs != rhs) {
        b.fail_graph(g, {{"bipartite without a 3K2 subgraph", lhs}, {"inside K_{2,n-2}", c.biclique},
                         {"inside a double star", c.double_star}});
      }
    });
    b.stat("positives", positives);
  });
  return b.finish();
}

void characterization_sweep(Builder& b, VerificationContext& ctx, Characterization which,
                            const CharacterizationSets& sets) {
  long long checked = 0;
  long long positive = 0;
  for_each_catalog_graph(ctx, ctx.options().n_max, [&](const Graph& g, int) {
    ++checked;
    const auto r = check_characterization(which, g, sets);
    positive += r.clauses.front().value ? 1 : 0;
    if (!r.consistent) b.fail_graph(g, r.clauses);
  });
  b.stat("graphs_checked", checked);
  b.stat("positives", positive);
}

VerificationReport suite_thm_5_1(VerificationContext& ctx) {
  const auto& o = ctx.options();
  Builder b("thm-5.1");
  b.bound("n_max", o.n_max);
  b.bound("max_edges", o.max_edges);
  const ObstructionSet& f = ctx.f();
  const ObstructionSet* a = nullptr;
  b.phase("derive", [&] { a = &ctx.line_set(); });
  b.uses(f);
  b.uses(*a);
  b.phase("set-properties", [&] {
    b.check("size", 16, static_cast<int>(a->members.size()));
    for (const char* name : {"3P3", "P5+P3", "P7", "C6", "K4", "C4+P3", "2K3", "2claw", "K2,3", "K3+claw"}) {
      b.check(std::string(name) + " is a member", true, a->contains(canonical_code(named(name))));
    }
    bool lines_in_f = true;
    for (const Graph& h : a->graphs()) lines_in_f = lines_in_f && f.contains(canonical_code(line_graph(h)));
    b.check("every member has its line graph in F", true, lines_in_f);
    b.check("no member is a subgraph of another", true, is_antichain(*a));
    b.check("L(K4) outside 1-HNG", false, in_hng(line_graph(complete(4)), 1));
  });
  const CharacterizationSets sets{&f, a, nullptr, nullptr};
  b.phase("by-order", [&] { characterization_sweep(b, ctx, Characterization::thm_5_1, sets); });
  b.phase("by-edges", [&] {
    long long checked = 0;
    for (const auto& level : enumerate_by_edges(o.max_edges)) {
      for (const auto& code : level) {
        ++checked;
        const Graph g = code.graph();
        const auto r = check_characterization(Characterization::thm_5_1, g, sets);
        if (!r.consistent) b.fail_graph(g, r.clauses);
      }
    }
    b.stat("edge_bounded_graphs", checked);
  });
  return b.finish();
}

VerificationReport suite_thm_5_3(VerificationContext& ctx) {
  Builder b("thm-5.3");
  b.bound("n_max", ctx.options().n_max);
  const ObstructionSet& f = ctx.f();
  const ObstructionSet& claw_set = ctx.claw_set();
  b.uses(f);
  b.uses(claw_set);
  b.phase("set-properties", [&] {
    b.check("size", 21, static_cast<int>(claw_set.members.size()));
    b.check("claw is a member", true, claw_set.contains(canonical_code(claw())));
    b.check("3K2 is a member", true, claw_set.contains(canonical_code(named("3K2"))));
    b.check("C6 is a member", true, claw_set.contains(canonical_code(cycle(6))));
  });
  b.phase("agreement", [&] {
    characterization_sweep(b, ctx, Characterization::thm_5_3, {&f, nullptr, &claw_set, nullptr});
  });
  return b.finish();
}

VerificationReport suite_thm_5_5(VerificationContext& ctx) {
  Builder b("thm-5.5");
  b.bound("n_max", ctx.options().n_max);
  const ObstructionSet& f = ctx.f();
  const ObstructionSet& tri = ctx.triangle_set();
  b.uses(f);
  b.uses(tri);
  b.phase("set-properties", [&] {
    b.check("size", 13, static_cast<int>(tri.members.size()));
    b.check("K3 is a member", true, tri.contains(canonical_code(complete(3))));
    b.check("C6 is a member", true, tri.contains(canonical_code(cycle(6))));
    int order6_bipartite_nu3 = 0;
    for (const Graph& g : tri.graphs()) {
      if (g.order() == 6 && is_bipartite(g) && matching_number(g) == 3) ++order6_bipartite_nu3;
    }
    b.check("members besides K3 that are order-6 bipartite with matching number 3", 12, order6_bipartite_nu3);
  });
  b.phase("agreement", [&] {
    characterization_sweep(b, ctx, Characterization::thm_5_5, {&f, nullptr, nullptr, &tri});
  });
  return b.finish();
}

/// Compares one fast algorithm against its exact counterpart on every member
/// of order <= n_max and on sampled D-family instances.
void fast_algorithm_sweep(Builder& b, VerificationContext& ctx,
                          const std::function<std::vector<ClauseValue>(const Graph&)>& compare) {
  const auto& o = ctx.options();
  b.bound("n_max", o.n_max);
  b.bound("samples", o.samples);
  b.bound("family_order_max", o.family_order_max);
  b.bound("seed", static_cast<std::int64_t>(o.seed));
  auto run = [&](const Graph& g) {
    auto clauses = compare(g);
    bool ok = true;
    for (std::size_t i = 1; i < clauses.size(); i += 2) ok = ok && clauses[i].value;
    if (!ok) b.fail_graph(g, std::move(clauses));
  };
  b.phase("exhaustive", [&] {
    long long members = 0;
    for_each_member(ctx, o.n_max, [&](const Graph& g) {
      ++members;
      run(g);
    });
    b.stat("members", members);
  });
  b.phase("family-samples", [&] {
    GraphSampler sampler(o.seed ^ 0x5eedULL);
    for (int i = 0; i < o.samples; ++i) run(sampler.random_family_instance(sampler.uniform_int(5, o.family_order_max)));
    b.stat("family_samples", o.samples);
  });
}

std::vector<ClauseValue> value_pair(const std::string& what, int fast, int exact) {
  return {{what + " fast = " + std::to_string(fast) + ", exact = " + std::to_string(exact), fast == exact},
          {what + " agrees", fast == exact}};
}

VerificationReport suite_thm_6_1(VerificationContext& ctx) {
  Builder b("thm-6.1");
  const ObstructionSet& f = ctx.f();
  b.uses(f);
  const auto& o = ctx.options();
  b.bound("n_max", o.n_max);
  b.phase("exhaustive", [&] {
    long long checked = 0;
    for_each_catalog_graph(ctx, o.n_max, [&](const Graph& g, int hd) {
      ++checked;
      const bool fast = is_1hng_fast(g, f);
      if (fast != (hd <= 1)) b.fail_graph(g, {{"F-free", fast}, {"hereditary defect <= 1", hd <= 1}});
    });
    b.stat("graphs_checked", checked);
  });
  b.bound("samples", o.samples);
  b.bound("family_order_max", o.family_order_max);
  b.bound("seed", static_cast<std::int64_t>(o.seed));
  b.phase("family-samples", [&] {
    GraphSampler sampler(o.seed ^ 0x5eedULL);
    for (int i = 0; i < o.samples; ++i) {
      const Graph g = sampler.random_family_instance(sampler.uniform_int(5, o.family_order_max));
      const bool fast = is_1hng_fast(g, f);
      const bool brute = in_hng(g, 1);
      if (fast != brute || !fast) b.fail_graph(g, {{"F-free", fast}, {"hereditary defect <= 1", brute}});
    }
    b.stat("family_samples", o.samples);
  });
  return b.finish();
}

VerificationReport suite_thm_6_3(VerificationContext& ctx) {
  Builder b("thm-6.3");
  const ObstructionSet& f = ctx.f();
  b.uses(f);
  fast_algorithm_sweep(b, ctx, [&](const Graph& g) {
    auto out = value_pair("omega", clique_number_fast(g, f), clique_number(g));
    auto alpha = value_pair("alpha", independence_number_fast(g, f), independence_number(g));
    out.insert(out.end(), alpha.begin(), alpha.end());
    return out;
  });
  return b.finish();
}

VerificationReport suite_thm_6_5(VerificationContext& ctx) {
  Builder b("thm-6.5");
  const ObstructionSet& f = ctx.f();
  b.uses(f);
  long long exceptional = 0;
  fast_algorithm_sweep(b, ctx, [&](const Graph& g) {
    const int chi = chromatic_number(g);
    exceptional += chi == clique_number(g) + 1 ? 1 : 0;
    auto out = value_pair("chi", chromatic_number_fast(g, f), chi);
    auto theta = value_pair("theta", clique_cover_number_fast(g, f), clique_cover_number(g));
    out.insert(out.end(), theta.begin(), theta.end());
    return out;
  });
  b.stat("chi_above_omega", exceptional);
  return b.finish();
}

using SuiteFn = VerificationReport (*)(VerificationContext&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"prop-1.2", suite_prop_1_2},   {"prop-1.4", suite_prop_1_4},   {"thm-3.1", suite_thm_3_1},
      {"prop-3.3", suite_prop_3_3},   {"thm-4.1", suite_thm_4_1},     {"thm-4.2", suite_thm_4_2},
      {"lemma-5.2", suite_lemma_5_2}, {"lemma-5.4", suite_lemma_5_4}, {"thm-5.1", suite_thm_5_1},
      {"thm-5.3", suite_thm_5_3},     {"thm-5.5", suite_thm_5_5},     {"thm-6.1", suite_thm_6_1},
      {"thm-6.3", suite_thm_6_3},     {"thm-6.5", suite_thm_6_5},
  };
  return r;
}

std::vector<C5Type> types_of(std::initializer_list<const char*> names) {
  std::vector<C5Type> out;
  for (const char* n : names) out.push_back(parse_type(n));
  return out;
}

std::vector<C5Type> every_type() {
  std::vector<C5Type> out;
  for (int t = 0; t < 32; ++t) out.push_back(static_cast<C5Type>(t));
  return out;
}

}  // namespace

VerificationContext::VerificationContext(SuiteOptions options) : options_(options) {
  if (options_.n_max < 1 || options_.n_max > kMaxEnumerationOrder) {
    throw Error(Errc::order_out_of_range, "n_max must be in 1..9");
  }
}

VerificationContext::~VerificationContext() = default;

const GraphCatalog& VerificationContext::catalog(int n) {
  if (auto it = catalogs_.find(n); it != catalogs_.end()) return it->second;
  if (options_.cache != nullptr) return catalogs_[n] = options_.cache->get(n);
  GraphCatalog c = n == 1 ? enumerate_order(1) : extend_catalog(catalog(n - 1));
  return catalogs_[n] = std::move(c);
}

const std::vector<std::uint8_t>& VerificationContext::hereditary_defects(int n) {
  if (auto it = defects_.find(n); it != defects_.end()) return it->second;
  std::vector<std::uint8_t> hd;
  for (const auto& code : catalog(n).codes) {
    hd.push_back(static_cast<std::uint8_t>(hereditary_ng_defect(code.graph()).hereditary_defect));
  }
  return defects_[n] = std::move(hd);
}

const ObstructionSet& VerificationContext::f() {
  if (!f_) f_ = std::make_unique<ObstructionSet>(derive_F(kObstructionOrder, options_.cache));
  return *f_;
}

const ObstructionSet& VerificationContext::claw_set() {
  if (!claw_) claw_ = std::make_unique<ObstructionSet>(derive_claw_obstructions(f()));
  return *claw_;
}

const ObstructionSet& VerificationContext::triangle_set() {
  if (!triangle_) triangle_ = std::make_unique<ObstructionSet>(derive_trianglefree_obstructions(f()));
  return *triangle_;
}

const ObstructionSet& VerificationContext::line_set() {
  if (!line_) line_ = std::make_unique<ObstructionSet>(derive_line_obstructions(options_.max_edges));
  return *line_;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

VerificationReport run_suite(std::string_view id, VerificationContext& context) {
  for (const auto& [name, fn] : registry()) {
    if (name == id) return fn(context);
  }
  throw Error(Errc::usage, "unknown suite '" + std::string(id) + "'");
}

VerificationReport run_suite(std::string_view id, const SuiteOptions& options) {
  VerificationContext ctx(options);
  return run_suite(id, ctx);
}

std::string report_json(const VerificationReport& r, bool include_timing) {
  json j;
  j["schema_version"] = 1;
  j["suite"] = r.suite;
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["bounds"] = r.bounds;
  j["stats"] = r.stats;
  j["provenance"] = r.provenance;
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  j["checks"] = checks;
  json ces = json::array();
  for (const auto& c : r.counterexamples) {
    json clauses = json::array();
    for (const auto& cl : c.clauses) clauses.push_back({{"clause", cl.clause}, {"value", cl.value}});
    ces.push_back({{"graph6", c.graph6}, {"clauses", clauses}, {"detail", c.detail}});
  }
  j["counterexamples"] = ces;
  if (include_timing) {
    json t = json::array();
    for (const auto& [phase, secs] : r.timing) t.push_back({{"phase", phase}, {"seconds", secs}});
    j["timing"] = t;
  }
  return j.dump(2);
}

void emit_report(const VerificationReport& r, ReportFormat format, std::ostream& out, bool include_timing) {
  if (format == ReportFormat::json) {
    out << report_json(r, include_timing) << '\n';
  } else {
    out << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
    if (!r.bounds.empty()) {
      out << "  bounds:";
      for (const auto& [k, v] : r.bounds) out << ' ' << k << '=' << v;
      out << '\n';
    }
    for (const auto& c : r.checks) {
      out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": " << c.actual;
      if (!c.pass) out << " (expected " << c.expected << ')';
      out << '\n';
    }
    for (const auto& [k, v] : r.stats) out << "  " << k << ": " << v << '\n';
    for (const auto& c : r.counterexamples) {
      out << "  counterexample";
      if (!c.graph6.empty()) out << ' ' << c.graph6;
      if (!c.detail.empty()) out << " (" << c.detail << ')';
      for (const auto& cl : c.clauses) out << " [" << cl.clause << '=' << (cl.value ? 1 : 0) << ']';
      out << '\n';
    }
    for (const auto& [name, hash] : r.provenance) out << "  uses " << name << " #" << hash << '\n';
    for (const auto& [phase, secs] : r.timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", secs);
      out << "  time " << phase << ": " << buf << "s\n";
    }
  }
  if (!out) throw Error(Errc::io_error, "failed to write report");
}

const std::vector<CompatibilityRow>& compatibility_listing() {
  static const std::vector<CompatibilityRow> rows = {
      {0, true, types_of({"c1,c2,c3", "c1,c2,c3,c4", "c1,c2,c3,c4,c5"})},
      {0, false, every_type()},
      {parse_type("c1"), true, types_of({"c3,c4", "c1,c2,c3,c4,c5"})},
      {parse_type("c1"), false,
       types_of({"", "c1", "c1,c2", "c1,c3", "c1,c4", "c1,c5", "c3,c4", "c1,c2,c4", "c1,c2,c5", "c1,c3,c4",
                 "c1,c3,c5", "c1,c2,c3,c4,c5"})},
      {parse_type("c1,c2"), true,
       types_of({"c4", "c1,c2", "c1,c2,c3", "c1,c2,c4", "c1,c2,c5", "c1,c2,c3,c4", "c1,c2,c3,c5", "c1,c2,c4,c5",
                 "c1,c2,c3,c4,c5"})},
      {parse_type("c1,c2"), false, types_of({"", "c1", "c4", "c1,c2", "c1,c4", "c2,c4", "c1,c2,c4"})},
      {parse_type("c1,c3"), true, types_of({"c1,c3,c4,c5", "c1,c2,c3,c4,c5"})},
      {parse_type("c1,c3"), false,
       types_of({"", "c1", "c3", "c1,c3", "c1,c4", "c1,c5", "c3,c4", "c3,c5", "c1,c3,c4", "c1,c3,c5",
                 "c1,c2,c3,c4,c5"})},
      {parse_type("c1,c2,c3"), true,
       types_of({"", "c1,c2", "c2,c3", "c1,c2,c3", "c1,c2,c4", "c1,c2,c5", "c2,c3,c4", "c2,c3,c5", "c1,c2,c3,c4",
                 "c1,c2,c3,c5", "c1,c2,c3,c4,c5"})},
      {parse_type("c1,c2,c3"), false, types_of({"", "c2"})},
      {parse_type("c1,c2,c4"), true,
       types_of({"c1,c2", "c1,c2,c3", "c1,c2,c4", "c1,c2,c5", "c1,c2,c3,c4", "c1,c2,c3,c5", "c1,c2,c4,c5",
                 "c1,c2,c3,c4,c5"})},
      {parse_type("c1,c2,c4"), false,
       types_of({"", "c1", "c2", "c4", "c1,c2", "c1,c4", "c2,c4", "c1,c2,c4", "c1,c2,c3,c5"})},
      {parse_type("c1,c2,c3,c4"), true,
       types_of({"c1,c2", "c1,c4", "c2,c3", "c3,c4", "c1,c2,c3", "c2,c3,c4", "c1,c2,c4", "c1,c3,c4", "c2,c3,c5",
                 "c1,c2,c3,c4", "c1,c2,c3,c4,c5"})},
      {parse_type("c1,c2,c3,c4"), false, types_of({"", "c2,c3,c5"})},
      {kFullType, true, every_type()},
      {kFullType, false,
       types_of({"", "c1", "c2", "c3", "c4", "c5", "c1,c3", "c1,c4", "c2,c4", "c2,c5", "c3,c5"})},
  };
  return rows;
}

}  // namespace hng
