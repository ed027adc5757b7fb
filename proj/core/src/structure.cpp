#include "hng/structure.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hng/canon.hpp"
#include "hng/error.hpp"
#include "hng/families.hpp"
#include "hng/invariants.hpp"
#include "hng/membership.hpp"

namespace hng {

std::string type_name(C5Type t) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 5; ++i) {
    if ((t >> i) & 1U) {
      if (!first) out += ",";
      out += "c" + std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

C5Type parse_type(std::string_view text) {
  C5Type t = 0;
  std::size_t i = 0;
  auto fail = [&] { throw Error(Errc::parameter_out_of_range, "bad C5 type '" + std::string(text) + "'"); };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '{' || ch == '}' || ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch != 'c' || i + 1 >= text.size() || text[i + 1] < '1' || text[i + 1] > '5') fail();
    t |= static_cast<C5Type>(1U << (text[i + 1] - '1'));
    i += 2;
  }
  return t;
}

C5Type dihedral_image(C5Type t, int r, bool reflect) {
  C5Type out = 0;
  for (int i = 0; i < 5; ++i) {
    if (((t >> i) & 1U) == 0) continue;
    const int j = ((reflect ? (5 - i) % 5 : i) + r) % 5;
    out |= static_cast<C5Type>(1U << j);
  }
  return out;
}

C5Type normalize_type(C5Type t) {
  C5Type best = t;
  for (int r = 0; r < 5; ++r) {
    best = std::min({best, dihedral_image(t, r, false), dihedral_image(t, r, true)});
  }
  return best;
}

std::vector<std::pair<Vertex, C5Type>> C5TypeProfile::normalized() const {
  auto out = types;
  for (auto& [v, t] : out) t = normalize_type(t);
  return out;
}

C5TypeProfile profile_for(const Graph& g, const std::array<Vertex, 5>& c5) {
  C5TypeProfile p;
  p.c5 = c5;
  VertexMask cycle_set = 0;
  for (Vertex c : c5) cycle_set |= bit(c);
  for_each_vertex(g.vertices() & ~cycle_set, [&](Vertex v) {
    C5Type t = 0;
    for (int i = 0; i < 5; ++i) {
      if (g.adjacent(v, c5[i])) t |= static_cast<C5Type>(1U << i);
    }
    p.types.emplace_back(v, t);
  });
  return p;
}

namespace {

/// Calls f on each induced C_5 as (c1..c5) with c1 minimal and c2 < c5;
/// stops when f returns false.
template <typename F>
void visit_induced_c5(const Graph& g, F&& f) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    const VertexMask above = g.vertices() & ~full_mask(a + 1);
    const VertexMask na = g.neighbors(a);
    for (Vertex b : to_vertices(na & above)) {
      const VertexMask nb = g.neighbors(b);
      for (Vertex c : to_vertices(nb & above & ~na)) {
        const VertexMask nc = g.neighbors(c);
        for (Vertex d : to_vertices(nc & above & ~na & ~nb & ~bit(b))) {
          const VertexMask ends = g.neighbors(d) & na & above & ~nb & ~nc & ~full_mask(b + 1);
          for (Vertex e : to_vertices(ends)) {
            if (!f(std::array<Vertex, 5>{a, b, c, d, e})) return;
          }
        }
      }
    }
  }
}

std::array<Vertex, 5> relabeled_cycle(const std::array<Vertex, 5>& c5, int r, bool reflect) {
  // Position i of the result holds the vertex that the relabeling sends to c_{i+1}.
  std::array<Vertex, 5> out{};
  for (int i = 0; i < 5; ++i) {
    const int j = ((reflect ? (5 - i) % 5 : i) + r) % 5;
    out[j] = c5[i];
  }
  return out;
}

VertexMask cycle_mask(const std::array<Vertex, 5>& c5) {
  VertexMask m = 0;
  for (Vertex v : c5) m |= bit(v);
  return m;
}

bool is_stable(const Graph& g, VertexMask s) {
  bool ok = true;
  for_each_vertex(s, [&](Vertex v) { ok = ok && (g.neighbors(v) & s) == 0; });
  return ok;
}

void require_member(const Graph& g, const ObstructionSet& f) {
  if (!is_1hng_fast(g, f)) throw Error(Errc::not_in_class, "graph contains an induced member of F");
}

int clique_number_fast_unchecked(const Graph& g) {
  if (is_perfect(g)) return clique_number(g);
  const auto c5 = find_induced_c5(g);
  if (!c5) return clique_number(g);
  int best = 0;
  for (Vertex v : c5->c5) {
    const Graph h = delete_vertex(g, v);
    if (is_perfect(h)) best = std::max(best, clique_number(h));
  }
  return best;
}

}  // namespace

std::optional<C5TypeProfile> find_induced_c5(const Graph& g) {
  std::optional<std::array<Vertex, 5>> found;
  visit_induced_c5(g, [&](const std::array<Vertex, 5>& c) {
    found = c;
    return false;
  });
  if (!found) return std::nullopt;
  return profile_for(g, *found);
}

std::vector<std::array<Vertex, 5>> all_induced_c5(const Graph& g) {
  std::vector<std::array<Vertex, 5>> out;
  visit_induced_c5(g, [&](const std::array<Vertex, 5>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Graph c5_gadget(std::span<const C5Type> types, std::span<const std::pair<int, int>> added_edges) {
  const std::size_t n = 5 + types.size();
  if (n > static_cast<std::size_t>(kMaxOrder)) {
    throw Error(Errc::order_cap_exceeded, "gadget needs " + std::to_string(n) + " vertices");
  }
  Graph g = cycle(5);
  for (C5Type t : types) g = add_vertex(g, t & kFullType);
  for (auto [i, j] : added_edges) g.add_edge(5 + i, 5 + j);
  return g;
}

bool type_compatible(C5Type t1, bool adjacent, C5Type t2, const ObstructionSet& f) {
  const C5Type types[] = {t1, t2};
  const std::pair<int, int> edge[] = {{0, 1}};
  const Graph g = adjacent ? c5_gadget(types, edge) : c5_gadget(types);
  return !find_obstruction(g, f).has_value();
}

bool is_1hng_fast(const Graph& g, const ObstructionSet& f) { return !find_obstruction(g, f).has_value(); }

ApexWitness apex_perfect_witness(const Graph& g, const ObstructionSet& f) {
  require_member(g, f);
  if (is_perfect(g)) return {true, std::nullopt};
  ApexWitness w;
  if (const auto c5 = find_induced_c5(g)) {
    for (Vertex v : c5->c5) {
      if (is_perfect(delete_vertex(g, v))) {
        w.vertex = v;
        break;
      }
    }
  }
  return w;
}

int clique_number_fast(const Graph& g, const ObstructionSet& f) {
  require_member(g, f);
  return clique_number_fast_unchecked(g);
}

int independence_number_fast(const Graph& g, const ObstructionSet& f) {
  return clique_number_fast(complement(g), f);
}

bool has_exceptional_chromatic_shape(const Graph& g) {
  static const std::set<C5Type> shape_i = {parse_type("c1"), parse_type("c1,c3"), parse_type("c1,c4")};
  static const std::set<C5Type> shape_ii = {parse_type("c1,c2,c4"), parse_type("c1,c2,c3,c5")};
  bool found = false;
  visit_induced_c5(g, [&](const std::array<Vertex, 5>& c5) {
    // Vertices of type {} or full never decide between omega and omega + 1.
    VertexMask rest = 0;
    for (auto [v, t] : profile_for(g, c5).types) {
      if (t != 0 && t != kFullType) rest |= bit(v);
    }
    if (!is_stable(g, rest)) return true;
    for (int r = 0; r < 5 && !found; ++r) {
      for (bool reflect : {false, true}) {
        std::set<C5Type> present;
        for (auto [v, t] : profile_for(g, relabeled_cycle(c5, r, reflect)).types) {
          if ((rest >> v) & 1U) present.insert(t);
        }
        if (std::includes(shape_i.begin(), shape_i.end(), present.begin(), present.end()) ||
            present == shape_ii) {
          found = true;
          break;
        }
      }
    }
    return !found;
  });
  return found;
}

int chromatic_number_fast(const Graph& g, const ObstructionSet& f) {
  require_member(g, f);
  const int omega = clique_number_fast_unchecked(g);
  if (is_perfect(g)) return omega;
  return has_exceptional_chromatic_shape(g) ? omega + 1 : omega;
}

int clique_cover_number_fast(const Graph& g, const ObstructionSet& f) {
  return chromatic_number_fast(complement(g), f);
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > static_cast<std::size_t>(kMaxOrder)) {
    throw Error(Errc::too_many_edges, "line graph needs " + std::to_string(edges.size()) + " vertices");
  }
  const int m = static_cast<int>(edges.size());
  Graph lg(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) lg.add_edge(i, j);
    }
  }
  return lg;
}

std::vector<C5Type> family_types(DFamily family) {
  switch (family) {
    case DFamily::d1: return {parse_type("c1,c3"), parse_type("c1,c4"), parse_type("c1,c3,c4")};
    case DFamily::d2: return {parse_type("c4"), parse_type("c1,c4"), parse_type("c1,c3,c4")};
    case DFamily::d3: return {parse_type("c1"), parse_type("c1,c3"), parse_type("c1,c4")};
  }
  return {};
}

Graph generate_family(const FamilySpec& spec) {
  const auto allowed = family_types(spec.family);
  std::vector<C5Type> types;
  for (auto [t, count] : spec.multiplicities) {
    if (std::find(allowed.begin(), allowed.end(), t) == allowed.end()) {
      throw Error(Errc::invalid_type_for_family, "type " + type_name(t) + " is not allowed in this family");
    }
    if (count < 0) throw Error(Errc::parameter_out_of_range, "negative multiplicity");
    if (5 + types.size() + static_cast<std::size_t>(count) > static_cast<std::size_t>(kMaxOrder)) {
      throw Error(Errc::order_cap_exceeded, "family instance exceeds 32 vertices");
    }
    types.insert(types.end(), static_cast<std::size_t>(count), t);
  }
  return c5_gadget(types);
}

bool is_family_member(const Graph& g, DFamily family) {
  const auto allowed = family_types(family);
  bool found = false;
  visit_induced_c5(g, [&](const std::array<Vertex, 5>& c5) {
    if (!is_stable(g, g.vertices() & ~cycle_mask(c5))) return true;
    for (int r = 0; r < 5 && !found; ++r) {
      for (bool reflect : {false, true}) {
        const C5TypeProfile p = profile_for(g, relabeled_cycle(c5, r, reflect));
        const bool ok = std::all_of(p.types.begin(), p.types.end(), [&](const auto& vt) {
          return std::find(allowed.begin(), allowed.end(), vt.second) != allowed.end();
        });
        if (ok) {
          found = true;
          break;
        }
      }
    }
    return !found;
  });
  return found;
}

BicliqueDoubleStar is_biclique_or_doublestar_subgraph(const Graph& g) {
  BicliqueDoubleStar out;
  const int n = g.order();
  if (g.edge_count() == 0) return {true, true};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const VertexMask cover = bit(u) | bit(v);
      bool covers = true;
      for (auto [a, b] : g.edges()) covers = covers && ((cover >> a) & 1U || (cover >> b) & 1U);
      if (!covers) continue;
      if (!g.adjacent(u, v)) out.biclique = true;
      if ((g.neighbors(u) & g.neighbors(v)) == 0) out.double_star = true;
    }
  }
  return out;
}

namespace {

const ObstructionSet& need(const ObstructionSet* s, const char* what) {
  if (s == nullptr) throw Error(Errc::missing_obstruction_set, std::string("characterization needs ") + what);
  return *s;
}

/// Brute force where the subset scan is affordable, the F test otherwise.
bool in_1hng(const Graph& g, const ObstructionSet& f, int brute_force_limit) {
  return g.order() <= brute_force_limit ? in_hng(g, 1) : is_1hng_fast(g, f);
}

/// Repeatedly removes vertices whose role matches `peel_isolated` /
/// `peel_dominating`; returns the remaining vertex mask.
VertexMask peel(const Graph& g, bool peel_isolated, bool peel_dominating) {
  VertexMask alive = g.vertices();
  for (bool changed = true; changed;) {
    changed = false;
    const int remaining = popcount(alive);
    for_each_vertex(alive, [&](Vertex v) {
      if (changed) return;
      const int d = popcount(g.neighbors(v) & alive);
      if ((peel_isolated && d == 0) || (peel_dominating && remaining > 1 && d == remaining - 1)) {
        alive &= ~bit(v);
        changed = true;
      }
    });
  }
  return alive;
}

bool in_some_d_family(const Graph& g) {
  return is_family_member(g, DFamily::d1) || is_family_member(g, DFamily::d2) ||
         is_family_member(g, DFamily::d3);
}

}  // namespace

CharacterizationResult check_characterization(Characterization which, const Graph& g,
                                              const CharacterizationSets& sets) {
  CharacterizationResult r;
  switch (which) {
    case Characterization::thm_5_1: {
      const ObstructionSet& f = need(sets.f, "F");
      const ObstructionSet& a = need(sets.line, "the line obstruction set");
      r.clauses.push_back({"(i) L(G) in 1-HNG", in_1hng(line_graph(g), f, 12)});
      r.clauses.push_back({"(ii) no subgraph in A", !find_obstruction(g, a).has_value()});
      break;
    }
    case Characterization::thm_5_3: {
      const ObstructionSet& f = need(sets.f, "F");
      const ObstructionSet& b = need(sets.claw, "the claw obstruction set");
      const bool member = in_1hng(g, f, kMaxSubsetScanOrder);
      const bool claw_free = is_claw_free(g);
      r.clauses.push_back({"(i) 1-HNG and claw-free", member && claw_free});
      r.clauses.push_back({"(ii) no induced member of B", !find_obstruction(g, b).has_value()});
      // Isolated vertices of G are dominating in the complement. Dominating
      // vertices of G are allowed only over a core without a stable triple,
      // since otherwise they centre a claw.
      const Graph core_with_dominating = induced_subgraph(g, peel(g, true, false));
      const VertexMask core_mask = peel(core_with_dominating, false, true);
      const Graph core = induced_subgraph(core_with_dominating, core_mask);
      const bool has_dominating = core_mask != core_with_dominating.vertices();
      const bool structural = in_some_d_family(complement(core)) &&
                              (!has_dominating || independence_number(core) <= 2);
      const bool perfect_branch = claw_free && member && is_perfect(g);
      r.clauses.push_back({"(iii) perfect, claw-free and 1-HNG, or complement in D1/D2/D3",
                           perfect_branch || structural});
      break;
    }
    case Characterization::thm_5_5: {
      const ObstructionSet& f = need(sets.f, "F");
      const ObstructionSet& t = need(sets.triangle, "the triangle obstruction set");
      r.clauses.push_back({"(i) 1-HNG and triangle-free", is_triangle_free(g) && in_1hng(g, f, kMaxSubsetScanOrder)});
      r.clauses.push_back({"(ii) no induced member of the triangle set", !find_obstruction(g, t).has_value()});
      const auto bd = is_biclique_or_doublestar_subgraph(g);
      const Graph core = induced_subgraph(g, peel(g, true, false));
      r.clauses.push_back({"(iii) inside K_{2,n-2} or a double star, or D3 plus isolated vertices",
                           bd.biclique || bd.double_star || is_family_member(core, DFamily::d3)});
      break;
    }
  }
  for (const auto& c : r.clauses) r.consistent = r.consistent && c.value == r.clauses.front().value;
  return r;
}

}  // namespace hng
