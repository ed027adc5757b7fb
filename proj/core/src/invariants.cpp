#include "hng/invariants.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hng/canon.hpp"
#include "hng/error.hpp"
#include "hng/families.hpp"

namespace hng {

namespace {

void require_scan_order(const Graph& g, const char* what) {
  if (g.order() > kMaxSubsetScanOrder) {
    throw Error(Errc::order_cap_exceeded, std::string(what) + " supports order <= 16, got " +
                                              std::to_string(g.order()));
  }
}

/// Branch and bound with greedy-coloring bounds over candidate bitsets.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

  VertexMask run() {
    expand(g_.vertices(), 0, 0);
    return best_set_;
  }

 private:
  void expand(VertexMask candidates, VertexMask current, int size) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_size_ = size;
        best_set_ = current;
      }
      return;
    }
    std::array<Vertex, kMaxOrder> order{};
    std::array<int, kMaxOrder> bound{};
    int count = 0;
    VertexMask uncolored = candidates;
    for (int color = 1; uncolored != 0; ++color) {
      VertexMask open = uncolored;
      while (open != 0) {
        const Vertex v = lowest(open);
        open &= ~g_.neighbors(v) & ~bit(v);
        uncolored &= ~bit(v);
        order[count] = v;
        bound[count] = color;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (size + bound[i] <= best_size_) return;
      const Vertex v = order[i];
      expand(candidates & g_.neighbors(v), current | bit(v), size + 1);
      candidates &= ~bit(v);
    }
  }

  const Graph& g_;
  int best_size_ = 0;
  VertexMask best_set_ = 0;
};

/// DSATUR-ordered backtracking for a k-coloring with color-symmetry breaking.
class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), k_(k) {}

  bool run() { return assign(g_.vertices(), 0); }

 private:
  int saturation(Vertex v) const {
    int s = 0;
    for (int c = 0; c < used_; ++c) s += (classes_[c] & g_.neighbors(v)) != 0 ? 1 : 0;
    return s;
  }

  bool assign(VertexMask uncolored, int depth) {
    if (uncolored == 0) return true;
    Vertex pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for_each_vertex(uncolored, [&](Vertex v) {
      const int sat = saturation(v);
      const int deg = popcount(g_.neighbors(v) & uncolored);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    });
    const int limit = std::min(k_, used_ + 1);
    for (int c = 0; c < limit; ++c) {
      if ((classes_[c] & g_.neighbors(pick)) != 0) continue;
      const bool opened = c == used_;
      classes_[c] |= bit(pick);
      if (opened) ++used_;
      if (assign(uncolored & ~bit(pick), depth + 1)) return true;
      classes_[c] &= ~bit(pick);
      if (opened) --used_;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::array<VertexMask, kMaxOrder> classes_{};
  int used_ = 0;
};

int greedy_dsatur_colors(const Graph& g) {
  std::array<VertexMask, kMaxOrder> classes{};
  int used = 0;
  VertexMask uncolored = g.vertices();
  while (uncolored != 0) {
    Vertex pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for_each_vertex(uncolored, [&](Vertex v) {
      int sat = 0;
      for (int c = 0; c < used; ++c) sat += (classes[c] & g.neighbors(v)) != 0 ? 1 : 0;
      const int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    });
    int c = 0;
    while (c < used && (classes[c] & g.neighbors(pick)) != 0) ++c;
    if (c == used) ++used;
    classes[c] |= bit(pick);
    uncolored &= ~bit(pick);
  }
  return used;
}

/// Edmonds' blossom algorithm, array-based.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : g_(g), n_(g.order()) { match_.fill(-1); }

  int run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      Vertex v = find_augmenting_path(root);
      while (v != -1) {
        const Vertex pv = parent_[v];
        const Vertex ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    int matched = 0;
    for (Vertex v = 0; v < n_; ++v) matched += match_[v] != -1 ? 1 : 0;
    return matched / 2;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::array<bool, kMaxOrder> seen{};
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    used_.fill(false);
    parent_.fill(-1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    std::array<Vertex, kMaxOrder * 2> queue{};
    int head = 0;
    int tail = 0;
    used_[root] = true;
    queue[tail++] = root;
    while (head < tail) {
      const Vertex v = queue[head++];
      for (Vertex to : to_vertices(g_.neighbors(v))) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const Vertex cur = lca(v, to);
          in_blossom_.fill(false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue[tail++] = match_[to];
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::array<Vertex, kMaxOrder> match_{};
  std::array<Vertex, kMaxOrder> parent_{};
  std::array<Vertex, kMaxOrder> base_{};
  std::array<bool, kMaxOrder> used_{};
  std::array<bool, kMaxOrder> in_blossom_{};
};

/// Extends induced paths p0..pk whose vertices all exceed p0; `interior`
/// collects neighbors of p1..p(k-1), which no later vertex may touch.
bool odd_hole_from(const Graph& g, Vertex start, VertexMask allowed, Vertex last, int length,
                   VertexMask on_path, VertexMask interior) {
  VertexMask cand = g.neighbors(last) & allowed & ~on_path & ~interior;
  while (cand != 0) {
    const Vertex x = lowest(cand);
    cand &= cand - 1;
    if (length >= 2 && g.adjacent(x, start)) {
      const int cycle_length = length + 1;
      if (cycle_length >= 5 && cycle_length % 2 == 1) return true;
      continue;
    }
    const VertexMask grown = length >= 2 ? interior | g.neighbors(last) : interior;
    if (odd_hole_from(g, start, allowed, x, length + 1, on_path | bit(x), grown)) return true;
  }
  return false;
}

}  // namespace

VertexMask maximum_clique(const Graph& g) { return MaxCliqueSearch(g).run(); }

int clique_number(const Graph& g) { return popcount(maximum_clique(g)); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

bool is_k_colorable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  if (k <= 0) return false;
  return Colorer(g, k).run();
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  const int upper = greedy_dsatur_colors(g);
  for (int k = std::max(1, clique_number(g)); k < upper; ++k) {
    if (is_k_colorable(g, k)) return k;
  }
  return upper;
}

int clique_cover_number(const Graph& g) { return chromatic_number(complement(g)); }

int matching_number(const Graph& g) { return BlossomMatcher(g).run(); }

bool is_bipartite(const Graph& g) {
  std::array<int, kMaxOrder> side{};
  side.fill(-1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::array<Vertex, kMaxOrder> stack{};
    int top = 0;
    stack[top++] = s;
    while (top > 0) {
      const Vertex v = stack[--top];
      for (Vertex w : to_vertices(g.neighbors(v))) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack[top++] = w;
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if ((g.neighbors(u) & g.neighbors(v)) != 0) return false;
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  for (Vertex center = 0; center < g.order(); ++center) {
    const VertexMask nb = g.neighbors(center);
    for (Vertex a : to_vertices(nb)) {
      const VertexMask after_a = nb & ~g.neighbors(a) & ~full_mask(a + 1);
      for (Vertex b : to_vertices(after_a)) {
        if ((after_a & ~g.neighbors(b) & ~full_mask(b + 1)) != 0) return false;
      }
    }
  }
  return true;
}

bool is_c5_free(const Graph& g) { return !contains_induced(g, cycle(5)).has_value(); }

bool has_odd_hole(const Graph& g) {
  for (Vertex s = 0; s < g.order(); ++s) {
    const VertexMask allowed = g.vertices() & ~full_mask(s + 1);
    if (odd_hole_from(g, s, allowed, s, 1, bit(s), 0)) return true;
  }
  return false;
}

bool is_perfect(const Graph& g) {
  return !has_odd_hole(g) && !has_odd_hole(complement(g));
}

VertexMask distinct_vertices(const Graph& g, DistinctMode mode) {
  const Graph& base = g;
  const Graph co = mode == DistinctMode::theta ? complement(g) : Graph();
  const Graph& h = mode == DistinctMode::theta ? co : base;
  const int whole = chromatic_number(h);
  VertexMask out = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (chromatic_number(delete_vertex(h, v)) == whole - 1) out |= bit(v);
  }
  return out;
}

bool is_threshold(const Graph& g) {
  VertexMask alive = g.vertices();
  while (alive != 0) {
    VertexMask peel = 0;
    const int remaining = popcount(alive);
    for_each_vertex(alive, [&](Vertex v) {
      if (peel != 0) return;
      const int d = popcount(g.neighbors(v) & alive);
      if (d == 0 || d == remaining - 1) peel = bit(v);
    });
    if (peel == 0) return false;
    alive &= ~peel;
  }
  return true;
}

bool is_threshold_by_forbidden_triple(const Graph& g) {
  for (const char* name : {"2K2", "P4", "C4"}) {
    if (contains_induced(g, named(name))) return false;
  }
  return true;
}

SubsetChromaticTable::SubsetChromaticTable(const Graph& g) {
  require_scan_order(g, "subset chromatic table");
  const int n = g.order();
  const std::size_t size = std::size_t{1} << n;
  adj_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj_[v] = g.neighbors(v);
  independent_.assign(size, 0);
  values_.assign(size, 0);
  independent_[0] = 1;
  for (std::size_t s = 1; s < size; ++s) {
    const auto m = static_cast<VertexMask>(s);
    const Vertex v = lowest(m);
    const VertexMask rest = m & (m - 1);
    independent_[s] = independent_[rest] && (adj_[v] & rest) == 0 ? 1 : 0;
  }
}

int SubsetChromaticTable::advance() {
  const auto s = static_cast<VertexMask>(next_);
  const Vertex v = lowest(s);
  const VertexMask without_v = s & ~bit(v);
  // chi(S) is chi(S - v) or one more; a class through v reaching the floor ends the scan.
  const int floor = values_[without_v];
  const VertexMask free = without_v & ~adj_[v];
  int best = floor + 1;
  VertexMask t = free;
  for (;;) {
    if (independent_[t]) {
      const int candidate = 1 + values_[without_v & ~t];
      if (candidate < best) {
        best = candidate;
        if (best == floor) break;
      }
    }
    if (t == 0) break;
    t = (t - 1) & free;
  }
  values_[s] = static_cast<std::uint8_t>(best);
  ++next_;
  return best;
}

std::vector<std::uint8_t> subset_clique_numbers(const Graph& g) {
  require_scan_order(g, "subset clique table");
  const std::size_t size = std::size_t{1} << g.order();
  std::vector<std::uint8_t> omega(size, 0);
  for (std::size_t s = 1; s < size; ++s) {
    const auto m = static_cast<VertexMask>(s);
    const Vertex v = lowest(m);
    const VertexMask rest = m & ~bit(v);
    omega[s] = std::max<std::uint8_t>(omega[rest],
                                      static_cast<std::uint8_t>(1 + omega[rest & g.neighbors(v)]));
  }
  return omega;
}

bool is_sum_perfect(const Graph& g) {
  require_scan_order(g, "is_sum_perfect");
  const auto omega = subset_clique_numbers(g);
  const auto alpha = subset_clique_numbers(complement(g));
  for (std::size_t s = 1; s < omega.size(); ++s) {
    if (omega[s] + alpha[s] < popcount(static_cast<VertexMask>(s))) return false;
  }
  return true;
}

InvariantRecord compute_invariants(const Graph& g) {
  require_scan_order(g, "compute_invariants");
  InvariantRecord r;
  r.order = g.order();
  r.omega = clique_number(g);
  r.alpha = independence_number(g);
  r.chi = chromatic_number(g);
  r.theta = clique_cover_number(g);
  r.nu = matching_number(g);
  r.flags.bipartite = is_bipartite(g);
  r.flags.triangle_free = is_triangle_free(g);
  r.flags.claw_free = is_claw_free(g);
  r.flags.c5_free = is_c5_free(g);
  r.flags.perfect = is_perfect(g);
  r.flags.threshold = is_threshold(g);
  r.flags.sum_perfect = is_sum_perfect(g);
  return r;
}

}  // namespace hng
