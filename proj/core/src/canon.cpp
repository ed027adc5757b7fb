#include "hng/canon.hpp"

#include <algorithm>
#include <numeric>

#include "hng/graph6.hpp"

namespace hng {

namespace {

constexpr std::size_t pair_index(int i, int j) noexcept {
  return static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
}

using Perm = std::array<std::int8_t, kMaxOrder>;

struct Partition {
  std::array<VertexMask, kMaxOrder> cells{};
  int size = 0;
};

/// Splits cells by neighbor counts into other cells until equitable. Every
/// step depends only on the ordered cell structure, so the result commutes
/// with relabeling.
void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.size && !changed; ++s) {
      const VertexMask splitter = p.cells[s];
      for (int x = 0; x < p.size; ++x) {
        const VertexMask cell = p.cells[x];
        if (popcount(cell) == 1) continue;
        std::array<VertexMask, kMaxOrder + 1> by_count{};
        int lo = kMaxOrder + 1;
        int hi = -1;
        for_each_vertex(cell, [&](Vertex v) {
          const int c = popcount(g.neighbors(v) & splitter);
          by_count[c] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo == hi) continue;
        std::array<VertexMask, kMaxOrder> groups{};
        int parts = 0;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[c] != 0) groups[parts++] = by_count[c];
        }
        for (int k = p.size - 1; k > x; --k) p.cells[k + parts - 1] = p.cells[k];
        for (int k = 0; k < parts; ++k) p.cells[x + k] = groups[k];
        p.size += parts - 1;
        changed = true;
        break;
      }
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Partition root;
    if (n_ > 0) {
      root.cells[0] = g_.vertices();
      root.size = 1;
    }
    search(root, 0);
    CanonicalForm out;
    out.code = best_code_;
    out.labeling.assign(best_perm_.begin(), best_perm_.begin() + n_);
    return out;
  }

 private:
  static constexpr std::size_t kMaxAutomorphisms = 256;

  CanonicalCode code_of(const Perm& perm) const {
    Graph relabeled(n_);
    for (int j = 1; j < n_; ++j) {
      const VertexMask row = g_.neighbors(perm[j]);
      for (int i = 0; i < j; ++i) {
        if ((row >> perm[i]) & 1U) relabeled.add_edge(i, j);
      }
    }
    return CanonicalCode::of_labeled(relabeled);
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    if (automorphisms_.size() >= kMaxAutomorphisms) return;
    Perm gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(gamma);
  }

  void leaf(const Partition& p) {
    Perm perm{};
    for (int i = 0; i < n_; ++i) perm[i] = static_cast<std::int8_t>(lowest(p.cells[i]));
    const CanonicalCode code = code_of(perm);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_perm_ = best_perm_ = perm;
      first_path_ = best_path_ = path_;
      return;
    }
    // A repeated code means the subtree where this path left the earlier
    // one is an image of a subtree already seen, so the search jumps back.
    if (code == first_code_) {
      record_automorphism(first_perm_, perm);
      jump_ = common_prefix(first_path_);
    } else if (code == best_code_) {
      record_automorphism(best_perm_, perm);
      jump_ = common_prefix(best_path_);
    } else if (code < best_code_) {
      best_code_ = code;
      best_perm_ = perm;
      best_path_ = path_;
    }
  }

  int common_prefix(const std::vector<Vertex>& other) const {
    std::size_t k = 0;
    while (k < path_.size() && k < other.size() && path_[k] == other[k]) ++k;
    return static_cast<int>(k);
  }

  /// True if v shares an orbit with some explored vertex under the group
  /// generated by known automorphisms that fix `fixed` pointwise.
  bool pruned(Vertex v, VertexMask explored, VertexMask fixed) const {
    if (explored == 0 || automorphisms_.empty()) return false;
    std::array<int, kMaxOrder> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& gamma : automorphisms_) {
      bool fixes = true;
      for_each_vertex(fixed, [&](Vertex u) { fixes = fixes && gamma[u] == u; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    const int root = find(v);
    bool hit = false;
    for_each_vertex(explored, [&](Vertex u) { hit = hit || find(u) == root; });
    return hit;
  }

  void search(Partition p, VertexMask fixed) {
    refine(g_, p);
    if (p.size == n_) {
      leaf(p);
      return;
    }
    int target = 0;
    while (popcount(p.cells[target]) == 1) ++target;
    const VertexMask cell = p.cells[target];
    const int depth = static_cast<int>(path_.size());
    VertexMask explored = 0;
    for (VertexMask rest = cell; rest != 0; rest &= rest - 1) {
      const Vertex v = lowest(rest);
      if (pruned(v, explored, fixed)) continue;
      Partition child = p;
      for (int k = child.size - 1; k > target; --k) child.cells[k + 1] = child.cells[k];
      child.cells[target] = bit(v);
      child.cells[target + 1] = cell & ~bit(v);
      ++child.size;
      path_.push_back(v);
      search(child, fixed | bit(v));
      path_.pop_back();
      explored |= bit(v);
      if (jump_ >= 0) {
        if (jump_ < depth) return;
        jump_ = -1;
      }
    }
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  CanonicalCode first_code_;
  CanonicalCode best_code_;
  Perm first_perm_{};
  Perm best_perm_{};
  std::vector<Perm> automorphisms_;
  std::vector<Vertex> path_, first_path_, best_path_;
  int jump_ = -1;
};

/// Pattern vertices in a connectivity-first order: each next vertex has the
/// most already-placed neighbors (then highest degree, then lowest index).
std::vector<Vertex> search_order(const Graph& pattern, bool isolated_last) {
  const int n = pattern.order();
  std::vector<Vertex> seq;
  VertexMask placed = 0;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    int best_links = -2;
    int best_degree = -2;
    for (Vertex v = 0; v < n; ++v) {
      if (placed & bit(v)) continue;
      int links = popcount(pattern.neighbors(v) & placed);
      int deg = pattern.degree(v);
      if (isolated_last && deg == 0) {
        links = -1;
        deg = -1;
      }
      if (links > best_links || (links == best_links && deg > best_degree)) {
        best = v;
        best_links = links;
        best_degree = deg;
      }
    }
    seq.push_back(best);
    placed |= bit(best);
  }
  return seq;
}

template <bool Induced>
bool embed(const Graph& host, const Graph& pattern, const std::vector<Vertex>& seq,
           const std::vector<VertexMask>& allowed, std::size_t depth,
           std::array<Vertex, kMaxOrder>& image, VertexMask used) {
  if (depth == seq.size()) return true;
  const Vertex p = seq[depth];
  VertexMask cand = allowed[depth] & ~used;
  for (std::size_t i = 0; i < depth && cand != 0; ++i) {
    const VertexMask hn = host.neighbors(image[seq[i]]);
    if (pattern.adjacent(seq[i], p)) {
      cand &= hn;
    } else if constexpr (Induced) {
      cand &= ~hn;
    }
  }
  while (cand != 0) {
    const Vertex h = lowest(cand);
    cand &= cand - 1;
    image[p] = h;
    if (embed<Induced>(host, pattern, seq, allowed, depth + 1, image, used | bit(h))) return true;
  }
  return false;
}

template <bool Induced>
std::optional<std::array<Vertex, kMaxOrder>> find_embedding(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return std::nullopt;
  const auto seq = search_order(pattern, !Induced);
  std::vector<VertexMask> allowed(seq.size(), 0);
  const int nh = host.order();
  const int np = pattern.order();
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const int pd = pattern.degree(seq[k]);
    for (Vertex h = 0; h < nh; ++h) {
      const int hd = host.degree(h);
      bool ok = hd >= pd;
      if constexpr (Induced) ok = ok && (nh - 1 - hd) >= (np - 1 - pd);
      if (ok) allowed[k] |= bit(h);
    }
  }
  std::array<Vertex, kMaxOrder> image{};
  if (embed<Induced>(host, pattern, seq, allowed, 0, image, 0)) return image;
  return std::nullopt;
}

}  // namespace

CanonicalCode CanonicalCode::of_labeled(const Graph& g) {
  CanonicalCode c;
  c.order_ = g.order();
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) {
        const std::size_t k = pair_index(i, j);
        c.words_[k / 64] |= std::uint64_t{1} << (63 - k % 64);
      }
    }
  }
  return c;
}

Graph CanonicalCode::graph() const {
  Graph g(order_);
  for (int j = 1; j < order_; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit_at(pair_index(i, j))) g.add_edge(i, j);
    }
  }
  return g;
}

std::string CanonicalCode::graph6() const { return graph6_encode(graph()); }

std::size_t CanonicalCode::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(order_);
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

CanonicalCode canonical_code(const Graph& g) { return canonical_form(g).code; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

std::optional<VertexMask> contains_induced(const Graph& host, const Graph& pattern) {
  const auto image = find_embedding<true>(host, pattern);
  if (!image) return std::nullopt;
  VertexMask s = 0;
  for (int p = 0; p < pattern.order(); ++p) s |= bit((*image)[p]);
  return s;
}

std::optional<std::vector<Vertex>> contains_subgraph(const Graph& host, const Graph& pattern) {
  const auto image = find_embedding<false>(host, pattern);
  if (!image) return std::nullopt;
  return std::vector<Vertex>(image->begin(), image->begin() + pattern.order());
}

}  // namespace hng
