#ifndef HNG_INVARIANTS_HPP
#define HNG_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "hng/graph.hpp"

namespace hng {

/// Order 0 has omega = alpha = chi = theta = 0.
int clique_number(const Graph& g);
int independence_number(const Graph& g);
/// A maximum clique; ties resolve to the first one found by the branch and bound.
VertexMask maximum_clique(const Graph& g);

int chromatic_number(const Graph& g);
int clique_cover_number(const Graph& g);
bool is_k_colorable(const Graph& g, int k);

int matching_number(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_c5_free(const Graph& g);

/// Induced odd cycle of length >= 5.
bool has_odd_hole(const Graph& g);
/// No odd hole in g or its complement. The chordless-path search is
/// exponential in the worst case but well under a millisecond at order 32 on
/// the inputs benchmarked.
bool is_perfect(const Graph& g);

enum class DistinctMode { chi, theta };

/// Vertices whose deletion lowers chi (or theta) by one.
VertexMask distinct_vertices(const Graph& g, DistinctMode mode);

/// Peels isolated or dominating vertices until nothing is left.
bool is_threshold(const Graph& g);
/// No induced 2K2, P4 or C4.
bool is_threshold_by_forbidden_triple(const Graph& g);

/// Every induced subgraph H has omega(H) + alpha(H) >= |H|. Order <= 16.
bool is_sum_perfect(const Graph& g);

inline constexpr int kMaxSubsetScanOrder = 16;

/// Chromatic numbers of all induced subgraphs, indexed by vertex mask, filled
/// in ascending mask order so a scan can stop early.
class SubsetChromaticTable {
 public:
  explicit SubsetChromaticTable(const Graph& g);

  /// Computes chi(g[mask]) for the next mask in ascending order and returns it.
  int advance();
  bool done() const noexcept { return next_ == values_.size(); }
  VertexMask next_mask() const noexcept { return static_cast<VertexMask>(next_); }
  int operator[](VertexMask s) const noexcept { return values_[s]; }

 private:
  std::vector<VertexMask> adj_;
  std::vector<std::uint8_t> independent_;
  std::vector<std::uint8_t> values_;
  std::size_t next_ = 1;
};

std::vector<std::uint8_t> subset_clique_numbers(const Graph& g);

struct InvariantFlags {
  bool bipartite = false;
  bool triangle_free = false;
  bool claw_free = false;
  bool c5_free = false;
  bool perfect = false;
  bool threshold = false;
  bool sum_perfect = false;
};

struct InvariantRecord {
  int order = 0;
  int omega = 0;
  int alpha = 0;
  int chi = 0;
  int theta = 0;
  int nu = 0;
  InvariantFlags flags;
};

/// All exact invariants; order <= 16.
InvariantRecord compute_invariants(const Graph& g);

}  // namespace hng

#endif  // HNG_INVARIANTS_HPP
