#ifndef HNG_CANON_HPP
#define HNG_CANON_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hng/graph.hpp"

namespace hng {

/// Isomorphism-invariant key: the order plus the upper-triangle adjacency
/// bitstring (graph6 column order) of the canonical relabeling.
///
/// Bit k of the string lives at bit 63 - k % 64 of word k / 64, so comparing
/// words numerically compares bitstrings lexicographically.
class CanonicalCode {
 public:
  CanonicalCode() = default;

  int order() const noexcept { return order_; }
  bool bit_at(std::size_t k) const noexcept { return (words_[k / 64] >> (63 - k % 64)) & 1U; }

  /// The canonical representative as a labeled graph.
  Graph graph() const;
  std::string graph6() const;

  static CanonicalCode of_labeled(const Graph& g);

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

  std::size_t hash() const noexcept;

 private:
  int order_ = 0;
  std::array<std::uint64_t, 8> words_{};
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept { return c.hash(); }
};

struct CanonicalForm {
  CanonicalCode code;
  /// labeling[i] is the vertex of the input placed at canonical position i.
  std::vector<Vertex> labeling;
};

/// Minimum code over the leaves of an individualization-refinement search
/// tree (equitable refinement, first non-singleton target cell), pruned by
/// automorphisms discovered during the search.
CanonicalForm canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// First S (in ascending-candidate search order) with host[S] isomorphic to pattern.
std::optional<VertexMask> contains_induced(const Graph& host, const Graph& pattern);

/// Injective map pattern-vertex -> host-vertex that preserves edges.
std::optional<std::vector<Vertex>> contains_subgraph(const Graph& host, const Graph& pattern);

}  // namespace hng

#endif  // HNG_CANON_HPP
