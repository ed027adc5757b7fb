#ifndef HNG_MINER_HPP
#define HNG_MINER_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hng/canon.hpp"
#include "hng/enumeration.hpp"

namespace hng {

/// A graph property closed under induced subgraphs. Mining relies on that
/// closure; a non-hereditary predicate gives meaningless minimality.
struct HereditaryPredicate {
  std::string id;
  std::function<bool(const Graph&)> holds;
};

/// "threshold", "sum-perfect", "perfect", "claw-free", "triangle-free",
/// "bipartite", "c5-free", or "<a>-hng" such as "1-hng".
HereditaryPredicate predicate_by_name(std::string_view name);

enum class ContainmentOrder { induced, subgraph };

struct ObstructionProvenance {
  std::string predicate;
  std::string method;
  int order_bound = 0;
  int edge_bound = 0;  // only for subgraph-order sets
};

struct ObstructionSet {
  std::string name;
  ContainmentOrder containment = ContainmentOrder::induced;
  /// Sorted canonical codes.
  std::vector<CanonicalCode> members;
  /// Named subfamilies, for example F_S and F_C inside F.
  std::map<std::string, std::vector<CanonicalCode>> parts;
  ObstructionProvenance provenance;
  /// Set by check_complement_closure.
  std::optional<bool> complement_closed;

  std::map<int, int> counts_by_order() const;
  bool contains(const CanonicalCode& code) const;
  std::vector<Graph> graphs() const;
  /// FNV-1a over the sorted graph6 lines.
  std::uint64_t hash() const;
};

bool check_complement_closure(ObstructionSet& set);

/// No member lies inside another under the set's containment order.
bool is_antichain(const ObstructionSet& set);

/// First member contained in g (induced or as a subgraph per the set), with
/// its member index and host witness mask.
struct ObstructionHit {
  std::size_t member = 0;
  VertexMask host_vertices = 0;
};
std::optional<ObstructionHit> find_obstruction(const Graph& g, const ObstructionSet& set);

/// Graphs of order <= n_max failing the predicate whose single-vertex
/// deletions all satisfy it. Catalogs come from `cache` when given,
/// otherwise they are enumerated in memory.
ObstructionSet mine_minimal_fis(const HereditaryPredicate& predicate, int n_max,
                                CatalogCache* cache = nullptr);

/// Minimal graphs of hereditary defect 2 or more, split into F_S (no
/// induced C_5) and F_C (induced C_5).
ObstructionSet derive_F(int n_max = 8, CatalogCache* cache = nullptr);

/// The claw together with the claw-free members of f.
ObstructionSet derive_claw_obstructions(const ObstructionSet& f);

/// K_3 together with the triangle-free members of f.
ObstructionSet derive_trianglefree_obstructions(const ObstructionSet& f);

/// Isolated-free H with at most max_edges edges such that L(H) is not in
/// 1-HNG while L(H - e) is for every edge e. Minimal under the subgraph order.
ObstructionSet derive_line_obstructions(int max_edges = 8);

/// `path` receives graph6 lines, `path` + ".json" the metadata.
void save_obstruction_set(const ObstructionSet& set, const std::filesystem::path& path);
ObstructionSet load_obstruction_set(const std::filesystem::path& path);

}  // namespace hng

#endif  // HNG_MINER_HPP
