#ifndef HNG_STRUCTURE_HPP
#define HNG_STRUCTURE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hng/graph.hpp"
#include "hng/miner.hpp"

namespace hng {

/// Bit i stands for cycle vertex c_{i+1}.
using C5Type = std::uint8_t;

inline constexpr C5Type kFullType = 0x1F;

/// "{}", "{c1,c3}", ...
std::string type_name(C5Type t);
/// Inverse of type_name; braces and spaces are optional ("c1,c3" works).
C5Type parse_type(std::string_view text);

/// Image of t under c_i -> c_{i+r} (indices mod 5), preceded by the
/// reflection c_i -> c_{2-i} when `reflect` is set.
C5Type dihedral_image(C5Type t, int r, bool reflect);
/// Smallest dihedral image.
C5Type normalize_type(C5Type t);

struct C5TypeProfile {
  /// Edges c1c2, c2c3, c3c4, c4c5, c5c1.
  std::array<Vertex, 5> c5{};
  /// (vertex, N(v) & C) for every vertex outside the cycle, ascending.
  std::vector<std::pair<Vertex, C5Type>> types;

  /// Types with the dihedral normalization applied to each one.
  std::vector<std::pair<Vertex, C5Type>> normalized() const;
};

C5TypeProfile profile_for(const Graph& g, const std::array<Vertex, 5>& c5);

/// First induced C_5 found by ascending search (c1 the smallest vertex, c2 < c5).
std::optional<C5TypeProfile> find_induced_c5(const Graph& g);
/// Every induced C_5, each once, in the same orientation convention.
std::vector<std::array<Vertex, 5>> all_induced_c5(const Graph& g);

/// C_5 on vertices 0..4, then one vertex per entry of `types`; `added_edges`
/// joins added vertices (indices into `types`).
Graph c5_gadget(std::span<const C5Type> types,
                std::span<const std::pair<int, int>> added_edges = {});

/// The gadget C_5 + v + w (v of type t1, w of type t2, vw an edge iff
/// `adjacent`) contains no induced member of f.
bool type_compatible(C5Type t1, bool adjacent, C5Type t2, const ObstructionSet& f);

bool is_1hng_fast(const Graph& g, const ObstructionSet& f);

struct ApexWitness {
  bool already_perfect = false;
  /// A vertex whose deletion leaves a perfect graph; empty when already perfect.
  std::optional<Vertex> vertex;
};

/// Throws not_in_class unless g is f-free.
ApexWitness apex_perfect_witness(const Graph& g, const ObstructionSet& f);

/// Clique number through perfect deletions of one induced C_5.
int clique_number_fast(const Graph& g, const ObstructionSet& f);
int independence_number_fast(const Graph& g, const ObstructionSet& f);

/// Imperfect members with chi = omega + 1 have this shape: an induced C_5
/// with its remaining vertices stable, of types (up to symmetry) within
/// {}, {c1}, {c1,c3}, {c1,c4}, full, or exactly {c1,c2,c4} and {c1,c2,c3,c5}.
bool has_exceptional_chromatic_shape(const Graph& g);

int chromatic_number_fast(const Graph& g, const ObstructionSet& f);
int clique_cover_number_fast(const Graph& g, const ObstructionSet& f);

Graph line_graph(const Graph& g);

enum class DFamily { d1, d2, d3 };

struct FamilySpec {
  DFamily family = DFamily::d1;
  /// How many stable added vertices of each type.
  std::vector<std::pair<C5Type, int>> multiplicities;
};

/// The allowed added-vertex types of a family, in the listing order.
std::vector<C5Type> family_types(DFamily family);

/// Throws invalid_type_for_family or order_cap_exceeded.
Graph generate_family(const FamilySpec& spec);

/// Some induced C_5 of g, under some dihedral relabeling, leaves a stable
/// set of vertices whose types are all allowed in the family.
bool is_family_member(const Graph& g, DFamily family);

struct BicliqueDoubleStar {
  bool biclique = false;    // subgraph of K_{2,n-2}
  bool double_star = false; // subgraph of some S_{m,n-m}
};

BicliqueDoubleStar is_biclique_or_doublestar_subgraph(const Graph& g);

enum class Characterization { thm_5_1, thm_5_3, thm_5_5 };

struct ClauseValue {
  std::string clause;
  bool value = false;
};

struct CharacterizationResult {
  std::vector<ClauseValue> clauses;
  bool consistent = true;
};

/// The obstruction sets a characterization may need; missing ones raise
/// missing_obstruction_set.
struct CharacterizationSets {
  const ObstructionSet* f = nullptr;
  const ObstructionSet* line = nullptr;      // thm_5_1
  const ObstructionSet* claw = nullptr;      // thm_5_3
  const ObstructionSet* triangle = nullptr;  // thm_5_5
};

CharacterizationResult check_characterization(Characterization which, const Graph& g,
                                              const CharacterizationSets& sets);

}  // namespace hng

#endif  // HNG_STRUCTURE_HPP
