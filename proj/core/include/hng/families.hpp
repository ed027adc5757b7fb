#ifndef HNG_FAMILIES_HPP
#define HNG_FAMILIES_HPP

#include <string_view>
#include <vector>

#include "hng/graph.hpp"

namespace hng {

enum class FamilyKind {
  cycle,               // C_n, n >= 3, vertices in traversal order
  path,                // P_n, n >= 1, vertices in traversal order
  complete,            // K_n
  complete_bipartite,  // K_{k,l}, the k-side first
  empty,               // complement of K_n
  claw,                // K_{1,3}, center is vertex 0
  double_star,         // S_{m,l}: centers 0 and 1 of degree m and l, m, l >= 1
  sun_with_pendant,    // 3-sun plus a pendant on a degree-two vertex
  disjoint_union,      // sum of `parts`
};

struct NamedFamily {
  FamilyKind kind = FamilyKind::empty;
  std::vector<int> params;
  std::vector<NamedFamily> parts;  // only for disjoint_union
};

Graph construct_named(const NamedFamily& family);

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_bipartite(int k, int l);
Graph empty_graph(int n);
Graph claw();
Graph double_star(int m, int l);
/// Triangle 0,1,2; vertex 3 ~ 0,1; 4 ~ 1,2; 5 ~ 2,0; pendant 6 ~ 3.
Graph sun_with_pendant();

/// Parses expressions such as "C5", "P4", "K4", "K2,3", "E3", "claw",
/// "S3,4", "sun-pendant", multiples like "3K2" or "2claw", sums joined by '+'
/// ("P5+P3"), and a "co-" prefix for the complement of a term.
Graph named(std::string_view expression);

}  // namespace hng

#endif  // HNG_FAMILIES_HPP
