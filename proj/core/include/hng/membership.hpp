#ifndef HNG_MEMBERSHIP_HPP
#define HNG_MEMBERSHIP_HPP

#include <optional>
#include <string>
#include <vector>

#include "hng/graph.hpp"

namespace hng {

struct DefectReport {
  int defect = 0;
  int hereditary_defect = 0;
  /// Induced subgraph attaining the hereditary defect: the largest such
  /// subset, ties broken by the numerically smallest mask.
  VertexMask witness = 0;
};

/// n + 1 - chi - theta. The null graph is assigned 0.
int ng_defect(const Graph& g);

/// Maximum defect over all nonempty induced subgraphs. Order <= 16.
DefectReport hereditary_ng_defect(const Graph& g);

bool in_ng(const Graph& g, int a);
/// Stops at the first induced subgraph whose defect exceeds `a`. Order <= 16.
bool in_hng(const Graph& g, int a);

struct InclusionViolation {
  std::string graph6;
  int a = 0;
  std::string relation;  // which inclusion failed, e.g. "a-NG in (a+1)-HNG"
  int defect = 0;
  int hereditary_defect = 0;
};

struct StrictnessWitness {
  std::string name;
  int a = 0;
  std::string claim;
  bool holds = false;
};

struct InclusionChainReport {
  int a_max = 0;
  int n_max = 0;
  long long graphs_checked = 0;
  std::vector<InclusionViolation> violations;
  std::vector<StrictnessWitness> witnesses;

  bool passed() const;
};

/// For every a < a_max and every graph of order <= n_max checks
/// a-HNG in a-NG in (a+1)-HNG, and the separating examples C_{2a+5} and
/// P_{2a+4} whenever they have order <= 16.
InclusionChainReport verify_inclusion_chain(int a_max, int n_max);

}  // namespace hng

#endif  // HNG_MEMBERSHIP_HPP
