#ifndef HNG_TESTS_SUPPORT_HPP
#define HNG_TESTS_SUPPORT_HPP

#include <random>

#include "hng/graph.hpp"
#include "hng/miner.hpp"

namespace testing {

inline hng::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  hng::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline hng::Graph random_graph(std::mt19937_64& rng, int n) {
  return random_graph(rng, n, std::uniform_real_distribution<double>(0.1, 0.9)(rng));
}

inline std::vector<hng::Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<hng::Vertex> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// The order-8 obstruction set, mined once per test binary.
inline const hng::ObstructionSet& mined_f() {
  static const hng::ObstructionSet f = hng::derive_F(8);
  return f;
}

}  // namespace testing

#endif
