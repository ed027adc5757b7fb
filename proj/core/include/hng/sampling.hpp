#ifndef HNG_SAMPLING_HPP
#define HNG_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "hng/graph.hpp"
#include "hng/structure.hpp"

namespace hng {

/// Seeded source of random graphs. Only raw mt19937_64 output is consumed,
/// so a seed reproduces the same graphs on every platform.
class GraphSampler {
 public:
  explicit GraphSampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  /// Uniform in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Uniform in [0, 1).
  double uniform_real();
  bool coin(double p) { return uniform_real() < p; }

  Graph gnp(int n, double p);
  Graph random_threshold(int n);
  /// Clique on k vertices, stable set on the rest, random edges between.
  Graph random_split(int n);
  /// Random D1/D2/D3 instance with exactly n vertices (n >= 5), randomly relabeled.
  Graph random_family_instance(int n, DFamily* family_out = nullptr);
  Graph shuffled(const Graph& g);
  Graph flip_random_edges(const Graph& g, int flips);

  /// The mixed distribution used for sampled equivalence checks: G(n, p) with
  /// p in [0.05, 0.95], or a threshold, split or D-family graph (possibly
  /// complemented) with up to two edges flipped.
  Graph mixed(int n);

 private:
  std::mt19937_64 rng_;
};

}  // namespace hng

#endif  // HNG_SAMPLING_HPP
