#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool edge(const Graph& g, int u, int v) { return g.adjacent(u, v); }

bool is_clique(const Graph& g, std::uint32_t mask) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if ((mask >> u & 1U) && (mask >> v & 1U) && !edge(g, u, v)) return false;
    }
  }
  return true;
}

bool is_stable(const Graph& g, std::uint32_t mask) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if ((mask >> u & 1U) && (mask >> v & 1U) && edge(g, u, v)) return false;
    }
  }
  return true;
}

Graph complement_of(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!edge(g, u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

bool embeds(const Graph& host, const Graph& pattern, bool induced_only) {
  const int n = host.order();
  const int k = pattern.order();
  if (k > n) return false;
  std::vector<int> image(k);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    for (int h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const bool pe = edge(pattern, i, j);
        const bool he = edge(host, h, image[j]);
        ok = induced_only ? pe == he : (!pe || he);
      }
      if (!ok) continue;
      used[h] = true;
      image[i] = h;
      if (self(self, i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  // Orders above 62 never occur here (the container holds 32 vertices).
  out.push_back(static_cast<char>(63 + n));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(edge(g, i, j) ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

std::string permutation_min_code(const Graph& g) {
  const int n = g.order();
  std::string best;
  for (const auto& p : all_permutations(n)) {
    std::string code;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) code.push_back(edge(g, p[i], p[j]) ? '1' : '0');
    }
    if (best.empty() || code < best) best = code;
  }
  return best;
}

long long orbit_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const std::size_t m = pairs.size();
  std::vector<std::vector<int>> index(n, std::vector<int>(n, 0));
  for (std::size_t k = 0; k < m; ++k) {
    index[pairs[k].first][pairs[k].second] = static_cast<int>(k);
    index[pairs[k].second][pairs[k].first] = static_cast<int>(k);
  }
  // Each permutation as a map on pair indices.
  std::vector<std::vector<int>> pair_maps;
  for (const auto& p : all_permutations(n)) {
    std::vector<int> map(m);
    for (std::size_t k = 0; k < m; ++k) map[k] = index[p[pairs[k].first]][p[pairs[k].second]];
    pair_maps.push_back(std::move(map));
  }
  std::vector<bool> seen(std::size_t{1} << m, false);
  long long classes = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    if (seen[x]) continue;
    ++classes;
    for (const auto& map : pair_maps) {
      std::uint64_t y = 0;
      for (std::size_t k = 0; k < m; ++k) {
        if (x >> k & 1U) y |= std::uint64_t{1} << map[k];
      }
      seen[y] = true;
    }
  }
  return classes;
}

long long burnside_count(int n) {
  // Sum over permutations of 2^(number of cycles on unordered pairs).
  std::uint64_t total = 0;
  long long perms = 0;
  for (const auto& p : all_permutations(n)) {
    ++perms;
    std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (done[i][j]) continue;
        ++cycles;
        int a = i;
        int b = j;
        while (!done[std::min(a, b)][std::max(a, b)]) {
          done[std::min(a, b)][std::max(a, b)] = true;
          a = p[a];
          b = p[b];
        }
      }
    }
    total += std::uint64_t{1} << cycles;
  }
  return static_cast<long long>(total / static_cast<std::uint64_t>(perms));
}

int clique_number(const Graph& g) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << g.order()); ++s) {
    if (is_clique(g, s)) best = std::max(best, std::popcount(s));
  }
  return best;
}

int independence_number(const Graph& g) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << g.order()); ++s) {
    if (is_stable(g, s)) best = std::max(best, std::popcount(s));
  }
  return best;
}

std::vector<int> chromatic_table(const Graph& g) {
  const int n = g.order();
  const std::size_t size = std::size_t{1} << n;
  std::vector<bool> stable(size, true);
  for (std::uint32_t s = 1; s < size; ++s) stable[s] = is_stable(g, s);
  // chi[s] by removing a stable set that contains the lowest vertex of s.
  std::vector<int> chi(size, 0);
  for (std::uint32_t s = 1; s < size; ++s) {
    const std::uint32_t low = s & (~s + 1);
    int best = 1000;
    for (std::uint32_t t = s; t != 0; t = (t - 1) & s) {
      if ((t & low) && stable[t]) best = std::min(best, chi[s & ~t] + 1);
    }
    chi[s] = best;
  }
  return chi;
}

std::vector<int> clique_table(const Graph& g) {
  const std::size_t size = std::size_t{1} << g.order();
  std::vector<int> omega(size, 0);
  for (std::uint32_t s = 1; s < size; ++s) {
    int best = 0;
    for (std::uint32_t t = s; t != 0; t = (t - 1) & s) {
      if (is_clique(g, t)) best = std::max(best, std::popcount(t));
    }
    omega[s] = best;
  }
  return omega;
}

int chromatic_number(const Graph& g) { return chromatic_table(g).back(); }

int clique_cover_number(const Graph& g) { return chromatic_number(complement_of(g)); }

int matching_number(const Graph& g) {
  const int n = g.order();
  std::vector<int> best(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t rest = s & ~(1U << v);
    int b = best[rest];
    for (int u = 0; u < n; ++u) {
      if ((rest >> u & 1U) && edge(g, u, v)) b = std::max(b, 1 + best[rest & ~(1U << u)]);
    }
    best[s] = b;
  }
  return best[(1U << n) - 1];
}

bool is_perfect(const Graph& g) {
  const auto chi = chromatic_table(g);
  const auto omega = clique_table(g);
  return chi == omega;
}

int ng_defect(const Graph& g) {
  if (g.order() == 0) return 0;
  return g.order() + 1 - chromatic_number(g) - clique_cover_number(g);
}

int hereditary_ng_defect(const Graph& g) {
  const auto chi = chromatic_table(g);
  const auto theta = chromatic_table(complement_of(g));
  int worst = 0;
  for (std::uint32_t s = 1; s < chi.size(); ++s) worst = std::max(worst, std::popcount(s) + 1 - chi[s] - theta[s]);
  return worst;
}

bool has_induced(const Graph& host, const Graph& pattern) { return embeds(host, pattern, true); }
bool has_subgraph(const Graph& host, const Graph& pattern) { return embeds(host, pattern, false); }

}  // namespace oracle
