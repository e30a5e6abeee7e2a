#pragma once

// Brute-force reference implementations used as independent test oracles.

#include "localchrom/graph.hpp"
#include "localchrom/properties.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using localchrom::Graph;

/// 2-colourability of g[s] by trying every assignment.
inline bool bipartite_brute(const Graph& g, const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        if (g.has_edge(s[i], s[j]) && ((mask >> i & 1) == (mask >> j & 1))) ok = false;
    if (ok) return true;
  }
  return false;
}

inline bool locally_bipartite_brute(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> nbrs;
    for (int u = 0; u < g.order(); ++u)
      if (g.has_edge(u, v)) nbrs.push_back(u);
    if (!bipartite_brute(g, nbrs)) return false;
  }
  return true;
}

inline bool hom_brute(const Graph& g, const Graph& h) {
  const int n = g.order(), m = h.order();
  if (n == 0) return true;
  if (m == 0) return false;
  std::vector<int> map(static_cast<std::size_t>(n), 0);
  auto edges = g.edges();
  while (true) {
    bool ok = std::all_of(edges.begin(), edges.end(), [&](auto e) { return h.has_edge(map[e.first], map[e.second]); });
    if (ok) return true;
    int i = 0;
    while (i < n && ++map[i] == m) map[i++] = 0;
    if (i == n) return false;
  }
}

/// Injective (optionally induced) copy of p in h, by enumerating all injections.
inline bool subgraph_brute(const Graph& p, const Graph& h, bool induced) {
  const int n = p.order(), m = h.order();
  if (n > m) return false;
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 0);
  // Choose n vertices (combinations), then all orderings of them.
  std::vector<bool> pick(static_cast<std::size_t>(m), false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    std::vector<int> chosen;
    for (int i = 0; i < m; ++i)
      if (pick[i]) chosen.push_back(i);
    std::sort(chosen.begin(), chosen.end());
    do {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = a + 1; b < n && ok; ++b) {
          bool pe = p.has_edge(a, b), he = h.has_edge(chosen[a], chosen[b]);
          if (pe && !he) ok = false;
          if (induced && !pe && he) ok = false;
        }
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool isomorphic_brute(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.num_edges() == b.num_edges() && subgraph_brute(a, b, true);
}

/// Smallest k admitting a proper colouring, by trying all k^n assignments.
inline int chi_brute(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  auto edges = g.edges();
  for (int k = 1;; ++k) {
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    while (true) {
      bool ok = std::all_of(edges.begin(), edges.end(), [&](auto e) { return col[e.first] != col[e.second]; });
      if (ok) return k;
      int i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
}

inline int alpha_brute(const Graph& g) {
  int best = 0;
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && g.has_edge(i, j)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline int omega_brute(const Graph& g) {
  Graph c(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) c.add_edge(i, j);
  return alpha_brute(c);
}

}  // namespace oracle
