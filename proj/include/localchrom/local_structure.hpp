#pragma once

#include "localchrom/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace localchrom {

/// Odd cycle `rim` inside the neighbourhood of `centre`.
struct OddWheelWitness {
  int centre = -1;
  std::vector<int> rim;

  std::string to_string() const {
    std::string out = "centre: " + std::to_string(centre) + " rim: ";
    for (std::size_t i = 0; i < rim.size(); ++i) out += (i ? "," : "") + std::to_string(rim[i]);
    return out;
  }

  bool valid_for(const Graph& g) const {
    if (rim.size() < 3 || rim.size() % 2 == 0) return false;
    VertexSet seen;
    for (std::size_t i = 0; i < rim.size(); ++i) {
      int a = rim[i], b = rim[(i + 1) % rim.size()];
      if (seen.contains(a) || a == centre) return false;
      seen.insert(a);
      if (!g.has_edge(centre, a) || !g.has_edge(a, b)) return false;
    }
    return true;
  }
};

/// True iff G[s] is bipartite.
inline bool is_bipartite_on(const Graph& g, const VertexSet& s) {
  VertexSet unseen = s;
  while (!unseen.empty()) {
    VertexSet side[2];
    int start = unseen.first();
    side[0].insert(start);
    unseen.erase(start);
    VertexSet frontier{start};
    int parity = 0;
    while (!frontier.empty()) {
      VertexSet next;
      for (int x : frontier) {
        if (g.neighbours(x).intersects(side[parity])) return false;
        next |= g.neighbours(x) & unseen;
      }
      parity ^= 1;
      side[parity] |= next;
      unseen -= next;
      frontier = next;
    }
  }
  return true;
}

/// Shortest odd cycle of G[s], or empty when G[s] is bipartite.
inline std::vector<int> shortest_odd_cycle_on(const Graph& g, const VertexSet& s) {
  const int n = g.order();
  std::vector<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  for (int root : s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::vector<int> queue{root};
    int best_x = -1, best_y = -1;
    for (std::size_t head = 0; head < queue.size() && best_x < 0; ++head) {
      int x = queue[head];
      if (!best.empty() && 2 * dist[x] + 1 >= static_cast<int>(best.size())) break;
      for (int y : g.neighbours(x) & s) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (dist[y] == dist[x]) {
          best_x = x;
          best_y = y;
          break;
        }
      }
    }
    if (best_x < 0) continue;
    std::vector<int> px, py;
    for (int a = best_x; a != -1; a = parent[a]) px.push_back(a);
    for (int b = best_y; b != -1; b = parent[b]) py.push_back(b);
    // Both paths end at the root; drop the shared tail past their last meeting point.
    while (px.size() >= 2 && py.size() >= 2 && px[px.size() - 2] == py[py.size() - 2]) {
      px.pop_back();
      py.pop_back();
    }
    std::vector<int> cyc(px.rbegin(), px.rend());
    for (std::size_t i = 0; i + 1 < py.size(); ++i) cyc.push_back(py[i]);
    if (best.empty() || cyc.size() < best.size()) best = std::move(cyc);
    if (best.size() == 3) break;
  }
  return best;
}

inline bool neighbourhood_is_bipartite(const Graph& g, int v) { return is_bipartite_on(g, g.neighbours(v)); }

struct LocalBipartiteness {
  bool locally_bipartite = true;
  std::optional<OddWheelWitness> witness;
};

inline LocalBipartiteness check_locally_bipartite(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (neighbourhood_is_bipartite(g, v)) continue;
    return {false, OddWheelWitness{v, shortest_odd_cycle_on(g, g.neighbours(v))}};
  }
  return {};
}

inline bool is_locally_bipartite(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (!neighbourhood_is_bipartite(g, v)) return false;
  return true;
}

/// For locally bipartite g and a non-edge uv: does g + uv stay locally bipartite?
/// Only the neighbourhoods of u, v and their common neighbours change.
inline bool adding_edge_keeps_locally_bipartite(const Graph& g, int u, int v) {
  Graph h = g.with_edge(u, v);
  if (!neighbourhood_is_bipartite(h, u) || !neighbourhood_is_bipartite(h, v)) return false;
  for (int x : g.neighbours(u) & g.neighbours(v))
    if (!neighbourhood_is_bipartite(h, x)) return false;
  return true;
}

enum class PairClass { ADJACENT, DENSE, SPARSE };

inline std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::ADJACENT: return "adjacent";
    case PairClass::DENSE: return "dense";
    case PairClass::SPARSE: return "sparse";
  }
  return "?";
}

inline PairClass classify_pair(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("classify_pair needs distinct vertices");
  if (g.has_edge(u, v)) return PairClass::ADJACENT;
  VertexSet common = g.neighbours(u) & g.neighbours(v);
  return g.is_independent(common) ? PairClass::SPARSE : PairClass::DENSE;
}

/// D_v: vertices forming a dense pair with v.
inline VertexSet dense_set(const Graph& g, int v) {
  VertexSet out;
  for (int u = 0; u < g.order(); ++u)
    if (u != v && classify_pair(g, u, v) == PairClass::DENSE) out.insert(u);
  return out;
}

/// Adds non-edges in lexicographic (u, v) order, keeping each one that leaves
/// the graph locally bipartite. One pass suffices: a rejected edge would be
/// rejected again in any supergraph.
inline Graph saturate(const Graph& g) {
  if (!is_locally_bipartite(g)) throw std::invalid_argument("saturate needs a locally bipartite graph");
  Graph h = g;
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (!h.has_edge(u, v) && adding_edge_keeps_locally_bipartite(h, u, v)) h.add_edge(u, v);
  return h;
}

inline bool is_edge_maximal_locally_bipartite(const Graph& g) {
  if (!is_locally_bipartite(g)) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v) && adding_edge_keeps_locally_bipartite(g, u, v)) return false;
  return true;
}

inline bool is_twin_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.neighbours(u) == g.neighbours(v)) return false;
  return true;
}

/// A sparse pair (centre, tip) such that centre-tip is the missing spoke of an
/// odd wheel: G[Γ(centre) ∪ {tip}] contains an odd cycle through tip.
struct MissingSpoke {
  int centre = -1;
  int tip = -1;
  std::vector<int> rim;  // starts at tip
};

/// Searches locally bipartite g for a sparse pair that is the missing spoke of
/// an odd wheel. With `rim_length` = 5 only 5-wheels are considered; with 0 any
/// odd length is.
inline std::optional<MissingSpoke> find_sparse_missing_spoke(const Graph& g, int rim_length = 0) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u == v || classify_pair(g, u, v) != PairClass::SPARSE) continue;
      VertexSet around = g.neighbours(u);
      if (rim_length == 5) {
        VertexSet ends = g.neighbours(v) & around;
        for (int a : ends)
          for (int b : g.neighbours(a) & around)
            for (int c : g.neighbours(b) & around)
              if (c != a)
                for (int d : g.neighbours(c) & ends)
                  if (d != a && d != b) return MissingSpoke{u, v, {v, a, b, c, d}};
        continue;
      }
      VertexSet s = around;
      s.insert(v);
      if (is_bipartite_on(g, s)) continue;
      // G[Γ(u)] is bipartite, so every odd cycle of G[s] passes through v.
      std::vector<int> cyc = shortest_odd_cycle_on(g, s);
      auto it = std::find(cyc.begin(), cyc.end(), v);
      std::rotate(cyc.begin(), it, cyc.end());
      return MissingSpoke{u, v, cyc};
    }
  }
  return std::nullopt;
}

}  // namespace localchrom
