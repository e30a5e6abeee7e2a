#pragma once

#include "localchrom/deadline.hpp"
#include "localchrom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace localchrom {

/// Proper colouring with colours 1..k.
struct Colouring {
  std::vector<int> colour;
  int k = 0;

  bool is_proper_for(const Graph& g) const {
    if (static_cast<int>(colour.size()) != g.order()) return false;
    for (int c : colour)
      if (c < 1 || c > k) return false;
    for (auto [u, v] : g.edges())
      if (colour[u] == colour[v]) return false;
    return true;
  }

  /// Renumbers colours by first occurrence (vertex 0 gets colour 1, ...).
  Colouring normalized() const {
    std::vector<int> rename(static_cast<std::size_t>(k) + 1, 0);
    int next = 0;
    Colouring out{colour, 0};
    for (auto& c : out.colour) {
      if (rename[c] == 0) rename[c] = ++next;
      c = rename[c];
    }
    out.k = next;
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t v = 0; v < colour.size(); ++v) out += (v ? "," : "") + std::to_string(colour[v]);
    return out;
  }
};

struct ColouringOptions {
  Deadline deadline;
  /// When set, ties in the DSATUR order are broken by a seeded shuffle instead
  /// of vertex index (used to cross-check negative answers).
  std::optional<unsigned> shuffle_seed;
  /// Collapse twin classes before searching (twins can always share a colour).
  bool merge_twins = true;
};

/// Greedy clique: repeatedly take the candidate with most candidate neighbours.
inline VertexSet greedy_clique(const Graph& g) {
  VertexSet clique, cand = g.vertices();
  while (!cand.empty()) {
    int best = -1, best_score = -1;
    for (int v : cand) {
      int score = g.neighbours(v).intersection_size(cand);
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    }
    clique.insert(best);
    cand &= g.neighbours(best);
  }
  return clique;
}

namespace detail {

class Dsatur {
 public:
  Dsatur(const Graph& g, int k, const ColouringOptions& opts) : g_(g), k_(k), opts_(opts) {
    const int n = g.order();
    colour_.assign(static_cast<std::size_t>(n), 0);
    seen_.assign(static_cast<std::size_t>(n) * (static_cast<std::size_t>(k) + 1), 0);
    saturation_.assign(static_cast<std::size_t>(n), 0);
    rank_.resize(static_cast<std::size_t>(n));
    std::iota(rank_.begin(), rank_.end(), 0);
    if (opts.shuffle_seed) {
      std::mt19937 rng(*opts.shuffle_seed);
      std::shuffle(rank_.begin(), rank_.end(), rng);
    }
  }

  std::optional<Colouring> solve() {
    const int n = g_.order();
    if (n == 0) return Colouring{{}, k_};
    if (k_ < 1) return std::nullopt;
    VertexSet clique = greedy_clique(g_);
    if (clique.size() > k_) return std::nullopt;
    int c = 0;
    for (int v : clique) assign(v, ++c);
    used_ = c;
    remaining_ = n - c;
    if (!search()) return std::nullopt;
    return Colouring{colour_, k_};
  }

 private:
  int& seen(int v, int c) { return seen_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  void assign(int v, int c) {
    colour_[v] = c;
    for (int u : g_.neighbours(v))
      if (seen(u, c)++ == 0) ++saturation_[u];
  }
  void unassign(int v) {
    int c = colour_[v];
    colour_[v] = 0;
    for (int u : g_.neighbours(v))
      if (--seen(u, c) == 0) --saturation_[u];
  }

  int pick() const {
    int best = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (colour_[v]) continue;
      if (best < 0 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] &&
           (g_.degree(v) > g_.degree(best) || (g_.degree(v) == g_.degree(best) && rank_[v] < rank_[best]))))
        best = v;
    }
    return best;
  }

  bool search() {
    opts_.deadline.poll();
    if (remaining_ == 0) return true;
    int v = pick();
    if (saturation_[v] >= k_) return false;
    int limit = std::min(k_, used_ + 1);
    for (int c = 1; c <= limit; ++c) {
      if (seen(v, c)) continue;
      int saved_used = used_;
      used_ = std::max(used_, c);
      assign(v, c);
      --remaining_;
      if (search()) return true;
      ++remaining_;
      unassign(v);
      used_ = saved_used;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  const ColouringOptions& opts_;
  std::vector<int> colour_, seen_, saturation_, rank_;
  int used_ = 0, remaining_ = 0;
};

}  // namespace detail

/// A proper k-colouring, or nullopt if none exists. Exact.
inline std::optional<Colouring> k_colourable(const Graph& g, int k, const ColouringOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("k_colourable needs k >= 1");
  if (opts.merge_twins && g.order() > 0) {
    TwinMerge merged = merge_twins_with_members(WeightedGraph::unit(g));
    if (merged.merged.graph().order() < g.order()) {
      ColouringOptions inner = opts;
      inner.merge_twins = false;
      auto small = k_colourable(merged.merged.graph(), k, inner);
      if (!small) return std::nullopt;
      Colouring lifted{std::vector<int>(static_cast<std::size_t>(g.order()), 0), k};
      for (std::size_t i = 0; i < merged.members.size(); ++i)
        for (int v : merged.members[i]) lifted.colour[v] = small->colour[i];
      return Colouring{lifted.normalized().colour, k};
    }
  }
  auto result = detail::Dsatur(g, k, opts).solve();
  if (!result) return std::nullopt;
  return Colouring{result->normalized().colour, k};
}

struct ChromaticResult {
  int chi = 0;
  Colouring colouring;
};

inline ChromaticResult chromatic_number(const Graph& g, const ColouringOptions& opts = {}) {
  if (g.order() == 0) return {0, Colouring{{}, 0}};
  for (int k = std::max(1, greedy_clique(g).size());; ++k) {
    if (auto c = k_colourable(g, k, opts)) return {k, *c};
  }
}

namespace detail {

inline void max_clique_rec(const Graph& g, VertexSet current, VertexSet cand, VertexSet& best, const Deadline& dl) {
  dl.poll();
  if (cand.empty()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  // Greedy colouring of the candidates bounds the clique size reachable.
  std::vector<int> order;
  std::vector<int> bound;
  {
    VertexSet uncoloured = cand;
    int colour = 0;
    while (!uncoloured.empty()) {
      ++colour;
      VertexSet avail = uncoloured;
      while (!avail.empty()) {
        int v = avail.first();
        avail.erase(v);
        avail -= g.neighbours(v);
        uncoloured.erase(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
  }
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    if (current.size() + bound[i] <= best.size()) return;
    int v = order[i];
    VertexSet next = current;
    next.insert(v);
    max_clique_rec(g, next, cand & g.neighbours(v), best, dl);
    cand.erase(v);
  }
}

}  // namespace detail

inline VertexSet maximum_clique(const Graph& g, const Deadline& deadline = {}) {
  VertexSet best;
  detail::max_clique_rec(g, {}, g.vertices(), best, deadline);
  return best;
}

inline int clique_number(const Graph& g) { return maximum_clique(g).size(); }

struct IndependenceResult {
  int alpha = 0;
  VertexSet witness;
};

inline IndependenceResult independence_number(const Graph& g, const Deadline& deadline = {}) {
  VertexSet s = maximum_clique(complement(g), deadline);
  return {s.size(), s};
}

}  // namespace localchrom
