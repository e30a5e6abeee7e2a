#pragma once

#include "localchrom/canonical.hpp"
#include "localchrom/deadline.hpp"
#include "localchrom/graph.hpp"
#include "localchrom/local_structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace localchrom {

/// Vertex map V(G) -> V(H); `map[v]` is the image of v.
using VertexMap = std::vector<int>;

inline bool is_homomorphism(const Graph& g, const Graph& h, const VertexMap& map) {
  if (static_cast<int>(map.size()) != g.order()) return false;
  for (int image : map)
    if (image < 0 || image >= h.order()) return false;
  for (auto [u, v] : g.edges())
    if (!h.has_edge(map[u], map[v])) return false;
  return true;
}

/// Injective, edge-preserving; with `induced` also non-edge-preserving.
inline bool is_embedding(const Graph& pattern, const Graph& host, const VertexMap& map, bool induced) {
  if (!is_homomorphism(pattern, host, map)) return false;
  VertexSet used;
  for (int image : map) {
    if (used.contains(image)) return false;
    used.insert(image);
  }
  if (induced)
    for (int u = 0; u < pattern.order(); ++u)
      for (int v = u + 1; v < pattern.order(); ++v)
        if (!pattern.has_edge(u, v) && host.has_edge(map[u], map[v])) return false;
  return true;
}

inline VertexMap compose(const VertexMap& first, const VertexMap& second) {
  VertexMap out(first.size());
  for (std::size_t v = 0; v < first.size(); ++v) out[v] = second.at(static_cast<std::size_t>(first[v]));
  return out;
}

struct MapSearchOptions {
  bool injective = false;
  bool induced = false;
  Deadline deadline;
  /// Try one representative per class of interchangeable host twins; complete
  /// for existence, but skips embeddings that differ only by swapping twins.
  bool prune_twins = false;
};

namespace detail {

class MapSearch {
 public:
  MapSearch(const Graph& g, const Graph& h, const MapSearchOptions& opts) : g_(g), h_(h), opts_(opts) {
    const int n = g.order();
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    earlier_adjacent_.resize(static_cast<std::size_t>(n));
    earlier_nonadjacent_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        (g.has_edge(order_[i], order_[j]) ? earlier_adjacent_ : earlier_nonadjacent_)[i].push_back(order_[j]);
    map_.assign(static_cast<std::size_t>(n), -1);
    if (opts.prune_twins) {
      twin_prev_.assign(static_cast<std::size_t>(h.order()), -1);
      for (int v = 0; v < h.order(); ++v)
        for (int u = v - 1; u >= 0; --u)
          if (h.neighbours(u) == h.neighbours(v)) {
            twin_prev_[v] = u;
            break;
          }
    }
  }

  /// Calls `visit(map)` for each solution until it returns true; returns
  /// whether the visitor stopped the search.
  bool run(const std::function<bool(const VertexMap&)>& visit) {
    if (opts_.injective && g_.order() > h_.order()) return false;
    visit_ = &visit;
    return extend(0);
  }

 private:
  bool extend(int i) {
    opts_.deadline.poll();
    if (i == g_.order()) return (*visit_)(map_);
    const int x = order_[i];
    VertexSet cand = h_.vertices();
    for (int y : earlier_adjacent_[i]) cand &= h_.neighbours(map_[y]);
    if (opts_.injective) cand -= used_;
    if (opts_.induced)
      for (int y : earlier_nonadjacent_[i]) cand -= h_.neighbours(map_[y]);
    for (int c : cand) {
      if (opts_.injective && h_.degree(c) < g_.degree(x)) continue;
      if (opts_.prune_twins && has_free_earlier_twin(c)) continue;
      map_[x] = c;
      if (opts_.injective) used_.insert(c);
      bool stop = extend(i + 1);
      if (opts_.injective) used_.erase(c);
      if (stop) return true;
    }
    map_[x] = -1;
    return false;
  }

  bool has_free_earlier_twin(int c) const {
    for (int u = twin_prev_[c]; u >= 0; u = twin_prev_[u])
      if (!opts_.injective || !used_.contains(u)) return true;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const MapSearchOptions& opts_;
  std::vector<int> order_;
  std::vector<std::vector<int>> earlier_adjacent_, earlier_nonadjacent_;
  VertexMap map_;
  VertexSet used_;
  std::vector<int> twin_prev_;
  const std::function<bool(const VertexMap&)>* visit_ = nullptr;
};

}  // namespace detail

/// A homomorphism G -> H, or nullopt when none exists. Exact.
inline std::optional<VertexMap> find_homomorphism(const Graph& g, const Graph& h, const Deadline& deadline = {}) {
  MapSearchOptions opts{false, false, deadline, true};
  std::optional<VertexMap> found;
  detail::MapSearch(g, h, opts).run([&](const VertexMap& m) {
    found = m;
    return true;
  });
  return found;
}

/// An injective (and, if `induced`, induced) copy of `pattern` in `host`.
inline std::optional<VertexMap> find_subgraph(const Graph& pattern, const Graph& host, bool induced,
                                              const Deadline& deadline = {}) {
  MapSearchOptions opts{true, induced, deadline, true};
  std::optional<VertexMap> found;
  detail::MapSearch(pattern, host, opts).run([&](const VertexMap& m) {
    found = m;
    return true;
  });
  return found;
}

/// Visits embeddings of `pattern` in `host` in solver order; the visitor
/// returns true to stop.
inline void for_each_embedding(const Graph& pattern, const Graph& host, bool induced,
                               const std::function<bool(const VertexMap&)>& visit, const Deadline& deadline = {},
                               bool prune_twins = false) {
  MapSearchOptions opts{true, induced, deadline, prune_twins};
  detail::MapSearch(pattern, host, opts).run(visit);
}

/// An isomorphism G -> H (as a vertex map), or nullopt.
inline std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h, const Deadline& deadline = {}) {
  if (g.order() != h.order() || g.num_edges() != h.num_edges()) return std::nullopt;
  return find_subgraph(g, h, true, deadline);
}

struct HomscoresReport {
  bool f_twin_free = false;
  bool f_edge_maximal = false;
  bool g_locally_bipartite = false;
  bool f_hom_to_g = false;
  std::optional<VertexMap> induced_copy;

  bool hypotheses_hold() const { return f_twin_free && f_edge_maximal && g_locally_bipartite && f_hom_to_g; }
  /// Falsified only when every hypothesis holds and no induced copy exists.
  bool consistent() const { return !hypotheses_hold() || induced_copy.has_value(); }

  std::string summary() const {
    std::string out;
    auto add = [&](bool ok, const char* name) {
      if (!ok) out += std::string(out.empty() ? "" : "; ") + "hypothesis (" + name + ") fails";
    };
    add(f_twin_free, "F twin-free");
    add(f_edge_maximal, "F edge-maximal locally bipartite");
    add(g_locally_bipartite, "G locally bipartite");
    add(f_hom_to_g, "hom");
    if (!out.empty()) return out;
    return induced_copy ? "hypotheses hold; induced copy found" : "hypotheses hold; NO induced copy (lemma falsified)";
  }
};

/// If F is twin-free edge-maximal locally bipartite, G is locally bipartite
/// and F -> G, then F is an induced subgraph of G.
inline HomscoresReport verify_homscores(const Graph& f, const Graph& g, const Deadline& deadline = {}) {
  HomscoresReport r;
  r.f_twin_free = is_twin_free(f);
  r.f_edge_maximal = is_edge_maximal_locally_bipartite(f);
  r.g_locally_bipartite = is_locally_bipartite(g);
  r.f_hom_to_g = find_homomorphism(f, g, deadline).has_value();
  if (r.hypotheses_hold()) r.induced_copy = find_subgraph(f, g, true, deadline);
  return r;
}

}  // namespace localchrom
