#pragma once

#include "localchrom/rational.hpp"
#include "localchrom/vertex_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace localchrom {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n)) {}

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int num_edges() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u].erase(v);
    adj_[v].erase(u);
  }
  Graph with_edge(int u, int v) const {
    Graph h = *this;
    h.add_edge(u, v);
    return h;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    return adj_[u].contains(v);
  }

  const VertexSet& neighbours(int v) const {
    check_vertex(v);
    return adj_[v];
  }
  int degree(int v) const { return neighbours(v).size(); }

  int min_degree() const {
    int d = n_ == 0 ? 0 : kMaxVertices;
    for (const auto& row : adj_) d = std::min(d, row.size());
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (const auto& row : adj_) d = std::max(d, row.size());
    return d;
  }

  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Γ(X): the common neighbourhood of a non-empty vertex set.
  VertexSet common_neighbourhood(const VertexSet& xs) const {
    if (xs.empty()) throw std::invalid_argument("common neighbourhood of the empty set is undefined");
    VertexSet out = vertices();
    for (int x : xs) out &= neighbours(x);
    return out;
  }
  VertexSet common_neighbourhood(std::initializer_list<int> xs) const {
    return common_neighbourhood(VertexSet(xs));
  }

  /// d(u, v) = |Γ(u) ∩ Γ(v)|.
  int codegree(int u, int v) const { return neighbours(u).intersection_size(neighbours(v)); }

  /// e(X, G): ordered pairs (x, v) with x in X and xv an edge.
  int edge_incidences(const VertexSet& xs) const {
    int total = 0;
    for (int x : xs) total += degree(x);
    return total;
  }

  /// e(A, B): pairs (x, y) with x in A, y in B and xy an edge. For disjoint
  /// sets this is the number of A-B edges.
  int edges_between(const VertexSet& a, const VertexSet& b) const {
    int count = 0;
    for (int x : a) count += adj_[x].intersection_size(b);
    return count;
  }

  bool is_independent(const VertexSet& xs) const {
    for (int x : xs)
      if (adj_[x].intersects(xs)) return false;
    return true;
  }

  /// Subgraph induced by `vs`, relabelled so vs[i] becomes vertex i.
  Graph induced(std::span<const int> vs) const {
    Graph h(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (has_edge(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
  }
  Graph induced(const VertexSet& vs) const {
    auto list = vs.to_vector();
    return induced(std::span<const int>(list));
  }

  /// Relabel: vertex v of this graph becomes perm[v].
  Graph permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation length mismatch");
    Graph h(n_);
    for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
    return h;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  static int checked_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                  std::to_string(kMaxVertices));
    return n;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
  }
  void check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Graph with a nonnegative exact weight per vertex (a blow-up in compressed form).
class WeightedGraph {
 public:
  WeightedGraph(Graph graph, std::vector<Rational> weights)
      : graph_(std::move(graph)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != graph_.order())
      throw std::invalid_argument("weight vector length " + std::to_string(weights_.size()) +
                                  " does not match graph order " + std::to_string(graph_.order()));
    for (std::size_t v = 0; v < weights_.size(); ++v)
      if (weights_[v] < 0) throw std::invalid_argument("negative weight at vertex " + std::to_string(v));
  }

  static WeightedGraph unit(Graph graph) {
    std::vector<Rational> w(static_cast<std::size_t>(graph.order()), Rational(1));
    return WeightedGraph(std::move(graph), std::move(w));
  }

  const Graph& graph() const { return graph_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(int v) const { return weights_.at(static_cast<std::size_t>(v)); }

  /// ω(H)
  Rational total_weight() const {
    Rational total = 0;
    for (const auto& w : weights_) total += w;
    return total;
  }
  /// ω(X)
  Rational weight_of(const VertexSet& xs) const {
    Rational total = 0;
    for (int x : xs) total += weight(x);
    return total;
  }

  Rational weighted_degree(int v) const { return weight_of(graph_.neighbours(v)); }

  /// δ(H, ω)
  Rational min_weighted_degree() const {
    if (graph_.order() == 0) throw std::invalid_argument("empty graph has no minimum degree");
    Rational best = weighted_degree(0);
    for (int v = 1; v < graph_.order(); ++v) best = std::min(best, weighted_degree(v));
    return best;
  }

  /// ω(X, G) = Σ_{x∈X} ω(x)·deg(x).
  Rational weighted_incidences(const VertexSet& xs) const {
    Rational total = 0;
    for (int x : xs) total += weight(x) * graph_.degree(x);
    return total;
  }

 private:
  Graph graph_;
  std::vector<Rational> weights_;
};

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

/// C_k^j: vertices 0..k-1, adjacent iff circular distance lies in 1..j.
inline Graph cycle_power(int k, int j) {
  if (k < 3) throw std::invalid_argument("cycle_power needs k >= 3, got " + std::to_string(k));
  if (j < 0 || 2 * j >= k)
    throw std::invalid_argument("cycle_power needs 0 <= j < k/2, got j=" + std::to_string(j));
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int s = 1; s <= j; ++s) g.add_edge(u, (u + s) % k);
  return g;
}

inline Graph cycle(int k) { return cycle_power(k, 1); }

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Blow-up with its class layout: class of input vertex v is the consecutive
/// range [class_start[v], class_start[v] + sizes[v]).
struct BlowUp {
  Graph graph;
  std::vector<int> class_start;
  std::vector<int> class_of;  // result vertex -> input vertex

  VertexSet class_members(int v) const {
    VertexSet s;
    int end = v + 1 < static_cast<int>(class_start.size()) ? class_start[v + 1] : graph.order();
    for (int x = class_start[v]; x < end; ++x) s.insert(x);
    return s;
  }
};

inline BlowUp blow_up_with_classes(const Graph& g, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != g.order())
    throw std::invalid_argument("blow_up needs one size per vertex");
  BlowUp out;
  int total = 0;
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    if (sizes[v] < 1)
      throw std::invalid_argument("blow_up class sizes must be >= 1 (vertex " + std::to_string(v) + ")");
    out.class_start.push_back(total);
    total += sizes[v];
  }
  out.graph = Graph(total);
  out.class_of.resize(static_cast<std::size_t>(total));
  for (int v = 0; v < g.order(); ++v)
    for (int i = 0; i < sizes[v]; ++i) out.class_of[out.class_start[v] + i] = v;
  for (auto [u, v] : g.edges())
    for (int i = 0; i < sizes[u]; ++i)
      for (int j = 0; j < sizes[v]; ++j) out.graph.add_edge(out.class_start[u] + i, out.class_start[v] + j);
  return out;
}

inline Graph blow_up(const Graph& g, std::span<const int> sizes) {
  return blow_up_with_classes(g, sizes).graph;
}
inline Graph blow_up(const Graph& g, std::initializer_list<int> sizes) {
  return blow_up(g, std::span<const int>(sizes.begin(), sizes.size()));
}

/// Unordered pairs (u < v) with Γ(u) = Γ(v).
inline std::vector<Edge> find_twins(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.neighbours(u) == g.neighbours(v)) out.emplace_back(u, v);
  return out;
}

/// Result of collapsing twin classes: survivor i of the result stands for the
/// input vertices `members[i]`.
struct TwinMerge {
  WeightedGraph merged;
  std::vector<VertexSet> members;
};

inline TwinMerge merge_twins_with_members(const WeightedGraph& wg) {
  const Graph& g = wg.graph();
  std::vector<int> representative(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> survivors;
  for (int v = 0; v < g.order(); ++v) {
    if (representative[v] != -1) continue;
    representative[v] = v;
    survivors.push_back(v);
    for (int u = v + 1; u < g.order(); ++u)
      if (representative[u] == -1 && g.neighbours(u) == g.neighbours(v)) representative[u] = v;
  }
  std::vector<int> index_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < survivors.size(); ++i) index_of[survivors[i]] = static_cast<int>(i);

  std::vector<Rational> weights(survivors.size(), Rational(0));
  std::vector<VertexSet> members(survivors.size());
  for (int v = 0; v < g.order(); ++v) {
    int i = index_of[representative[v]];
    weights[i] += wg.weight(v);
    members[i].insert(v);
  }
  Graph merged = g.induced(std::span<const int>(survivors));
  return {WeightedGraph(std::move(merged), std::move(weights)), std::move(members)};
}

inline WeightedGraph merge_twins(const WeightedGraph& wg) { return merge_twins_with_members(wg).merged; }

}  // namespace localchrom
