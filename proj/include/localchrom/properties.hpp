#pragma once

#include "localchrom/colouring.hpp"
#include "localchrom/deadline.hpp"
#include "localchrom/families.hpp"
#include "localchrom/graph.hpp"
#include "localchrom/hom_solver.hpp"
#include "localchrom/io.hpp"
#include "localchrom/local_structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Seeded random instance generators and the property suites run over them.
namespace localchrom::properties {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }
inline double unit(Rng& rng) { return std::uniform_real_distribution<double>(0, 1)(rng); }

inline Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_sizes(Rng& rng, int n, int max_size) {
  std::vector<int> sizes(static_cast<std::size_t>(n));
  for (int& s : sizes) s = uniform(rng, 1, max_size);
  return sizes;
}

/// Copies g onto g.order() + extra vertices.
inline Graph with_extra_vertices(const Graph& g, int extra) {
  Graph out(g.order() + extra);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

/// Inserts random non-edges in random order while the graph stays locally
/// bipartite, stopping after `budget` insertions.
inline void add_edges_keeping_lb(Rng& rng, Graph& g, int budget) {
  std::vector<Edge> non_edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) non_edges.push_back({u, v});
  std::shuffle(non_edges.begin(), non_edges.end(), rng);
  for (auto [u, v] : non_edges) {
    if (budget <= 0) break;
    if (adding_edge_keeps_locally_bipartite(g, u, v)) {
      g.add_edge(u, v);
      --budget;
    }
  }
}

inline Graph random_locally_bipartite(Rng& rng, int n) {
  Graph g(n);
  add_edges_keeping_lb(rng, g, uniform(rng, n, n * (n - 1) / 2));
  return g;
}

/// Random graph with δ > n/2.
inline Graph random_dense_graph(Rng& rng) {
  while (true) {
    int n = uniform(rng, 5, 12);
    Graph g = random_graph(rng, n, 0.55 + 0.35 * unit(rng));
    if (2 * g.min_degree() > n) return g;
  }
}

struct SuiteResult {
  std::string name;
  int cases = 0;
  int violations = 0;
  std::string first_violation;

  bool ok() const { return violations == 0 && cases > 0; }
  void fail(const std::string& what) {
    if (violations++ == 0) first_violation = what;
  }
  std::string detail() const {
    std::string out = name + ": " + std::to_string(cases) + " cases, " + std::to_string(violations) + " violations";
    if (violations) out += " (first: " + first_violation + ")";
    return out;
  }
};

inline VertexSet mask_set(std::uint32_t mask, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) s.insert(v);
  return s;
}

/// Checks: δ > n/2 makes every pair inside every maximum independent set dense.
inline SuiteResult lemma_4i(std::uint64_t seed, int cases, const Deadline& dl = {}) {
  SuiteResult r{"lemma-4I", 0, 0, {}};
  Rng rng(seed);
  while (r.cases < cases) {
    dl.check();
    Graph g = random_dense_graph(rng);
    const int n = g.order();
    int alpha = 0;
    std::vector<VertexSet> maximum;  // brute force over all subsets
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      VertexSet s = mask_set(mask, n);
      if (!g.is_independent(s)) continue;
      if (s.size() > alpha) {
        alpha = s.size();
        maximum.clear();
      }
      if (s.size() == alpha) maximum.push_back(s);
    }
    if (independence_number(g, dl).alpha != alpha) r.fail("independence_number disagrees on " + emit_graph_compact(g));
    for (const auto& s : maximum)
      for (int u : s)
        for (int v : s)
          if (u < v && classify_pair(g, u, v) != PairClass::DENSE)
            r.fail("pair " + std::to_string(u) + "," + std::to_string(v) + " in " + emit_graph_compact(g));
    ++r.cases;
  }
  return r;
}

/// Checks: δ > n/2 makes some diagonal of every induced 4-cycle dense.
inline SuiteResult lemma_4sparse(std::uint64_t seed, int cases, const Deadline& dl = {}) {
  SuiteResult r{"lemma-4sparse", 0, 0, {}};
  Rng rng(seed);
  while (r.cases < cases) {
    dl.check();
    Graph g = random_dense_graph(rng);
    const int n = g.order();
    bool any = false;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            // The three ways to close a,b,c,d into a 4-cycle, as (diagonal, diagonal).
            const int quads[3][4] = {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
            for (const auto& q : quads) {
              bool cycle = g.has_edge(q[0], q[1]) && g.has_edge(q[1], q[2]) && g.has_edge(q[2], q[3]) &&
                           g.has_edge(q[3], q[0]) && !g.has_edge(q[0], q[2]) && !g.has_edge(q[1], q[3]);
              if (!cycle) continue;
              any = true;
              if (classify_pair(g, q[0], q[2]) != PairClass::DENSE && classify_pair(g, q[1], q[3]) != PairClass::DENSE)
                r.fail("C4 " + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]) +
                       std::to_string(q[3]) + " in " + emit_graph_compact(g));
            }
          }
    if (any) ++r.cases;
  }
  return r;
}

/// Checks: in a locally bipartite graph without H0, each D_v is independent.
inline SuiteResult lemma_4dense(std::uint64_t seed, int cases, const Deadline& dl = {}) {
  SuiteResult r{"lemma-4dense", 0, 0, {}};
  Rng rng(seed);
  const Graph h0 = generate({FamilyTag::H0});
  while (r.cases < cases) {
    dl.check();
    Graph g = random_locally_bipartite(rng, uniform(rng, 6, 11));
    if (find_subgraph(h0, g, false, dl)) continue;
    bool has_dense = false;
    for (int v = 0; v < g.order(); ++v) {
      VertexSet d = dense_set(g, v);
      has_dense = has_dense || !d.empty();
      if (!g.is_independent(d)) r.fail("D_" + std::to_string(v) + " not independent in " + emit_graph_compact(g));
    }
    if (has_dense) ++r.cases;
  }
  return r;
}

/// Homomorphic images of K3, C̄7 and H2+ in locally bipartite graphs contain induced copies.
inline SuiteResult lemma_homscores(std::uint64_t seed, int cases, const Deadline& dl = {}) {
  SuiteResult r{"lemma-homscores", 0, 0, {}};
  Rng rng(seed);
  const std::vector<Graph> patterns{complete_graph(3), generate({FamilyTag::C7BAR}), generate({FamilyTag::H2PLUS})};
  while (r.cases < cases) {
    dl.check();
    const Graph& f = patterns[static_cast<std::size_t>(uniform(rng, 0, 2))];
    Graph g;
    if (coin(rng, 0.8)) {
      g = with_extra_vertices(blow_up(f, random_sizes(rng, f.order(), 2)), uniform(rng, 0, 3));
      add_edges_keeping_lb(rng, g, uniform(rng, 0, 2 * g.order()));
    } else {
      g = random_locally_bipartite(rng, uniform(rng, 6, 12));
    }
    auto report = verify_homscores(f, g, dl);
    if (!report.consistent()) r.fail(report.summary() + " for " + emit_graph_compact(g));
    ++r.cases;
  }
  return r;
}

/// χ, ω and local bipartiteness are unchanged by blowing up.
inline SuiteResult blow_up_invariance(std::uint64_t seed, int cases, const Deadline& dl = {}) {
  SuiteResult r{"blow-up-invariance", 0, 0, {}};
  Rng rng(seed);
  while (r.cases < cases) {
    dl.check();
    Graph g = random_graph(rng, uniform(rng, 2, 7), unit(rng));
    Graph b = blow_up(g, random_sizes(rng, g.order(), 3));
    if (chromatic_number(g).chi != chromatic_number(b).chi) r.fail("chi differs for " + emit_graph_compact(g));
    if (clique_number(g) != clique_number(b)) r.fail("clique number differs for " + emit_graph_compact(g));
    if (is_locally_bipartite(g) != is_locally_bipartite(b))
      r.fail("local bipartiteness differs for " + emit_graph_compact(g));
    ++r.cases;
  }
  return r;
}

/// Merging twins keeps total weight and every vertex's weighted degree.
inline SuiteResult merge_twins_degrees(std::uint64_t seed, int cases, const Deadline& dl = {}) {
  SuiteResult r{"merge-twins-degrees", 0, 0, {}};
  Rng rng(seed);
  while (r.cases < cases) {
    dl.check();
    Graph base = random_graph(rng, uniform(rng, 2, 7), unit(rng));
    Graph g = blow_up(base, random_sizes(rng, base.order(), 3));
    std::vector<Rational> w(static_cast<std::size_t>(g.order()));
    for (auto& x : w) x = make_rational(uniform(rng, 0, 5), uniform(rng, 1, 4));
    WeightedGraph wg(g, w);
    auto tm = merge_twins_with_members(wg);
    if (tm.merged.total_weight() != wg.total_weight()) r.fail("total weight changed for " + emit_graph_compact(g));
    for (std::size_t i = 0; i < tm.members.size(); ++i)
      for (int x : tm.members[i])
        if (tm.merged.weighted_degree(static_cast<int>(i)) != wg.weighted_degree(x))
          r.fail("degree of " + std::to_string(x) + " changed in " + emit_graph_compact(g));
    if (!find_twins(tm.merged.graph()).empty()) r.fail("twins remain in " + emit_graph_compact(g));
    ++r.cases;
  }
  return r;
}

/// Random subgraph of a blow-up of g together with its class map (a homomorphism into g).
inline std::pair<Graph, VertexMap> random_preimage(Rng& rng, const Graph& g) {
  BlowUp b = blow_up_with_classes(g, random_sizes(rng, g.order(), 2));
  Graph h(b.graph.order());
  for (auto [u, v] : b.graph.edges())
    if (coin(rng, 0.8)) h.add_edge(u, v);
  return {h, b.class_of};
}

/// Composites of homomorphisms are homomorphisms, and the solver finds one.
inline SuiteResult hom_composition(std::uint64_t seed, int cases, const Deadline& dl = {}) {
  SuiteResult r{"hom-composition", 0, 0, {}};
  Rng rng(seed);
  while (r.cases < cases) {
    dl.check();
    Graph k = random_graph(rng, uniform(rng, 2, 5), unit(rng));
    auto [h, h_to_k] = random_preimage(rng, k);
    auto [g, g_to_h] = random_preimage(rng, h);
    VertexMap composite = compose(g_to_h, h_to_k);
    if (!is_homomorphism(g, h, g_to_h) || !is_homomorphism(h, k, h_to_k) || !is_homomorphism(g, k, composite))
      r.fail("composite is not a homomorphism into " + emit_graph_compact(k));
    auto found = find_homomorphism(g, k, dl);
    if (!found || !is_homomorphism(g, k, *found)) r.fail("solver missed a homomorphism into " + emit_graph_compact(k));
    ++r.cases;
  }
  return r;
}

/// d(u,v) = d(u) + d(v) − |Γ(u) ∪ Γ(v)|.
inline SuiteResult codegree_identity(std::uint64_t seed, int cases, const Deadline& dl = {}) {
  SuiteResult r{"codegree-identity", 0, 0, {}};
  Rng rng(seed);
  while (r.cases < cases) {
    dl.check();
    Graph g = random_graph(rng, uniform(rng, 2, 20), unit(rng));
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) {
        int both = 0, either = 0;
        for (int w = 0; w < g.order(); ++w) {
          both += g.has_edge(u, w) && g.has_edge(v, w);
          either += g.has_edge(u, w) || g.has_edge(v, w);
        }
        if (g.codegree(u, v) != both || both != g.degree(u) + g.degree(v) - either)
          r.fail("pair " + std::to_string(u) + "," + std::to_string(v) + " in " + emit_graph_compact(g));
      }
    ++r.cases;
  }
  return r;
}

/// All suites of the property criterion, in fixed order.
inline std::vector<SuiteResult> run_all(std::uint64_t seed, int cases, const Deadline& dl = {}) {
  return {lemma_4i(seed, cases, dl),           lemma_4sparse(seed + 1, cases, dl),
          lemma_4dense(seed + 2, cases, dl),      lemma_homscores(seed + 3, cases, dl),
          blow_up_invariance(seed + 4, cases, dl), merge_twins_degrees(seed + 5, cases, dl),
          hom_composition(seed + 6, cases, dl),   codegree_identity(seed + 7, cases, dl)};
}

struct AesResult {
  int accepted = 0;
  int from_c5 = 0, from_k2 = 0;
  int violations = 0;
  std::string first_violation;
};

/// Triangle-free graphs with δ > 2n/5 built by perturbing blow-ups of C5 and
/// K2; each accepted instance must be 2-colourable.
inline AesResult aes_r2(std::uint64_t seed, int wanted, const Deadline& dl = {}) {
  AesResult r;
  Rng rng(seed);
  const Graph c5 = cycle(5), k2 = complete_graph(2);
  for (long attempt = 0; r.accepted < wanted; ++attempt) {
    dl.check();
    bool use_c5 = attempt % 2 == 0;
    const Graph& base = use_c5 ? c5 : k2;
    Graph g = blow_up(base, random_sizes(rng, base.order(), 6));
    for (auto [u, v] : g.edges())
      if (coin(rng, 0.1)) g.remove_edge(u, v);
    for (int tries = uniform(rng, 0, 5); tries > 0; --tries) {
      int u = uniform(rng, 0, g.order() - 1), v = uniform(rng, 0, g.order() - 1);
      if (u != v && !g.has_edge(u, v) && !g.neighbours(u).intersects(g.neighbours(v))) g.add_edge(u, v);
    }
    if (5 * g.min_degree() <= 2 * g.order() || clique_number(g) >= 3) continue;
    ++r.accepted;
    ++(use_c5 ? r.from_c5 : r.from_k2);
    if (!k_colourable(g, 2)) {
      if (r.violations++ == 0) r.first_violation = emit_graph_compact(g);
    }
  }
  return r;
}

}  // namespace localchrom::properties
