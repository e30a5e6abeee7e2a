#pragma once

#include "localchrom/colouring.hpp"
#include "localchrom/deadline.hpp"
#include "localchrom/decomposition.hpp"
#include "localchrom/extremal_search.hpp"
#include "localchrom/families.hpp"
#include "localchrom/hom_solver.hpp"
#include "localchrom/local_structure.hpp"
#include "localchrom/properties.hpp"
#include "localchrom/weighting.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

// The paper-level acceptance checks, run in a fixed order.
namespace localchrom::acceptance {

enum class Status { PASS, FAIL, SKIP };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::SKIP: return "SKIP";
  }
  return "?";
}

struct Entry {
  std::string claim_id;
  int criterion = 0;
  Status status = Status::SKIP;
  std::string detail;
  double seconds = 0;
};

struct Report {
  std::vector<Entry> entries;

  bool ok() const {
    for (const auto& e : entries)
      if (e.status == Status::FAIL) return false;
    return true;
  }
};

using Generator = std::function<Graph(const FamilyId&)>;

struct Context {
  Generator gen = [](const FamilyId& id) { return generate(id); };
  std::optional<double> timeout_seconds;  // per claim
  std::uint64_t seed = 20240601;
  int property_cases = 200;
  int aes_instances = 100;
  /// Expected enumerate_extremal(7, 1/2) lines; compared when present.
  std::optional<std::vector<std::string>> search_golden;

  Graph family(FamilyTag tag, int param = 0) const { return gen(FamilyId{tag, param}); }
};

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (pass) detail.clear();
    if (!detail.empty()) detail += "; ";
    detail += what;
    pass = false;
  }
  void note(const std::string& what) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

using ClaimFn = std::function<Verdict(const Context&, const Deadline&)>;

struct Claim {
  std::string id;
  int criterion;
  std::vector<std::string> groups;
  ClaimFn run;
};

namespace detail {

inline std::vector<Rational> scaled(std::initializer_list<int> weights, int denominator) {
  std::vector<Rational> out;
  for (int w : weights) out.push_back(make_rational(w, denominator));
  return out;
}

/// Every weighted degree must equal `expected`; names the first offending vertex.
inline void require_degrees(Verdict& v, const Graph& g, const std::vector<Rational>& omega, const Rational& expected,
                            const std::string& name, int skip_vertex = -1) {
  if (static_cast<int>(omega.size()) != g.order()) {
    v.require(false, name + " has " + std::to_string(g.order()) + " vertices, weighting has " +
                         std::to_string(omega.size()));
    return;
  }
  WeightedGraph wg(g, omega);
  for (int x = 0; x < g.order(); ++x) {
    if (x == skip_vertex) continue;
    Rational d = wg.weighted_degree(x);
    v.require(d == expected, name + ": vertex " + std::to_string(x) + " has weighted degree " + format_rational(d) +
                                 ", expected " + format_rational(expected));
  }
}

/// Exhaustive odometer over all |H|^|G| maps.
inline bool brute_force_hom_exists(const Graph& g, const Graph& h, const Deadline& dl) {
  const int n = g.order(), m = h.order();
  if (n == 0) return true;
  if (m == 0) return false;
  auto edges = g.edges();
  std::vector<int> map(static_cast<std::size_t>(n), 0);
  while (true) {
    dl.poll();
    bool ok = true;
    for (auto [x, y] : edges)
      if (!h.has_edge(map[x], map[y])) {
        ok = false;
        break;
      }
    if (ok) return true;
    int i = 0;
    while (i < n && ++map[i] == m) map[i++] = 0;
    if (i == n) return false;
  }
}

inline Verdict weighting_claim(const Graph& g, const std::string& name, const Rational& expected,
                               const Deadline& dl) {
  Verdict v;
  auto w = optimal_weighting(g, dl);
  v.require(w.optimum == expected, name + ": t* = " + format_rational(w.optimum) + ", expected " +
                                       format_rational(expected));
  v.require(check_weighting_certificate(g, w.optimum, w.weights, w.dual), name + ": dual certificate invalid");
  v.note(name + " t* = " + format_rational(w.optimum) + " with verified dual");
  return v;
}

}  // namespace detail

inline Verdict family_sanity(const Context& ctx, const Deadline& dl) {
  Verdict v;
  const std::pair<const char*, FamilyId> fams[] = {
      {"H0", {FamilyTag::H0}},     {"H1", {FamilyTag::H1}},       {"H2", {FamilyTag::H2}},
      {"H2+", {FamilyTag::H2PLUS}}, {"C7bar", {FamilyTag::C7BAR}}, {"W7", {FamilyTag::WHEEL, 7}}};
  ColouringOptions opts;
  opts.deadline = dl;
  for (const auto& [name, id] : fams) {
    Graph g = ctx.gen(id);
    auto chi = chromatic_number(g, opts);
    v.require(chi.chi == 4 && chi.colouring.is_proper_for(g),
              std::string(name) + ": chi = " + std::to_string(chi.chi) + ", expected 4");
    auto lb = check_locally_bipartite(g);
    bool want = id.tag != FamilyTag::WHEEL;
    v.require(lb.locally_bipartite == want, std::string(name) + (want ? " is not" : " is") + " locally bipartite");
    if (!lb.locally_bipartite && lb.witness)
      v.require(lb.witness->valid_for(g), std::string(name) + ": invalid odd-wheel witness");
  }
  v.note("all six 4-chromatic; all but W7 locally bipartite");
  return v;
}

inline Verdict moser_spindle(const Context& ctx, const Deadline& dl) {
  Verdict v;
  Graph h0 = ctx.family(FamilyTag::H0);
  const int n = h0.order();
  int subsets = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) != 5) continue;
    dl.poll();
    ++subsets;
    std::vector<int> s;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1) s.push_back(x);
    bool triangle = false;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        for (int c = b + 1; c < 5; ++c)
          triangle = triangle || (h0.has_edge(s[a], s[b]) && h0.has_edge(s[b], s[c]) && h0.has_edge(s[a], s[c]));
    bool five_cycle = false;
    std::vector<int> perm{1, 2, 3, 4};
    do {
      int seq[5] = {s[0], s[perm[0]], s[perm[1]], s[perm[2]], s[perm[3]]};
      bool ok = true;
      for (int i = 0; i < 5; ++i) ok = ok && h0.has_edge(seq[i], seq[(i + 1) % 5]);
      five_cycle = five_cycle || ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::string where;
    for (int x : s) where += std::to_string(x);
    v.require(triangle || five_cycle, "subset {" + where + "} has neither a triangle nor a 5-cycle");
  }
  v.require(subsets == 21, "expected 21 five-vertex subsets, saw " + std::to_string(subsets));
  v.note("all " + std::to_string(subsets) + " five-vertex subsets of H0 contain a triangle or a 5-cycle");
  return v;
}

inline Verdict saturation_chain(const Context& ctx, const Deadline&) {
  Verdict v;
  Graph h2 = ctx.family(FamilyTag::H2), c7 = ctx.family(FamilyTag::C7BAR), h2p = ctx.family(FamilyTag::H2PLUS);
  v.require(is_locally_bipartite(h2), "H2 is not locally bipartite");
  if (!v.pass) return v;
  v.require(saturate(h2) == c7, "saturate(H2) differs from C7bar");
  int addable = 0;
  for (int a = 0; a < h2.order(); ++a)
    for (int b = a + 1; b < h2.order(); ++b)
      if (!h2.has_edge(a, b) && is_locally_bipartite(h2.with_edge(a, b))) ++addable;
  v.require(addable == 1, "H2 has " + std::to_string(addable) + " addable edges, expected 1");
  v.require(is_edge_maximal_locally_bipartite(h2p), "H2+ is not edge-maximal locally bipartite");
  v.require(is_edge_maximal_locally_bipartite(c7), "C7bar is not edge-maximal locally bipartite");
  v.note("saturate(H2) = C7bar via its single addable edge; H2+ and C7bar edge-maximal");
  return v;
}

inline Verdict non_hom_triangle(const Context& ctx, const Deadline& dl) {
  Verdict v;
  Graph h2 = ctx.family(FamilyTag::H2), c7 = ctx.family(FamilyTag::C7BAR), h2p = ctx.family(FamilyTag::H2PLUS);
  const std::tuple<const char*, const Graph*, const Graph*> pairs[] = {
      {"H2+ -> C7bar", &h2p, &c7}, {"C7bar -> H2+", &c7, &h2p}, {"H2+ -> H2", &h2p, &h2}, {"C7bar -> H2", &c7, &h2}};
  for (const auto& [name, g, h] : pairs) {
    bool solver = find_homomorphism(*g, *h, dl).has_value();
    bool brute = detail::brute_force_hom_exists(*g, *h, dl);
    v.require(solver == brute, std::string(name) + ": solver and brute force disagree");
    v.require(!solver, std::string(name) + " exists");
  }
  v.note("no homomorphism in any of the four directions (solver and brute force agree)");
  return v;
}

inline Verdict h2_weighted(const Context& ctx, const Deadline& dl) {
  Graph g = ctx.family(FamilyTag::H2);
  Verdict v;
  detail::require_degrees(v, g, detail::scaled({3, 1, 2, 1, 1, 2, 1}, 11), make_rational(6, 11), "H2");
  if (!v.pass) return v;
  Verdict lp = detail::weighting_claim(g, "H2", make_rational(6, 11), dl);
  v.require(lp.pass, lp.detail);
  v.note("figure weighting gives every degree 6/11; " + lp.detail);
  return v;
}

inline Verdict h2plus_weighted(const Context& ctx, const Deadline& dl) {
  Graph g = ctx.family(FamilyTag::H2PLUS);
  Verdict v = detail::weighting_claim(g, "H2+", make_rational(5, 9), dl);
  if (!v.pass) return v;
  VertexSet support = optimal_support(g, make_rational(5, 9), dl);
  v.require(support == VertexSet{0, 2, 3, 4, 5, 7},
            "vertices zero in every optimum: " + (g.vertices() - support).to_string() + ", expected {1,6}");
  // Figure weighting with 0+ at a1, a6 taken as 0.
  WeightedGraph wg(g, detail::scaled({2, 0, 2, 1, 1, 2, 0, 1}, 9));
  v.require(wg.min_weighted_degree() == make_rational(5, 9), "figure weighting has minimum degree " +
                                                                 format_rational(wg.min_weighted_degree()));
  v.require(wg.weighted_degree(7) == make_rational(2, 3) && wg.weight(7) == make_rational(1, 9),
            "centre u has weight " + format_rational(wg.weight(7)) + " and degree " +
                format_rational(wg.weighted_degree(7)));
  v.note("zeros exactly at {a1,a6}; centre weight 1/9 with degree 2/3");
  return v;
}

inline Verdict c7bar_weighted(const Context& ctx, const Deadline& dl) {
  return detail::weighting_claim(ctx.family(FamilyTag::C7BAR), "C7bar", make_rational(4, 7), dl);
}

inline Verdict delta3_weighted(const Context& ctx, const Deadline& dl) {
  return detail::weighting_claim(ctx.family(FamilyTag::DELTA, 3), "Delta3", make_rational(6, 11), dl);
}

inline Verdict delta_family(const Context& ctx, const Deadline& dl) {
  Verdict v;
  Graph h2 = ctx.family(FamilyTag::H2);
  ColouringOptions opts;
  opts.deadline = dl;
  for (int l : {2, 3, 4}) {
    Graph g = ctx.family(FamilyTag::DELTA, l);
    std::string name = "Delta" + std::to_string(l);
    v.require(g.order() == 4 * l - 1, name + " has " + std::to_string(g.order()) + " vertices");
    v.require(g.min_degree() == 2 * l && g.max_degree() == 2 * l, name + " is not " + std::to_string(2 * l) + "-regular");
    int alpha = independence_number(g, dl).alpha;
    v.require(alpha == l, name + ": alpha = " + std::to_string(alpha));
    int chi = chromatic_number(g, opts).chi;
    v.require(chi == 4, name + ": chi = " + std::to_string(chi));
    v.require(is_edge_maximal_locally_bipartite(g), name + " is not edge-maximal locally bipartite");
    for (int a = 0; a < g.order(); ++a)
      for (int b = a + 1; b < g.order(); ++b)
        if (!g.has_edge(a, b))
          v.require(clique_number(g.with_edge(a, b)) == 4,
                    name + ": adding " + std::to_string(a) + "-" + std::to_string(b) + " gives no 4-clique");
    v.require(!find_subgraph(h2, g, true, dl), name + " contains an induced H2");
  }
  v.require(is_isomorphic(ctx.family(FamilyTag::DELTA, 2), ctx.family(FamilyTag::C7BAR), dl),
            "Delta2 is not isomorphic to C7bar");
  v.note("Delta2..Delta4 regular, alpha = l, chi = 4, edge-maximal, no induced H2; Delta2 = C7bar");
  return v;
}

inline Verdict augmented_colouring(const Context& ctx, const Deadline& dl) {
  Verdict v;
  Graph g = ctx.family(FamilyTag::H2PLUS_AUG);
  Colouring figure{augmented_figure_colouring(), 4};
  v.require(figure.is_proper_for(g), "figure colouring is not proper");
  ColouringOptions opts;
  opts.deadline = dl;
  int chi = chromatic_number(g, opts).chi;
  v.require(chi == 4, "chi = " + std::to_string(chi));
  v.note("figure 4-colouring " + figure.to_string() + " proper; chi = 4");
  return v;
}

inline Verdict counterexample8(const Context& ctx, const Deadline& dl) {
  Verdict v;
  Graph g = ctx.family(FamilyTag::COUNTEREXAMPLE8);
  auto omega = detail::scaled({2, 1, 1, 2, 1, 2, 1, 1}, 11);
  detail::require_degrees(v, g, omega, make_rational(6, 11), "counterexample");
  v.require(is_twin_free(g), "not twin-free");
  v.require(is_edge_maximal_locally_bipartite(g), "not edge-maximal locally bipartite");
  ColouringOptions opts;
  opts.deadline = dl;
  int chi = chromatic_number(g, opts).chi;
  v.require(chi == 4, "chi = " + std::to_string(chi));
  v.require(!find_homomorphism(g, ctx.family(FamilyTag::C7BAR), dl), "homomorphic to C7bar");
  for (int l : {2, 3, 4})
    v.require(!find_homomorphism(g, ctx.family(FamilyTag::DELTA, l), dl), "homomorphic to Delta" + std::to_string(l));
  v.note("all weighted degrees 6/11; twin-free, edge-maximal, chi = 4; no hom to C7bar or Delta2..4");
  return v;
}

inline void check_certificate(Verdict& v, const std::string& name, const BlowUp& b,
                              const DecompositionCertificate& c, Outcome expected) {
  v.require(c.outcome == expected, name + ": outcome " + localchrom::to_string(c.outcome) +
                                       (c.reason.empty() ? "" : " (" + c.reason + ")"));
  if (!c.succeeded()) return;
  Graph target = generate({expected == Outcome::HOM_C7BAR ? FamilyTag::C7BAR : FamilyTag::H2PLUS});
  v.require(is_homomorphism(b.graph, target, c.map), name + ": map is not a homomorphism");
  v.require(c.colouring && c.colouring->is_proper_for(b.graph), name + ": colouring is not proper");
  for (int i = 0; i < 7; ++i)
    v.require(c.T[i] == b.class_members(b.class_of[c.anchor[i]]),
              name + ": T" + std::to_string(i) + " is not a blow-up class");
  if (expected == Outcome::HOM_H2PLUS)
    v.require(c.R502 == b.class_members(b.class_of[c.anchor[7]]), name + ": R502 is not the class of u");
  v.require(c.size_audit_lhs <= c.size_audit_rhs, name + ": size audit");
}

/// H2+ blow-up sizes (a0..a6, u) with every degree 11 and 20 vertices.
inline const std::vector<int>& h2plus_blow_up_sizes() {
  static const std::vector<int> sizes{5, 1, 4, 2, 2, 4, 1, 1};
  return sizes;
}

inline Verdict decomposition_roundtrip(const Context& ctx, const Deadline& dl) {
  Verdict v;
  for (int m : {2, 3, 4}) {
    BlowUp b = blow_up_with_classes(ctx.family(FamilyTag::C7BAR), std::vector<int>(7, m));
    check_certificate(v, "C7bar x" + std::to_string(m), b, decompose_c7bar(b.graph, dl), Outcome::HOM_C7BAR);
  }
  for (int k : {1, 2, 3}) {
    std::vector<int> sizes = h2plus_blow_up_sizes();
    for (int& s : sizes) s *= k;
    BlowUp b = blow_up_with_classes(ctx.family(FamilyTag::H2PLUS), sizes);
    std::string name = "H2+ blow-up n=" + std::to_string(b.graph.order());
    v.require(11 * b.graph.min_degree() > 6 * b.graph.order(), name + ": delta not above 6/11 n");
    if (v.pass) check_certificate(v, name, b, decompose_h2plus(b.graph, dl), Outcome::HOM_H2PLUS);
  }
  v.note("C7bar blow-ups m=2,3,4 give HOM_C7BAR; H2+ blow-ups n=20,40,60 give HOM_H2PLUS; classes recovered");
  return v;
}

inline Verdict property_suites(const Context& ctx, const Deadline& dl) {
  Verdict v;
  std::string summary;
  for (const auto& s : properties::run_all(ctx.seed, ctx.property_cases, dl)) {
    v.require(s.ok() && s.cases >= ctx.property_cases, s.detail());
    summary += (summary.empty() ? "" : ", ") + s.name + " " + std::to_string(s.cases);
  }
  v.note("zero violations (" + summary + ")");
  return v;
}

inline Verdict extremal_search(const Context& ctx, const Deadline& dl) {
  Verdict v;
  SearchOptions opts;
  opts.deadline = dl;
  opts.threads = thread_budget();
  auto result = enumerate_extremal(7, make_rational(1, 2), opts);
  v.require(result.exhausted, "search did not finish");
  Graph k3 = complete_graph(3), c7 = generate({FamilyTag::C7BAR});
  int k3_hits = 0, c7_hits = 0;
  for (std::size_t i = 0; i < result.found.size(); ++i) {
    const Graph& g = result.found[i].graph;
    k3_hits += is_isomorphic(g, k3, dl);
    c7_hits += is_isomorphic(g, c7, dl);
    for (std::size_t j = 0; j < i; ++j)
      v.require(!is_isomorphic(g, result.found[j].graph, dl),
                "outputs " + std::to_string(j) + " and " + std::to_string(i) + " are isomorphic");
    v.require(check_membership(g, make_rational(1, 2), dl).member(), "output " + std::to_string(i) + " fails membership");
  }
  v.require(k3_hits == 1, "K3 appears " + std::to_string(k3_hits) + " times");
  v.require(c7_hits == 1, "C7bar appears " + std::to_string(c7_hits) + " times");
  if (ctx.search_golden) {
    std::vector<std::string> lines;
    for (const auto& f : result.found) lines.push_back(f.to_line());
    v.require(lines == *ctx.search_golden, "output differs from the frozen golden list");
  }
  v.note(std::to_string(result.found.size()) + " graphs found, K3 and C7bar once each");
  return v;
}

inline Verdict aes_r2(const Context& ctx, const Deadline& dl) {
  Verdict v;
  auto r = properties::aes_r2(ctx.seed, ctx.aes_instances, dl);
  v.require(r.violations == 0, std::to_string(r.violations) + " instances not 2-colourable, first " + r.first_violation);
  v.note(std::to_string(r.accepted) + " triangle-free instances with delta > 2n/5 (" + std::to_string(r.from_k2) +
         " from K2, " + std::to_string(r.from_c5) + " from C5), all 2-colourable");
  return v;
}

/// All claims in report order.
inline const std::vector<Claim>& claims() {
  static const std::vector<Claim> all{
      {"family-sanity", 1, {"family", "chi"}, family_sanity},
      {"moser-spindle", 2, {"structure"}, moser_spindle},
      {"saturation-chain", 3, {"structure"}, saturation_chain},
      {"non-hom-triangle", 4, {"hom"}, non_hom_triangle},
      {"H2-weighted-6/11", 5, {"weight"}, h2_weighted},
      {"H2PLUS-weighted-5/9", 5, {"weight"}, h2plus_weighted},
      {"C7BAR-weighted-4/7", 5, {"weight"}, c7bar_weighted},
      {"DELTA3-weighted-6/11", 5, {"weight"}, delta3_weighted},
      {"delta-family", 6, {"family", "chi"}, delta_family},
      {"augmented-colouring", 7, {"chi"}, augmented_colouring},
      {"counterexample8", 8, {"weight", "hom", "chi"}, counterexample8},
      {"decomposition-roundtrip", 9, {"decompose"}, decomposition_roundtrip},
      {"property-suites", 10, {"property"}, property_suites},
      {"extremal-search-7", 11, {"search"}, extremal_search},
      {"aes-r2", 12, {"chi", "property"}, aes_r2},
  };
  return all;
}

/// A claim is selected when `only` is empty or names its id, a group or its criterion number.
inline bool selected(const Claim& c, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& o : only) {
    if (o == c.id || o == std::to_string(c.criterion)) return true;
    for (const auto& g : c.groups)
      if (o == g) return true;
  }
  return false;
}

inline Entry run_claim(const Claim& c, const Context& ctx) {
  Entry e{c.id, c.criterion, Status::SKIP, "", 0};
  auto start = std::chrono::steady_clock::now();
  Deadline dl = ctx.timeout_seconds ? Deadline::after_seconds(*ctx.timeout_seconds) : Deadline();
  try {
    Verdict v = c.run(ctx, dl);
    e.status = v.pass ? Status::PASS : Status::FAIL;
    e.detail = v.detail;
  } catch (const TimeoutError&) {
    e.status = Status::SKIP;
    e.detail = "timeout after " + std::to_string(*ctx.timeout_seconds) + " s";
  } catch (const std::exception& ex) {
    e.status = Status::FAIL;
    e.detail = std::string("exception: ") + ex.what();
  }
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return e;
}

/// Runs the selected claims in declared order; a FAIL never stops later claims.
inline Report verify_paper(const Context& ctx = {}, const std::vector<std::string>& only = {}) {
  Report r;
  for (const auto& c : claims())
    if (selected(c, only)) r.entries.push_back(run_claim(c, ctx));
  return r;
}

}  // namespace localchrom::acceptance
