#pragma once

#include "localchrom/colouring.hpp"
#include "localchrom/deadline.hpp"
#include "localchrom/families.hpp"
#include "localchrom/graph.hpp"
#include "localchrom/hom_solver.hpp"
#include "localchrom/local_structure.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace localchrom {

enum class Outcome { HOM_C7BAR, HOM_H2PLUS, HOM_AUGMENTED, FAILED };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::HOM_C7BAR: return "HOM_C7BAR";
    case Outcome::HOM_H2PLUS: return "HOM_H2PLUS";
    case Outcome::HOM_AUGMENTED: return "HOM_AUGMENTED";
    case Outcome::FAILED: return "FAILED";
  }
  return "?";
}

/// Label of the R502 part (the image of the extra vertex u of H2+).
inline constexpr int kLabelU = 7;

/// The 4-colouring of H2PLUS_AUG from the figure, indexed by vertex (a0..a6, u).
inline const std::vector<int>& augmented_figure_colouring() {
  static const std::vector<int> colours{2, 1, 3, 2, 4, 3, 1, 1};
  return colours;
}

struct DecompositionCertificate {
  enum class Kind { C7BAR, H2PLUS };
  Kind kind = Kind::C7BAR;
  Outcome outcome = Outcome::FAILED;
  std::string reason;

  std::vector<int> anchor;  // v0..v6 (and u for H2+)
  std::array<VertexSet, 7> D{}, R_parts{}, T{};
  VertexSet D_all, D_star, R, R502;
  long s_value = -1;
  VertexMap map;  // vertex -> target label (0..6, or 7 for R502)
  std::optional<Colouring> colouring;

  int max_anchor_neighbours = 0;
  int size_audit_lhs = 0, size_audit_rhs = 0;  // |R| (or |R ∪ D1 ∪ D6|) and 4n − 7δ
  int anchors_tried = 0;
  int flexible_vertices = 0;

  bool succeeded() const { return outcome != Outcome::FAILED; }
};

namespace detail {

inline DecompositionCertificate failed(DecompositionCertificate::Kind kind, std::string reason) {
  DecompositionCertificate c;
  c.kind = kind;
  c.reason = std::move(reason);
  return c;
}

/// 11δ > 6n, exactly.
inline bool above_six_elevenths(const Graph& g) { return 11 * g.min_degree() > 6 * g.order(); }

struct LabelProblem {
  const Graph& g;
  std::vector<int> label;                    // -1 while unassigned
  std::vector<std::vector<int>> candidates;  // per vertex; size 1 for fixed vertices
  std::array<std::array<bool, 8>, 8> counted{};  // label pairs contributing to S

  long s_value() const {
    long s = 0;
    for (auto [x, y] : g.edges())
      if (counted[label[x]][label[y]]) ++s;
    return s;
  }
  long cost(int x, int l) const {
    long c = 0;
    for (int y : g.neighbours(x))
      if (counted[l][label[y]]) ++c;
    return c;
  }

  /// Single-vertex reassignment while S strictly drops.
  void greedy() {
    bool improved = true;
    while (improved) {
      improved = false;
      for (int x = 0; x < g.order(); ++x) {
        if (candidates[x].size() < 2) continue;
        long current = cost(x, label[x]);
        int best = label[x];
        long best_cost = current;
        for (int l : candidates[x]) {
          long c = cost(x, l);
          if (c < best_cost) {
            best = l;
            best_cost = c;
          }
        }
        if (best != label[x]) {
          label[x] = best;
          improved = true;
        }
      }
    }
  }
};

/// First edge whose labels are not adjacent in `target`, if any.
inline std::optional<Edge> first_violation(const Graph& g, const Graph& target, const std::vector<int>& label) {
  for (auto [x, y] : g.edges())
    if (!target.has_edge(label[x], label[y])) return Edge{x, y};
  return std::nullopt;
}

/// Backtracking over the flexible vertices for a labelling that is a
/// homomorphism into `target`; fixed vertices keep their label.
inline std::optional<std::vector<int>> solve_labels(const LabelProblem& p, const Graph& target,
                                                    const Deadline& deadline) {
  const Graph& g = p.g;
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> flexible;
  for (int x = 0; x < g.order(); ++x) {
    if (p.candidates[x].size() == 1) label[x] = p.candidates[x][0];
    else flexible.push_back(x);
  }
  for (auto [x, y] : g.edges())
    if (label[x] >= 0 && label[y] >= 0 && !target.has_edge(label[x], label[y])) return std::nullopt;

  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    deadline.poll();
    if (i == flexible.size()) return true;
    int x = flexible[i];
    // Try the greedy choice first, then the rest in ascending order.
    std::vector<int> order{p.label[x]};
    for (int l : p.candidates[x])
      if (l != p.label[x]) order.push_back(l);
    for (int l : order) {
      bool ok = true;
      for (int y : g.neighbours(x))
        if (label[y] >= 0 && !target.has_edge(l, label[y])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      label[x] = l;
      if (assign(i + 1)) return true;
    }
    label[x] = -1;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return label;
}

inline constexpr int kMaxFlexible = 20;
inline constexpr int kMaxAnchors = 100;

/// Shared core of both decompositions for one anchor.
inline DecompositionCertificate decompose_around(const Graph& g, const std::vector<int>& anchor,
                                                 DecompositionCertificate::Kind kind, const Deadline& deadline) {
  using Kind = DecompositionCertificate::Kind;
  DecompositionCertificate c;
  c.kind = kind;
  c.anchor = anchor;
  const int n = g.order();
  auto v = [&](int i) { return anchor[((i % 7) + 7) % 7]; };

  // Counted against v0..v6 only: in H2+ the vertex v0 already sees u as a fifth neighbour.
  VertexSet seven;
  for (int i = 0; i < 7; ++i) seven.insert(v(i));
  for (int x = 0; x < n; ++x)
    c.max_anchor_neighbours = std::max(c.max_anchor_neighbours, g.neighbours(x).intersection_size(seven));
  if (c.max_anchor_neighbours >= 5) {
    c.reason = "a vertex has five neighbours among v0..v6";
    return c;
  }

  // D_i and the vertex sets defining them.
  std::array<VertexSet, 7> defining{};
  for (int i = 0; i < 7; ++i) {
    if (kind == Kind::H2PLUS && i == 1) defining[i] = {v(0), v(2), v(3)};
    else if (kind == Kind::H2PLUS && i == 6) defining[i] = {v(4), v(5), v(0)};
    else defining[i] = {v(i - 2), v(i - 1), v(i + 1), v(i + 2)};
    c.D[i] = g.common_neighbourhood(defining[i]);
  }
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (c.D[i].intersects(c.D[j])) {
        c.reason = "D" + std::to_string(i) + " and D" + std::to_string(j) + " overlap";
        return c;
      }
  for (int i = 0; i < 7; ++i) c.D_all |= c.D[i];
  c.D_star = c.D_all;
  if (kind == Kind::H2PLUS) c.D_star -= c.D[1] | c.D[6];
  c.R = g.vertices() - c.D_all;

  int bound = 4 * n - 7 * g.min_degree();
  c.size_audit_rhs = bound;
  c.size_audit_lhs = kind == Kind::C7BAR ? c.R.size() : (c.R | c.D[1] | c.D[6]).size();
  if (c.size_audit_lhs > bound) {
    c.reason = "size audit failed: " + std::to_string(c.size_audit_lhs) + " > 4n - 7delta = " + std::to_string(bound);
    return c;
  }

  if (kind == Kind::H2PLUS)
    for (int r : c.R)
      if (g.neighbours(r).intersects(c.D[5]) && g.neighbours(r).intersects(c.D[0]) &&
          g.neighbours(r).intersects(c.D[2]))
        c.R502.insert(r);

  LabelProblem p{g, std::vector<int>(static_cast<std::size_t>(n), -1),
                 std::vector<std::vector<int>>(static_cast<std::size_t>(n)), {}};
  for (int i = 0; i < 7; ++i) {
    p.counted[i][(i + 3) % 7] = p.counted[(i + 3) % 7][i] = true;
    for (int x : c.D[i]) p.candidates[x] = {i};
  }
  if (kind == Kind::H2PLUS)
    for (int l : {3, 4}) p.counted[l][kLabelU] = p.counted[kLabelU][l] = true;
  for (int r : c.R502) p.candidates[r] = {kLabelU};
  for (int r : c.R - c.R502) {
    VertexSet seen = g.neighbours(r) & c.D_all;
    for (int i = 0; i < 7; ++i)
      if (seen.is_subset_of(g.neighbours(v(i)) & c.D_all)) p.candidates[r].push_back(i);
    if (p.candidates[r].empty()) {
      c.reason = "vertex " + std::to_string(r) + " has no admissible index";
      return c;
    }
    if (p.candidates[r].size() > 1) ++c.flexible_vertices;
  }
  for (int x = 0; x < n; ++x) p.label[x] = p.candidates[x][0];
  p.greedy();

  auto finish = [&](const std::vector<int>& label, Outcome outcome, const Graph& target,
                    const std::vector<int>& target_colours) {
    p.label = label;
    c.map = label;
    c.s_value = p.s_value();
    for (int r : c.R - c.R502) c.R_parts[label[r]].insert(r);
    for (int i = 0; i < 7; ++i) c.T[i] = c.D[i] | c.R_parts[i];
    if (!is_homomorphism(g, target, c.map)) throw std::logic_error("decomposition produced an invalid map");
    Colouring col{std::vector<int>(static_cast<std::size_t>(n)), 4};
    for (int x = 0; x < n; ++x) col.colour[x] = target_colours[label[x]];
    c.colouring = col;
    c.outcome = outcome;
  };

  auto attempt = [&](const Graph& target) -> std::optional<std::vector<int>> {
    if (!first_violation(g, target, p.label)) return p.label;
    if (c.flexible_vertices > kMaxFlexible) return std::nullopt;
    return solve_labels(p, target, deadline);
  };

  if (kind == Kind::C7BAR) {
    Graph target = generate({FamilyTag::C7BAR});
    static const std::vector<int> colours = k_colourable(target, 4)->colour;
    if (auto label = attempt(target)) {
      finish(*label, Outcome::HOM_C7BAR, target, colours);
      return c;
    }
    auto bad = first_violation(g, target, p.label);
    c.s_value = p.s_value();
    c.reason = "S could not be reduced to zero";
    if (bad) c.reason += " (edge " + std::to_string(bad->first) + "-" + std::to_string(bad->second) +
                         " joins T" + std::to_string(p.label[bad->first]) + " and T" +
                         std::to_string(p.label[bad->second]) + ")";
    return c;
  }

  Graph h2plus = generate({FamilyTag::H2PLUS});
  static const std::vector<int> h2plus_colours = k_colourable(generate({FamilyTag::H2PLUS}), 4)->colour;
  if (auto label = attempt(h2plus)) {
    finish(*label, Outcome::HOM_H2PLUS, h2plus, h2plus_colours);
    return c;
  }
  Graph augmented = generate({FamilyTag::H2PLUS_AUG});
  if (auto label = attempt(augmented)) {
    finish(*label, Outcome::HOM_AUGMENTED, augmented, augmented_figure_colouring());
    return c;
  }
  c.s_value = p.s_value();
  c.reason = "no labelling into H2+ or its augmentation";
  if (auto bad = first_violation(g, augmented, p.label))
    c.reason += " (edge " + std::to_string(bad->first) + "-" + std::to_string(bad->second) + " between parts " +
                std::to_string(p.label[bad->first]) + " and " + std::to_string(p.label[bad->second]) + ")";
  return c;
}

/// Runs the decomposition on up to kMaxAnchors distinct anchor vertex sets in
/// solver order, returning the first success (or the first failure).
inline DecompositionCertificate decompose_with_anchors(const Graph& g, const Graph& pattern,
                                                       DecompositionCertificate::Kind kind, const Deadline& deadline) {
  std::optional<DecompositionCertificate> first_failure;
  std::optional<DecompositionCertificate> success;
  std::set<VertexSet> seen;
  int tried = 0;
  for_each_embedding(
      pattern, g, false,
      [&](const VertexMap& m) {
        VertexSet image = VertexSet::from_vector(m);
        if (!seen.insert(image).second) return false;
        ++tried;
        auto cert = decompose_around(g, m, kind, deadline);
        if (cert.succeeded()) {
          success = std::move(cert);
          return true;
        }
        if (!first_failure) first_failure = std::move(cert);
        return tried >= kMaxAnchors;
      },
      deadline, true);
  DecompositionCertificate out = success ? *success : *first_failure;
  out.anchors_tried = tried;
  return out;
}

}  // namespace detail

/// Builds the D_i / R_i / T_i partition around a copy of C̄7 and, when S can be
/// made zero, the homomorphism T_i -> v_i.
inline DecompositionCertificate decompose_c7bar(const Graph& g, const Deadline& deadline = {}) {
  using Kind = DecompositionCertificate::Kind;
  if (!is_locally_bipartite(g)) return detail::failed(Kind::C7BAR, "not locally bipartite");
  if (!detail::above_six_elevenths(g)) return detail::failed(Kind::C7BAR, "degree too low");
  Graph c7 = generate({FamilyTag::C7BAR});
  if (!find_subgraph(c7, g, false, deadline)) return detail::failed(Kind::C7BAR, "no C7bar copy");
  return detail::decompose_with_anchors(g, c7, Kind::C7BAR, deadline);
}

/// The same construction around a copy of H2+ in a graph without C̄7; yields a
/// homomorphism into H2+ or into H2PLUS_AUG (with its 4-colouring).
inline DecompositionCertificate decompose_h2plus(const Graph& g, const Deadline& deadline = {}) {
  using Kind = DecompositionCertificate::Kind;
  if (!is_locally_bipartite(g)) return detail::failed(Kind::H2PLUS, "not locally bipartite");
  if (!detail::above_six_elevenths(g)) return detail::failed(Kind::H2PLUS, "degree too low");
  if (find_subgraph(generate({FamilyTag::C7BAR}), g, false, deadline))
    return detail::failed(Kind::H2PLUS, "contains C7bar, use decompose_c7bar");
  Graph h2p = generate({FamilyTag::H2PLUS});
  if (!find_subgraph(h2p, g, false, deadline)) return detail::failed(Kind::H2PLUS, "no H2+ copy");
  return detail::decompose_with_anchors(g, h2p, Kind::H2PLUS, deadline);
}

struct ProfileReport {
  Rational ratio;  // δ/n
  std::string range;   // "above 4/7", "above 6/11", "outside theorem range"
  std::string certificate_kind;  // "3-colouring", "HOM_C7BAR", ...
  std::optional<Colouring> colouring;
  std::optional<DecompositionCertificate> decomposition;
  bool hard_failure = false;
  std::string detail;
};

/// End-to-end pipeline for a locally bipartite graph: the certificate promised
/// for its degree ratio, or a hard failure if it cannot be produced.
inline ProfileReport verify_profile(const Graph& g, const Deadline& deadline = {}) {
  if (g.order() == 0) throw std::invalid_argument("verify_profile needs a non-empty graph");
  if (!is_locally_bipartite(g)) throw std::invalid_argument("verify_profile needs a locally bipartite graph");
  ProfileReport r;
  const int n = g.order(), delta = g.min_degree();
  r.ratio = make_rational(delta, n);
  ColouringOptions opts;
  opts.deadline = deadline;

  if (7 * delta > 4 * n) {
    r.range = "above 4/7";
    r.colouring = k_colourable(g, 3, opts);
    r.certificate_kind = r.colouring ? "3-colouring" : "none";
    r.hard_failure = !r.colouring;
    r.detail = r.colouring ? "3-colouring found" : "no 3-colouring although delta/n > 4/7";
    return r;
  }
  if (11 * delta > 6 * n) {
    r.range = "above 6/11";
    if ((r.colouring = k_colourable(g, 3, opts))) {
      r.certificate_kind = "3-colouring";
      r.detail = "3-colouring found";
      return r;
    }
    bool has_c7 = find_subgraph(generate({FamilyTag::C7BAR}), g, false, deadline).has_value();
    auto cert = has_c7 ? decompose_c7bar(g, deadline) : decompose_h2plus(g, deadline);
    r.certificate_kind = to_string(cert.outcome);
    r.colouring = cert.colouring;
    r.hard_failure = !cert.succeeded();
    r.detail = cert.succeeded() ? "homomorphism certificate produced" : "decomposition failed: " + cert.reason;
    r.decomposition = std::move(cert);
    return r;
  }
  r.range = "outside theorem range";
  r.colouring = k_colourable(g, 4, opts);
  r.certificate_kind = r.colouring ? "4-colouring" : "none";
  r.detail = r.colouring ? "opportunistic 4-colouring found" : "no 4-colouring (none promised)";
  return r;
}

}  // namespace localchrom
