#pragma once

#include "localchrom/canonical.hpp"
#include "localchrom/colouring.hpp"
#include "localchrom/deadline.hpp"
#include "localchrom/io.hpp"
#include "localchrom/local_structure.hpp"
#include "localchrom/weighting.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace localchrom {

struct MembershipReport {
  bool locally_bipartite = false;
  bool edge_maximal = false;
  bool twin_free = false;
  Rational optimum = 0;
  bool beats = false;

  bool member() const { return locally_bipartite && edge_maximal && twin_free && beats; }
};

/// The four filters of the extremal search evaluated on one graph.
inline MembershipReport check_membership(const Graph& g, const Rational& c, const Deadline& deadline = {}) {
  MembershipReport r;
  r.locally_bipartite = is_locally_bipartite(g);
  r.edge_maximal = is_edge_maximal_locally_bipartite(g);
  r.twin_free = is_twin_free(g);
  if (g.order() > 0) {
    r.optimum = optimal_weighting(g, deadline).optimum;
    r.beats = r.optimum > c;
  }
  return r;
}

struct FoundGraph {
  Graph graph;  // canonically labelled
  Rational optimum;
  int chi = 0;

  /// "n m u1 v1 ... t*=p/q chi=k"
  std::string to_line() const {
    return emit_graph_compact(graph) + " t*=" + format_rational(optimum) + " chi=" + std::to_string(chi);
  }
};

struct SearchResult {
  int n_max = 0;
  Rational c = 0;
  std::vector<FoundGraph> found;
  bool exhausted = false;
  std::vector<std::size_t> graphs_per_order;  // locally bipartite graphs up to iso, index = order
};

struct SearchOptions {
  Deadline deadline;
  int threads = 1;
  /// Checkpoint file written every `checkpoint_every` new canonical forms (empty: none).
  std::string checkpoint_path;
  std::size_t checkpoint_every = 100000;
  /// Resume from this checkpoint file instead of starting at one vertex.
  std::string resume_path;
};

inline constexpr int kSearchMaxOrder = 10;

namespace detail {

using Code = std::uint64_t;

inline Code canonical_code(const Graph& g) {
  auto form = canonical_form(g);
  return form.code.empty() ? 0 : form.code[0];
}

struct Level {
  int order = 0;
  std::vector<Graph> graphs;  // canonical, sorted by code
};

inline std::vector<FoundGraph> leaf_filter(const Level& level, const Rational& c, const Deadline& deadline) {
  std::vector<FoundGraph> out;
  for (const Graph& g : level.graphs) {
    deadline.poll();
    if (!is_twin_free(g) || !is_edge_maximal_locally_bipartite(g)) continue;
    auto w = optimal_weighting(g, deadline);
    if (!w.beats(c)) continue;
    out.push_back({g, w.optimum, chromatic_number(g).chi});
  }
  return out;
}

/// All locally bipartite one-vertex extensions of `parent`, canonically labelled.
inline void extend_parent(const Graph& parent, std::vector<std::pair<Code, Graph>>& out, const Deadline& deadline) {
  const int n = parent.order();
  const std::uint32_t subsets = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    deadline.poll();
    VertexSet nbrs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) nbrs.insert(v);
    if (!is_bipartite_on(parent, nbrs)) continue;
    Graph child(n + 1);
    for (auto [u, v] : parent.edges()) child.add_edge(u, v);
    for (int v : nbrs) child.add_edge(v, n);
    bool ok = true;
    for (int v : nbrs)
      if (!neighbourhood_is_bipartite(child, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    auto form = canonical_form(child);
    out.emplace_back(form.code.empty() ? 0 : form.code[0], form.apply(child));
  }
}

struct Checkpoint {
  int n_max = 0;
  std::string c;
  int level = 0;             // order of the parent level being extended
  std::size_t next_parent = 0;
  bool level_filtered = true;  // leaf filters already applied to the parent level
  std::size_t canonical_forms = 0;
  std::vector<std::string> parents, children, found;
  std::vector<std::size_t> graphs_per_order;

  nlohmann::json to_json() const {
    return {{"n_max", n_max},       {"c", c},
            {"level", level},       {"next_parent", next_parent},
            {"level_filtered", level_filtered},
            {"canonical_forms", canonical_forms}, {"graphs_per_order", graphs_per_order},
            {"parents", parents},   {"children", children},
            {"found", found}};
  }
  static Checkpoint from_json(const nlohmann::json& j) {
    Checkpoint cp;
    j.at("n_max").get_to(cp.n_max);
    j.at("c").get_to(cp.c);
    j.at("level").get_to(cp.level);
    j.at("next_parent").get_to(cp.next_parent);
    j.at("level_filtered").get_to(cp.level_filtered);
    j.at("canonical_forms").get_to(cp.canonical_forms);
    j.at("graphs_per_order").get_to(cp.graphs_per_order);
    j.at("parents").get_to(cp.parents);
    j.at("children").get_to(cp.children);
    j.at("found").get_to(cp.found);
    return cp;
  }
};

inline FoundGraph parse_found_line(const std::string& line) {
  FoundGraph f;
  f.graph = parse_graph_compact(line);
  auto t = line.find("t*=");
  auto chi = line.find(" chi=");
  if (t == std::string::npos || chi == std::string::npos) throw ParseError("malformed search line: " + line);
  f.optimum = parse_rational(line.substr(t + 3, chi - t - 3));
  f.chi = std::stoi(line.substr(chi + 5));
  return f;
}

}  // namespace detail

/// Enumerates, up to isomorphism, the twin-free edge-maximal locally bipartite
/// graphs on at most n_max vertices with t* > c. Graphs are grown one vertex at
/// a time; local bipartiteness is hereditary, so every locally bipartite graph
/// on n vertices extends one on n - 1.
inline SearchResult enumerate_extremal(int n_max, const Rational& c, const SearchOptions& opts = {}) {
  if (n_max < 1 || n_max > kSearchMaxOrder)
    throw std::invalid_argument("n_max must lie in 1.." + std::to_string(kSearchMaxOrder));
  SearchResult result;
  result.n_max = n_max;
  result.c = c;

  detail::Level level{1, {Graph(1)}};
  std::size_t start_parent = 0;
  bool level_filtered = false;
  std::size_t canonical_forms = 1;
  std::unordered_map<detail::Code, Graph> children;

  if (!opts.resume_path.empty()) {
    auto cp = detail::Checkpoint::from_json(nlohmann::json::parse(read_text_file(opts.resume_path)));
    if (cp.n_max != n_max || parse_rational(cp.c) != c)
      throw std::invalid_argument("checkpoint was written for a different n_max or threshold");
    level.order = cp.level;
    level.graphs.clear();
    for (const auto& s : cp.parents) level.graphs.push_back(parse_graph_compact(s));
    for (const auto& s : cp.children) {
      Graph g = parse_graph_compact(s);
      children.emplace(detail::canonical_code(g), g);
    }
    for (const auto& s : cp.found) result.found.push_back(detail::parse_found_line(s));
    result.graphs_per_order = cp.graphs_per_order;
    start_parent = cp.next_parent;
    level_filtered = cp.level_filtered;
    canonical_forms = cp.canonical_forms;
  } else {
    result.graphs_per_order = {1, 1};
  }

  std::size_t next_checkpoint = (canonical_forms / opts.checkpoint_every + 1) * opts.checkpoint_every;
  auto write_checkpoint = [&](std::size_t next_parent) {
    if (opts.checkpoint_path.empty()) return;
    detail::Checkpoint cp;
    cp.n_max = n_max;
    cp.c = format_rational(c);
    cp.level = level.order;
    cp.next_parent = next_parent;
    cp.level_filtered = level_filtered;
    cp.canonical_forms = canonical_forms;
    cp.graphs_per_order = result.graphs_per_order;
    for (const auto& g : level.graphs) cp.parents.push_back(emit_graph_compact(g));
    for (const auto& [code, g] : children) cp.children.push_back(emit_graph_compact(g));
    std::sort(cp.children.begin(), cp.children.end());
    for (const auto& f : result.found) cp.found.push_back(f.to_line());
    std::string tmp = opts.checkpoint_path + ".tmp";
    {
      std::ofstream out(tmp);
      out << cp.to_json().dump() << "\n";
    }
    std::rename(tmp.c_str(), opts.checkpoint_path.c_str());
  };

  const int threads = std::max(1, opts.threads);
  const std::size_t batch = 64;
  try {
    while (true) {
      if (!level_filtered) {
        auto leaves = detail::leaf_filter(level, c, opts.deadline);
        result.found.insert(result.found.end(), leaves.begin(), leaves.end());
        level_filtered = true;
      }
      if (level.order >= n_max) break;
      for (std::size_t begin = start_parent; begin < level.graphs.size(); begin += batch) {
        std::size_t end = std::min(level.graphs.size(), begin + batch);
        std::vector<std::vector<std::pair<detail::Code, Graph>>> local(static_cast<std::size_t>(threads));
        auto work = [&](int tid) {
          Deadline dl = opts.deadline;
          for (std::size_t p = begin + static_cast<std::size_t>(tid); p < end; p += static_cast<std::size_t>(threads))
            detail::extend_parent(level.graphs[p], local[tid], dl);
        };
        if (threads == 1) {
          work(0);
        } else {
          std::vector<std::thread> pool;
          std::exception_ptr error;
          std::mutex error_mutex;
          for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
              try {
                work(t);
              } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
              }
            });
          for (auto& th : pool) th.join();
          if (error) std::rethrow_exception(error);
        }
        for (auto& chunk : local)
          for (auto& [code, g] : chunk)
            if (children.emplace(code, std::move(g)).second) ++canonical_forms;
        start_parent = end;
        if (canonical_forms >= next_checkpoint) {
          write_checkpoint(end);
          next_checkpoint = (canonical_forms / opts.checkpoint_every + 1) * opts.checkpoint_every;
        }
      }
      std::vector<std::pair<detail::Code, Graph>> sorted(children.begin(), children.end());
      std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      children.clear();
      level.order += 1;
      level.graphs.clear();
      for (auto& [code, g] : sorted) level.graphs.push_back(std::move(g));
      start_parent = 0;
      level_filtered = false;
      result.graphs_per_order.push_back(level.graphs.size());
    }
  } catch (const TimeoutError&) {
    write_checkpoint(start_parent);
    throw;
  }
  result.exhausted = true;
  return result;
}

}  // namespace localchrom
