#pragma once

#include "localchrom/deadline.hpp"
#include "localchrom/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace localchrom {

/// Canonical labelling: `label[v]` is the new index of vertex v; `code` packs
/// the upper triangle of the relabelled adjacency matrix (row-major, pairs
/// (i, j) with i < j). Two graphs are isomorphic iff order and code agree.
struct CanonicalForm {
  std::vector<int> label;
  std::vector<std::uint64_t> code;

  Graph apply(const Graph& g) const { return g.permuted(label); }
};

namespace detail {

using Partition = std::vector<std::vector<int>>;

/// Refines an ordered partition to the coarsest equitable one. Cells are split
/// by number of neighbours in a splitter cell; fragments are ordered by that
/// count, so the result does not depend on vertex names.
inline void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  std::vector<int> counts(static_cast<std::size_t>(g.order()));
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      VertexSet splitter = VertexSet::from_vector(cells[s]);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto& cell = cells[c];
        if (cell.size() < 2) continue;
        for (int v : cell) counts[v] = g.neighbours(v).intersection_size(splitter);
        bool uniform = std::all_of(cell.begin(), cell.end(), [&](int v) { return counts[v] == counts[cell[0]]; });
        if (uniform) continue;
        std::vector<int> sorted = cell;
        std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) { return counts[a] < counts[b]; });
        Partition pieces;
        for (int v : sorted) {
          if (pieces.empty() || counts[pieces.back().back()] != counts[v]) pieces.emplace_back();
          pieces.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

inline std::vector<std::uint64_t> encode(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  std::vector<std::uint64_t> code(static_cast<std::size_t>((n * (n - 1) / 2 + 63) / 64), 0);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (g.has_edge(order[i], order[j])) code[bit >> 6] |= std::uint64_t{1} << (63 - (bit & 63));
  return code;
}

struct CanonSearch {
  const Graph& g;
  const Deadline& deadline;
  std::vector<std::uint64_t> best_code;
  std::vector<int> best_order;
  bool have_best = false;

  void run(Partition cells) {
    deadline.poll();
    refine(g, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    if (target == cells.size()) {
      std::vector<int> order;
      for (const auto& cell : cells) order.push_back(cell[0]);
      auto code = encode(g, order);
      if (!have_best || code > best_code) {
        best_code = std::move(code);
        best_order = std::move(order);
        have_best = true;
      }
      return;
    }
    std::vector<int> tried;
    for (int v : cells[target]) {
      // Swapping twins fixes everything individualised so far, so one
      // representative per twin class is enough.
      bool redundant = std::any_of(tried.begin(), tried.end(), [&](int t) {
        VertexSet a = g.neighbours(v), b = g.neighbours(t);
        a.erase(t);
        b.erase(v);
        return a == b;
      });
      if (redundant) continue;
      tried.push_back(v);
      Partition next = cells;
      std::vector<int> rest;
      for (int x : cells[target])
        if (x != v) rest.push_back(x);
      next[target] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
      run(std::move(next));
    }
  }
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g, const Deadline& deadline = {}) {
  CanonicalForm out;
  const int n = g.order();
  if (n == 0) return out;
  detail::Partition initial{g.vertices().to_vector()};
  detail::CanonSearch search{g, deadline, {}, {}, false};
  search.run(initial);
  out.code = std::move(search.best_code);
  out.label.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) out.label[search.best_order[i]] = i;
  return out;
}

inline Graph canonical_graph(const Graph& g) { return canonical_form(g).apply(g); }

inline bool is_isomorphic(const Graph& g, const Graph& h, const Deadline& deadline = {}) {
  if (g.order() != h.order() || g.num_edges() != h.num_edges()) return false;
  return canonical_form(g, deadline).code == canonical_form(h, deadline).code;
}

}  // namespace localchrom
