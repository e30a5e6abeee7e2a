#include "localchrom/extremal_search.hpp"
#include "localchrom/families.hpp"
#include "localchrom/hom_solver.hpp"
#include "localchrom/properties.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

using namespace localchrom;

namespace {

/// Locally bipartite graphs on n vertices up to isomorphism, by brute force.
std::size_t count_lb_brute(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<Graph> reps;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    if (!oracle::locally_bipartite_brute(g)) continue;
    bool seen = false;
    for (const auto& r : reps) seen = seen || oracle::isomorphic_brute(r, g);
    if (!seen) reps.push_back(g);
  }
  return reps.size();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST(Membership, Examples) {
  EXPECT_TRUE(check_membership(generate("C7BAR"), make_rational(1, 2)).member());
  EXPECT_TRUE(check_membership(generate("H2PLUS"), make_rational(1, 2)).member());
  EXPECT_TRUE(check_membership(complete_graph(3), make_rational(1, 2)).member());
  EXPECT_FALSE(check_membership(complete_graph(2), make_rational(1, 2)).member());  // t* = 1/2 exactly
  EXPECT_FALSE(check_membership(generate("H2"), make_rational(1, 2)).member());     // not edge-maximal
  EXPECT_FALSE(check_membership(generate("H2PLUS"), make_rational(5, 9)).member());
}

TEST(Search, LevelCountsMatchBruteForce) {
  auto r = enumerate_extremal(6, make_rational(1, 2));
  ASSERT_TRUE(r.exhausted);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(r.graphs_per_order[n], count_lb_brute(n)) << "n = " << n;
}

TEST(Search, OutputsAreMembersAndDistinct) {
  auto r = enumerate_extremal(8, make_rational(1, 2));
  ASSERT_TRUE(r.exhausted);
  for (std::size_t i = 0; i < r.found.size(); ++i) {
    EXPECT_TRUE(check_membership(r.found[i].graph, make_rational(1, 2)).member());
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(is_isomorphic(r.found[i].graph, r.found[j].graph));
  }
  // H2+ and the eight-vertex counterexample both beat 1/2.
  for (const char* id : {"H2PLUS", "COUNTEREXAMPLE8", "C7BAR"}) {
    int hits = 0;
    for (const auto& f : r.found) hits += is_isomorphic(f.graph, generate(id));
    EXPECT_EQ(hits, 1) << id;
  }
}

TEST(Search, Errors) {
  EXPECT_THROW(enumerate_extremal(0, make_rational(1, 2)), std::invalid_argument);
  EXPECT_THROW(enumerate_extremal(kSearchMaxOrder + 1, make_rational(1, 2)), std::invalid_argument);
}

TEST(Search, ThreadsGiveSameResult) {
  auto a = enumerate_extremal(7, make_rational(1, 2));
  SearchOptions opts;
  opts.threads = 3;
  auto b = enumerate_extremal(7, make_rational(1, 2), opts);
  ASSERT_EQ(a.found.size(), b.found.size());
  for (std::size_t i = 0; i < a.found.size(); ++i) EXPECT_EQ(a.found[i].to_line(), b.found[i].to_line());
  EXPECT_EQ(a.graphs_per_order, b.graphs_per_order);
}

TEST(Search, CheckpointResume) {
  std::string cp = temp_path("localchrom_search_cp.json");
  std::remove(cp.c_str());
  SearchOptions opts;
  opts.checkpoint_path = cp;
  opts.checkpoint_every = 50;
  auto full = enumerate_extremal(7, make_rational(1, 2), opts);
  ASSERT_TRUE(std::filesystem::exists(cp));
  SearchOptions resume;
  resume.resume_path = cp;
  auto resumed = enumerate_extremal(7, make_rational(1, 2), resume);
  ASSERT_EQ(full.found.size(), resumed.found.size());
  for (std::size_t i = 0; i < full.found.size(); ++i) EXPECT_EQ(full.found[i].to_line(), resumed.found[i].to_line());
  EXPECT_EQ(full.graphs_per_order, resumed.graphs_per_order);
  SearchOptions wrong;
  wrong.resume_path = cp;
  EXPECT_THROW(enumerate_extremal(6, make_rational(1, 2), wrong), std::invalid_argument);
  std::remove(cp.c_str());
}

TEST(Search, TimeoutWritesCheckpointThenResumes) {
  std::string cp = temp_path("localchrom_search_timeout.json");
  std::remove(cp.c_str());
  SearchOptions opts;
  opts.checkpoint_path = cp;
  opts.deadline = Deadline::after_seconds(0);
  EXPECT_THROW(enumerate_extremal(7, make_rational(1, 2), opts), TimeoutError);
  ASSERT_TRUE(std::filesystem::exists(cp));
  SearchOptions resume;
  resume.resume_path = cp;
  auto r = enumerate_extremal(7, make_rational(1, 2), resume);
  EXPECT_TRUE(r.exhausted);
  EXPECT_EQ(r.found.size(), enumerate_extremal(7, make_rational(1, 2)).found.size());
  std::remove(cp.c_str());
}
