#include "localchrom/graph.hpp"
#include "localchrom/rational.hpp"
#include "localchrom/vertex_set.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace localchrom;

TEST(VertexSet, BasicOperations) {
  VertexSet s{0, 3, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.to_string(), "{0,3,5}");
  s.insert(255);
  EXPECT_EQ(s.last(), 255);
  EXPECT_EQ(s.first(), 0);
  s.erase(0);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{3, 5, 255}));
  EXPECT_TRUE(VertexSet({3, 5}).is_subset_of(s));
  EXPECT_EQ((VertexSet{1, 2, 3} & VertexSet{2, 3, 4}), (VertexSet{2, 3}));
  EXPECT_EQ((VertexSet{1, 2, 3} - VertexSet{2}), (VertexSet{1, 3}));
  EXPECT_EQ(VertexSet::range(70).size(), 70);
  EXPECT_THROW(s.insert(256), std::out_of_range);
  EXPECT_THROW(s.insert(-1), std::out_of_range);
}

TEST(Rational, FormatAndParse) {
  EXPECT_EQ(format_rational(make_rational(6, 11)), "6/11");
  EXPECT_EQ(format_rational(make_rational(4, 2)), "2/1");
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
  EXPECT_EQ(parse_rational("3"), make_rational(3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Graph, EdgesAndErrors) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 4), std::out_of_range);
  EXPECT_THROW(Graph(257), std::invalid_argument);
  EXPECT_THROW(Graph(-1), std::invalid_argument);
  EXPECT_THROW(g.common_neighbourhood(VertexSet{}), std::invalid_argument);
}

TEST(Graph, ComplementAndCyclePower) {
  Graph c7 = cycle(7);
  Graph sq = cycle_power(7, 2);
  EXPECT_EQ(complement(c7).num_edges(), 14);
  EXPECT_TRUE(oracle::isomorphic_brute(complement(c7), sq));  // C̄7 is the square of C7
  EXPECT_EQ(sq.min_degree(), 4);
  EXPECT_THROW(cycle_power(2, 1), std::invalid_argument);
  EXPECT_THROW(cycle_power(7, 4), std::invalid_argument);
  EXPECT_EQ(complete_graph(4).num_edges(), 6);
}

TEST(Graph, BlowUpClassesAndDegrees) {
  Graph c5 = cycle(5);
  std::vector<int> sizes{1, 2, 3, 1, 2};
  BlowUp b = blow_up_with_classes(c5, sizes);
  EXPECT_EQ(b.graph.order(), 9);
  for (int x = 0; x < 9; ++x) {
    int v = b.class_of[x];
    int expected = sizes[(v + 1) % 5] + sizes[(v + 4) % 5];
    EXPECT_EQ(b.graph.degree(x), expected);
  }
  EXPECT_EQ(b.class_members(2), (VertexSet{3, 4, 5}));
  EXPECT_THROW(blow_up(c5, {1, 0, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(blow_up(c5, {1, 1}), std::invalid_argument);
}

TEST(Graph, CommonNeighbourhoodAndCounts) {
  Graph g = cycle_power(7, 2);
  EXPECT_EQ(g.common_neighbourhood({0, 3}), (VertexSet{1, 2, 5}));
  EXPECT_EQ(g.codegree(0, 3), 3);
  EXPECT_EQ(g.edges_between(VertexSet{0}, VertexSet{1, 2, 3}), 2);
  EXPECT_TRUE(g.is_independent(VertexSet{0, 3}));
  EXPECT_FALSE(g.is_independent(VertexSet{0, 1}));
}

TEST(WeightedGraph, DegreesAndValidation) {
  Graph k3 = complete_graph(3);
  WeightedGraph wg(k3, {make_rational(1), make_rational(2), make_rational(3)});
  EXPECT_EQ(wg.total_weight(), 6);
  EXPECT_EQ(wg.weighted_degree(0), 5);
  EXPECT_EQ(wg.min_weighted_degree(), 3);
  EXPECT_THROW(WeightedGraph(k3, {make_rational(1)}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(k3, {make_rational(1), make_rational(-1), make_rational(1)}), std::invalid_argument);
}

TEST(Twins, MergeKeepsDegrees) {
  // [DERIVED] blow_up(K3, [2,1,1]) merges back to K3 with weights (2,1,1).
  Graph g = blow_up(complete_graph(3), {2, 1, 1});
  EXPECT_EQ(find_twins(g), (std::vector<Edge>{{0, 1}}));
  auto merged = merge_twins(WeightedGraph::unit(g));
  EXPECT_EQ(merged.graph().order(), 3);
  EXPECT_EQ(merged.weights(), (std::vector<Rational>{2, 1, 1}));
  EXPECT_EQ(merged.min_weighted_degree(), WeightedGraph::unit(g).min_weighted_degree());
}

TEST(Graph, PermutedAndInduced) {
  Graph p = cycle(4);
  std::vector<int> perm{1, 2, 3, 0};
  Graph q = p.permuted(perm);
  EXPECT_TRUE(q.has_edge(1, 2));
  EXPECT_TRUE(q.has_edge(0, 1));
  std::vector<int> keep{0, 1, 2};
  EXPECT_EQ(p.induced(keep).num_edges(), 2);
}
