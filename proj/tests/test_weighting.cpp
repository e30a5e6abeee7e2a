#include "localchrom/families.hpp"
#include "localchrom/lp.hpp"
#include "localchrom/properties.hpp"
#include "localchrom/weighting.hpp"

#include <gtest/gtest.h>

using namespace localchrom;

TEST(Lp, SmallProgram) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6: optimum at (8/5, 6/5) with value 14/5.
  lp::Problem p{2, {1, 1}, {{{1, 2}, lp::Sense::LE, 4}, {{3, 1}, lp::Sense::LE, 6}}};
  auto s = lp::maximize(p);
  ASSERT_EQ(s.status, lp::Status::OPTIMAL);
  EXPECT_EQ(s.value, make_rational(14, 5));
  EXPECT_EQ(s.x, (std::vector<Rational>{make_rational(8, 5), make_rational(6, 5)}));
  // Strong duality: Σ rhs·y = value.
  EXPECT_EQ(4 * s.duals[0] + 6 * s.duals[1], s.value);
}

TEST(Lp, InfeasibleAndUnbounded) {
  lp::Problem inf{1, {1}, {{{1}, lp::Sense::LE, 1}, {{1}, lp::Sense::GE, 2}}};
  EXPECT_EQ(lp::maximize(inf).status, lp::Status::INFEASIBLE);
  lp::Problem unb{1, {1}, {{{1}, lp::Sense::GE, 1}}};
  EXPECT_EQ(lp::maximize(unb).status, lp::Status::UNBOUNDED);
  lp::Problem eq{2, {1, 0}, {{{1, 1}, lp::Sense::EQ, 3}, {{-1, 0}, lp::Sense::GE, -2}}};
  auto s = lp::maximize(eq);
  ASSERT_EQ(s.status, lp::Status::OPTIMAL);
  EXPECT_EQ(s.value, 2);
}

TEST(Weighting, KnownOptima) {
  EXPECT_EQ(optimal_weighting(generate("H2")).optimum, make_rational(6, 11));
  EXPECT_EQ(optimal_weighting(generate("H2PLUS")).optimum, make_rational(5, 9));
  EXPECT_EQ(optimal_weighting(generate("C7BAR")).optimum, make_rational(4, 7));
  EXPECT_EQ(optimal_weighting(generate("DELTA(3)")).optimum, make_rational(6, 11));
  EXPECT_EQ(optimal_weighting(complete_graph(3)).optimum, make_rational(2, 3));
  EXPECT_EQ(optimal_weighting(cycle(5)).optimum, make_rational(2, 5));
}

TEST(Weighting, SupportAndIsolated) {
  auto h2p = optimal_weighting(generate("H2PLUS"));
  EXPECT_FALSE(h2p.support_full);
  EXPECT_EQ(optimal_support(generate("H2PLUS"), h2p.optimum), (VertexSet{0, 2, 3, 4, 5, 7}));
  EXPECT_TRUE(optimal_weighting(generate("C7BAR")).support_full);
  Graph g(3);
  g.add_edge(0, 1);
  auto w = optimal_weighting(g);
  EXPECT_TRUE(w.has_isolated);
  EXPECT_EQ(w.optimum, 0);
  EXPECT_THROW(optimal_weighting(Graph(0)), std::invalid_argument);
}

TEST(Weighting, CertificatesOnRandomGraphs) {
  properties::Rng rng(41);
  for (int t = 0; t < 80; ++t) {
    Graph g = properties::random_graph(rng, properties::uniform(rng, 1, 8), properties::unit(rng));
    auto w = optimal_weighting(g);
    EXPECT_TRUE(check_weighting_certificate(g, w.optimum, w.weights, w.dual));
    // A perturbed claimed optimum must fail the check.
    EXPECT_FALSE(check_weighting_certificate(g, w.optimum + make_rational(1, 1000), w.weights, w.dual));
    // Blow-ups realise the weighted optimum.
    EXPECT_EQ(WeightedGraph(g, w.weights).min_weighted_degree(), w.optimum);
  }
}

TEST(VerifyWeighting, StrictInequality) {
  Graph h2 = generate("H2");
  std::vector<Rational> w{3, 1, 2, 1, 1, 2, 1};
  EXPECT_TRUE(verify_weighting(h2, w, make_rational(1, 2)));
  EXPECT_FALSE(verify_weighting(h2, w, make_rational(6, 11)));
  EXPECT_THROW(verify_weighting(h2, std::vector<Rational>(7, Rational(0)), make_rational(1, 2)),
               std::invalid_argument);
  EXPECT_THROW(verify_weighting(h2, {1, 2}, make_rational(1, 2)), std::invalid_argument);
}
