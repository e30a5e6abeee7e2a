#include "localchrom/colouring.hpp"
#include "localchrom/decomposition.hpp"
#include "localchrom/families.hpp"
#include "localchrom/properties.hpp"

#include <gtest/gtest.h>

using namespace localchrom;

namespace {

const std::vector<int> kH2PlusSizes = {5, 1, 4, 2, 2, 4, 1, 1};

std::vector<int> scaled_sizes(int k) {
  std::vector<int> s = kH2PlusSizes;
  for (int& x : s) x *= k;
  return s;
}

void expect_valid(const Graph& g, const DecompositionCertificate& c) {
  ASSERT_TRUE(c.succeeded()) << c.reason;
  ASSERT_TRUE(c.colouring.has_value());
  EXPECT_TRUE(c.colouring->is_proper_for(g));
  EXPECT_LE(c.colouring->k, 4);
  EXPECT_LE(c.max_anchor_neighbours, 4);
  EXPECT_LE(c.size_audit_lhs, c.size_audit_rhs);
}

}  // namespace

TEST(Decomposition, C7BarBalancedBlowUps) {
  const Graph c7 = generate("C7BAR");
  for (int m = 2; m <= 4; ++m) {
    BlowUp b = blow_up_with_classes(c7, std::vector<int>(7, m));
    auto c = decompose_c7bar(b.graph);
    EXPECT_EQ(c.outcome, Outcome::HOM_C7BAR) << c.reason;
    expect_valid(b.graph, c);
    EXPECT_TRUE(is_homomorphism(b.graph, c7, c.map));
    EXPECT_TRUE(c.R.empty());
  }
}

TEST(Decomposition, C7BarWithMatchingRemoved) {
  const Graph c7 = generate("C7BAR");
  properties::Rng rng(7);
  int with_r = 0;
  for (int m = 6; m <= 9; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      Graph g = blow_up(c7, std::vector<int>(7, m));
      VertexSet matched;
      auto edges = g.edges();
      std::shuffle(edges.begin(), edges.end(), rng);
      for (auto [u, v] : edges)
        if (!matched.contains(u) && !matched.contains(v) && properties::coin(rng, 0.5)) {
          g.remove_edge(u, v);
          matched.insert(u);
          matched.insert(v);
        }
      ASSERT_TRUE(11 * g.min_degree() > 6 * g.order());
      auto c = decompose_c7bar(g);
      EXPECT_EQ(c.outcome, Outcome::HOM_C7BAR) << c.reason;
      expect_valid(g, c);
      with_r += !c.R.empty();
    }
  }
  EXPECT_GT(with_r, 0);
}

TEST(Decomposition, H2PlusBlowUps) {
  const Graph h2p = generate("H2PLUS");
  for (int k = 1; k <= 3; ++k) {
    BlowUp b = blow_up_with_classes(h2p, scaled_sizes(k));
    ASSERT_TRUE(11 * b.graph.min_degree() > 6 * b.graph.order());
    auto c = decompose_h2plus(b.graph);
    EXPECT_EQ(c.outcome, Outcome::HOM_H2PLUS) << c.reason;
    expect_valid(b.graph, c);
    EXPECT_TRUE(is_homomorphism(b.graph, h2p, c.map));
    EXPECT_EQ(c.R502, b.class_members(kLabelU));
  }
}

TEST(Decomposition, FailureReasons) {
  EXPECT_EQ(decompose_h2plus(generate("H2PLUS")).reason, "degree too low");
  EXPECT_EQ(decompose_c7bar(generate("WHEEL(7)")).reason, "not locally bipartite");
  Graph h2p_blow = blow_up(generate("H2PLUS"), kH2PlusSizes);
  EXPECT_EQ(decompose_c7bar(h2p_blow).reason, "no C7bar copy");
  Graph c7_blow = blow_up(generate("C7BAR"), std::vector<int>(7, 2));
  EXPECT_EQ(decompose_h2plus(c7_blow).reason, "contains C7bar, use decompose_c7bar");
  EXPECT_EQ(decompose_c7bar(c7_blow).outcome, Outcome::HOM_C7BAR);
  // K4-free graphs with δ/n above 6/11 and no C̄7 or H2+: the complete bipartite ones.
  EXPECT_EQ(decompose_h2plus(blow_up(complete_graph(3), {2, 2, 2})).reason, "no H2+ copy");
}

TEST(Profile, Examples) {
  auto k3 = verify_profile(blow_up(complete_graph(3), {2, 2, 2}));
  EXPECT_EQ(k3.range, "above 4/7");
  EXPECT_EQ(k3.certificate_kind, "3-colouring");
  EXPECT_FALSE(k3.hard_failure);

  Graph c7 = blow_up(generate("C7BAR"), std::vector<int>(7, 3));
  auto r = verify_profile(c7);
  EXPECT_EQ(r.range, "above 6/11");
  EXPECT_EQ(r.certificate_kind, "HOM_C7BAR");
  ASSERT_TRUE(r.colouring.has_value());
  EXPECT_EQ(r.colouring->k, 4);
  EXPECT_EQ(chromatic_number(c7).chi, 4);

  auto h2p = verify_profile(blow_up(generate("H2PLUS"), kH2PlusSizes));
  EXPECT_EQ(h2p.certificate_kind, "HOM_H2PLUS");
  EXPECT_FALSE(h2p.hard_failure);

  Graph h2 = blow_up(generate("H2"), {3, 1, 2, 1, 1, 2, 1});
  auto out = verify_profile(h2);
  EXPECT_EQ(out.range, "outside theorem range");
  EXPECT_EQ(out.ratio, make_rational(6, 11));
  EXPECT_EQ(chromatic_number(h2).chi, 4);
  EXPECT_EQ(out.certificate_kind, "4-colouring");

  EXPECT_THROW(verify_profile(generate("WHEEL(7)")), std::invalid_argument);
  EXPECT_THROW(verify_profile(Graph(0)), std::invalid_argument);
}
