#include "localchrom/canonical.hpp"
#include "localchrom/families.hpp"
#include "localchrom/hom_solver.hpp"
#include "localchrom/properties.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace localchrom;

TEST(Hom, Examples) {
  EXPECT_TRUE(find_homomorphism(cycle(5), complete_graph(3)));
  EXPECT_FALSE(find_homomorphism(complete_graph(3), cycle(5)));
  EXPECT_FALSE(find_homomorphism(cycle(5), complete_graph(2)));
  auto m = find_homomorphism(generate("H2"), generate("C7BAR"));
  ASSERT_TRUE(m);
  EXPECT_TRUE(is_homomorphism(generate("H2"), generate("C7BAR"), *m));
}

TEST(Hom, NonHomomorphismsBetweenAnchors) {
  Graph h2 = generate("H2"), c7 = generate("C7BAR"), h2p = generate("H2PLUS");
  for (auto [g, h] : {std::pair{&h2p, &c7}, {&c7, &h2p}, {&h2p, &h2}, {&c7, &h2}}) {
    EXPECT_FALSE(find_homomorphism(*g, *h));
    EXPECT_FALSE(oracle::hom_brute(*g, *h));
  }
}

TEST(Hom, AgreesWithBruteForceOnSmallGraphs) {
  properties::Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    Graph g = properties::random_graph(rng, properties::uniform(rng, 1, 5), properties::unit(rng));
    Graph h = properties::random_graph(rng, properties::uniform(rng, 1, 5), properties::unit(rng));
    auto m = find_homomorphism(g, h);
    ASSERT_EQ(m.has_value(), oracle::hom_brute(g, h));
    if (m) {
      EXPECT_TRUE(is_homomorphism(g, h, *m));
    }
    for (bool induced : {false, true}) {
      auto e = find_subgraph(g, h, induced);
      ASSERT_EQ(e.has_value(), oracle::subgraph_brute(g, h, induced));
      if (e) {
        EXPECT_TRUE(is_embedding(g, h, *e, induced));
      }
    }
  }
}

TEST(Hom, TwinPruningKeepsExistenceAnswers) {
  properties::Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    Graph base = properties::random_graph(rng, properties::uniform(rng, 2, 4), properties::unit(rng));
    Graph h = blow_up(base, properties::random_sizes(rng, base.order(), 2));
    Graph g = properties::random_graph(rng, properties::uniform(rng, 1, 4), properties::unit(rng));
    ASSERT_EQ(find_subgraph(g, h, true).has_value(), oracle::subgraph_brute(g, h, true));
    ASSERT_EQ(find_subgraph(g, h, false).has_value(), oracle::subgraph_brute(g, h, false));
  }
}

TEST(Hom, EnumerationCountsAutomorphisms) {
  // [DERIVED] C5 has 10 automorphisms; C̄7 has 14.
  int count = 0;
  for_each_embedding(cycle(5), cycle(5), true, [&](const VertexMap&) { return ++count, false; });
  EXPECT_EQ(count, 10);
  count = 0;
  Graph c7 = generate("C7BAR");
  for_each_embedding(c7, c7, true, [&](const VertexMap&) { return ++count, false; });
  EXPECT_EQ(count, 14);
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(complement(cycle(7)), cycle_power(7, 2)));
  EXPECT_TRUE(is_isomorphic(generate("DELTA(2)"), generate("C7BAR")));
  EXPECT_FALSE(is_isomorphic(cycle(5), cycle(7)));
  EXPECT_TRUE(find_isomorphism(generate("DELTA(2)"), generate("C7BAR")));
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  properties::Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    int n = properties::uniform(rng, 1, 7);
    Graph a = properties::random_graph(rng, n, properties::unit(rng));
    Graph b = properties::random_graph(rng, n, properties::unit(rng));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_graph(a), canonical_graph(a.permuted(perm)));
    bool iso = oracle::isomorphic_brute(a, b);
    EXPECT_EQ(canonical_graph(a) == canonical_graph(b), iso);
    EXPECT_EQ(is_isomorphic(a, b), iso);
  }
}

TEST(Homscores, Examples) {
  Graph c7 = generate("C7BAR");
  auto r = verify_homscores(c7, blow_up(c7, {1, 2, 1, 1, 1, 1, 1}));
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_TRUE(r.induced_copy);
  auto fail = verify_homscores(c7, generate("H2PLUS"));
  EXPECT_FALSE(fail.f_hom_to_g);
  EXPECT_NE(fail.summary().find("hypothesis (hom) fails"), std::string::npos);
}

TEST(Compose, MapsCompose) {
  VertexMap f{1, 2, 0}, g{5, 6, 7};
  EXPECT_EQ(compose(f, g), (VertexMap{6, 7, 5}));
}
