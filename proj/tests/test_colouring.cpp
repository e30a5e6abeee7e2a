#include "localchrom/colouring.hpp"
#include "localchrom/families.hpp"
#include "localchrom/properties.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace localchrom;

TEST(Colouring, FamilyChromaticNumbers) {
  for (const char* id : {"H0", "H1", "H2", "H2PLUS", "C7BAR", "WHEEL(7)", "DELTA(3)", "DELTA(4)", "H2PLUS_AUG",
                         "COUNTEREXAMPLE8"}) {
    auto r = chromatic_number(generate(id));
    EXPECT_EQ(r.chi, 4) << id;
    EXPECT_TRUE(r.colouring.is_proper_for(generate(id))) << id;
  }
  EXPECT_EQ(chromatic_number(generate("ANDRASFAI(3)")).chi, 3);
  EXPECT_EQ(chromatic_number(Graph(3)).chi, 1);
  EXPECT_EQ(chromatic_number(Graph(0)).chi, 0);
}

TEST(Colouring, AgreesWithBruteForce) {
  properties::Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    Graph g = properties::random_graph(rng, properties::uniform(rng, 1, 8), properties::unit(rng));
    int chi = oracle::chi_brute(g);
    auto r = chromatic_number(g);
    ASSERT_EQ(r.chi, chi) << emit_graph_compact(g);
    EXPECT_TRUE(r.colouring.is_proper_for(g));
    if (chi > 1) {
      EXPECT_FALSE(k_colourable(g, chi - 1));
    }
    EXPECT_EQ(clique_number(g), oracle::omega_brute(g));
    auto alpha = independence_number(g);
    EXPECT_EQ(alpha.alpha, oracle::alpha_brute(g));
    EXPECT_TRUE(g.is_independent(alpha.witness));
    EXPECT_EQ(alpha.witness.size(), alpha.alpha);
  }
}

TEST(Colouring, ShuffledSeedsStillProper) {
  Graph g = blow_up(generate("C7BAR"), {2, 3, 1, 2, 2, 1, 3});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    ColouringOptions opts;
    opts.shuffle_seed = seed;
    auto c = k_colourable(g, 4, opts);
    ASSERT_TRUE(c);
    EXPECT_TRUE(c->is_proper_for(g));
    EXPECT_FALSE(k_colourable(g, 3, opts));
  }
}

TEST(Colouring, Errors) {
  EXPECT_THROW(k_colourable(cycle(5), 0), std::invalid_argument);
}

TEST(Colouring, AugmentedFigureColouring) {
  Colouring c{{2, 1, 3, 2, 4, 3, 1, 1}, 4};
  EXPECT_TRUE(c.is_proper_for(generate("H2PLUS_AUG")));
}

TEST(Colouring, AlphaOfDelta) {
  for (int l : {2, 3, 4}) EXPECT_EQ(independence_number(generate({FamilyTag::DELTA, l})).alpha, l);
}
