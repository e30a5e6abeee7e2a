#include "localchrom/properties.hpp"

#include <gtest/gtest.h>

using namespace localchrom;

TEST(Properties, AllSuitesHold) {
  auto results = properties::run_all(20240601, 200);
  ASSERT_EQ(results.size(), 8u);
  for (const auto& r : results) {
    EXPECT_EQ(r.cases, 200) << r.name;
    EXPECT_TRUE(r.ok()) << r.detail();
  }
}

TEST(Properties, DifferentSeedsHold) {
  for (std::uint64_t seed : {1u, 2u, 3u})
    for (const auto& r : properties::run_all(seed, 40)) EXPECT_TRUE(r.ok()) << r.detail();
}

TEST(Properties, AesTwoColourable) {
  auto r = properties::aes_r2(20240601, 100);
  EXPECT_EQ(r.accepted, 100);
  EXPECT_EQ(r.violations, 0) << r.first_violation;
}
