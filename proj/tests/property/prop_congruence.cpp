#include <gtest/gtest.h>

#include "properties.hpp"

using namespace abc;

namespace {
constexpr int kPairs = 100;
}

TEST(Congruence, ParallelContext) {
  auto t = props::parallel_context(props::law_pairs(7, kPairs), 70);
  EXPECT_TRUE(t.ok()) << t.summary();
  EXPECT_EQ(t.exercised, static_cast<std::size_t>(kPairs));
}

TEST(Congruence, RestrictionContext) {
  auto t = props::restriction_context(props::law_pairs(8, kPairs), 80);
  EXPECT_TRUE(t.ok()) << t.summary();
}

TEST(Congruence, BarbsAgree) {
  auto t = props::barbs_agree(props::law_pairs(9, kPairs));
  EXPECT_TRUE(t.ok()) << t.summary();
  EXPECT_GT(t.exercised, 30u);
}

TEST(Congruence, CheckerSeparatesUnrelatedComponents) {
  // Control: random unrelated components are not all reported equivalent.
  Solver solver;
  testgen::Gen g(90);
  testgen::ProcShape shape;
  shape.max_depth = 2;
  int different = 0;
  for (int i = 0; i < 40; ++i) {
    auto a = testgen::random_leaf(g, shape), b = testgen::random_leaf(g, shape);
    if (!laws::weak_equiv(a, b, solver).equivalent) ++different;
  }
  EXPECT_GT(different, 10);
}
