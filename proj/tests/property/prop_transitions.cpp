#include <gtest/gtest.h>

#include "properties.hpp"

using namespace abc;

namespace {
constexpr int kComponents = 200;
}

TEST(TransitionProperties, UnsatisfiableInputLeavesComponentUnchanged) {
  auto t = props::unsatisfiable_inputs_discarded(11, kComponents);
  EXPECT_TRUE(t.ok()) << t.summary();
  EXPECT_GE(t.checks, static_cast<std::size_t>(kComponents));
}

TEST(TransitionProperties, SilentStepsLiftThroughParallel) {
  auto t = props::silent_steps_lift_through_parallel(12, kComponents);
  EXPECT_TRUE(t.ok()) << t.summary();
  EXPECT_GT(t.exercised, 50u);
}

TEST(TransitionProperties, EquivalentPredicatesGiveSameReactions) {
  auto t = props::equivalent_predicates_same_reactions(14, kComponents);
  EXPECT_TRUE(t.ok()) << t.summary();
  EXPECT_GT(t.exercised, 20u);
}

TEST(TransitionProperties, SilentStepsLiftThroughRestriction) {
  auto t = props::silent_steps_lift_through_restriction(15, kComponents);
  EXPECT_TRUE(t.ok()) << t.summary();
  EXPECT_GT(t.exercised, 50u);
}

TEST(TransitionProperties, InputTotality) {
  auto t = props::input_totality(16, kComponents);
  EXPECT_TRUE(t.ok()) << t.summary();
  EXPECT_GT(t.checks, 800u);
}
