#include <gtest/gtest.h>

#include "abc/env.hpp"
#include "abc/value.hpp"

using namespace abc;

TEST(Value, SetsAreCanonical) {
  auto a = Value::set({Value::integer(2), Value::integer(1), Value::integer(2)});
  auto b = Value::set({Value::integer(1), Value::integer(2)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.items().size(), 2u);
  EXPECT_TRUE(a.contains(Value::integer(1)));
  EXPECT_FALSE(a.contains(Value::integer(3)));
}

TEST(Value, KindsDoNotMix) {
  EXPECT_NE(Value::integer(1), Value::boolean(true));
  EXPECT_NE(Value::name("1"), Value::integer(1));
  EXPECT_FALSE(Value::integer(1).contains(Value::integer(1)));
}

TEST(Value, OrderingIsTotal) {
  std::vector<Value> vs{Value::name("b"), Value::integer(3), Value::boolean(false), Value::name("a"),
                        Value::tuple({Value::integer(1)}), Value::set({})};
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 1; i < vs.size(); ++i) EXPECT_TRUE(vs[i - 1] < vs[i]);
}

TEST(Value, Rendering) {
  EXPECT_EQ(Value::integer(-4).to_string(), "-4");
  EXPECT_EQ(Value::boolean(true).to_string(), "true");
  EXPECT_EQ(Value::name("fwd").to_string(), "\"fwd\"");
  EXPECT_EQ(Value::set({Value::integer(2), Value::integer(1)}).to_string(), "{1, 2}");
  EXPECT_EQ(Value::tuple({Value::integer(1), Value::name("a")}).to_string(), "tuple(1, \"a\")");
  std::vector<Value> seq{Value::name("p"), Value::name("v")};
  EXPECT_EQ(to_string(seq), "(\"p\", \"v\")");
  EXPECT_EQ(to_string(std::vector<Value>{}), "()");
}

TEST(Value, QuoteEscapes) {
  EXPECT_EQ(quote_name("a\"b"), "\"a\\\"b\"");
  EXPECT_EQ(quote_name("back\\slash"), "\"back\\\\slash\"");
}

TEST(Value, AccessorsThrowOnWrongKind) {
  EXPECT_THROW(Value::name("x").as_int(), std::exception);
  EXPECT_THROW(Value::integer(1).as_name(), std::exception);
}

TEST(AttributeEnv, LookupAndRestrict) {
  AttributeEnv env{{"role", Value::name("fwd")}, {"id", Value::name("p")}};
  EXPECT_EQ(env.lookup("role"), Value::name("fwd"));
  EXPECT_FALSE(env.lookup("nbr").has_value());
  auto exposed = restrict_env(env, Interface{"role", "level"});
  EXPECT_EQ(exposed.size(), 1u);
  EXPECT_TRUE(exposed.defines("role"));
  EXPECT_FALSE(exposed.defines("level"));
  EXPECT_EQ(env.to_string(), "{id=\"p\", role=\"fwd\"}");
}

TEST(DomainContext, MergeIntersectsSharedAttributes) {
  DomainContext a, b;
  a.declare("role", {Value::name("client"), Value::name("fwd")});
  b.declare("role", {Value::name("fwd"), Value::name("pub")});
  b.declare("level", {Value::integer(0)});
  a.merge(b);
  ASSERT_NE(a.domain_of("role"), nullptr);
  EXPECT_EQ(a.domain_of("role")->size(), 1u);
  EXPECT_TRUE(a.admits("role", Value::name("fwd")));
  EXPECT_FALSE(a.admits("role", Value::name("client")));
  EXPECT_TRUE(a.admits("unbounded", Value::integer(99)));
  EXPECT_TRUE(a.admits("level", Value::integer(0)));
}
