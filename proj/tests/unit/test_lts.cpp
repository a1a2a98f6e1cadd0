#include <gtest/gtest.h>

#include "abc/error.hpp"
#include "abc/lts.hpp"
#include "abc/parser.hpp"
#include "abc/print.hpp"
#include "corpus.hpp"

using namespace abc;
using abc::testing::load_system;

namespace {

Value I(int v) { return Value::integer(v); }

Label out_label(AttributeEnv env, const char* pred, Values vals) {
  return make_label(Label::Kind::Output, std::move(env), parse_predicate(pred), std::move(vals));
}

Label in_label(AttributeEnv env, const char* pred, Values vals) {
  return make_label(Label::Kind::Input, std::move(env), parse_predicate(pred), std::move(vals));
}

LabelUniverse universe_of(const System& s, const Solver& solver) {
  LabelUniverse u;
  for (const auto& l : s.universe) u.add(l, solver);
  return u;
}

}  // namespace

TEST(LabelEquiv, PredicatesUpToEquivalence) {
  Solver solver;
  auto a = out_label({{"r", I(1)}}, "a != 10", {I(1)});
  auto b = out_label({{"r", I(1)}}, "!(a == 10)", {I(1)});
  EXPECT_TRUE(label_equiv(a, b, solver));
  EXPECT_FALSE(label_equiv(a, out_label({{"r", I(2)}}, "a != 10", {I(1)}), solver));
  EXPECT_FALSE(label_equiv(a, out_label({{"r", I(1)}}, "a != 10", {I(2)}), solver));
  EXPECT_FALSE(label_equiv(a, in_label({{"r", I(1)}}, "a != 10", {I(1)}), solver));
  // All silent outputs are identified.
  EXPECT_TRUE(label_equiv(out_label({}, "ff", {}), out_label({{"r", I(1)}}, "a < 1 && a > 1", {I(4)}), solver));
}

TEST(LabelUniverse, DeduplicatesAndFingerprints) {
  Solver solver;
  LabelUniverse u;
  EXPECT_TRUE(u.add(in_label({}, "a == 1", {I(1)}), solver));
  EXPECT_FALSE(u.add(in_label({}, "1 == a", {I(1)}), solver));
  EXPECT_TRUE(u.add(out_label({}, "tt", {I(2)}), solver));
  EXPECT_EQ(u.size(), 2u);
  EXPECT_TRUE(u.labels()[1].is_input());
  EXPECT_EQ(u.fingerprint().size(), 16u);

  LabelUniverse v;
  v.add(out_label({}, "tt", {I(2)}), solver);
  v.add(in_label({}, "a == 1", {I(1)}), solver);
  EXPECT_EQ(u.fingerprint(), v.fingerprint());
}

TEST(Explore, ZeroSystem) {
  auto s = load_system("abc/zero.abc");
  auto prog = s.program();
  Solver solver;
  auto lts = explore({s.root, &prog}, {}, solver);
  EXPECT_EQ(lts.state_count(), 1u);
  EXPECT_TRUE(lts.transitions.empty());
  EXPECT_EQ(export_aut(lts, solver), "des (0,0,1)\n");
}

TEST(Explore, ForwardingNetwork) {
  auto s = load_system("abc/forwarding_closed.abc");
  auto prog = s.program();
  Solver solver;
  auto lts = explore({s.root, &prog}, {}, solver);
  EXPECT_FALSE(lts.truncated);
  EXPECT_EQ(lts.state_count(), 10u);
  EXPECT_EQ(lts.transitions.size(), 13u);
  std::size_t taus = 0;
  for (const auto& t : lts.transitions) taus += t.tau ? 1 : 0;
  EXPECT_EQ(taus, 6u);
  EXPECT_EQ(lts.initial(), 0u);
}

TEST(Explore, UniverseInputsAndSelfLoops) {
  auto s = load_system("abc/or_guard.abc");
  auto prog = s.program();
  Solver solver;
  auto u = universe_of(s, solver);
  auto lts = explore({s.root, &prog}, u, solver);
  EXPECT_EQ(lts.state_count(), 4u);
  std::size_t self_loops = 0, inputs = 0;
  for (const auto& t : lts.transitions) {
    if (t.label.is_input()) ++inputs;
    if (t.label.is_input() && t.src == t.dst) ++self_loops;
  }
  EXPECT_EQ(inputs, 4u * 3u);
  EXPECT_EQ(self_loops, inputs - 2u);
}

TEST(Explore, JobsDoNotChangeTheResult) {
  auto s = load_system("abc/pubsub.abc");
  auto prog = s.program();
  Solver solver;
  auto u = shared_alphabet({{s.root, &prog}}, solver);
  std::string reference;
  for (unsigned jobs : {1u, 2u, 4u, 8u}) {
    ExploreOptions opts;
    opts.jobs = jobs;
    auto text = export_aut(explore({s.root, &prog}, u, solver, opts), solver);
    if (reference.empty()) reference = text;
    EXPECT_EQ(text, reference) << "jobs=" << jobs;
  }
  EXPECT_GT(reference.size(), 20u);
}

TEST(Explore, Truncation) {
  auto sys = parse_abc(R"(proc Count = (this.n)@tt.[n := this.n + 1]Count;
                         comp C { iface: []; env: {n = 0}; run: Count; }
                         system = C;)");
  auto prog = sys.program();
  Solver solver;
  ExploreOptions opts;
  opts.max_states = 5;
  auto lts = explore({sys.root, &prog}, {}, solver, opts);
  EXPECT_TRUE(lts.truncated);
  EXPECT_LE(lts.state_count(), 5u);
  EXPECT_GT(lts.frontier, 0u);
  EXPECT_THROW(require_complete(lts), BoundExceeded);

  opts.max_states = 1000;
  opts.max_depth = 3;
  lts = explore({sys.root, &prog}, {}, solver, opts);
  EXPECT_TRUE(lts.truncated);
  EXPECT_EQ(lts.state_count(), 4u);
}

TEST(SharedAlphabet, AddsEmittedOutputs) {
  auto s = load_system("abc/pubsub.abc");
  auto prog = s.program();
  Solver solver;
  auto u = shared_alphabet({{s.root, &prog}}, solver);
  std::vector<std::string> texts;
  for (const auto& l : u.labels()) texts.push_back(to_string(l));
  std::sort(texts.begin(), texts.end());
  EXPECT_EQ(texts, (std::vector<std::string>{
                       "in {interest=\"news\", role=\"sub\"} [role == \"pub\"] (\"ack\", 1)",
                       "in {interest=\"sport\", role=\"sub\"} [role == \"pub\"] (\"ack\", 2)",
                       "in {role=\"pub\"} [interest == \"news\"] (\"news\", 1)",
                       "in {role=\"pub\"} [interest == \"sport\"] (\"sport\", 2)",
                   }));
}

TEST(WeakClosure, SaturatesSilentSteps) {
  auto sys = parse_abc(R"(comp C { iface: []; env: {}; run: ()@ff.()@ff.(1)@tt.0; } system = C;)");
  auto prog = sys.program();
  Solver solver;
  auto lts = explore({sys.root, &prog}, {}, solver);
  ASSERT_EQ(lts.state_count(), 4u);
  auto weak = weak_closure(lts);
  auto count = [&](std::size_t src, bool tau) {
    std::size_t n = 0;
    for (const auto& t : weak.transitions) n += (t.src == src && t.tau == tau) ? 1 : 0;
    return n;
  };
  EXPECT_EQ(count(0, true), 3u);   // 0, 1, 2
  EXPECT_EQ(count(0, false), 1u);  // => (1) =>
  EXPECT_EQ(count(3, true), 1u);
  EXPECT_EQ(to_string(tau_label()), "out {} [ff] ()");
}

TEST(Reduction, OverPredicate) {
  auto s = load_system("abc/forwarding_closed.abc");
  auto prog = s.program();
  Solver solver;
  auto lts = explore({s.root, &prog}, {}, solver);
  auto client = parse_predicate("role == \"client\"");
  auto strong = reduction_over(lts, client, solver);
  EXPECT_EQ(strong.size(), 7u);  // the first emission included
  auto weak = reduction_over(lts, client, solver, true);
  EXPECT_GT(weak.size(), strong.size());
  EXPECT_TRUE(weak.count({1, 4}));
}

TEST(Aut, SilentAndQuoting) {
  auto sys = parse_abc(R"(comp C { iface: [n]; env: {n = "it's"}; run: ()@ff.(this.n)@(n == "a\"b").0; } system = C;)");
  auto prog = sys.program();
  Solver solver;
  auto text = export_aut(explore({sys.root, &prog}, {}, solver), solver);
  EXPECT_EQ(text,
            "des (0,2,3)\n"
            "(0,\"tau\",1)\n"
            "(1,\"out {n='it's'} [n == 'a\\'b'] ('it's')\",2)\n");
}
