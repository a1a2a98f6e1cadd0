#include <gtest/gtest.h>

#include <json.hpp>

#include "abc/equivalence.hpp"
#include "abc/parser.hpp"
#include "abc/print.hpp"
#include "corpus.hpp"

using namespace abc;
using abc::testing::load_system;

namespace {

struct Pair {
  System left, right;
  Program lp, rp;
  Pair(const std::string& l, const std::string& r)
      : left(parse_abc(l)), right(parse_abc(r)), lp(left.program()), rp(right.program()) {}
  Pair(System l, System r) : left(std::move(l)), right(std::move(r)), lp(left.program()), rp(right.program()) {}

  BisimOptions options(const Solver& solver) const {
    BisimOptions o;
    for (const auto& u : left.universe) o.universe.add(u, solver);
    for (const auto& u : right.universe) o.universe.add(u, solver);
    return o;
  }
  Verdict weak(const Solver& solver) const {
    return weak_bisim({left.root, &lp}, {right.root, &rp}, solver, options(solver));
  }
  Verdict strong(const Solver& solver) const {
    return strong_bisim({left.root, &lp}, {right.root, &rp}, solver, options(solver));
  }
};

std::string sys(const std::string& proc, const std::string& env = "{}", const std::string& iface = "[]") {
  return "comp C { iface: " + iface + "; env: " + env + "; run: " + proc + "; } system = C;";
}

}  // namespace

TEST(Bisim, SilentPrefixIsWeaklyInvisible) {
  Solver solver;
  Pair p(sys("()@ff.(1)@tt.0"), sys("(1)@tt.0"));
  EXPECT_TRUE(p.weak(solver).equivalent);
  auto strong = p.strong(solver);
  EXPECT_FALSE(strong.equivalent);
  ASSERT_TRUE(strong.witness.has_value());
  EXPECT_FALSE(strong.weak);
}

TEST(Bisim, EquivalentPredicatesMatch) {
  Solver solver;
  Pair p(sys("(1)@(a != 10).0"), sys("(1)@(!(a == 10)).0"));
  EXPECT_TRUE(p.strong(solver).equivalent);
}

TEST(Bisim, DifferentValuesDiffer) {
  Solver solver;
  Pair p(sys("(1)@tt.0"), sys("(2)@tt.0"));
  auto v = p.weak(solver);
  EXPECT_FALSE(v.equivalent);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->trace().size(), 1u);
}

TEST(Bisim, ExposedEnvironmentIsObservable) {
  Solver solver;
  Pair hidden(sys("(1)@tt.0", "{a = 1}", "[]"), sys("(1)@tt.0", "{a = 2}", "[]"));
  EXPECT_TRUE(hidden.weak(solver).equivalent);
  Pair exposed(sys("(1)@tt.0", "{a = 1}", "[a]"), sys("(1)@tt.0", "{a = 2}", "[a]"));
  EXPECT_FALSE(exposed.weak(solver).equivalent);
}

TEST(Bisim, WitnessReplays) {
  Solver solver;
  Pair p(sys("(1)@tt.((2)@tt.0 + (3)@tt.0)"), sys("(1)@tt.(2)@tt.0 + (1)@tt.(3)@tt.0"));
  for (bool weak : {false, true}) {
    auto lu = p.options(solver).universe;
    auto l = explore({p.left.root, &p.lp}, lu, solver);
    auto r = explore({p.right.root, &p.rp}, lu, solver);
    auto v = compare_lts(l, r, solver, weak);
    EXPECT_FALSE(v.equivalent);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_TRUE(replay_witness(*v.witness, l, r, solver, weak));
    EXPECT_EQ(v.witness->trace().size(), 2u);
  }
}

TEST(Bisim, TruncationMakesVerdictInconclusive) {
  Solver solver;
  std::string counter = R"(proc Count = (this.n)@tt.[n := this.n + 1]Count;
                           comp C { iface: []; env: {n = 0}; run: Count; } system = C;)";
  Pair p(counter, counter);
  auto o = p.options(solver);
  o.explore.max_states = 20;
  auto v = check_bisim({p.left.root, &p.lp}, {p.right.root, &p.rp}, solver, o);
  EXPECT_TRUE(v.inconclusive);
}

TEST(Bisim, ReportsUniverseAndSizes) {
  Solver solver;
  auto left = load_system("abc/or_guard.abc");
  auto right = load_system("abc/or_choice.abc");
  Pair p(left, right);
  auto v = p.weak(solver);
  EXPECT_TRUE(v.equivalent);
  EXPECT_EQ(v.universe_size, 5u);
  EXPECT_EQ(v.universe_fingerprint.size(), 16u);
  EXPECT_EQ(v.left_states, 4u);
}

TEST(Barbs, StrongAndWeak) {
  Solver solver;
  auto s = parse_abc(sys("()@ff.(1)@(a == 1).0 + (2)@(a != 10).0"));
  auto prog = s.program();
  auto lts = explore({s.root, &prog}, {}, solver);
  auto strong = barbs(lts, 0, solver);
  ASSERT_EQ(strong.size(), 1u);
  EXPECT_TRUE(equiv(strong[0], parse_predicate("!(a == 10)")));
  auto weak = weak_barbs(lts, 0, solver);
  EXPECT_EQ(weak.size(), 2u);
  EXPECT_TRUE(same_barbs(barbs(s.root, prog, solver), strong, solver));
  EXPECT_FALSE(same_barbs(strong, weak, solver));
}

TEST(Manifest, CorpusVerdicts) {
  auto manifest = nlohmann::json::parse(abc::testing::read_text(abc::testing::corpus_path("manifest.json")));
  Solver solver;
  for (const auto& e : manifest["bisim"]) {
    Pair p(load_system(e["left"].get<std::string>()), load_system(e["right"].get<std::string>()));
    auto v = e["weak"].get<bool>() ? p.weak(solver) : p.strong(solver);
    EXPECT_FALSE(v.inconclusive) << e["name"];
    EXPECT_EQ(v.equivalent, e["expect"].get<bool>()) << e["name"];
    if (!v.equivalent) {
      EXPECT_TRUE(v.witness.has_value()) << e["name"];
    }
  }
}
