#include <gtest/gtest.h>

#include <json.hpp>

#include "abc/bpi.hpp"
#include "abc/error.hpp"
#include "abc/parser.hpp"
#include "abc/print.hpp"
#include "corpus.hpp"
#include "generators.hpp"

using namespace abc;
using namespace abc::bpi;

namespace {

TermPtr T(const char* text) { return parse_bpi(text); }

std::vector<std::string> step_texts(const TermPtr& t) {
  auto prog = lift(t);
  std::vector<std::string> out;
  for (const auto& s : steps(prog.root, prog)) out.push_back(to_string(s.label) + " -> " + to_string(*s.target));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(BpiSyntax, PrintAndCanonicalKey) {
  auto t = T("a(x).x!<x>.nil + tau.b!<>.nil || (rec A<y>. y!<y>.A<y>)<c>");
  EXPECT_EQ(to_string(*t), "a(x).x!<x>.nil + tau.b!<>.nil || (rec A<y>. y!<y>.A<y>)<c>");
  EXPECT_EQ(canonical_key(*T("a(x).x!<>.nil")), canonical_key(*T("a(z).z!<>.nil")));
  EXPECT_NE(canonical_key(*T("a(x).x!<>.nil")), canonical_key(*T("a(x).b!<>.nil")));
  EXPECT_EQ(free_names(*t), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(BpiSyntax, RenameTouchesFreeNamesOnly) {
  auto t = T("a(x).x!<a>.nil || b!<a>.nil");
  auto r = rename(t, {{"a", "b"}, {"b", "a"}});
  EXPECT_EQ(to_string(*r), "b(x).x!<b>.nil || a!<b>.nil");
}

TEST(BpiSyntax, LiftChecksClosedness) {
  EXPECT_THROW(lift(input(free_name("a"), {}, output(bound_name("x"), {}, nil()))), WellFormednessError);
  auto prog = lift(T("(rec A<x>. x!<x>.(rec B<y>. y(z).A<z>)<x>)<a>"));
  EXPECT_EQ(prog.defs.size(), 2u);
  EXPECT_EQ(prog.root->kind, Term::Kind::Call);
}

TEST(BpiSemantics, TauAndOutput) {
  EXPECT_EQ(step_texts(T("tau.a!<b>.nil")), std::vector<std::string>{"tau -> a!<b>.nil"});
  EXPECT_EQ(step_texts(T("a!<b>.nil")), std::vector<std::string>{"a!<b> -> nil"});
  EXPECT_TRUE(step_texts(T("a(x).nil")).empty());
  EXPECT_TRUE(step_texts(T("nil")).empty());
}

TEST(BpiSemantics, BroadcastReceiveAndDiscard) {
  EXPECT_EQ(step_texts(T("a!<b>.nil || a(x).x!<>.nil || c(y).nil || a(u, w).nil")),
            std::vector<std::string>{"a!<b> -> nil || b!<>.nil || c(y).nil || a(u, w).nil"});
  EXPECT_EQ(step_texts(T("a(x).x!<>.nil || a!<b>.nil")),
            std::vector<std::string>{"a!<b> -> b!<>.nil || nil"});
  // A τ does not synchronize with siblings.
  EXPECT_EQ(step_texts(T("tau.nil || a(x).nil")), std::vector<std::string>{"tau -> nil || a(x).nil"});
}

TEST(BpiSemantics, InputReactions) {
  auto prog = lift(T("a(x).x!<>.nil + a(y).nil"));
  std::vector<std::string> vals{"b"};
  auto r = respond(prog.root, "a", vals, prog);
  EXPECT_EQ(r.size(), 2u);
  EXPECT_TRUE(respond(prog.root, "c", vals, prog).empty());
  auto same = input_steps(prog.root, "c", vals, prog);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(to_string(*same[0]), to_string(*prog.root));
}

TEST(BpiSemantics, RecursionUnfolds) {
  EXPECT_EQ(step_texts(T("(rec A<x, y>. x!<y>.A<y, x>)<a, b>")), std::vector<std::string>{"a!<b> -> A<b, a>"});
}

TEST(Encoding, FreshVariableAvoidsProgramNames) {
  EXPECT_EQ(fresh_variable(lift(T("a(x).nil"))), "y");
  EXPECT_EQ(fresh_variable(lift(T("a(y).nil || b(y1).nil"))), "y2");
}

TEST(Encoding, ClauseByClause) {
  auto enc = [](const char* src) { return to_string(*encode_process(T(src), "y")); };
  EXPECT_EQ(enc("nil"), "0");
  EXPECT_EQ(enc("tau.nil"), "()@ff.0");
  EXPECT_EQ(enc("a!<z>.nil"), "(\"a\", \"z\")@tt.0");
  EXPECT_EQ(enc("a(x).x!<x>.nil"), "(y == \"a\")(y, x).(x, x)@tt.0");
  EXPECT_EQ(enc("a!<>.nil + b!<>.nil"), "(\"a\")@tt.0 + (\"b\")@tt.0");
  auto e = encode(lift(T("a!<z>.nil || a(x).nil")));
  EXPECT_EQ(e.fresh, "y");
  EXPECT_EQ(to_string(*e.system),
            "comp { iface: []; env: {}; run: (\"a\", \"z\")@tt.0; } || "
            "comp { iface: []; env: {}; run: (y == \"a\")(y, x).0; }");
  auto r = encode(lift(T("(rec A<x>. x!<x>.A<x>)<a>")));
  ASSERT_EQ(r.defs.count("A"), 1u);
  EXPECT_EQ(to_string(*r.defs.at("A").body), "(x, x)@tt.A(x)");
  EXPECT_EQ(to_string(*r.system), "comp { iface: []; env: {}; run: A(\"a\"); }");
}

TEST(Encoding, SilentStepIsTheOnlyTransition) {
  auto prog = lift(T("tau.nil"));
  auto e = encode(prog);
  abc::Program ap;
  ap.defs = e.defs;
  auto steps = system_out_steps(e.system, ap);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_FALSE(is_sat(steps[0].label.pred));
}

TEST(Encoding, Homomorphism) {
  testgen::Gen g(41);
  for (int i = 0; i < 50; ++i) {
    auto a = testgen::random_bpi(g, 2, "L"), b = testgen::random_bpi(g, 2, "R");
    auto whole = encode_state(lift(par(a, b)).root, "y");
    auto parts = make_comp_par(encode_state(lift(a).root, "y"), encode_state(lift(b).root, "y"));
    EXPECT_TRUE(abc::equal(whole, parts)) << to_string(*par(a, b));
  }
}

TEST(Encoding, NameInvariance) {
  testgen::Gen g(42);
  std::map<std::string, std::string> sigma{{"a", "b"}, {"b", "c"}, {"c", "a"}};
  std::map<std::string, std::string> prefixed{{"a", "pa"}, {"b", "pb"}, {"c", "pc"}};
  for (int i = 0; i < 50; ++i) {
    auto t = testgen::random_bpi(g, 3);
    for (const auto& s : {sigma, prefixed}) {
      auto lhs = to_string(*encode_state(lift(rename(t, s)).root, "y"));
      auto rhs = to_string(*encode_state(lift(t).root, "y"));
      // Apply σ to the rendered encoding: names appear only as quoted constants.
      std::string mapped;
      for (std::size_t k = 0; k < rhs.size();) {
        bool hit = false;
        if (rhs[k] == '"') {
          auto end = rhs.find('"', k + 1);
          auto name = rhs.substr(k + 1, end - k - 1);
          auto it = s.find(name);
          mapped += "\"" + (it == s.end() ? name : it->second) + "\"";
          k = end + 1;
          hit = true;
        }
        if (!hit) mapped += rhs[k++];
      }
      EXPECT_EQ(lhs, mapped) << to_string(*t);
    }
  }
}

TEST(Correspondence, SendReceivePair) {
  auto prog = lift(T("a!<z>.nil || a(x).nil"));
  auto report = correspondence_check(prog);
  EXPECT_TRUE(report.ok);
  auto e = encode(prog);
  abc::Program ap;
  ap.defs = e.defs;
  auto steps = system_out_steps(e.system, ap);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(to_string(steps[0].label), "out {} [tt] (\"a\", \"z\")");
  EXPECT_EQ(canonical_key(*steps[0].target), canonical_key(*encode_state(T("nil || nil"), "y")));
}

TEST(Correspondence, NilHasNoTransitions) {
  auto report = correspondence_check(lift(T("nil")));
  EXPECT_TRUE(report.ok);
  EXPECT_EQ(report.states, 1u);
  EXPECT_EQ(report.transitions, 0u);
}

TEST(Correspondence, WholeCorpus) {
  auto manifest = nlohmann::json::parse(abc::testing::read_text(abc::testing::corpus_path("manifest.json")));
  ASSERT_GE(manifest["encoding"].size(), 30u);
  for (const auto& f : manifest["encoding"]) {
    auto report = correspondence_check(lift(abc::testing::load_bpi(f.get<std::string>())));
    EXPECT_TRUE(report.ok) << f << ": " << (report.violations.empty() ? "" : report.violations.front());
    EXPECT_GT(report.states, 0u) << f;
  }
}

TEST(Correspondence, DetectsBrokenEncoding) {
  // An encoding of a different term must not correspond.
  auto prog = lift(T("a!<b>.nil"));
  auto other = encode_state(T("a!<c>.nil"), "y");
  abc::Program ap;
  auto bpi_steps = steps(prog.root, prog);
  auto abc_steps = system_out_steps(other, ap);
  ASSERT_EQ(bpi_steps.size(), 1u);
  ASSERT_EQ(abc_steps.size(), 1u);
  EXPECT_NE(to_string(encoded_label(bpi_steps[0].label)), to_string(abc_steps[0].label));
}

TEST(BpiBisim, CuratedPairs) {
  auto manifest = nlohmann::json::parse(abc::testing::read_text(abc::testing::corpus_path("manifest.json")));
  int positive = 0, negative = 0;
  for (const auto& e : manifest["bpi_pairs"]) {
    auto l = lift(T(e["left"].get<std::string>().c_str()));
    auto r = lift(T(e["right"].get<std::string>().c_str()));
    bool expect = e["expect"].get<bool>();
    (expect ? positive : negative)++;
    EXPECT_EQ(bisimilar(l, r, true), expect) << e["name"];
  }
  EXPECT_EQ(positive, 5);
  EXPECT_EQ(negative, 5);
}
