#pragma once

// Equational laws of weak bisimilarity: concrete instances and random
// law-derived pairs.

#include <string>
#include <vector>

#include "abc/equivalence.hpp"
#include "abc/parser.hpp"
#include "generators.hpp"

namespace abc::laws {

struct Instance {
  std::string law;   // e.g. "parallel/commutative"
  std::string group; // parallel, choice, interleaving, awareness, silent
  CompPtr left, right;
};

inline CompPtr leaf(const std::string& env, const std::string& iface, const std::string& proc) {
  return parse_component("comp { iface: " + iface + "; env: " + env + "; run: " + proc + "; }");
}

/// Base input alphabet used by the law checks, on top of the shared-alphabet
/// closure of the systems themselves.
inline LabelUniverse base_universe(const Solver& solver) {
  LabelUniverse u;
  auto add = [&](AttributeEnv env, const char* pred, Values vals) {
    u.add(make_label(Label::Kind::Input, std::move(env), parse_predicate(pred), std::move(vals)), solver);
  };
  add({{"a", Value::integer(0)}}, "tt", {Value::integer(1)});
  add({}, "a == 1", {Value::integer(0)});
  add({{"b", Value::integer(1)}}, "b != 0", {Value::integer(2)});
  add({}, "tt", {Value::integer(1), Value::integer(2)});
  return u;
}

inline Verdict weak_equiv(const CompPtr& l, const CompPtr& r, const Solver& solver,
                          const Program& prog = {}) {
  BisimOptions o;
  o.universe = base_universe(solver);
  return weak_bisim({l, &prog}, {r, &prog}, solver, o);
}

/// At least three instances of every bullet of the five law groups.
inline std::vector<Instance> concrete_instances() {
  std::vector<Instance> out;
  auto add = [&](const char* group, const char* law, CompPtr l, CompPtr r) {
    out.push_back({law, group, std::move(l), std::move(r)});
  };

  // Components used by the parallel-composition laws.
  std::vector<CompPtr> cs{
      leaf("{a = 1}", "[a]", "(1)@tt.(tt)(x).(x)@(a == x).0"),
      leaf("{a = 0, b = 1}", "[a, b]", "(x == 1)(x).[a := x](this.a)@tt.0"),
      leaf("{b = 2}", "[b]", "()@ff.(2)@(b != 0).0 + (tt)(x).0"),
      leaf("{a = 2}", "[a]", "<this.a == 2> (0)@(a == 1).0 | (tt)(y).0"),
  };
  for (int i = 0; i < 3; ++i) {
    auto c1 = cs[static_cast<std::size_t>(i)], c2 = cs[static_cast<std::size_t>(i + 1)];
    auto c3 = cs[static_cast<std::size_t>((i + 2) % 4)];
    add("parallel", "parallel/commutative", make_comp_par(c1, c2), make_comp_par(c2, c1));
    add("parallel", "parallel/associative", make_comp_par(make_comp_par(c1, c2), c3),
        make_comp_par(c1, make_comp_par(c2, c3)));
    add("parallel", "parallel/idle-unit",
        make_comp_par(leaf(i == 0 ? "{}" : "{a = 5}", i == 2 ? "[a]" : "[]", "0"), c1), c1);
  }

  struct ProcTriple {
    const char* env;
    const char* iface;
    const char* p1;
    const char* p2;
    const char* p3;
    const char* pred;
  };
  std::vector<ProcTriple> ps{
      {"{a = 1}", "[a]", "(1)@tt.0", "(2)@(a == 1).0", "(tt)(x).(x)@tt.0", "this.a == 1"},
      {"{a = 0, b = 1}", "[b]", "(x == 1)(x).[a := x](this.a)@tt.0", "()@ff.(3)@tt.0",
       "(this.b)@(b != 0).0", "this.b <= 1"},
      {"{b = 2}", "[a, b]", "(0)@(a == 0).(1)@tt.0", "(tt)(x, y).(y)@tt.0", "0", "this.b == 3"},
  };
  for (const auto& t : ps) {
    auto L = [&](const std::string& proc) { return leaf(t.env, t.iface, proc); };
    std::string p1 = t.p1, p2 = t.p2, p3 = t.p3, pred = t.pred;
    auto g = [](const std::string& p) { return "(" + p + ")"; };
    add("choice", "choice/commutative", L(p1 + " + " + p2), L(p2 + " + " + p1));
    add("choice", "choice/associative", L(g(p1 + " + " + p2) + " + " + p3), L(p1 + " + " + g(p2 + " + " + p3)));
    add("choice", "choice/nil-unit", L(p1 + " + 0"), L(p1));
    add("choice", "choice/idempotent", L(p2 + " + " + p2), L(p2));
    add("choice", "choice/awareness-distributes", L("<" + g(pred) + "> " + g(p1 + " + " + p2)),
        L("<" + g(pred) + "> " + p1 + " + <" + g(pred) + "> " + p2));

    add("interleaving", "interleaving/commutative", L(g(p1) + " | " + g(p2)), L(g(p2) + " | " + g(p1)));
    add("interleaving", "interleaving/associative", L(g(g(p1) + " | " + g(p2)) + " | " + g(p3)),
        L(g(p1) + " | " + g(g(p2) + " | " + g(p3))));
    add("interleaving", "interleaving/nil-unit", L(g(p1) + " | 0"), L(p1));

    add("awareness", "awareness/false-guard", L("<ff> " + g(p1)), L("0"));
    add("awareness", "awareness/true-guard", L("<tt> " + g(p2)), L(p2));
    add("awareness", "awareness/nested-guards", L("<" + g(pred) + "> <this.a != 7> " + g(p1)),
        L("<" + g(pred) + " && this.a != 7> " + g(p1)));
  }

  // Processes without outputs.
  add("silent", "silent/no-outputs", leaf("{a = 1}", "[a]", "(tt)(x).[a := x](x == 2)(y).0"), leaf("{a = 1}", "[a]", "0"));
  add("silent", "silent/no-outputs", leaf("{}", "[]", "(x == 1)(x).0 + (tt)(x, y).0"), leaf("{}", "[]", "0"));
  add("silent", "silent/no-outputs",
      leaf("{b = 0}", "[b]", "<this.b == 0> (tt)(x).[b := 1]0 | (x == 0)(x).0"), leaf("{b = 0}", "[b]", "0"));
  return out;
}

// ---------------------------------------------------------------------------
// Random law-derived pairs

inline CompPtr with_proc(const CompPtr& leaf, ProcPtr p) { return make_leaf(leaf->env, leaf->iface, std::move(p)); }

inline ProcPtr output_free_process(testgen::Gen& g, int depth, std::vector<std::string> scope = {}) {
  if (depth <= 0) return make_nil();
  switch (g.uniform(0, 4)) {
    case 0: return make_nil();
    case 1:
    case 2: {
      auto guard = testgen::random_guard(g, {"x"});
      std::vector<Update> us;
      if (g.coin(0.3)) us.push_back({"a", make_var("x")});
      return make_input(guard, {"x"}, std::move(us), output_free_process(g, depth - 1, scope));
    }
    case 3: return make_choice(output_free_process(g, depth - 1, scope), output_free_process(g, depth - 1, scope));
    default: return make_par(output_free_process(g, depth - 1, scope), output_free_process(g, depth - 1, scope));
  }
}

/// A pair of components related by one of the laws, chosen at random.
inline std::pair<CompPtr, CompPtr> random_pair(testgen::Gen& g, const testgen::ProcShape& shape,
                                               std::string* law = nullptr) {
  auto note = [&](const char* name) {
    if (law) *law = name;
  };
  auto base = testgen::random_leaf(g, shape);
  auto p = [&] { return testgen::random_process(g, shape, 2); };
  auto pred = [&] {
    return g.coin() ? make_atom(Rel::Eq, make_self("a"), make_const(Value::integer(g.uniform(0, 2))))
                    : make_atom(Rel::Le, make_self("b"), make_const(Value::integer(1)));
  };
  switch (g.uniform(0, 13)) {
    case 0: {
      note("parallel/commutative");
      auto c2 = testgen::random_leaf(g, shape);
      return {make_comp_par(base, c2), make_comp_par(c2, base)};
    }
    case 1: {
      note("parallel/associative");
      auto c2 = testgen::random_leaf(g, shape), c3 = testgen::random_leaf(g, shape);
      return {make_comp_par(make_comp_par(base, c2), c3), make_comp_par(base, make_comp_par(c2, c3))};
    }
    case 2: {
      note("parallel/idle-unit");
      return {make_comp_par(with_proc(testgen::random_leaf(g, shape), make_nil()), base), base};
    }
    case 3: {
      note("choice/commutative");
      auto a = p(), b = p();
      return {with_proc(base, make_choice(a, b)), with_proc(base, make_choice(b, a))};
    }
    case 4: {
      note("choice/associative");
      auto a = p(), b = p(), c = p();
      return {with_proc(base, make_choice(make_choice(a, b), c)), with_proc(base, make_choice(a, make_choice(b, c)))};
    }
    case 5: {
      note("choice/nil-unit");
      return {with_proc(base, make_choice(base->proc, make_nil())), base};
    }
    case 6: {
      note("choice/idempotent");
      return {with_proc(base, make_choice(base->proc, base->proc)), base};
    }
    case 7: {
      note("choice/awareness-distributes");
      auto a = p(), b = p();
      auto q = pred();
      return {with_proc(base, make_aware(q, make_choice(a, b))),
              with_proc(base, make_choice(make_aware(q, a), make_aware(q, b)))};
    }
    case 8: {
      note("interleaving/commutative");
      auto a = p(), b = p();
      return {with_proc(base, make_par(a, b)), with_proc(base, make_par(b, a))};
    }
    case 9: {
      note("interleaving/associative");
      auto a = p(), b = p(), c = p();
      return {with_proc(base, make_par(make_par(a, b), c)), with_proc(base, make_par(a, make_par(b, c)))};
    }
    case 10: {
      note("interleaving/nil-unit");
      return {with_proc(base, make_par(base->proc, make_nil())), base};
    }
    case 11: {
      note("awareness/guards");
      if (g.coin()) return {with_proc(base, make_aware(make_ff(), base->proc)), with_proc(base, make_nil())};
      return {with_proc(base, make_aware(make_tt(), base->proc)), base};
    }
    case 12: {
      note("awareness/nested-guards");
      auto q1 = pred(), q2 = pred();
      return {with_proc(base, make_aware(q1, make_aware(q2, base->proc))),
              with_proc(base, make_aware(make_and(q1, q2), base->proc))};
    }
    default: {
      note("silent/no-outputs");
      return {with_proc(base, output_free_process(g, 3)), with_proc(base, make_nil())};
    }
  }
}

}  // namespace abc::laws
