#include "abc/bpi.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "abc/equivalence.hpp"
#include "abc/error.hpp"
#include "abc/print.hpp"

namespace abc::bpi {
namespace {

TermPtr share(Term t) { return std::make_shared<const Term>(std::move(t)); }

}  // namespace

Name free_name(std::string n) { return Name{std::move(n), false}; }
Name bound_name(std::string n) { return Name{std::move(n), true}; }

TermPtr nil() {
  static const TermPtr n = share(Term{});
  return n;
}

TermPtr tau(TermPtr cont) {
  Term t;
  t.kind = Term::Kind::Tau;
  t.left = std::move(cont);
  return share(std::move(t));
}

TermPtr input(Name channel, std::vector<std::string> vars, TermPtr cont) {
  Term t;
  t.kind = Term::Kind::Input;
  t.channel = std::move(channel);
  t.vars = std::move(vars);
  t.left = std::move(cont);
  return share(std::move(t));
}

TermPtr output(Name channel, std::vector<Name> args, TermPtr cont) {
  Term t;
  t.kind = Term::Kind::Output;
  t.channel = std::move(channel);
  t.args = std::move(args);
  t.left = std::move(cont);
  return share(std::move(t));
}

TermPtr choice(TermPtr a, TermPtr b) {
  Term t;
  t.kind = Term::Kind::Choice;
  t.left = std::move(a);
  t.right = std::move(b);
  return share(std::move(t));
}

TermPtr rec(std::string id, std::vector<std::string> params, TermPtr body, std::vector<Name> args) {
  Term t;
  t.kind = Term::Kind::Rec;
  t.name = std::move(id);
  t.vars = std::move(params);
  t.left = std::move(body);
  t.args = std::move(args);
  return share(std::move(t));
}

TermPtr call(std::string id, std::vector<Name> args) {
  Term t;
  t.kind = Term::Kind::Call;
  t.name = std::move(id);
  t.args = std::move(args);
  return share(std::move(t));
}

TermPtr par(TermPtr a, TermPtr b) {
  Term t;
  t.kind = Term::Kind::Par;
  t.left = std::move(a);
  t.right = std::move(b);
  return share(std::move(t));
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->kind == b->kind && a->channel == b->channel && a->args == b->args &&
         a->vars == b->vars && a->name == b->name && equal(a->left, b->left) &&
         equal(a->right, b->right);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum class Level { Par, Sum, Prefix };

class Printer {
 public:
  explicit Printer(bool canonical) : canonical_(canonical) {}
  std::string out;

  void term(const Term& t, Level ctx = Level::Par) {
    switch (t.kind) {
      case Term::Kind::Nil: out += "nil"; return;
      case Term::Kind::Tau:
        out += "tau.";
        term(*t.left, Level::Prefix);
        return;
      case Term::Kind::Input: {
        std::size_t mark = binders_.size();
        out += name(t.channel) + "(";
        for (std::size_t i = 0; i < t.vars.size(); ++i) {
          if (i) out += ", ";
          binders_.push_back(t.vars[i]);
          out += binder(t.vars[i], mark + i);
        }
        out += ").";
        term(*t.left, Level::Prefix);
        binders_.resize(mark);
        return;
      }
      case Term::Kind::Output:
        out += name(t.channel) + "!<" + names(t.args) + ">.";
        term(*t.left, Level::Prefix);
        return;
      case Term::Kind::Choice: {
        bool paren = ctx == Level::Prefix;
        if (paren) out += '(';
        term(*t.left, Level::Sum);
        out += " + ";
        term(*t.right, Level::Prefix);
        if (paren) out += ')';
        return;
      }
      case Term::Kind::Rec: {
        std::size_t mark = binders_.size();
        out += "(rec " + t.name + "<";
        for (std::size_t i = 0; i < t.vars.size(); ++i) {
          if (i) out += ", ";
          binders_.push_back(t.vars[i]);
          out += binder(t.vars[i], mark + i);
        }
        out += ">. ";
        term(*t.left, Level::Par);
        binders_.resize(mark);
        out += ")<" + names(t.args) + ">";
        return;
      }
      case Term::Kind::Call: out += t.name + "<" + names(t.args) + ">"; return;
      case Term::Kind::Par: {
        bool paren = ctx != Level::Par;
        if (paren) out += '(';
        term(*t.left, Level::Par);
        out += " || ";
        term(*t.right, Level::Sum);
        if (paren) out += ')';
        return;
      }
    }
  }

 private:
  std::string name(const Name& n) const {
    if (!canonical_ || !n.bound) return n.text;
    for (std::size_t i = binders_.size(); i-- > 0;)
      if (binders_[i] == n.text) return "%" + std::to_string(i);
    return n.text;
  }

  std::string binder(const std::string& v, std::size_t pos) const {
    return canonical_ ? "%" + std::to_string(pos) : v;
  }

  std::string names(const std::vector<Name>& ns) const {
    std::string s;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      if (i) s += ", ";
      s += name(ns[i]);
    }
    return s;
  }

  bool canonical_;
  std::vector<std::string> binders_;
};

}  // namespace

std::string to_string(const Term& t) {
  Printer p(false);
  p.term(t);
  return p.out;
}

std::string canonical_key(const Term& t) {
  Printer p(true);
  p.term(t);
  return p.out;
}

std::vector<std::string> free_names(const Term& t) {
  std::vector<std::string> out;
  auto note = [&](const Name& n) {
    if (!n.bound && std::find(out.begin(), out.end(), n.text) == out.end()) out.push_back(n.text);
  };
  std::function<void(const Term&)> walk = [&](const Term& x) {
    if (x.kind == Term::Kind::Input || x.kind == Term::Kind::Output) note(x.channel);
    for (const auto& a : x.args) note(a);
    if (x.left) walk(*x.left);
    if (x.right) walk(*x.right);
  };
  walk(t);
  return out;
}

TermPtr rename(const TermPtr& t, const std::map<std::string, std::string>& sigma) {
  auto ren = [&](const Name& n) {
    if (n.bound) return n;
    auto it = sigma.find(n.text);
    return it == sigma.end() ? n : free_name(it->second);
  };
  Term c = *t;
  c.channel = ren(c.channel);
  for (auto& a : c.args) a = ren(a);
  if (c.left) c.left = rename(c.left, sigma);
  if (c.right) c.right = rename(c.right, sigma);
  return share(std::move(c));
}

// ---------------------------------------------------------------------------
// Substitution and lifting

namespace {

using NameSubst = std::map<std::string, std::string>;

TermPtr substitute(const TermPtr& t, const NameSubst& sigma) {
  if (sigma.empty()) return t;
  auto sub = [&](const Name& n) {
    if (!n.bound) return n;
    auto it = sigma.find(n.text);
    return it == sigma.end() ? n : free_name(it->second);
  };
  Term c = *t;
  c.channel = sub(c.channel);
  for (auto& a : c.args) a = sub(a);
  if (c.kind == Term::Kind::Input || c.kind == Term::Kind::Rec) {
    NameSubst inner = sigma;
    for (const auto& v : c.vars) inner.erase(v);
    if (c.left) c.left = substitute(c.left, inner);
  } else if (c.left) {
    c.left = substitute(c.left, sigma);
  }
  if (c.right) c.right = substitute(c.right, sigma);
  return share(std::move(c));
}

void free_vars(const Term& t, std::set<std::string>& out) {
  std::set<std::string> local;
  if ((t.kind == Term::Kind::Input || t.kind == Term::Kind::Output) && t.channel.bound)
    local.insert(t.channel.text);
  for (const auto& a : t.args)
    if (a.bound) local.insert(a.text);
  std::set<std::string> inner;
  if (t.left) free_vars(*t.left, inner);
  if (t.kind == Term::Kind::Input || t.kind == Term::Kind::Rec)
    for (const auto& v : t.vars) inner.erase(v);
  local.insert(inner.begin(), inner.end());
  if (t.right) free_vars(*t.right, local);
  out.insert(local.begin(), local.end());
}

TermPtr lift_rec(const TermPtr& t, Program& prog) {
  Term c = *t;
  if (c.left) c.left = lift_rec(c.left, prog);
  if (c.right) c.right = lift_rec(c.right, prog);
  if (c.kind != Term::Kind::Rec) return share(std::move(c));
  std::set<std::string> fv;
  free_vars(*c.left, fv);
  for (const auto& v : c.vars) fv.erase(v);
  if (!fv.empty())
    throw WellFormednessError("recursion " + c.name + " has free variable " + *fv.begin());
  Definition d{c.vars, c.left};
  auto it = prog.defs.find(c.name);
  if (it == prog.defs.end()) {
    prog.defs.emplace(c.name, d);
  } else if (it->second.params != d.params || !equal(it->second.body, d.body)) {
    throw WellFormednessError("recursion identifier " + c.name + " defined twice");
  }
  return call(c.name, c.args);
}

void check_calls(const Term& t, const Program& prog) {
  if (t.kind == Term::Kind::Call) {
    auto it = prog.defs.find(t.name);
    if (it == prog.defs.end()) throw WellFormednessError("unbound recursion variable " + t.name);
    if (it->second.params.size() != t.args.size())
      throw WellFormednessError(t.name + " expects " + std::to_string(it->second.params.size()) +
                                " arguments");
  }
  if (t.left) check_calls(*t.left, prog);
  if (t.right) check_calls(*t.right, prog);
}

// Calls reachable without crossing a prefix.
void unguarded(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Call) out.insert(t.name);
  if (t.kind == Term::Kind::Choice || t.kind == Term::Kind::Par) {
    unguarded(*t.left, out);
    unguarded(*t.right, out);
  }
}

}  // namespace

Program lift(const TermPtr& t) {
  std::set<std::string> fv;
  free_vars(*t, fv);
  if (!fv.empty()) throw WellFormednessError("term has free variable " + *fv.begin());
  Program prog;
  prog.root = lift_rec(t, prog);
  check_calls(*prog.root, prog);
  std::map<std::string, std::set<std::string>> edges;
  for (const auto& [name, d] : prog.defs) {
    check_calls(*d.body, prog);
    unguarded(*d.body, edges[name]);
  }
  std::map<std::string, int> colour;
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    colour[n] = 1;
    for (const auto& m : edges[n]) {
      if (colour[m] == 1) throw WellFormednessError("unguarded recursion through " + m);
      if (colour[m] == 0) visit(m);
    }
    colour[n] = 2;
  };
  for (const auto& [name, _] : prog.defs)
    if (colour[name] == 0) visit(name);
  return prog;
}

// ---------------------------------------------------------------------------
// Transitions

std::string to_string(const Label& l) {
  auto join = [](const std::vector<std::string>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vs[i];
    return s;
  };
  switch (l.kind) {
    case Label::Kind::Tau: return "tau";
    case Label::Kind::Output: return l.channel + "!<" + join(l.values) + ">";
    case Label::Kind::Input: return l.channel + "?<" + join(l.values) + ">";
  }
  return "?";
}

namespace {

TermPtr unfold(const Term& c, const Program& prog) {
  auto it = prog.defs.find(c.name);
  if (it == prog.defs.end()) throw WellFormednessError("unbound recursion variable " + c.name);
  const auto& d = it->second;
  if (d.params.size() != c.args.size())
    throw WellFormednessError(c.name + " expects " + std::to_string(d.params.size()) + " arguments");
  NameSubst sigma;
  for (std::size_t i = 0; i < d.params.size(); ++i) {
    if (c.args[i].bound) throw WellFormednessError("unbound name " + c.args[i].text);
    sigma[d.params[i]] = c.args[i].text;
  }
  return substitute(d.body, sigma);
}

std::string closed_name(const Name& n) {
  if (n.bound) throw WellFormednessError("unbound name " + n.text);
  return n.text;
}

}  // namespace

std::vector<TermPtr> respond(const TermPtr& t, const std::string& channel,
                             const std::vector<std::string>& values, const Program& prog) {
  switch (t->kind) {
    case Term::Kind::Input: {
      if (closed_name(t->channel) != channel || t->vars.size() != values.size()) return {};
      NameSubst sigma;
      for (std::size_t i = 0; i < values.size(); ++i) sigma[t->vars[i]] = values[i];
      return {substitute(t->left, sigma)};
    }
    case Term::Kind::Choice: {
      auto l = respond(t->left, channel, values, prog);
      auto r = respond(t->right, channel, values, prog);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    case Term::Kind::Call: return respond(unfold(*t, prog), channel, values, prog);
    case Term::Kind::Rec: throw WellFormednessError("recursion must be lifted before stepping");
    case Term::Kind::Par: {
      auto l = respond(t->left, channel, values, prog);
      auto r = respond(t->right, channel, values, prog);
      if (l.empty() && r.empty()) return {};
      if (l.empty()) l.push_back(t->left);
      if (r.empty()) r.push_back(t->right);
      std::vector<TermPtr> out;
      for (const auto& a : l)
        for (const auto& b : r) out.push_back(par(a, b));
      return out;
    }
    default: return {};
  }
}

std::vector<TermPtr> input_steps(const TermPtr& t, const std::string& channel,
                                 const std::vector<std::string>& values, const Program& prog) {
  auto r = respond(t, channel, values, prog);
  if (r.empty()) r.push_back(t);
  return r;
}

std::vector<Step> steps(const TermPtr& t, const Program& prog) {
  switch (t->kind) {
    case Term::Kind::Nil:
    case Term::Kind::Input: return {};
    case Term::Kind::Tau: return {{Label{Label::Kind::Tau, {}, {}}, t->left}};
    case Term::Kind::Output: {
      Label l{Label::Kind::Output, closed_name(t->channel), {}};
      for (const auto& a : t->args) l.values.push_back(closed_name(a));
      return {{std::move(l), t->left}};
    }
    case Term::Kind::Choice: {
      auto l = steps(t->left, prog);
      auto r = steps(t->right, prog);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    case Term::Kind::Call: return steps(unfold(*t, prog), prog);
    case Term::Kind::Rec: throw WellFormednessError("recursion must be lifted before stepping");
    case Term::Kind::Par: {
      std::vector<Step> out;
      for (auto& s : steps(t->left, prog)) {
        if (s.label.kind == Label::Kind::Tau) {
          out.push_back({s.label, par(s.target, t->right)});
          continue;
        }
        for (auto& r : input_steps(t->right, s.label.channel, s.label.values, prog))
          out.push_back({s.label, par(s.target, r)});
      }
      for (auto& s : steps(t->right, prog)) {
        if (s.label.kind == Label::Kind::Tau) {
          out.push_back({s.label, par(t->left, s.target)});
          continue;
        }
        for (auto& l : input_steps(t->left, s.label.channel, s.label.values, prog))
          out.push_back({s.label, par(l, s.target)});
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Encoding

namespace {

void collect_all_names(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Input || t.kind == Term::Kind::Output) out.insert(t.channel.text);
  for (const auto& a : t.args) out.insert(a.text);
  for (const auto& v : t.vars) out.insert(v);
  if (t.left) collect_all_names(*t.left, out);
  if (t.right) collect_all_names(*t.right, out);
}

ExprPtr name_expr(const Name& n) {
  return n.bound ? make_var(n.text) : make_const(Value::name(n.text));
}

}  // namespace

std::string fresh_variable(const Program& prog) {
  std::set<std::string> used;
  collect_all_names(*prog.root, used);
  for (const auto& [_, d] : prog.defs) {
    collect_all_names(*d.body, used);
    used.insert(d.params.begin(), d.params.end());
  }
  if (!used.count("y")) return "y";
  for (std::size_t i = 1;; ++i) {
    std::string c = "y" + std::to_string(i);
    if (!used.count(c)) return c;
  }
}

ProcPtr encode_process(const TermPtr& g, const std::string& fresh) {
  switch (g->kind) {
    case Term::Kind::Nil: return make_nil();
    case Term::Kind::Tau: return make_output({}, make_ff(), {}, encode_process(g->left, fresh));
    case Term::Kind::Output: {
      std::vector<ExprPtr> es{name_expr(g->channel)};
      for (const auto& a : g->args) es.push_back(name_expr(a));
      return make_output(std::move(es), make_tt(), {}, encode_process(g->left, fresh));
    }
    case Term::Kind::Input: {
      std::vector<std::string> vars{fresh};
      vars.insert(vars.end(), g->vars.begin(), g->vars.end());
      auto guard = make_atom(Rel::Eq, make_var(fresh), name_expr(g->channel));
      return make_input(guard, std::move(vars), {}, encode_process(g->left, fresh));
    }
    case Term::Kind::Choice:
      return make_choice(encode_process(g->left, fresh), encode_process(g->right, fresh));
    case Term::Kind::Call: {
      std::vector<ExprPtr> args;
      for (const auto& a : g->args) args.push_back(name_expr(a));
      return make_call(g->name, std::move(args));
    }
    case Term::Kind::Rec:
      throw WellFormednessError("recursion must be lifted before encoding");
    case Term::Kind::Par:
      throw WellFormednessError("parallel composition inside a sequential term");
  }
  return make_nil();
}

CompPtr encode_state(const TermPtr& state, const std::string& fresh) {
  if (state->kind == Term::Kind::Par)
    return make_comp_par(encode_state(state->left, fresh), encode_state(state->right, fresh));
  return make_leaf({}, {}, encode_process(state, fresh));
}

Encoding encode(const Program& prog) {
  Encoding e;
  e.fresh = fresh_variable(prog);
  e.system = encode_state(prog.root, e.fresh);
  for (const auto& [name, d] : prog.defs)
    e.defs.emplace(name, abc::Definition{d.params, encode_process(d.body, e.fresh)});
  return e;
}

abc::Label encoded_label(const Label& l) {
  if (l.kind == Label::Kind::Tau) return make_label(abc::Label::Kind::Output, {}, make_ff(), {});
  Values vs{Value::name(l.channel)};
  for (const auto& v : l.values) vs.push_back(Value::name(v));
  auto kind = l.kind == Label::Kind::Output ? abc::Label::Kind::Output : abc::Label::Kind::Input;
  return make_label(kind, {}, make_tt(), std::move(vs));
}

// ---------------------------------------------------------------------------
// Exploration over the broadcast alphabet

namespace {

// BFS over bπ states; `visit` receives each state and returns its successors.
void walk_states(const TermPtr& root, std::size_t max_states,
                 const std::function<std::vector<TermPtr>(const TermPtr&)>& visit,
                 bool* truncated = nullptr) {
  std::unordered_map<std::string, bool> seen;
  std::deque<TermPtr> queue{root};
  seen.emplace(canonical_key(*root), true);
  while (!queue.empty()) {
    TermPtr s = queue.front();
    queue.pop_front();
    for (auto& t : visit(s)) {
      auto key = canonical_key(*t);
      if (seen.count(key)) continue;
      if (seen.size() >= max_states) {
        if (truncated) *truncated = true;
        continue;
      }
      seen.emplace(std::move(key), true);
      queue.push_back(std::move(t));
    }
  }
}

bool add_message(std::vector<Label>& alphabet, const Label& out) {
  Label in{Label::Kind::Input, out.channel, out.values};
  if (std::find(alphabet.begin(), alphabet.end(), in) != alphabet.end()) return false;
  alphabet.push_back(std::move(in));
  return true;
}

std::vector<TermPtr> successors(const TermPtr& s, const Program& prog,
                                const std::vector<Label>& alphabet) {
  std::vector<TermPtr> out;
  for (auto& st : steps(s, prog)) out.push_back(st.target);
  for (const auto& m : alphabet)
    for (auto& t : input_steps(s, m.channel, m.values, prog)) out.push_back(t);
  return out;
}

}  // namespace

std::vector<Label> harvest_alphabet(const Program& prog, const Bounds& bounds) {
  std::vector<Label> alphabet;
  for (int round = 0; round < 8; ++round) {
    bool grew = false;
    std::vector<Label> current = alphabet;
    walk_states(prog.root, bounds.max_states, [&](const TermPtr& s) {
      for (auto& st : steps(s, prog))
        if (st.label.kind == Label::Kind::Output) grew = add_message(alphabet, st.label) || grew;
      return successors(s, prog, current);
    });
    if (!grew) break;
  }
  std::sort(alphabet.begin(), alphabet.end(), [](const Label& a, const Label& b) {
    return to_string(a) < to_string(b);
  });
  return alphabet;
}

CorrespondenceReport correspondence_check(const Program& prog, const Bounds& bounds) {
  CorrespondenceReport rep;
  Encoding enc = encode(prog);
  abc::Program abc_prog;
  abc_prog.defs = enc.defs;
  auto alphabet = harvest_alphabet(prog, bounds);

  auto fail = [&](const TermPtr& s, const std::string& what) {
    rep.ok = false;
    if (rep.violations.size() < 20) rep.violations.push_back(to_string(*s) + ": " + what);
  };

  bool truncated = false;
  walk_states(
      prog.root, bounds.max_states,
      [&](const TermPtr& s) {
        ++rep.states;
        CompPtr image = encode_state(s, enc.fresh);
        auto bsteps = steps(s, prog);
        auto asteps = system_out_steps(image, abc_prog);
        rep.transitions += bsteps.size();

        std::multiset<std::pair<std::string, std::string>> bset, aset;
        std::set<std::string> bbarbs, abarbs;
        for (const auto& st : bsteps) {
          bset.emplace(to_string(encoded_label(st.label)),
                       canonical_key(*encode_state(st.target, enc.fresh)));
          if (st.label.kind == Label::Kind::Output) bbarbs.insert(st.label.channel);
        }
        for (const auto& st : asteps) {
          aset.emplace(to_string(st.label), canonical_key(*st.target));
          bool silent = st.label.pred->kind == Pred::Kind::False;
          if (!silent && !st.label.values.empty() && st.label.values[0].is_name())
            abarbs.insert(st.label.values[0].as_name());
        }
        if (bsteps.size() != asteps.size())
          fail(s, std::to_string(bsteps.size()) + " source transitions but " +
                      std::to_string(asteps.size()) + " encoded transitions");
        for (const auto& x : bset)
          if (!aset.count(x)) fail(s, "no encoded match for " + x.first + " -> " + x.second);
        for (const auto& x : aset)
          if (!bset.count(x)) fail(s, "encoded transition " + x.first + " -> " + x.second +
                                          " has no source counterpart");
        if (bbarbs != abarbs) fail(s, "barbs differ");

        for (const auto& m : alphabet) {
          ++rep.inputs;
          std::set<std::string> bt, at;
          for (const auto& t : input_steps(s, m.channel, m.values, prog))
            bt.insert(canonical_key(*encode_state(t, enc.fresh)));
          for (const auto& t : system_in_step(image, encoded_label(m), abc_prog))
            at.insert(canonical_key(*t));
          if (bt != at) fail(s, "input reactions to " + to_string(m) + " differ");
        }
        return successors(s, prog, alphabet);
      },
      &truncated);
  if (truncated) {
    rep.ok = false;
    rep.violations.push_back("state bound " + std::to_string(bounds.max_states) + " reached");
  }
  return rep;
}

Lts bpi_lts(const Program& prog, const std::vector<Label>& alphabet, const Bounds& bounds) {
  Lts lts;
  std::unordered_map<std::string, std::size_t> index;
  std::deque<TermPtr> queue{prog.root};
  index.emplace(canonical_key(*prog.root), 0);
  lts.states.push_back(nullptr);
  lts.keys.push_back(canonical_key(*prog.root));
  auto id_of = [&](const TermPtr& t) -> std::optional<std::size_t> {
    auto key = canonical_key(*t);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    if (lts.states.size() >= bounds.max_states) {
      lts.truncated = true;
      lts.truncation_reason = "state bound reached";
      ++lts.frontier;
      return std::nullopt;
    }
    std::size_t id = lts.states.size();
    index.emplace(key, id);
    lts.states.push_back(nullptr);
    lts.keys.push_back(std::move(key));
    queue.push_back(t);
    return id;
  };
  for (std::size_t cur = 0; !queue.empty(); ++cur) {
    TermPtr s = queue.front();
    queue.pop_front();
    for (const auto& st : steps(s, prog))
      if (auto d = id_of(st.target))
        lts.transitions.push_back({cur, encoded_label(st.label), *d, st.label.kind == Label::Kind::Tau});
    for (const auto& m : alphabet)
      for (const auto& t : input_steps(s, m.channel, m.values, prog))
        if (auto d = id_of(t)) lts.transitions.push_back({cur, encoded_label(m), *d, false});
  }
  return lts;
}

bool bisimilar(const Program& a, const Program& b, bool weak, const Bounds& bounds) {
  auto alphabet = harvest_alphabet(a, bounds);
  for (const auto& m : harvest_alphabet(b, bounds))
    if (std::find(alphabet.begin(), alphabet.end(), m) == alphabet.end()) alphabet.push_back(m);
  Solver solver;
  return compare_lts(bpi_lts(a, alphabet, bounds), bpi_lts(b, alphabet, bounds), solver, weak)
      .equivalent;
}

}  // namespace abc::bpi
