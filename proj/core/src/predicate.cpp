#include "abc/predicate.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "abc/eval.hpp"
#include "abc/print.hpp"

namespace abc {
namespace {

enum class Tri { False, True, Unknown };

Tri tri_not(Tri t) {
  if (t == Tri::Unknown) return t;
  return t == Tri::True ? Tri::False : Tri::True;
}

// Result of evaluating an operand under a possibly partial assignment.
struct Operand {
  enum class State { Known, Undefined, Unknown } state = State::Undefined;
  Value value;
};

using Lookup = std::function<Operand(const AttributeId&)>;

Operand eval_operand(const Expr& e, const Lookup& lookup) {
  switch (e.kind) {
    case Expr::Kind::Const: return {Operand::State::Known, e.value};
    case Expr::Kind::Attr:
    case Expr::Kind::SelfAttr: return lookup(e.name);
    case Expr::Kind::Var:
    case Expr::Kind::MsgRef:
    case Expr::Kind::SenderAttr: return {};
    case Expr::Kind::Op: {
      std::vector<ExprPtr> args;
      bool unknown = false;
      for (const auto& a : e.args) {
        Operand o = eval_operand(*a, lookup);
        if (o.state == Operand::State::Undefined) return {};
        if (o.state == Operand::State::Unknown) {
          unknown = true;
          continue;
        }
        args.push_back(make_const(o.value));
      }
      if (unknown) return {Operand::State::Unknown, {}};
      try {
        return {Operand::State::Known, eval_expr(*make_op(e.op, std::move(args)), {})};
      } catch (const EvalError&) {
        return {};
      }
    }
  }
  return {};
}

bool atom_holds(Rel rel, const std::optional<Value>& l, const std::optional<Value>& r) {
  switch (rel) {
    case Rel::Eq: return l && r && *l == *r;
    case Rel::Ne: return !(l && r && *l == *r);
    case Rel::Lt:
    case Rel::Le:
    case Rel::Gt:
    case Rel::Ge: {
      if (!l || !r || !l->is_int() || !r->is_int()) return false;
      auto a = l->as_int(), b = r->as_int();
      return rel == Rel::Lt ? a < b : rel == Rel::Le ? a <= b : rel == Rel::Gt ? a > b : a >= b;
    }
    case Rel::In: return l && r && r->is_set() && r->contains(*l);
  }
  return false;
}

Tri eval_tri(const Pred& p, const Lookup& lookup) {
  switch (p.kind) {
    case Pred::Kind::True: return Tri::True;
    case Pred::Kind::False: return Tri::False;
    case Pred::Kind::Atom: {
      Operand l = eval_operand(*p.lhs, lookup);
      Operand r = eval_operand(*p.rhs, lookup);
      bool l_undef = l.state == Operand::State::Undefined;
      bool r_undef = r.state == Operand::State::Undefined;
      // One undefined side decides the atom regardless of the other.
      if (l_undef || r_undef) return atom_holds(p.rel, std::nullopt, std::nullopt) ? Tri::True : Tri::False;
      if (l.state == Operand::State::Unknown || r.state == Operand::State::Unknown) return Tri::Unknown;
      return atom_holds(p.rel, l.value, r.value) ? Tri::True : Tri::False;
    }
    case Pred::Kind::Not: return tri_not(eval_tri(*p.left, lookup));
    case Pred::Kind::And: {
      Tri a = eval_tri(*p.left, lookup);
      if (a == Tri::False) return a;
      Tri b = eval_tri(*p.right, lookup);
      if (b == Tri::False) return b;
      return a == Tri::True && b == Tri::True ? Tri::True : Tri::Unknown;
    }
    case Pred::Kind::Or: {
      Tri a = eval_tri(*p.left, lookup);
      if (a == Tri::True) return a;
      Tri b = eval_tri(*p.right, lookup);
      if (b == Tri::True) return b;
      return a == Tri::False && b == Tri::False ? Tri::False : Tri::Unknown;
    }
  }
  return Tri::Unknown;
}

template <class F>
ExprPtr map_expr(const ExprPtr& e, const F& leaf) {
  if (e->kind == Expr::Kind::Op) {
    std::vector<ExprPtr> args;
    bool changed = false;
    for (const auto& a : e->args) {
      args.push_back(map_expr(a, leaf));
      changed = changed || args.back() != a;
    }
    return changed ? make_op(e->op, std::move(args)) : e;
  }
  return leaf(e);
}

template <class F>
PredPtr map_atoms(const PredPtr& p, const F& atom) {
  switch (p->kind) {
    case Pred::Kind::True:
    case Pred::Kind::False: return p;
    case Pred::Kind::Atom: return atom(p);
    case Pred::Kind::Not: return make_not(map_atoms(p->left, atom));
    case Pred::Kind::And: return make_and(map_atoms(p->left, atom), map_atoms(p->right, atom));
    case Pred::Kind::Or: return make_or(map_atoms(p->left, atom), map_atoms(p->right, atom));
  }
  return p;
}

ExprPtr fold(const ExprPtr& e) {
  if (e->kind != Expr::Kind::Op) return e;
  std::vector<ExprPtr> args;
  bool all_const = true;
  for (const auto& a : e->args) {
    args.push_back(fold(a));
    all_const = all_const && args.back()->kind == Expr::Kind::Const;
  }
  auto rebuilt = make_op(e->op, std::move(args));
  if (!all_const || rebuilt->kind == Expr::Kind::Const) return rebuilt;
  try {
    return make_const(eval_expr(*rebuilt, {}));
  } catch (const EvalError&) {
    return rebuilt;
  }
}

}  // namespace

bool satisfies(const AttributeEnv& env, const Pred& p) {
  Lookup lookup = [&env](const AttributeId& a) {
    auto v = env.lookup(a);
    return v ? Operand{Operand::State::Known, *v} : Operand{};
  };
  return eval_tri(p, lookup) == Tri::True;
}

PredPtr close(const PredPtr& p, const AttributeEnv& env) {
  return map_atoms(p, [&](const PredPtr& atom) {
    auto resolve = [&](const ExprPtr& e) -> ExprPtr {
      if (e->kind != Expr::Kind::SelfAttr) return e;
      auto v = env.lookup(e->name);
      if (!v)
        throw EvalError(EvalError::Code::UndefinedAttribute, "undefined attribute this." + e->name);
      return make_const(*v);
    };
    return make_atom(atom->rel, fold(map_expr(atom->lhs, resolve)),
                     fold(map_expr(atom->rhs, resolve)));
  });
}

PredPtr instantiate(const RestrictionFn& f, const AttributeEnv& sender,
                    std::span<const Value> values) {
  auto result = map_atoms(f.tmpl, [&](const PredPtr& atom) -> PredPtr {
    bool unresolved = false;
    auto resolve = [&](const ExprPtr& e) -> ExprPtr {
      if (e->kind == Expr::Kind::MsgRef) {
        if (e->index < values.size()) return make_const(values[e->index]);
        unresolved = true;
        return e;
      }
      if (e->kind == Expr::Kind::SenderAttr) {
        if (auto v = sender.lookup(e->name)) return make_const(*v);
        unresolved = true;
        return e;
      }
      return e;
    };
    auto l = map_expr(atom->lhs, resolve);
    auto r = map_expr(atom->rhs, resolve);
    if (unresolved) return atom_holds(atom->rel, std::nullopt, std::nullopt) ? make_tt() : make_ff();
    return make_atom(atom->rel, fold(l), fold(r));
  });
  return simplify(result);
}

PredPtr simplify(const PredPtr& p) {
  switch (p->kind) {
    case Pred::Kind::True:
    case Pred::Kind::False: return p;
    case Pred::Kind::Atom: {
      auto l = fold(p->lhs), r = fold(p->rhs);
      if (l->kind == Expr::Kind::Const && r->kind == Expr::Kind::Const)
        return atom_holds(p->rel, l->value, r->value) ? make_tt() : make_ff();
      if (l == p->lhs && r == p->rhs) return p;
      return make_atom(p->rel, l, r);
    }
    case Pred::Kind::Not: {
      auto x = simplify(p->left);
      if (x->kind == Pred::Kind::True) return make_ff();
      if (x->kind == Pred::Kind::False) return make_tt();
      if (x->kind == Pred::Kind::Not) return x->left;
      return x == p->left ? p : make_not(x);
    }
    case Pred::Kind::And: {
      auto a = simplify(p->left), b = simplify(p->right);
      if (a->kind == Pred::Kind::False || b->kind == Pred::Kind::False) return make_ff();
      if (a->kind == Pred::Kind::True) return b;
      if (b->kind == Pred::Kind::True) return a;
      if (equal(a, b)) return a;
      return a == p->left && b == p->right ? p : make_and(a, b);
    }
    case Pred::Kind::Or: {
      auto a = simplify(p->left), b = simplify(p->right);
      if (a->kind == Pred::Kind::True || b->kind == Pred::Kind::True) return make_tt();
      if (a->kind == Pred::Kind::False) return b;
      if (b->kind == Pred::Kind::False) return a;
      if (equal(a, b)) return a;
      return a == p->left && b == p->right ? p : make_or(a, b);
    }
  }
  return p;
}

namespace {

void collect_attrs(const Expr& e, std::set<AttributeId>& out) {
  if (e.kind == Expr::Kind::Attr || e.kind == Expr::Kind::SelfAttr) out.insert(e.name);
  for (const auto& a : e.args) collect_attrs(*a, out);
}

void collect_attrs(const Pred& p, std::set<AttributeId>& out) {
  if (p.lhs) collect_attrs(*p.lhs, out);
  if (p.rhs) collect_attrs(*p.rhs, out);
  if (p.left) collect_attrs(*p.left, out);
  if (p.right) collect_attrs(*p.right, out);
}

struct Constants {
  std::set<Value> all;
  std::set<Value> member_lhs;  // constants tested for membership
  bool arithmetic_on_attrs = false;
};

bool mentions_attr(const Expr& e) {
  if (e.kind == Expr::Kind::Attr || e.kind == Expr::Kind::SelfAttr) return true;
  for (const auto& a : e.args)
    if (mentions_attr(*a)) return true;
  return false;
}

void collect_consts(const Expr& e, Constants& c) {
  if (e.kind == Expr::Kind::Const) {
    c.all.insert(e.value);
    if (e.value.is_set() || e.value.is_tuple())
      for (const auto& v : e.value.items()) c.all.insert(v);
  }
  if (e.kind == Expr::Kind::Op && mentions_attr(e)) c.arithmetic_on_attrs = true;
  for (const auto& a : e.args) collect_consts(*a, c);
}

void collect_consts(const Pred& p, Constants& c) {
  if (p.kind == Pred::Kind::Atom) {
    collect_consts(*p.lhs, c);
    collect_consts(*p.rhs, c);
    if (p.rel == Rel::In && p.lhs->kind == Expr::Kind::Const) c.member_lhs.insert(p.lhs->value);
  }
  if (p.left) collect_consts(*p.left, c);
  if (p.right) collect_consts(*p.right, c);
}

std::vector<Value> generic_candidates(const Constants& c, std::size_t n_attrs) {
  std::set<Value> out = c.all;
  std::vector<std::int64_t> ints;
  bool have_bools = false;
  for (const auto& v : c.all) {
    if (v.is_int()) ints.push_back(v.as_int());
    have_bools = have_bools || v.is_bool();
  }
  if (c.arithmetic_on_attrs) {
    std::vector<std::int64_t> base = ints;
    for (auto a : base)
      for (auto b : base) {
        ints.push_back(a - b);
        ints.push_back(a + b);
      }
  }
  if (ints.empty()) ints.push_back(0);
  std::sort(ints.begin(), ints.end());
  ints.erase(std::unique(ints.begin(), ints.end()), ints.end());
  auto k = static_cast<std::int64_t>(std::max<std::size_t>(n_attrs, 1));
  for (std::int64_t d = 0; d <= k; ++d) {
    out.insert(Value::integer(ints.front() - d));
    out.insert(Value::integer(ints.back() + d));
  }
  for (std::size_t i = 0; i + 1 < ints.size(); ++i)
    for (std::int64_t d = 1; d <= k && ints[i] + d < ints[i + 1]; ++d)
      out.insert(Value::integer(ints[i] + d));
  for (std::int64_t d = 0; d < k; ++d) out.insert(Value::name("~f" + std::to_string(d)));
  if (have_bools) {
    out.insert(Value::boolean(false));
    out.insert(Value::boolean(true));
  }
  std::vector<Value> members(c.member_lhs.begin(), c.member_lhs.end());
  if (members.size() > 4) members.resize(4);
  for (unsigned mask = 0; mask < (1u << members.size()); ++mask) {
    Values subset;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (mask & (1u << i)) subset.push_back(members[i]);
    out.insert(Value::set(std::move(subset)));
  }
  return {out.begin(), out.end()};
}

class Search {
 public:
  Search(const Pred& p, const DomainContext& domains) : pred_(p) {
    std::set<AttributeId> attrs;
    collect_attrs(p, attrs);
    attrs_.assign(attrs.begin(), attrs.end());
    Constants consts;
    collect_consts(p, consts);
    std::size_t free_attrs = 0;
    for (const auto& a : attrs_) {
      if (const auto* d = domains.domain_of(a))
        consts.all.insert(d->begin(), d->end());  // attribute-to-attribute atoms
      else
        ++free_attrs;
    }
    std::vector<Value> generic;
    if (free_attrs) generic = generic_candidates(consts, free_attrs);
    for (const auto& a : attrs_) {
      std::vector<std::optional<Value>> cs;
      if (const auto* d = domains.domain_of(a))
        cs.assign(d->begin(), d->end());
      else
        cs.assign(generic.begin(), generic.end());
      cs.push_back(std::nullopt);
      candidates_.push_back(std::move(cs));
    }
  }

  std::optional<AttributeEnv> run() {
    if (step(0)) {
      AttributeEnv env;
      for (const auto& [a, v] : assignment_)
        if (v) env.set(a, *v);
      return env;
    }
    return std::nullopt;
  }

 private:
  Tri current() const {
    Lookup lookup = [this](const AttributeId& a) {
      auto it = assignment_.find(a);
      if (it == assignment_.end()) return Operand{Operand::State::Unknown, {}};
      return it->second ? Operand{Operand::State::Known, *it->second} : Operand{};
    };
    return eval_tri(pred_, lookup);
  }

  bool step(std::size_t i) {
    Tri t = current();
    if (t == Tri::True) return true;
    if (t == Tri::False || i == attrs_.size()) return false;
    for (const auto& c : candidates_[i]) {
      assignment_[attrs_[i]] = c;
      if (step(i + 1)) return true;
    }
    assignment_.erase(attrs_[i]);
    return false;
  }

  const Pred& pred_;
  std::vector<AttributeId> attrs_;
  std::vector<std::vector<std::optional<Value>>> candidates_;
  std::map<AttributeId, std::optional<Value>> assignment_;
};

}  // namespace

std::set<AttributeId> attributes_of(const Pred& p) {
  std::set<AttributeId> out;
  collect_attrs(p, out);
  return out;
}

Solver::Solver(DomainContext domains) : domains_(std::move(domains)) {}

std::optional<AttributeEnv> Solver::witness(const PredPtr& p) const {
  auto s = simplify(p);
  if (s->kind == Pred::Kind::True) return AttributeEnv{};
  if (s->kind == Pred::Kind::False) return std::nullopt;
  return Search(*s, domains_).run();
}

bool Solver::is_sat(const PredPtr& p) const {
  auto s = simplify(p);
  if (s->kind == Pred::Kind::True) return true;
  if (s->kind == Pred::Kind::False) return false;
  std::string key = to_string(*s);
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  bool sat = Search(*s, domains_).run().has_value();
  std::lock_guard lock(mu_);
  cache_.emplace(std::move(key), sat);
  return sat;
}

bool Solver::implies(const PredPtr& a, const PredPtr& b) const {
  return !is_sat(make_and(a, make_not(b)));
}

bool Solver::equiv(const PredPtr& a, const PredPtr& b) const {
  if (equal(a, b)) return true;
  return implies(a, b) && implies(b, a);
}

bool Solver::is_tt(const PredPtr& p) const { return !is_sat(make_not(p)); }

PredPtr Solver::normalize(const PredPtr& p) const {
  auto s = simplify(p);
  if (!is_sat(s)) return make_ff();
  if (is_tt(s)) return make_tt();
  return s;
}

bool is_sat(const PredPtr& p, const DomainContext& domains) { return Solver(domains).is_sat(p); }

bool implies(const PredPtr& a, const PredPtr& b, const DomainContext& domains) {
  return Solver(domains).implies(a, b);
}

bool equiv(const PredPtr& a, const PredPtr& b, const DomainContext& domains) {
  return Solver(domains).equiv(a, b);
}

}  // namespace abc
