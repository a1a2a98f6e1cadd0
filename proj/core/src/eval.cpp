#include "abc/eval.hpp"

#include <functional>

#include "abc/print.hpp"

namespace abc {
namespace {

std::int64_t int_operand(const Value& v, OpCode op) {
  if (!v.is_int())
    throw EvalError(EvalError::Code::OperatorDomain,
                    std::string("operator ") + op_name(op) + " expects integers, got " +
                        v.to_string());
  return v.as_int();
}

const Value& set_operand(const Value& v, OpCode op) {
  if (!v.is_set())
    throw EvalError(EvalError::Code::OperatorDomain,
                    std::string("operator ") + op_name(op) + " expects a set, got " +
                        v.to_string());
  return v;
}

Value apply_op(OpCode op, const Values& args) {
  switch (op) {
    case OpCode::Add:
    case OpCode::Sub:
    case OpCode::Mul: {
      std::int64_t a = int_operand(args[0], op), b = int_operand(args[1], op), r = 0;
      bool overflow = op == OpCode::Add   ? __builtin_add_overflow(a, b, &r)
                      : op == OpCode::Sub ? __builtin_sub_overflow(a, b, &r)
                                          : __builtin_mul_overflow(a, b, &r);
      if (overflow) throw EvalError(EvalError::Code::OperatorDomain, "integer overflow");
      return Value::integer(r);
    }
    case OpCode::Tuple: return Value::tuple(args);
    case OpCode::Get: {
      if (!args[0].is_tuple())
        throw EvalError(EvalError::Code::OperatorDomain, "get expects a tuple");
      std::int64_t i = int_operand(args[1], op);
      auto items = args[0].items();
      if (i < 0 || static_cast<std::size_t>(i) >= items.size())
        throw EvalError(EvalError::Code::OperatorDomain,
                        "tuple index " + std::to_string(i) + " out of range");
      return items[static_cast<std::size_t>(i)];
    }
    case OpCode::Insert: {
      auto items = set_operand(args[0], op).items();
      Values vs(items.begin(), items.end());
      vs.push_back(args[1]);
      return Value::set(std::move(vs));
    }
    case OpCode::Remove: {
      Values vs;
      for (const auto& v : set_operand(args[0], op).items())
        if (!(v == args[1])) vs.push_back(v);
      return Value::set(std::move(vs));
    }
    case OpCode::Contains: return Value::boolean(set_operand(args[0], op).contains(args[1]));
  }
  throw EvalError(EvalError::Code::OperatorDomain, "unknown operator");
}

}  // namespace

Value eval_expr(const Expr& e, const AttributeEnv& env, const Substitution& sigma) {
  switch (e.kind) {
    case Expr::Kind::Const: return e.value;
    case Expr::Kind::Var: {
      auto it = sigma.find(e.name);
      if (it == sigma.end())
        throw EvalError(EvalError::Code::UnboundVariable, "unbound variable " + e.name);
      return it->second;
    }
    case Expr::Kind::Attr:
    case Expr::Kind::SelfAttr: {
      auto v = env.lookup(e.name);
      if (!v) throw EvalError(EvalError::Code::UndefinedAttribute, "undefined attribute " + e.name);
      return *v;
    }
    case Expr::Kind::MsgRef:
    case Expr::Kind::SenderAttr:
      throw EvalError(EvalError::Code::UnboundVariable,
                      to_string(e) + " is only meaningful inside a restriction function");
    case Expr::Kind::Op: {
      Values args;
      args.reserve(e.args.size());
      for (const auto& a : e.args) args.push_back(eval_expr(*a, env, sigma));
      return apply_op(e.op, args);
    }
  }
  throw EvalError(EvalError::Code::OperatorDomain, "malformed expression");
}

AttributeEnv apply_updates(AttributeEnv env, std::span<const Update> updates,
                           const DomainContext& domains) {
  for (const auto& u : updates) {
    Value v = eval_expr(*u.value, env);
    if (!domains.admits(u.attr, v))
      throw EvalError(EvalError::Code::DomainViolation,
                      "value " + v.to_string() + " outside the domain of " + u.attr);
    env.set(u.attr, std::move(v));
  }
  return env;
}

CompPtr apply_updates(const Component& leaf, std::span<const Update> updates, ProcPtr cont,
                      const DomainContext& domains) {
  return make_leaf(apply_updates(leaf.env, updates, domains), leaf.iface, std::move(cont));
}

Substitution bind(std::span<const std::string> vars, std::span<const Value> values) {
  if (vars.size() != values.size())
    throw EvalError(EvalError::Code::ArityMismatch,
                    "expected " + std::to_string(vars.size()) + " values, got " +
                        std::to_string(values.size()));
  Substitution s;
  for (std::size_t i = 0; i < vars.size(); ++i) s.insert_or_assign(vars[i], values[i]);
  return s;
}

ExprPtr substitute(const ExprPtr& e, const Substitution& sigma) {
  if (sigma.empty()) return e;
  switch (e->kind) {
    case Expr::Kind::Var: {
      auto it = sigma.find(e->name);
      return it == sigma.end() ? e : make_const(it->second);
    }
    case Expr::Kind::Op: {
      std::vector<ExprPtr> args;
      bool changed = false;
      for (const auto& a : e->args) {
        args.push_back(substitute(a, sigma));
        changed = changed || args.back() != a;
      }
      return changed ? make_op(e->op, std::move(args)) : e;
    }
    default: return e;
  }
}

PredPtr substitute_pred(const PredPtr& p, const Substitution& sigma) {
  if (sigma.empty()) return p;
  switch (p->kind) {
    case Pred::Kind::True:
    case Pred::Kind::False: return p;
    case Pred::Kind::Atom: {
      auto l = substitute(p->lhs, sigma), r = substitute(p->rhs, sigma);
      return l == p->lhs && r == p->rhs ? p : make_atom(p->rel, l, r);
    }
    case Pred::Kind::Not: {
      auto x = substitute_pred(p->left, sigma);
      return x == p->left ? p : make_not(x);
    }
    case Pred::Kind::And:
    case Pred::Kind::Or: {
      auto l = substitute_pred(p->left, sigma), r = substitute_pred(p->right, sigma);
      if (l == p->left && r == p->right) return p;
      return p->kind == Pred::Kind::And ? make_and(l, r) : make_or(l, r);
    }
  }
  return p;
}

PredPtr substitute_pred(const PredPtr& p, std::span<const std::string> vars,
                        std::span<const Value> values) {
  return substitute_pred(p, bind(vars, values));
}

namespace {

std::vector<Update> substitute_updates(const std::vector<Update>& us, const Substitution& sigma) {
  std::vector<Update> out;
  out.reserve(us.size());
  for (const auto& u : us) out.push_back({u.attr, substitute(u.value, sigma)});
  return out;
}

std::vector<ExprPtr> substitute_all(const std::vector<ExprPtr>& es, const Substitution& sigma) {
  std::vector<ExprPtr> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(substitute(e, sigma));
  return out;
}

}  // namespace

ProcPtr substitute(const ProcPtr& p, const Substitution& sigma) {
  if (sigma.empty()) return p;
  switch (p->kind) {
    case Process::Kind::Nil: return p;
    case Process::Kind::Output:
      return make_output(substitute_all(p->exprs, sigma), substitute_pred(p->pred, sigma),
                         substitute_updates(p->updates, sigma), substitute(p->left, sigma));
    case Process::Kind::Input: {
      Substitution inner = sigma;
      for (const auto& v : p->vars) inner.erase(v);
      return make_input(substitute_pred(p->pred, inner), p->vars,
                        substitute_updates(p->updates, inner), substitute(p->left, inner));
    }
    case Process::Kind::Aware:
      return make_aware(substitute_pred(p->pred, sigma), substitute(p->left, sigma));
    case Process::Kind::Choice:
      return make_choice(substitute(p->left, sigma), substitute(p->right, sigma));
    case Process::Kind::Par:
      return make_par(substitute(p->left, sigma), substitute(p->right, sigma));
    case Process::Kind::Call: return make_call(p->name, substitute_all(p->exprs, sigma));
  }
  return p;
}

ProcPtr substitute(const ProcPtr& p, std::span<const std::string> vars,
                   std::span<const Value> values) {
  return substitute(p, bind(vars, values));
}

namespace {

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Var) out.insert(e.name);
  for (const auto& a : e.args) collect(*a, out);
}

void collect(const Pred& p, std::set<std::string>& out) {
  if (p.lhs) collect(*p.lhs, out);
  if (p.rhs) collect(*p.rhs, out);
  if (p.left) collect(*p.left, out);
  if (p.right) collect(*p.right, out);
}

void collect(const Process& p, std::set<std::string>& out) {
  std::set<std::string> local;
  for (const auto& e : p.exprs) collect(*e, local);
  if (p.pred) collect(*p.pred, local);
  for (const auto& u : p.updates) collect(*u.value, local);
  if (p.left) collect(*p.left, local);
  if (p.kind == Process::Kind::Input)
    for (const auto& v : p.vars) local.erase(v);
  if (p.right) collect(*p.right, local);
  out.insert(local.begin(), local.end());
}

}  // namespace

std::set<std::string> free_vars(const Expr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

std::set<std::string> free_vars(const Pred& p) {
  std::set<std::string> out;
  collect(p, out);
  return out;
}

std::set<std::string> free_vars(const Process& p) {
  std::set<std::string> out;
  collect(p, out);
  return out;
}

ProcPtr unfold(const Process& call, const Definitions& defs, const AttributeEnv& env) {
  auto it = defs.find(call.name);
  if (it == defs.end())
    throw EvalError(EvalError::Code::UnknownProcess, "unknown process " + call.name);
  const Definition& d = it->second;
  if (d.params.size() != call.exprs.size())
    throw EvalError(EvalError::Code::ArityMismatch,
                    call.name + " expects " + std::to_string(d.params.size()) + " arguments");
  Values args;
  args.reserve(call.exprs.size());
  for (const auto& e : call.exprs) args.push_back(eval_expr(*e, env));
  return substitute(d.body, d.params, args);
}

namespace {

bool template_only(const Expr& e) {
  if (e.kind == Expr::Kind::MsgRef || e.kind == Expr::Kind::SenderAttr) return true;
  for (const auto& a : e.args)
    if (template_only(*a)) return true;
  return false;
}

bool template_only(const Pred& p) {
  if (p.lhs && template_only(*p.lhs)) return true;
  if (p.rhs && template_only(*p.rhs)) return true;
  if (p.left && template_only(*p.left)) return true;
  return p.right && template_only(*p.right);
}

void check_process(const Process& p, const Definitions& defs, const std::string& where) {
  auto fail = [&](const std::string& msg) { throw WellFormednessError(where + ": " + msg); };
  for (const auto& e : p.exprs)
    if (template_only(*e)) fail("msg[i]/snd.a outside a restriction function");
  for (const auto& u : p.updates)
    if (template_only(*u.value)) fail("msg[i]/snd.a outside a restriction function");
  if (p.pred && template_only(*p.pred)) fail("msg[i]/snd.a outside a restriction function");
  if (p.kind == Process::Kind::Call) {
    auto it = defs.find(p.name);
    if (it == defs.end()) fail("call to undefined process " + p.name);
    if (it->second.params.size() != p.exprs.size())
      fail(p.name + " expects " + std::to_string(it->second.params.size()) + " arguments");
  }
  if (p.left) check_process(*p.left, defs, where);
  if (p.right) check_process(*p.right, defs, where);
}

// Calls reachable from p without crossing an input or output prefix.
void unguarded_calls(const Process& p, std::set<std::string>& out) {
  switch (p.kind) {
    case Process::Kind::Call: out.insert(p.name); return;
    case Process::Kind::Aware: unguarded_calls(*p.left, out); return;
    case Process::Kind::Choice:
    case Process::Kind::Par:
      unguarded_calls(*p.left, out);
      unguarded_calls(*p.right, out);
      return;
    default: return;
  }
}

}  // namespace

void check_definitions(const Definitions& defs) {
  std::map<std::string, std::set<std::string>> edges;
  for (const auto& [name, def] : defs) {
    check_process(*def.body, defs, "definition " + name);
    std::set<std::string> params(def.params.begin(), def.params.end());
    if (params.size() != def.params.size())
      throw WellFormednessError("definition " + name + ": repeated parameter");
    for (const auto& v : free_vars(*def.body))
      if (!params.count(v))
        throw WellFormednessError("definition " + name + ": free variable " + v);
    unguarded_calls(*def.body, edges[name]);
  }
  // Depth-first cycle detection over unguarded call edges.
  std::map<std::string, int> colour;
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    colour[n] = 1;
    for (const auto& m : edges[n]) {
      if (colour[m] == 1) throw WellFormednessError("unguarded recursion through " + m);
      if (colour[m] == 0) visit(m);
    }
    colour[n] = 2;
  };
  for (const auto& [name, _] : defs)
    if (colour[name] == 0) visit(name);
}

void check_component(const Component& c, const Definitions& defs) {
  switch (c.kind) {
    case Component::Kind::Leaf: {
      check_process(*c.proc, defs, "component");
      auto fv = free_vars(*c.proc);
      if (!fv.empty()) throw WellFormednessError("component process has free variable " + *fv.begin());
      return;
    }
    case Component::Kind::Par:
      check_component(*c.left, defs);
      check_component(*c.right, defs);
      return;
    case Component::Kind::RestrictOut:
    case Component::Kind::RestrictIn:
      if (!free_vars(*c.fn->tmpl).empty())
        throw WellFormednessError("restriction function " + c.fn->name + " has free variables");
      check_component(*c.left, defs);
      return;
  }
}

}  // namespace abc
