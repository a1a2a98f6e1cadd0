#include "abc/syntax.hpp"

#include <stdexcept>

namespace abc {

const char* op_name(OpCode op) {
  switch (op) {
    case OpCode::Add: return "+";
    case OpCode::Sub: return "-";
    case OpCode::Mul: return "*";
    case OpCode::Tuple: return "tuple";
    case OpCode::Get: return "get";
    case OpCode::Insert: return "insert";
    case OpCode::Remove: return "remove";
    case OpCode::Contains: return "contains";
  }
  return "?";
}

int op_arity(OpCode op) { return op == OpCode::Tuple ? -1 : 2; }

std::optional<OpCode> op_from_name(const std::string& name) {
  if (name == "tuple") return OpCode::Tuple;
  if (name == "get") return OpCode::Get;
  if (name == "insert") return OpCode::Insert;
  if (name == "remove") return OpCode::Remove;
  if (name == "contains") return OpCode::Contains;
  return std::nullopt;
}

namespace {

template <class T>
std::shared_ptr<const T> share(T t) {
  return std::make_shared<const T>(std::move(t));
}

}  // namespace

ExprPtr make_const(Value v) {
  Expr e;
  e.kind = Expr::Kind::Const;
  e.value = std::move(v);
  return share(std::move(e));
}

ExprPtr make_var(std::string name) {
  Expr e;
  e.kind = Expr::Kind::Var;
  e.name = std::move(name);
  return share(std::move(e));
}

ExprPtr make_attr(std::string name) {
  Expr e;
  e.kind = Expr::Kind::Attr;
  e.name = std::move(name);
  return share(std::move(e));
}

ExprPtr make_self(std::string name) {
  Expr e;
  e.kind = Expr::Kind::SelfAttr;
  e.name = std::move(name);
  return share(std::move(e));
}

ExprPtr make_msg(std::size_t index) {
  Expr e;
  e.kind = Expr::Kind::MsgRef;
  e.index = index;
  return share(std::move(e));
}

ExprPtr make_sender(std::string name) {
  Expr e;
  e.kind = Expr::Kind::SenderAttr;
  e.name = std::move(name);
  return share(std::move(e));
}

ExprPtr make_op(OpCode op, std::vector<ExprPtr> args) {
  int arity = op_arity(op);
  if (arity >= 0 && static_cast<int>(args.size()) != arity)
    throw std::invalid_argument(std::string("operator ") + op_name(op) + " expects " +
                                std::to_string(arity) + " arguments");
  if (op == OpCode::Tuple) {
    bool all_const = true;
    for (const auto& a : args) all_const = all_const && a->kind == Expr::Kind::Const;
    if (all_const) {
      Values vs;
      for (const auto& a : args) vs.push_back(a->value);
      return make_const(Value::tuple(std::move(vs)));
    }
  }
  Expr e;
  e.kind = Expr::Kind::Op;
  e.op = op;
  e.args = std::move(args);
  return share(std::move(e));
}

const char* rel_name(Rel r) {
  switch (r) {
    case Rel::Eq: return "==";
    case Rel::Ne: return "!=";
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Gt: return ">";
    case Rel::Ge: return ">=";
    case Rel::In: return "in";
  }
  return "?";
}

PredPtr make_tt() {
  static const PredPtr tt = share(Pred{Pred::Kind::True, Rel::Eq, nullptr, nullptr, nullptr, nullptr});
  return tt;
}

PredPtr make_ff() {
  static const PredPtr ff = share(Pred{Pred::Kind::False, Rel::Eq, nullptr, nullptr, nullptr, nullptr});
  return ff;
}

PredPtr make_atom(Rel r, ExprPtr lhs, ExprPtr rhs) {
  return share(Pred{Pred::Kind::Atom, r, std::move(lhs), std::move(rhs), nullptr, nullptr});
}

PredPtr make_not(PredPtr p) {
  return share(Pred{Pred::Kind::Not, Rel::Eq, nullptr, nullptr, std::move(p), nullptr});
}

PredPtr make_and(PredPtr a, PredPtr b) {
  return share(Pred{Pred::Kind::And, Rel::Eq, nullptr, nullptr, std::move(a), std::move(b)});
}

PredPtr make_or(PredPtr a, PredPtr b) {
  return share(Pred{Pred::Kind::Or, Rel::Eq, nullptr, nullptr, std::move(a), std::move(b)});
}

ProcPtr make_nil() {
  static const ProcPtr nil = share(Process{});
  return nil;
}

ProcPtr make_output(std::vector<ExprPtr> exprs, PredPtr target, std::vector<Update> updates,
                    ProcPtr cont) {
  Process p;
  p.kind = Process::Kind::Output;
  p.exprs = std::move(exprs);
  p.pred = std::move(target);
  p.updates = std::move(updates);
  p.left = std::move(cont);
  return share(std::move(p));
}

ProcPtr make_input(PredPtr guard, std::vector<std::string> vars, std::vector<Update> updates,
                   ProcPtr cont) {
  Process p;
  p.kind = Process::Kind::Input;
  p.pred = std::move(guard);
  p.vars = std::move(vars);
  p.updates = std::move(updates);
  p.left = std::move(cont);
  return share(std::move(p));
}

ProcPtr make_aware(PredPtr guard, ProcPtr body) {
  Process p;
  p.kind = Process::Kind::Aware;
  p.pred = std::move(guard);
  p.left = std::move(body);
  return share(std::move(p));
}

ProcPtr make_choice(ProcPtr a, ProcPtr b) {
  Process p;
  p.kind = Process::Kind::Choice;
  p.left = std::move(a);
  p.right = std::move(b);
  return share(std::move(p));
}

ProcPtr make_par(ProcPtr a, ProcPtr b) {
  Process p;
  p.kind = Process::Kind::Par;
  p.left = std::move(a);
  p.right = std::move(b);
  return share(std::move(p));
}

ProcPtr make_call(std::string name, std::vector<ExprPtr> args) {
  Process p;
  p.kind = Process::Kind::Call;
  p.name = std::move(name);
  p.exprs = std::move(args);
  return share(std::move(p));
}

CompPtr make_leaf(AttributeEnv env, Interface iface, ProcPtr proc) {
  Component c;
  c.kind = Component::Kind::Leaf;
  c.env = std::move(env);
  c.iface = std::move(iface);
  c.proc = std::move(proc);
  return share(std::move(c));
}

CompPtr make_comp_par(CompPtr a, CompPtr b) {
  Component c;
  c.kind = Component::Kind::Par;
  c.left = std::move(a);
  c.right = std::move(b);
  return share(std::move(c));
}

CompPtr make_restrict_out(FnPtr f, CompPtr inner) {
  Component c;
  c.kind = Component::Kind::RestrictOut;
  c.fn = std::move(f);
  c.left = std::move(inner);
  return share(std::move(c));
}

CompPtr make_restrict_in(FnPtr f, CompPtr inner) {
  Component c;
  c.kind = Component::Kind::RestrictIn;
  c.fn = std::move(f);
  c.left = std::move(inner);
  return share(std::move(c));
}

FnPtr make_fn(std::string name, PredPtr tmpl) {
  return share(RestrictionFn{std::move(name), std::move(tmpl)});
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
bool equal_seq(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}

bool equal(const PredPtr& a, const PredPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}

bool equal(const ProcPtr& a, const ProcPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}

bool equal(const CompPtr& a, const CompPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}

bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Const: return a.value == b.value;
    case Expr::Kind::Var:
    case Expr::Kind::Attr:
    case Expr::Kind::SelfAttr:
    case Expr::Kind::SenderAttr: return a.name == b.name;
    case Expr::Kind::MsgRef: return a.index == b.index;
    case Expr::Kind::Op: return a.op == b.op && equal_seq(a.args, b.args);
  }
  return false;
}

bool equal(const Pred& a, const Pred& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Pred::Kind::True:
    case Pred::Kind::False: return true;
    case Pred::Kind::Atom: return a.rel == b.rel && equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
    case Pred::Kind::Not: return equal(a.left, b.left);
    case Pred::Kind::And:
    case Pred::Kind::Or: return equal(a.left, b.left) && equal(a.right, b.right);
  }
  return false;
}

namespace {

bool equal_updates(const std::vector<Update>& a, const std::vector<Update>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].attr != b[i].attr || !equal(a[i].value, b[i].value)) return false;
  return true;
}

}  // namespace

bool equal(const Process& a, const Process& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Process::Kind::Nil: return true;
    case Process::Kind::Output:
      return equal_seq(a.exprs, b.exprs) && equal(a.pred, b.pred) &&
             equal_updates(a.updates, b.updates) && equal(a.left, b.left);
    case Process::Kind::Input:
      return a.vars == b.vars && equal(a.pred, b.pred) && equal_updates(a.updates, b.updates) &&
             equal(a.left, b.left);
    case Process::Kind::Aware: return equal(a.pred, b.pred) && equal(a.left, b.left);
    case Process::Kind::Choice:
    case Process::Kind::Par: return equal(a.left, b.left) && equal(a.right, b.right);
    case Process::Kind::Call: return a.name == b.name && equal_seq(a.exprs, b.exprs);
  }
  return false;
}

bool equal(const Component& a, const Component& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Component::Kind::Leaf:
      return a.env == b.env && a.iface == b.iface && equal(a.proc, b.proc);
    case Component::Kind::Par: return equal(a.left, b.left) && equal(a.right, b.right);
    case Component::Kind::RestrictOut:
    case Component::Kind::RestrictIn:
      return a.fn->name == b.fn->name && equal(a.fn->tmpl, b.fn->tmpl) && equal(a.left, b.left);
  }
  return false;
}

bool equal(const Definitions& a, const Definitions& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.params != ib->second.params ||
        !equal(ia->second.body, ib->second.body))
      return false;
  }
  return true;
}

}  // namespace abc
