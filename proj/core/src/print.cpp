#include "abc/print.hpp"

#include <vector>

namespace abc {
namespace {

enum class ExprLevel { Additive, Multiplicative, Atom };
enum class PredLevel { Or, And, Unary };
enum class ProcLevel { Sum, Par, Prefix };

class Printer {
 public:
  explicit Printer(bool canonical) : canonical_(canonical) {}

  std::string out;

  void expr(const Expr& e, ExprLevel ctx = ExprLevel::Additive) {
    switch (e.kind) {
      case Expr::Kind::Const: out += e.value.to_string(); return;
      case Expr::Kind::Var: out += var_name(e.name); return;
      case Expr::Kind::Attr: out += e.name; return;
      case Expr::Kind::SelfAttr: out += "this." + e.name; return;
      case Expr::Kind::MsgRef: out += "msg[" + std::to_string(e.index) + "]"; return;
      case Expr::Kind::SenderAttr: out += "snd." + e.name; return;
      case Expr::Kind::Op: break;
    }
    switch (e.op) {
      case OpCode::Add:
      case OpCode::Sub: {
        bool paren = ctx != ExprLevel::Additive;
        if (paren) out += '(';
        expr(*e.args[0], ExprLevel::Additive);
        out += e.op == OpCode::Add ? " + " : " - ";
        expr(*e.args[1], ExprLevel::Multiplicative);
        if (paren) out += ')';
        return;
      }
      case OpCode::Mul: {
        bool paren = ctx == ExprLevel::Atom;
        if (paren) out += '(';
        expr(*e.args[0], ExprLevel::Multiplicative);
        out += " * ";
        expr(*e.args[1], ExprLevel::Atom);
        if (paren) out += ')';
        return;
      }
      default:
        out += op_name(e.op);
        out += '(';
        for (std::size_t i = 0; i < e.args.size(); ++i) {
          if (i) out += ", ";
          expr(*e.args[i]);
        }
        out += ')';
        return;
    }
  }

  void pred(const Pred& p, PredLevel ctx = PredLevel::Or) {
    switch (p.kind) {
      case Pred::Kind::True: out += "tt"; return;
      case Pred::Kind::False: out += "ff"; return;
      case Pred::Kind::Atom:
        expr(*p.lhs);
        out += ' ';
        out += rel_name(p.rel);
        out += ' ';
        expr(*p.rhs);
        return;
      case Pred::Kind::Not:
        out += '!';
        pred(*p.left, PredLevel::Unary);
        return;
      case Pred::Kind::And: {
        bool paren = ctx == PredLevel::Unary;
        if (paren) out += '(';
        pred(*p.left, PredLevel::And);
        out += " && ";
        pred(*p.right, PredLevel::Unary);
        if (paren) out += ')';
        return;
      }
      case Pred::Kind::Or: {
        bool paren = ctx != PredLevel::Or;
        if (paren) out += '(';
        pred(*p.left, PredLevel::Or);
        out += " || ";
        pred(*p.right, PredLevel::And);
        if (paren) out += ')';
        return;
      }
    }
  }

  // Guards and targets: tt/ff bare, anything else parenthesized.
  void guard(const Pred& p) {
    if (p.kind == Pred::Kind::True || p.kind == Pred::Kind::False) {
      pred(p);
      return;
    }
    out += '(';
    pred(p);
    out += ')';
  }

  void updates(const std::vector<Update>& us) {
    for (const auto& u : us) {
      out += '[' + u.attr + " := ";
      expr(*u.value);
      out += ']';
    }
  }

  void proc(const Process& p, ProcLevel ctx = ProcLevel::Sum) {
    switch (p.kind) {
      case Process::Kind::Nil: out += '0'; return;
      case Process::Kind::Output:
        out += '(';
        for (std::size_t i = 0; i < p.exprs.size(); ++i) {
          if (i) out += ", ";
          expr(*p.exprs[i]);
        }
        out += ")@";
        guard(*p.pred);
        out += '.';
        updates(p.updates);
        proc(*p.left, ProcLevel::Prefix);
        return;
      case Process::Kind::Input: {
        std::size_t mark = binders_.size();
        for (const auto& v : p.vars) binders_.push_back(v);
        guard(*p.pred);
        out += '(';
        for (std::size_t i = 0; i < p.vars.size(); ++i) {
          if (i) out += ", ";
          out += var_name(p.vars[i], mark + i);
        }
        out += ").";
        updates(p.updates);
        proc(*p.left, ProcLevel::Prefix);
        binders_.resize(mark);
        return;
      }
      case Process::Kind::Aware: {
        out += '<';
        std::size_t at = out.size();
        pred(*p.pred);
        if (out.find('>', at) != std::string::npos) {
          out.insert(at, 1, '(');
          out += ')';
        }
        out += "> ";
        proc(*p.left, ProcLevel::Prefix);
        return;
      }
      case Process::Kind::Choice: {
        bool paren = ctx != ProcLevel::Sum;
        if (paren) out += '(';
        proc(*p.left, ProcLevel::Sum);
        out += " + ";
        proc(*p.right, ProcLevel::Par);
        if (paren) out += ')';
        return;
      }
      case Process::Kind::Par: {
        bool paren = ctx == ProcLevel::Prefix;
        if (paren) out += '(';
        proc(*p.left, ProcLevel::Par);
        out += " | ";
        proc(*p.right, ProcLevel::Prefix);
        if (paren) out += ')';
        return;
      }
      case Process::Kind::Call:
        out += p.name;
        if (!p.exprs.empty()) {
          out += '(';
          for (std::size_t i = 0; i < p.exprs.size(); ++i) {
            if (i) out += ", ";
            expr(*p.exprs[i]);
          }
          out += ')';
        }
        return;
    }
  }

  void env(const AttributeEnv& g) {
    out += '{';
    bool first = true;
    for (const auto& [k, v] : g) {
      if (!first) out += ", ";
      first = false;
      out += k + " = " + v.to_string();
    }
    out += '}';
  }

  void comp(const Component& c, bool nested_par = false) {
    switch (c.kind) {
      case Component::Kind::Leaf:
        out += "comp { iface: " + interface_to_string(c.iface) + "; env: ";
        env(c.env);
        out += "; run: ";
        proc(*c.proc);
        out += "; }";
        return;
      case Component::Kind::Par:
        if (nested_par) out += '(';
        comp(*c.left, false);
        out += " || ";
        comp(*c.right, true);
        if (nested_par) out += ')';
        return;
      case Component::Kind::RestrictOut:
      case Component::Kind::RestrictIn:
        out += c.kind == Component::Kind::RestrictOut ? "restrictOut(" : "restrictIn(";
        out += c.fn->name;
        out += ") { ";
        comp(*c.left);
        out += " }";
        return;
    }
  }

 private:
  std::string var_name(const std::string& name) {
    if (!canonical_) return name;
    for (std::size_t i = binders_.size(); i-- > 0;)
      if (binders_[i] == name) return "%" + std::to_string(i);
    return name;
  }

  std::string var_name(const std::string& name, std::size_t position) {
    return canonical_ ? "%" + std::to_string(position) : name;
  }

  bool canonical_;
  std::vector<std::string> binders_;
};

}  // namespace

std::string to_string(const Expr& e) {
  Printer pr(false);
  pr.expr(e);
  return pr.out;
}

std::string to_string(const Pred& p) {
  Printer pr(false);
  pr.pred(p);
  return pr.out;
}

std::string to_string(const Process& p) {
  Printer pr(false);
  pr.proc(p);
  return pr.out;
}

std::string to_string(const Component& c) {
  Printer pr(false);
  pr.comp(c);
  return pr.out;
}

std::string interface_to_string(const Interface& iface) {
  std::string out = "[";
  bool first = true;
  for (const auto& a : iface) {
    if (!first) out += ", ";
    first = false;
    out += a;
  }
  return out + "]";
}

std::string canonical_key(const Process& p) {
  Printer pr(true);
  pr.proc(p);
  return pr.out;
}

std::string canonical_key(const Component& c) {
  Printer pr(true);
  pr.comp(c);
  return pr.out;
}

}  // namespace abc
