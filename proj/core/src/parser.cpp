#include "abc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <optional>
#include <set>

#include "abc/error.hpp"
#include "abc/print.hpp"

namespace abc {
namespace {

// ---------------------------------------------------------------------------
// Lexer

struct Token {
  enum class Kind { Ident, Int, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1, column = 1;
};

std::vector<Token> lex(std::string_view src) {
  static const char* const puncts[] = {":=", "==", "!=", "<=", ">=", "&&", "||", "(", ")", "{",
                                       "}",  "[",  "]",  "<",  ">",  ",",  ";",  ":", ".", "@",
                                       "!",  "|",  "+",  "-",  "*",  "="};
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "//") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      t.kind = Token::Kind::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::Int;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (c == '"' || c == '\'') {
      std::size_t j = i + 1;
      std::string text;
      while (j < src.size() && src[j] != c) {
        if (src[j] == '\\' && j + 1 < src.size()) ++j;
        if (src[j] == '\n') throw ParseError("unterminated string", t.line, t.column);
        text.push_back(src[j++]);
      }
      if (j >= src.size()) throw ParseError("unterminated string", t.line, t.column);
      t.kind = Token::Kind::String;
      t.text = std::move(text);
      advance(j + 1 - i);
    } else {
      for (const char* p : puncts) {
        std::string_view pv(p);
        if (src.substr(i, pv.size()) == pv) {
          t.kind = Token::Kind::Punct;
          t.text = std::string(pv);
          break;
        }
      }
      if (t.kind != Token::Kind::Punct)
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      advance(t.text.size());
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// Shared cursor with backtracking

class Cursor {
 public:
  explicit Cursor(std::string_view text) : toks_(lex(text)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is(std::string_view p, std::size_t k = 0) const {
    const Token& t = peek(k);
    return (t.kind == Token::Kind::Punct || t.kind == Token::Kind::Ident) && t.text == p;
  }
  bool is_ident(std::size_t k = 0) const { return peek(k).kind == Token::Kind::Ident; }

  bool accept(std::string_view p) {
    if (!is(p)) return false;
    ++pos_;
    return true;
  }
  const Token& expect(std::string_view p) {
    if (!is(p)) fail("expected '" + std::string(p) + "'");
    return toks_[pos_++];
  }
  std::string ident(const char* what = "identifier") {
    if (!is_ident()) fail(std::string("expected ") + what);
    return toks_[pos_++].text;
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const {
    std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + found, t.line, t.column);
  }

  // Tries the alternatives in order; on total failure rethrows the error that
  // got furthest into the input.
  template <class T>
  T first_of(std::initializer_list<std::function<T()>> alts) {
    std::size_t start = pos_;
    std::optional<ParseError> best;
    std::size_t best_pos = 0;
    for (const auto& alt : alts) {
      try {
        return alt();
      } catch (const ParseError& e) {
        std::size_t reached = pos_of(e);
        if (!best || reached > best_pos) {
          best = e;
          best_pos = reached;
        }
        pos_ = start;
      }
    }
    throw *best;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_of(const ParseError& e) const {
    for (std::size_t k = 0; k < toks_.size(); ++k)
      if (toks_[k].line > e.line() || (toks_[k].line == e.line() && toks_[k].column >= e.column()))
        return k;
    return toks_.size();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <class T>
class Restore {
 public:
  Restore(T& ref, T value) : ref_(ref), saved_(ref) { ref_ = std::move(value); }
  ~Restore() { ref_ = std::move(saved_); }
  Restore(const Restore&) = delete;
  Restore& operator=(const Restore&) = delete;

 private:
  T& ref_;
  T saved_;
};

using Scope = std::vector<std::vector<std::string>>;

class Frame {
 public:
  Frame(Scope& s, std::vector<std::string> vars) : s_(s) { s_.push_back(std::move(vars)); }
  ~Frame() { s_.pop_back(); }
  Frame(const Frame&) = delete;
  Frame& operator=(const Frame&) = delete;

 private:
  Scope& s_;
};

bool is_op_name(const std::string& s) { return op_from_name(s).has_value(); }

std::optional<Rel> rel_of(const Cursor& c, bool angle) {
  static const std::pair<const char*, Rel> rels[] = {{"==", Rel::Eq}, {"!=", Rel::Ne},
                                                     {"<=", Rel::Le}, {">=", Rel::Ge},
                                                     {"<", Rel::Lt},  {">", Rel::Gt},
                                                     {"in", Rel::In}};
  for (const auto& [text, rel] : rels) {
    if (angle && rel == Rel::Gt) continue;
    if (c.is(text)) return rel;
  }
  return std::nullopt;
}

// Replaces attribute references named in `vars` by variables.
ExprPtr bind_expr(const ExprPtr& e, const std::set<std::string>& vars) {
  if (e->kind == Expr::Kind::Attr && vars.count(e->name)) return make_var(e->name);
  if (e->kind != Expr::Kind::Op) return e;
  std::vector<ExprPtr> args;
  for (const auto& a : e->args) args.push_back(bind_expr(a, vars));
  return make_op(e->op, std::move(args));
}

PredPtr bind_pred(const PredPtr& p, const std::set<std::string>& vars) {
  switch (p->kind) {
    case Pred::Kind::True:
    case Pred::Kind::False: return p;
    case Pred::Kind::Atom: return make_atom(p->rel, bind_expr(p->lhs, vars), bind_expr(p->rhs, vars));
    case Pred::Kind::Not: return make_not(bind_pred(p->left, vars));
    case Pred::Kind::And: return make_and(bind_pred(p->left, vars), bind_pred(p->right, vars));
    case Pred::Kind::Or: return make_or(bind_pred(p->left, vars), bind_pred(p->right, vars));
  }
  return p;
}

// ---------------------------------------------------------------------------
// AbC parser

struct CallSite {
  std::string name;
  std::size_t arity;
  Token at;
};

class AbcParser {
 public:
  explicit AbcParser(std::string_view text) : c_(text) {}

  Cursor c_;
  System sys;
  std::map<std::string, CompPtr> named;
  const std::map<std::string, FnPtr>* extra_fns = nullptr;
  std::vector<CallSite> calls;

  // --- expressions -------------------------------------------------------

  Value constant() {
    Token at = c_.peek();
    ExprPtr e = expr();
    if (e->kind != Expr::Kind::Const) c_.fail_at(at, "expected a constant");
    return e->value;
  }

  std::vector<Value> constants_until(std::string_view close) {
    std::vector<Value> vs;
    if (!c_.is(close)) {
      do vs.push_back(constant());
      while (c_.accept(","));
    }
    c_.expect(close);
    return vs;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (c_.is("+") || c_.is("-")) {
      OpCode op = c_.next().text == "+" ? OpCode::Add : OpCode::Sub;
      e = make_op(op, {e, term()});
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (c_.accept("*")) e = make_op(OpCode::Mul, {e, unary()});
    return e;
  }

  ExprPtr unary() {
    if (c_.is("-") && c_.peek(1).kind == Token::Kind::Int) {
      c_.next();
      return make_const(Value::integer(integer(true)));
    }
    return primary();
  }

  std::int64_t integer(bool negative) {
    const Token& t = c_.next();
    std::string text = (negative ? "-" : "") + t.text;
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
      throw ParseError("integer literal out of range", t.line, t.column);
    return v;
  }

  ExprPtr primary() {
    const Token& t = c_.peek();
    switch (t.kind) {
      case Token::Kind::Int: return make_const(Value::integer(integer(false)));
      case Token::Kind::String: return make_const(Value::name(c_.next().text));
      case Token::Kind::End: c_.fail("expected an expression");
      case Token::Kind::Punct:
        if (c_.accept("{")) return make_const(Value::set(constants_until("}")));
        if (c_.accept("(")) {
          Restore<bool> mode(angle_, false);
          ExprPtr e = expr();
          c_.expect(")");
          return e;
        }
        c_.fail("expected an expression");
      case Token::Kind::Ident: break;
    }
    std::string id = c_.ident();
    if (id == "true") return make_const(Value::boolean(true));
    if (id == "false") return make_const(Value::boolean(false));
    if (id == "this" && c_.is(".")) {
      c_.next();
      return make_self(c_.ident("attribute name"));
    }
    if (id == "msg" && c_.is("[")) {
      if (!in_fn_) c_.fail_at(t, "msg[i] is only allowed in restriction functions");
      c_.next();
      if (c_.peek().kind != Token::Kind::Int) c_.fail("expected an index");
      auto idx = integer(false);
      c_.expect("]");
      return make_msg(static_cast<std::size_t>(idx));
    }
    if (id == "snd" && c_.is(".")) {
      if (!in_fn_) c_.fail_at(t, "snd.a is only allowed in restriction functions");
      c_.next();
      return make_sender(c_.ident("attribute name"));
    }
    if (is_op_name(id) && c_.is("(")) {
      OpCode op = *op_from_name(id);
      c_.next();
      std::vector<ExprPtr> args;
      if (!c_.is(")")) {
        do args.push_back(expr());
        while (c_.accept(","));
      }
      c_.expect(")");
      if (op_arity(op) >= 0 && static_cast<int>(args.size()) != op_arity(op))
        c_.fail_at(t, id + " expects " + std::to_string(op_arity(op)) + " arguments");
      return make_op(op, std::move(args));
    }
    if (bound(id)) return make_var(id);
    return make_attr(id);
  }

  // --- predicates --------------------------------------------------------

  PredPtr pred() {
    PredPtr p = conj();
    while (c_.accept("||")) p = make_or(p, conj());
    return p;
  }

  PredPtr conj() {
    PredPtr p = pred_unary();
    while (c_.accept("&&")) p = make_and(p, pred_unary());
    return p;
  }

  PredPtr pred_unary() {
    if (c_.accept("!")) return make_not(pred_unary());
    if (c_.accept("tt")) return make_tt();
    if (c_.accept("ff")) return make_ff();
    if (!c_.is("(")) return atom();
    return c_.first_of<PredPtr>({[&] { return atom(); },
                                 [&] {
                                   c_.expect("(");
                                   Restore<bool> mode(angle_, false);
                                   PredPtr p = pred();
                                   c_.expect(")");
                                   return p;
                                 }});
  }

  PredPtr atom() {
    ExprPtr lhs = expr();
    auto rel = rel_of(c_, angle_);
    if (!rel) c_.fail("expected a relation");
    c_.next();
    return make_atom(*rel, lhs, expr());
  }

  PredPtr guard() {
    if (c_.accept("tt")) return make_tt();
    if (c_.accept("ff")) return make_ff();
    c_.expect("(");
    Restore<bool> mode(angle_, false);
    PredPtr p = pred();
    c_.expect(")");
    return p;
  }

  // --- processes ---------------------------------------------------------

  ProcPtr process() {
    ProcPtr p = par();
    while (c_.accept("+")) p = make_choice(p, par());
    return p;
  }

  ProcPtr par() {
    ProcPtr p = prefix();
    while (c_.accept("|")) p = make_par(p, prefix());
    return p;
  }

  std::vector<Update> updates() {
    std::vector<Update> us;
    while (c_.accept("[")) {
      std::string a = c_.ident("attribute name");
      c_.expect(":=");
      us.push_back({a, expr()});
      c_.expect("]");
    }
    return us;
  }

  ProcPtr input_rest(PredPtr g) {
    c_.expect("(");
    std::vector<std::string> vars;
    if (!c_.is(")")) {
      do {
        const Token& at = c_.peek();
        std::string v = c_.ident("variable name");
        if (std::find(vars.begin(), vars.end(), v) != vars.end())
          c_.fail_at(at, "variable " + v + " bound twice");
        vars.push_back(v);
      } while (c_.accept(","));
    }
    c_.expect(")");
    c_.expect(".");
    g = bind_pred(g, {vars.begin(), vars.end()});
    Frame frame(scope_, vars);
    auto us = updates();
    ProcPtr cont = prefix();
    return make_input(g, std::move(vars), std::move(us), cont);
  }

  ProcPtr output() {
    c_.expect("(");
    std::vector<ExprPtr> es;
    if (!c_.is(")")) {
      do es.push_back(expr());
      while (c_.accept(","));
    }
    c_.expect(")");
    c_.expect("@");
    PredPtr target = guard();
    c_.expect(".");
    auto us = updates();
    return make_output(std::move(es), target, std::move(us), prefix());
  }

  ProcPtr prefix() {
    const Token& t = c_.peek();
    if (t.kind == Token::Kind::Int && t.text == "0") {
      c_.next();
      return make_nil();
    }
    if (c_.is("tt") || c_.is("ff")) return input_rest(guard());
    if (c_.accept("<")) {
      Restore<bool> mode(angle_, true);
      PredPtr g = pred();
      c_.expect(">");
      return make_aware(g, prefix());
    }
    if (c_.is("(")) {
      std::size_t mark = calls.size();
      auto undo = [&](auto alt) {
        return [this, mark, alt]() -> ProcPtr {
          calls.resize(mark);
          return alt();
        };
      };
      return c_.first_of<ProcPtr>({undo([&] { return input_rest(guard()); }),
                                   undo([&] { return output(); }), undo([&] {
                                     c_.expect("(");
                                     ProcPtr p = process();
                                     c_.expect(")");
                                     return p;
                                   })});
    }
    if (c_.is_ident()) {
      Token at = c_.peek();
      std::string name = c_.ident();
      std::vector<ExprPtr> args;
      if (c_.accept("(")) {
        if (!c_.is(")")) {
          do args.push_back(expr());
          while (c_.accept(","));
        }
        c_.expect(")");
      }
      calls.push_back({name, args.size(), at});
      return make_call(name, std::move(args));
    }
    c_.fail("expected a process");
  }

  // --- components --------------------------------------------------------

  AttributeEnv env() {
    AttributeEnv g;
    c_.expect("{");
    if (!c_.is("}")) {
      do {
        const Token& at = c_.peek();
        std::string a = c_.ident("attribute name");
        if (g.defines(a)) c_.fail_at(at, "attribute " + a + " defined twice");
        c_.expect("=");
        g.set(a, constant());
      } while (c_.accept(","));
    }
    c_.expect("}");
    return g;
  }

  CompPtr leaf_body() {
    c_.expect("{");
    AttributeEnv g;
    Interface iface;
    ProcPtr proc;
    while (!c_.is("}")) {
      const Token& at = c_.peek();
      std::string field = c_.ident("component field");
      c_.expect(":");
      if (field == "iface") {
        c_.expect("[");
        if (!c_.is("]")) {
          do iface.insert(c_.ident("attribute name"));
          while (c_.accept(","));
        }
        c_.expect("]");
      } else if (field == "env") {
        g = env();
      } else if (field == "run") {
        proc = process();
      } else {
        c_.fail_at(at, "unknown component field " + field);
      }
      if (!c_.accept(";")) break;
    }
    if (!proc) c_.fail("component has no run: field");
    c_.expect("}");
    return make_leaf(std::move(g), std::move(iface), proc);
  }

  FnPtr fn_ref() {
    const Token& at = c_.peek();
    std::string name = c_.ident("restriction function name");
    if (auto it = sys.fns.find(name); it != sys.fns.end()) return it->second;
    if (extra_fns)
      if (auto it = extra_fns->find(name); it != extra_fns->end()) return it->second;
    c_.fail_at(at, "unknown restriction function " + name);
  }

  CompPtr component() {
    CompPtr cmp = comp_atom();
    while (c_.accept("||")) cmp = make_comp_par(cmp, comp_atom());
    return cmp;
  }

  CompPtr comp_atom() {
    if (c_.accept("comp")) {
      if (c_.is_ident()) c_.fail("named components are declared at top level");
      return leaf_body();
    }
    for (const char* kw : {"restrictOut", "restrictIn"}) {
      if (!c_.accept(kw)) continue;
      c_.expect("(");
      FnPtr f = fn_ref();
      c_.expect(")");
      c_.expect("{");
      CompPtr inner = component();
      c_.expect("}");
      return std::string_view(kw) == "restrictOut" ? make_restrict_out(f, inner)
                                                   : make_restrict_in(f, inner);
    }
    if (c_.accept("(")) {
      CompPtr cmp = component();
      c_.expect(")");
      return cmp;
    }
    const Token& at = c_.peek();
    std::string name = c_.ident("component");
    auto it = named.find(name);
    if (it == named.end()) c_.fail_at(at, "unknown component " + name);
    return it->second;
  }

  // --- files -------------------------------------------------------------

  void file() {
    while (!c_.at_end()) {
      const Token& at = c_.peek();
      std::string kw = c_.ident("declaration");
      if (kw == "domain") {
        std::string a = c_.ident("attribute name");
        c_.expect(":");
        c_.expect("{");
        auto vs = constants_until("}");
        if (vs.empty()) c_.fail_at(at, "empty domain for " + a);
        sys.domains.declare(a, std::move(vs));
        c_.expect(";");
      } else if (kw == "fn") {
        std::string name = c_.ident("function name");
        if (sys.fns.count(name)) c_.fail_at(at, "function " + name + " defined twice");
        c_.expect("=");
        in_fn_ = true;
        PredPtr p = pred();
        in_fn_ = false;
        sys.fns[name] = make_fn(name, p);
        c_.expect(";");
      } else if (kw == "proc") {
        std::string name = c_.ident("process name");
        if (sys.defs.count(name)) c_.fail_at(at, "process " + name + " defined twice");
        std::vector<std::string> params;
        if (c_.accept("(")) {
          if (!c_.is(")")) {
            do params.push_back(c_.ident("parameter name"));
            while (c_.accept(","));
          }
          c_.expect(")");
        }
        c_.expect("=");
        ProcPtr body;
        {
          Frame frame(scope_, params);
          body = process();
        }
        sys.defs[name] = Definition{params, body};
        c_.expect(";");
      } else if (kw == "comp") {
        std::string name = c_.ident("component name");
        if (named.count(name)) c_.fail_at(at, "component " + name + " defined twice");
        named[name] = leaf_body();
        c_.accept(";");
      } else if (kw == "universe") {
        c_.expect("{");
        while (!c_.accept("}")) {
          c_.expect("in");
          AttributeEnv g = env();
          c_.expect("[");
          PredPtr p = pred();
          c_.expect("]");
          c_.expect("(");
          auto vs = constants_until(")");
          c_.expect(";");
          sys.universe.push_back(make_label(Label::Kind::Input, std::move(g), p, std::move(vs)));
        }
      } else if (kw == "system") {
        if (sys.root) c_.fail_at(at, "system defined twice");
        c_.expect("=");
        sys.root = component();
        c_.expect(";");
      } else {
        c_.fail_at(at, "unknown declaration " + kw);
      }
    }
  }

  void check_calls(const Definitions& defs) {
    for (const auto& cs : calls) {
      auto it = defs.find(cs.name);
      if (it == defs.end()) c_.fail_at(cs.at, "unknown process " + cs.name);
      if (it->second.params.size() != cs.arity)
        c_.fail_at(cs.at, cs.name + " expects " + std::to_string(it->second.params.size()) +
                              " arguments");
    }
  }

  void expect_end() {
    if (!c_.at_end()) c_.fail("unexpected trailing input");
  }

 private:
  bool bound(const std::string& id) const {
    for (const auto& frame : scope_)
      if (std::find(frame.begin(), frame.end(), id) != frame.end()) return true;
    return false;
  }

  Scope scope_;
  bool angle_ = false;
  bool in_fn_ = false;
};

}  // namespace

Program System::program() const {
  Program p;
  p.defs = defs;
  p.domains = domains;
  return p;
}

System parse_abc(std::string_view text) {
  AbcParser p(text);
  p.file();
  p.check_calls(p.sys.defs);
  return std::move(p.sys);
}

ProcPtr parse_process(std::string_view text, const Definitions* defs) {
  AbcParser p(text);
  ProcPtr proc = p.process();
  p.expect_end();
  if (defs) p.check_calls(*defs);
  return proc;
}

PredPtr parse_predicate(std::string_view text) {
  AbcParser p(text);
  PredPtr pred = p.pred();
  p.expect_end();
  return pred;
}

CompPtr parse_component(std::string_view text, const std::map<std::string, FnPtr>& fns,
                        const Definitions* defs) {
  AbcParser p(text);
  p.extra_fns = &fns;
  CompPtr c = p.component();
  p.expect_end();
  if (defs) p.check_calls(*defs);
  return c;
}

std::string pretty(const System& s) {
  std::string out;
  for (const auto& [a, vs] : s.domains.entries()) {
    out += "domain " + a + ": {";
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vs[i].to_string();
    out += "};\n";
  }
  for (const auto& [name, f] : s.fns) out += "fn " + name + " = " + to_string(*f->tmpl) + ";\n";
  for (const auto& [name, d] : s.defs) {
    out += "proc " + name;
    if (!d.params.empty()) {
      out += "(";
      for (std::size_t i = 0; i < d.params.size(); ++i) out += (i ? ", " : "") + d.params[i];
      out += ")";
    }
    out += " = " + to_string(*d.body) + ";\n";
  }
  if (!s.universe.empty()) {
    out += "universe {\n";
    for (const auto& l : s.universe)
      out += "  in " + l.env.to_string() + " [" + to_string(*l.pred) + "] " +
             to_string(std::span<const Value>(l.values)) + ";\n";
    out += "}\n";
  }
  if (s.root) out += "system = " + to_string(*s.root) + ";\n";
  return out;
}

bool equal(const System& a, const System& b) {
  if (!!a.root != !!b.root || (a.root && !equal(a.root, b.root))) return false;
  if (!equal(a.defs, b.defs) || !(a.domains == b.domains)) return false;
  if (a.fns.size() != b.fns.size()) return false;
  for (const auto& [name, f] : a.fns) {
    auto it = b.fns.find(name);
    if (it == b.fns.end() || !equal(f->tmpl, it->second->tmpl)) return false;
  }
  if (a.universe.size() != b.universe.size()) return false;
  for (std::size_t i = 0; i < a.universe.size(); ++i) {
    const Label &x = a.universe[i], &y = b.universe[i];
    if (x.kind != y.kind || !(x.env == y.env) || x.values != y.values || !equal(x.pred, y.pred))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// bπ parser

namespace bpi {
namespace {

class BpiParser {
 public:
  explicit BpiParser(std::string_view text) : c_(text) {}
  Cursor c_;

  TermPtr term() {
    TermPtr t = sum();
    while (c_.accept("||")) t = par(t, sum());
    return t;
  }

  TermPtr sum() {
    TermPtr t = prefix();
    while (c_.accept("+")) t = choice(t, prefix());
    return t;
  }

  Name name() {
    std::string n = c_.ident("name");
    return bound(n) ? bound_name(n) : free_name(n);
  }

  std::vector<Name> names_until(std::string_view close) {
    std::vector<Name> out;
    if (!c_.is(close)) {
      do out.push_back(name());
      while (c_.accept(","));
    }
    c_.expect(close);
    return out;
  }

  std::vector<std::string> binders_until(std::string_view close) {
    std::vector<std::string> out;
    if (!c_.is(close)) {
      do {
        const Token& at = c_.peek();
        std::string v = c_.ident("variable name");
        if (std::find(out.begin(), out.end(), v) != out.end())
          c_.fail_at(at, "variable " + v + " bound twice");
        out.push_back(v);
      } while (c_.accept(","));
    }
    c_.expect(close);
    return out;
  }

  TermPtr prefix() {
    if (c_.accept("nil")) return nil();
    if (c_.accept("tau")) {
      c_.expect(".");
      return tau(prefix());
    }
    if (c_.is("(") && c_.is("rec", 1)) {
      c_.next();
      c_.next();
      std::string id = c_.ident("recursion identifier");
      c_.expect("<");
      auto params = binders_until(">");
      c_.expect(".");
      TermPtr body;
      {
        Frame frame(scope_, params);
        Frame rec_frame(recs_, {id});
        body = term();
      }
      c_.expect(")");
      c_.expect("<");
      auto args = names_until(">");
      if (args.size() != params.size())
        c_.fail(id + " expects " + std::to_string(params.size()) + " arguments");
      return rec(id, params, body, args);
    }
    if (c_.accept("(")) {
      TermPtr t = term();
      c_.expect(")");
      return t;
    }
    if (!c_.is_ident()) c_.fail("expected a term");
    if (c_.is("<", 1)) {
      const Token& at = c_.peek();
      std::string id = c_.ident();
      if (!in_scope(recs_, id))
        c_.fail_at(at, "unknown recursion identifier " + id);
      c_.expect("<");
      return call(id, names_until(">"));
    }
    Name ch = name();
    if (c_.accept("!")) {
      c_.expect("<");
      auto args = names_until(">");
      c_.expect(".");
      return output(ch, std::move(args), prefix());
    }
    c_.expect("(");
    auto vars = binders_until(")");
    c_.expect(".");
    TermPtr cont;
    {
      Frame frame(scope_, vars);
      cont = prefix();
    }
    return input(ch, std::move(vars), cont);
  }

  void expect_end() {
    if (!c_.at_end()) c_.fail("unexpected trailing input");
  }

 private:
  bool bound(const std::string& id) const {
    for (const auto& frame : scope_)
      if (std::find(frame.begin(), frame.end(), id) != frame.end()) return true;
    return false;
  }

  static bool in_scope(const Scope& s, const std::string& id) {
    for (const auto& frame : s)
      if (std::find(frame.begin(), frame.end(), id) != frame.end()) return true;
    return false;
  }

  Scope scope_;
  Scope recs_;
};

}  // namespace

TermPtr parse_bpi(std::string_view text) {
  BpiParser p(text);
  TermPtr t = p.term();
  p.expect_end();
  return t;
}

std::string pretty(const Term& t) { return to_string(t); }

}  // namespace bpi
}  // namespace abc
