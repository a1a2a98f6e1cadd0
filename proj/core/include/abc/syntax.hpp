#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abc/env.hpp"
#include "abc/value.hpp"

namespace abc {

struct Expr;
struct Pred;
struct Process;
struct Component;
struct RestrictionFn;

using ExprPtr = std::shared_ptr<const Expr>;
using PredPtr = std::shared_ptr<const Pred>;
using ProcPtr = std::shared_ptr<const Process>;
using CompPtr = std::shared_ptr<const Component>;
using FnPtr = std::shared_ptr<const RestrictionFn>;

// ---------------------------------------------------------------------------
// Expressions

/// Fixed operator catalogue. Arity is checked at construction.
enum class OpCode {
  Add,       // int + int
  Sub,       // int - int
  Mul,       // int * int
  Tuple,     // tuple(E1, ..., En)
  Get,       // get(tuple, index), zero-based
  Insert,    // insert(set, E)
  Remove,    // remove(set, E)
  Contains,  // contains(set, E) -> bool
};

const char* op_name(OpCode op);
/// Required argument count, or -1 for variadic.
int op_arity(OpCode op);
std::optional<OpCode> op_from_name(const std::string& name);

struct Expr {
  enum class Kind {
    Const,
    Var,         // input-bound or definition-parameter variable
    Attr,        // bare attribute identifier a
    SelfAttr,    // this.a
    Op,
    MsgRef,      // msg[i], restriction templates only
    SenderAttr,  // snd.a, restriction templates only
  };

  Kind kind = Kind::Const;
  Value value;
  std::string name;
  std::size_t index = 0;
  OpCode op = OpCode::Add;
  std::vector<ExprPtr> args;
};

ExprPtr make_const(Value v);
ExprPtr make_var(std::string name);
ExprPtr make_attr(std::string name);
ExprPtr make_self(std::string name);
ExprPtr make_msg(std::size_t index);
ExprPtr make_sender(std::string name);
/// Throws std::invalid_argument on arity mismatch. A tuple built from
/// constants folds to a constant tuple value.
ExprPtr make_op(OpCode op, std::vector<ExprPtr> args);

// ---------------------------------------------------------------------------
// Predicates

enum class Rel { Eq, Ne, Lt, Le, Gt, Ge, In };

const char* rel_name(Rel r);

struct Pred {
  enum class Kind { True, False, Atom, Not, And, Or };

  Kind kind = Kind::True;
  Rel rel = Rel::Eq;
  ExprPtr lhs, rhs;
  PredPtr left, right;  // Not uses left only
};

PredPtr make_tt();
PredPtr make_ff();
PredPtr make_atom(Rel r, ExprPtr lhs, ExprPtr rhs);
PredPtr make_not(PredPtr p);
PredPtr make_and(PredPtr a, PredPtr b);
PredPtr make_or(PredPtr a, PredPtr b);

// ---------------------------------------------------------------------------
// Processes

struct Update {
  AttributeId attr;
  ExprPtr value;
};

struct Process {
  enum class Kind { Nil, Output, Input, Aware, Choice, Par, Call };

  Kind kind = Kind::Nil;
  std::vector<ExprPtr> exprs;      // Output payload, Call arguments
  PredPtr pred;                    // Output target, Input guard, Aware guard
  std::vector<std::string> vars;   // Input binders
  std::vector<Update> updates;     // applied after Output/Input
  ProcPtr left;                    // continuation (Output/Input/Aware), Choice/Par lhs
  ProcPtr right;                   // Choice/Par rhs
  std::string name;                // Call
};

ProcPtr make_nil();
ProcPtr make_output(std::vector<ExprPtr> exprs, PredPtr target, std::vector<Update> updates,
                    ProcPtr cont);
ProcPtr make_input(PredPtr guard, std::vector<std::string> vars, std::vector<Update> updates,
                   ProcPtr cont);
ProcPtr make_aware(PredPtr guard, ProcPtr body);
ProcPtr make_choice(ProcPtr a, ProcPtr b);
ProcPtr make_par(ProcPtr a, ProcPtr b);
ProcPtr make_call(std::string name, std::vector<ExprPtr> args = {});

struct Definition {
  std::vector<std::string> params;
  ProcPtr body;
};

/// Process definitions K(x̃) ≜ P.
using Definitions = std::map<std::string, Definition>;

// ---------------------------------------------------------------------------
// Components

/// A restriction function f(Γ, ṽ): a predicate template whose msg[i] and
/// snd.a references are instantiated from the message values and the
/// sender's exposed environment. Bare attributes refer to receivers.
struct RestrictionFn {
  std::string name;
  PredPtr tmpl;
};

struct Component {
  enum class Kind { Leaf, Par, RestrictOut, RestrictIn };

  Kind kind = Kind::Leaf;
  AttributeEnv env;
  Interface iface;
  ProcPtr proc;
  CompPtr left, right;  // Par; restrictions use left as the inner component
  FnPtr fn;
};

CompPtr make_leaf(AttributeEnv env, Interface iface, ProcPtr proc);
CompPtr make_comp_par(CompPtr a, CompPtr b);
CompPtr make_restrict_out(FnPtr f, CompPtr inner);
CompPtr make_restrict_in(FnPtr f, CompPtr inner);
FnPtr make_fn(std::string name, PredPtr tmpl);

// ---------------------------------------------------------------------------
// Structural equality (deep, by value)

bool equal(const Expr& a, const Expr& b);
bool equal(const Pred& a, const Pred& b);
bool equal(const Process& a, const Process& b);
bool equal(const Component& a, const Component& b);
bool equal(const ExprPtr& a, const ExprPtr& b);
bool equal(const PredPtr& a, const PredPtr& b);
bool equal(const ProcPtr& a, const ProcPtr& b);
bool equal(const CompPtr& a, const CompPtr& b);
bool equal(const Definitions& a, const Definitions& b);

}  // namespace abc
