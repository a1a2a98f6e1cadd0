#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "abc/env.hpp"
#include "abc/error.hpp"
#include "abc/syntax.hpp"

namespace abc {

/// Variable bindings used during evaluation.
using Substitution = std::map<std::string, Value>;

/// ⟦E⟧_Γ. Bare attributes and this.a both read Γ. Throws EvalError.
Value eval_expr(const Expr& e, const AttributeEnv& env, const Substitution& sigma = {});

/// Applies `[a := E]` updates left to right; each right-hand side sees the
/// environment produced by the previous update. Throws EvalError, including
/// DomainViolation when a declared domain rejects the new value.
AttributeEnv apply_updates(AttributeEnv env, std::span<const Update> updates,
                           const DomainContext& domains = {});

/// Leaf-level form: evaluates the updates against the leaf's environment
/// and returns the leaf running `cont`.
CompPtr apply_updates(const Component& leaf, std::span<const Update> updates, ProcPtr cont,
                      const DomainContext& domains = {});

/// Simultaneous substitution of values for variables. Inner binders shadow.
/// Throws EvalError(ArityMismatch) when the lengths differ.
ExprPtr substitute(const ExprPtr& e, const Substitution& sigma);
PredPtr substitute_pred(const PredPtr& p, const Substitution& sigma);
PredPtr substitute_pred(const PredPtr& p, std::span<const std::string> vars,
                        std::span<const Value> values);
ProcPtr substitute(const ProcPtr& p, const Substitution& sigma);
ProcPtr substitute(const ProcPtr& p, std::span<const std::string> vars,
                   std::span<const Value> values);

Substitution bind(std::span<const std::string> vars, std::span<const Value> values);

std::set<std::string> free_vars(const Expr& e);
std::set<std::string> free_vars(const Pred& p);
std::set<std::string> free_vars(const Process& p);

/// Unfolds a call K(Ẽ) to its definition body with arguments evaluated
/// under `env`. Throws EvalError(UnknownProcess) or (ArityMismatch).
ProcPtr unfold(const Process& call, const Definitions& defs, const AttributeEnv& env);

/// Checks that every call resolves with the right arity, every definition
/// body is closed under its parameters, every recursive cycle passes an
/// action prefix, and msg[i]/snd.a appear only inside restriction templates.
/// Throws WellFormednessError.
void check_definitions(const Definitions& defs);

/// Checks a component tree against `defs`: leaf processes closed, calls
/// resolvable, no template-only references. Throws WellFormednessError.
void check_component(const Component& c, const Definitions& defs);

}  // namespace abc
