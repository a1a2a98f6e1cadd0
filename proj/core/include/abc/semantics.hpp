#pragma once

#include <string>
#include <vector>

#include "abc/env.hpp"
#include "abc/syntax.hpp"

namespace abc {

/// Transition label. Output and Input carry the sender's exposed environment
/// (already restricted to its interface), the sender's closed predicate and
/// the transmitted values. Discard exists only at component level.
struct Label {
  enum class Kind { Output, Input, Discard };

  Kind kind = Kind::Output;
  AttributeEnv env;
  PredPtr pred;
  Values values;

  bool is_output() const { return kind == Kind::Output; }
  bool is_input() const { return kind == Kind::Input; }
};

Label make_label(Label::Kind kind, AttributeEnv env, PredPtr pred, Values values);
/// The same message seen from the receiving side.
Label as_input(const Label& output);

/// `out {role="fwd"} [role == "client"] ("p", "v")`; `in` / `discard` for
/// the other kinds.
std::string to_string(const Label& l);

/// Everything the transition relation needs besides the term itself.
struct Program {
  Definitions defs;
  DomainContext domains;
  /// When set, an evaluation failure aborts the enumeration with EvalError
  /// instead of suppressing the transition that triggered it.
  bool strict = false;
};

struct Step {
  Label label;
  CompPtr target;
};

/// Output transitions of a leaf Γ:_I P. Label env is Γ↓I, the predicate is
/// closed under the full Γ, values are evaluated under Γ, and the target has
/// the continuation's updates applied.
std::vector<Step> component_out_steps(const Component& leaf, const Program& prog);

struct InResponse {
  /// True iff no branch accepts; then `accepted` is empty.
  bool discarded = true;
  std::vector<CompPtr> accepted;
};

/// Reaction of a leaf to an incoming message (label kind is ignored; env,
/// pred and values are read). One accepted successor per accepting branch.
InResponse component_in_step(const Component& leaf, const Label& msg, const Program& prog);

/// System-level outputs: broadcast delivery through parallel composition,
/// predicate strengthening under output restriction, pass-through under
/// input restriction.
std::vector<Step> system_out_steps(const CompPtr& c, const Program& prog);

/// System-level reaction to an input label. Never empty: a component that
/// cannot accept stays as it is.
std::vector<CompPtr> system_in_step(const CompPtr& c, const Label& msg, const Program& prog);

}  // namespace abc
