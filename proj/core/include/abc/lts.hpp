#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "abc/predicate.hpp"
#include "abc/semantics.hpp"

namespace abc {

/// Label equivalence: same kind, environment and values with
/// equivalent predicates; any two outputs with unsatisfiable predicates are
/// equivalent regardless of environment and values.
bool label_equiv(const Label& a, const Label& b, const Solver& solver);

/// Finite set of input labels the environment may inject.
class LabelUniverse {
 public:
  LabelUniverse() = default;

  /// Adds `l` (as an input label) unless an equivalent label is present.
  /// Returns true if the universe grew.
  bool add(const Label& l, const Solver& solver);

  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  /// FNV-1a 64 over the sorted label texts, rendered as 16 hex digits.
  std::string fingerprint() const;

 private:
  std::vector<Label> labels_;
};

struct Transition {
  std::size_t src = 0;
  Label label;
  std::size_t dst = 0;
  bool tau = false;  // output with an unsatisfiable predicate
};

struct ExploreOptions {
  std::size_t max_states = 100000;
  std::size_t max_depth = 1000;
  unsigned jobs = 1;
};

/// Explored finite transition graph. State 0 is the initial state.
struct Lts {
  std::vector<CompPtr> states;
  std::vector<std::string> keys;  // canonical_key of each state
  std::vector<Transition> transitions;
  bool truncated = false;
  std::size_t frontier = 0;  // discovered but unexpanded states when truncated
  std::string truncation_reason;

  std::size_t initial() const { return 0; }
  std::size_t state_count() const { return states.size(); }
  /// Transition indices grouped by source state.
  std::vector<std::vector<std::size_t>> outgoing() const;
};

/// A system together with the program it runs under.
struct Subject {
  CompPtr system;
  const Program* program = nullptr;
};

/// Breadth-first exploration of outputs and of every universe input.
/// Successors are enumerated in (label text, state key) order, so numbering
/// is deterministic and independent of `jobs`. Hitting a bound sets
/// `truncated`; use require_complete to turn that into BoundExceeded.
Lts explore(const Subject& subject, const LabelUniverse& universe, const Solver& solver,
            const ExploreOptions& opts = {});

/// Throws BoundExceeded if `lts` was truncated.
void require_complete(const Lts& lts);

/// Shared-alphabet closure: starting from `extra`, repeatedly explores every
/// subject and adds each emitted non-silent output as an input label, until
/// no new label appears or `max_rounds` is reached.
LabelUniverse shared_alphabet(const std::vector<Subject>& subjects, const Solver& solver,
                              const LabelUniverse& extra = {}, const ExploreOptions& opts = {},
                              std::size_t max_rounds = 8);

/// Saturated LTS: τ-edges form the reflexive-transitive τ closure and every
/// visible edge λ becomes ⇒λ⇒. Silent edges carry the label `tau_label()`.
Lts weak_closure(const Lts& lts);

Label tau_label();

/// Pairs (s, t) with s --Γ▷Π'(ṽ)--> t for some output with Π' ≃ Π. With
/// `weak`, pairs are closed under preceding and following τ steps.
std::set<std::pair<std::size_t, std::size_t>> reduction_over(const Lts& lts, const PredPtr& pred,
                                                              const Solver& solver,
                                                              bool weak = false);

/// Aldebaran text: `des (0,<#transitions>,<#states>)` then one
/// `(<src>,"<label>",<dst>)` line per transition; silent ones print `tau`.
/// Predicates are printed in solver-normalized form.
std::string export_aut(const Lts& lts, const Solver& solver);
void write_aut(const Lts& lts, const Solver& solver, const std::string& path);

}  // namespace abc
