#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "abc/lts.hpp"
#include "abc/semantics.hpp"
#include "abc/syntax.hpp"

namespace abc::bpi {

/// A channel or message name: either a variable bound by an input or a
/// recursion parameter, or a free name (a constant).
struct Name {
  std::string text;
  bool bound = false;

  friend bool operator==(const Name&, const Name&) = default;
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Nil, Tau, Input, Output, Choice, Rec, Call, Par };

  Kind kind = Kind::Nil;
  Name channel;                   // Input/Output
  std::vector<Name> args;         // Output payload, Rec/Call arguments
  std::vector<std::string> vars;  // Input binders, Rec parameters
  TermPtr left, right;            // continuation, Choice/Par operands, Rec body
  std::string name;               // Rec/Call identifier
};

TermPtr nil();
TermPtr tau(TermPtr cont);
TermPtr input(Name channel, std::vector<std::string> vars, TermPtr cont);
TermPtr output(Name channel, std::vector<Name> args, TermPtr cont);
TermPtr choice(TermPtr a, TermPtr b);
TermPtr rec(std::string id, std::vector<std::string> params, TermPtr body, std::vector<Name> args);
TermPtr call(std::string id, std::vector<Name> args);
TermPtr par(TermPtr a, TermPtr b);

Name free_name(std::string n);
Name bound_name(std::string n);

bool equal(const TermPtr& a, const TermPtr& b);

/// `a(x).nil + tau.b!<x>.nil`, `(rec A<x>. a!<x>.A<x>)<c>`, `P || Q`.
std::string to_string(const Term& t);
/// Canonical identity: bound names renamed positionally.
std::string canonical_key(const Term& t);

/// Free names in order of first occurrence (channels and payloads).
std::vector<std::string> free_names(const Term& t);

/// Renames free names (not bound variables) according to `sigma`.
TermPtr rename(const TermPtr& t, const std::map<std::string, std::string>& sigma);

struct Definition {
  std::vector<std::string> params;
  TermPtr body;
};

/// A term with its recursion definitions lifted out: every `(rec A<x>. G)<y>`
/// becomes `A<y>` with A recorded once.
struct Program {
  TermPtr root;
  std::map<std::string, Definition> defs;
};

/// Lifts recursion definitions and checks closedness: the top term has no
/// free variables and every body's free variables are among its parameters.
/// Throws WellFormednessError.
Program lift(const TermPtr& t);

struct Label {
  enum class Kind { Tau, Output, Input };

  Kind kind = Kind::Tau;
  std::string channel;
  std::vector<std::string> values;

  friend bool operator==(const Label&, const Label&) = default;
};

std::string to_string(const Label& l);

struct Step {
  Label label;
  TermPtr target;
};

/// τ and broadcast-output transitions. A broadcast on channel a reaches every
/// parallel sibling: those with an enabled input on a of matching arity
/// receive, the others discard and stay unchanged.
std::vector<Step> steps(const TermPtr& t, const Program& prog);

/// Reaction to an incoming broadcast. Empty iff the term discards.
std::vector<TermPtr> respond(const TermPtr& t, const std::string& channel,
                             const std::vector<std::string>& values, const Program& prog);

/// Input step a(z̃): the reactions, or the term itself if it discards.
std::vector<TermPtr> input_steps(const TermPtr& t, const std::string& channel,
                                 const std::vector<std::string>& values, const Program& prog);

// ---------------------------------------------------------------------------
// Encoding into AbC

struct Encoding {
  CompPtr system;
  Definitions defs;
  std::string fresh;  // the variable carrying the channel in encoded inputs
};

/// Chooses the encoding variable: "y", "y1", "y2", ... not used anywhere in
/// the program.
std::string fresh_variable(const Program& prog);

/// Table-driven translation: nil → 0, τ.G → ()@ff.⟦G⟧, ā z̃.G → (a, z̃)@tt.⟦G⟧,
/// a(x̃).G → (y == a)(y, x̃).⟦G⟧, choice pointwise, recursion → definitions,
/// sequential terms → `∅:∅ P` leaves, parallel → component parallel.
Encoding encode(const Program& prog);
/// Encodes a reachable state of `prog` reusing its fresh variable.
CompPtr encode_state(const TermPtr& state, const std::string& fresh);
ProcPtr encode_process(const TermPtr& g, const std::string& fresh);

/// The AbC label a bπ τ/output corresponds to: `{}▷ff()` or `{}▷tt(a, z̃)`.
abc::Label encoded_label(const Label& l);

struct Bounds {
  std::size_t max_states = 10000;
};

struct CorrespondenceReport {
  bool ok = true;
  std::size_t states = 0;
  std::size_t transitions = 0;
  std::size_t inputs = 0;
  std::vector<std::string> violations;
};

/// Walks the bπ state space (τ, outputs and inputs over the harvested
/// broadcast alphabet) and at every state compares the bπ transitions with
/// those of the encoding: same labels and targets ≡ encoding of the bπ
/// targets in both directions, equal transition counts, matching barbs, and
/// matching input reactions.
CorrespondenceReport correspondence_check(const Program& prog, const Bounds& bounds = {});

/// bπ transition graph in the shape of an AbC LTS (τ as ff-outputs, outputs
/// as {}▷tt(a, z̃), inputs as the matching input labels, discards as
/// self-loops), over the given broadcast alphabet.
Lts bpi_lts(const Program& prog, const std::vector<Label>& alphabet, const Bounds& bounds = {});

/// Output messages reachable from the program through τ/output steps.
std::vector<Label> harvest_alphabet(const Program& prog, const Bounds& bounds = {});

/// Strong or weak bisimilarity of two bπ programs over their joint alphabet.
bool bisimilar(const Program& a, const Program& b, bool weak, const Bounds& bounds = {});

}  // namespace abc::bpi
