#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abc/lts.hpp"

namespace abc {

/// One round of the distinguishing game. Sides are 0 (left) and 1 (right);
/// state indices are local to that side's (saturated, for weak checks) LTS.
struct WitnessStep {
  int attacker = 0;
  Label label;
  std::size_t attacker_from = 0;
  std::size_t attacker_to = 0;
  std::size_t defender_from = 0;
  /// The defender's best reply; empty on the final step, where it has none.
  std::optional<std::size_t> defender_to;
};

struct Witness {
  std::vector<WitnessStep> steps;
  /// Label texts of the attacker moves, in order.
  std::vector<std::string> trace() const;
};

struct Verdict {
  bool equivalent = false;
  /// Some exploration hit a bound; the verdict holds only for the explored part.
  bool inconclusive = false;
  bool weak = true;
  std::optional<Witness> witness;
  std::string universe_fingerprint;
  std::size_t universe_size = 0;
  std::size_t left_states = 0;
  std::size_t right_states = 0;
};

struct BisimOptions {
  bool weak = true;
  /// When set, the universe is the shared-alphabet closure of both systems
  /// started from `universe`; otherwise `universe` is used as is.
  bool close_universe = true;
  LabelUniverse universe;
  ExploreOptions explore;
};

/// Compares two explored LTSs (saturating them first when `weak`) by
/// partition refinement with labels grouped by label_equiv.
Verdict compare_lts(const Lts& left, const Lts& right, const Solver& solver, bool weak);

Verdict check_bisim(const Subject& left, const Subject& right, const Solver& solver,
                    const BisimOptions& opts);
Verdict strong_bisim(const Subject& left, const Subject& right, const Solver& solver,
                     BisimOptions opts = {});
Verdict weak_bisim(const Subject& left, const Subject& right, const Solver& solver,
                   BisimOptions opts = {});

/// Re-checks a witness against the raw LTSs: every recorded move exists and
/// the defender has no matching move at the final step.
bool replay_witness(const Witness& w, const Lts& left, const Lts& right, const Solver& solver,
                    bool weak);

/// One representative per ≃-class of non-silent output predicates enabled
/// at `state`; weak_barbs also looks through τ steps.
std::vector<PredPtr> barbs(const Lts& lts, std::size_t state, const Solver& solver);
std::vector<PredPtr> weak_barbs(const Lts& lts, std::size_t state, const Solver& solver);
std::vector<PredPtr> barbs(const CompPtr& c, const Program& prog, const Solver& solver);

/// Set equality up to ≃.
bool same_barbs(const std::vector<PredPtr>& a, const std::vector<PredPtr>& b,
                const Solver& solver);

}  // namespace abc
