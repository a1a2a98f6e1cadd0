#pragma once

#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>

#include "abc/env.hpp"
#include "abc/syntax.hpp"

namespace abc {

/// Γ ⊨ Π. Bare attributes and this.a read Γ. An atom with an undefined
/// operand (unmapped attribute, failed operator, unbound variable) is
/// unsatisfied, except `!=`, which is the negation of `==` so that
/// `a != v` and `!(a == v)` agree everywhere.
bool satisfies(const AttributeEnv& env, const Pred& p);

/// {Π}_Γ: replaces this.a by Γ(a) and folds constant subterms.
/// Throws EvalError(UndefinedAttribute) if a referenced this.a is unmapped.
PredPtr close(const PredPtr& p, const AttributeEnv& env);

/// f(Γ, ṽ): instantiates msg[i] with values[i] and snd.a with sender(a).
/// A reference that cannot be resolved makes its atom behave as if the
/// operand were undefined.
PredPtr instantiate(const RestrictionFn& f, const AttributeEnv& sender,
                    std::span<const Value> values);

/// Local rewriting: constant atoms, tt/ff absorption, double negation.
PredPtr simplify(const PredPtr& p);

/// Attribute identifiers (bare or this.) mentioned by Π.
std::set<AttributeId> attributes_of(const Pred& p);

/// Decides satisfiability of closed predicates by finite witness enumeration.
///
/// Candidate values per attribute are its declared domain if any; otherwise
/// the constants of Π, integer representatives around and between integer
/// constants, fresh names, subsets of membership constants, and the
/// undefined option. Complete when atoms compare attributes with constants or
/// with each other; sound but possibly incomplete when attributes appear under
/// arithmetic. Thread-safe; results are memoized per instance.
class Solver {
 public:
  explicit Solver(DomainContext domains = {});

  const DomainContext& domains() const { return domains_; }

  bool is_sat(const PredPtr& p) const;
  /// A satisfying environment, or nullopt if none exists.
  std::optional<AttributeEnv> witness(const PredPtr& p) const;
  bool implies(const PredPtr& a, const PredPtr& b) const;
  bool equiv(const PredPtr& a, const PredPtr& b) const;
  bool is_ff(const PredPtr& p) const { return !is_sat(p); }
  bool is_tt(const PredPtr& p) const;

  /// Simplified form; collapses to tt or ff when the solver proves it.
  PredPtr normalize(const PredPtr& p) const;

 private:
  DomainContext domains_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, bool> cache_;
};

bool is_sat(const PredPtr& p, const DomainContext& domains = {});
bool implies(const PredPtr& a, const PredPtr& b, const DomainContext& domains = {});
bool equiv(const PredPtr& a, const PredPtr& b, const DomainContext& domains = {});

}  // namespace abc
