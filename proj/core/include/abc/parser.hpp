#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "abc/bpi.hpp"
#include "abc/semantics.hpp"
#include "abc/syntax.hpp"

namespace abc {

/// Contents of an `.abc` file.
struct System {
  CompPtr root;  // null when the file has no `system = ...;` line
  Definitions defs;
  DomainContext domains;
  std::map<std::string, FnPtr> fns;
  std::vector<Label> universe;  // input labels

  Program program() const;
};

/// Parses an `.abc` file. Throws ParseError (with line and column) on syntax
/// errors, unknown identifiers and arity errors.
System parse_abc(std::string_view text);

/// Parses a single process, predicate or component in the `.abc` syntax.
/// `defs` and `fns` resolve calls and restriction names; calls to unknown
/// processes are accepted when `defs` is null.
ProcPtr parse_process(std::string_view text, const Definitions* defs = nullptr);
PredPtr parse_predicate(std::string_view text);
CompPtr parse_component(std::string_view text, const std::map<std::string, FnPtr>& fns = {},
                        const Definitions* defs = nullptr);

/// Renders a System so that parse_abc(pretty(s)) yields an equal System.
/// Named component declarations are not preserved; components are inlined.
std::string pretty(const System& s);

bool equal(const System& a, const System& b);

namespace bpi {

/// Parses a `.bpi` term. Identifiers bound by an enclosing input or recursion
/// parameter list are bound names; all others are free names.
TermPtr parse_bpi(std::string_view text);

/// Same as to_string; provided for symmetry with parse_bpi.
std::string pretty(const Term& t);

}  // namespace bpi

}  // namespace abc
