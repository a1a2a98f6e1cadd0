#pragma once

#include <string>

#include "abc/syntax.hpp"

namespace abc {

/// Concrete-syntax rendering. The output parses back to an equal term
/// (see parser.hpp) and inserts parentheses only where precedence needs them.
std::string to_string(const Expr& e);
std::string to_string(const Pred& p);
std::string to_string(const Process& p);
std::string to_string(const Component& c);

std::string interface_to_string(const Interface& iface);

/// Like to_string, but input binders are renamed positionally (`%0`, `%1`,
/// ...) so that alpha-equivalent terms produce the same key. Used to identify
/// LTS states.
std::string canonical_key(const Process& p);
std::string canonical_key(const Component& c);

}  // namespace abc
