#pragma once

#include "slhyper/formula.hpp"

#include <string>

namespace slhyper {

/// Parses the concrete SL_ii grammar:
///   state  := 'forall' x ':' o '.' state | 'exists' x ':' o '.' state
///           | 'bind' agent x '.' state | state '&' state | state '|' state
///           | '(' state ')' | path
///   path   := LTL over atoms, 'true'/'false', '! & | -> <->', 'X U W F G'
/// '&'/'|' between two plain path formulas is read at the path level.
/// Throws Error with a character position on syntax errors; the result is
/// well-formed (desugared, all bind variables quantified in scope).
SliiPtr parse_slii(const std::string& text);

/// Parses the concrete HyperSL grammar:
///   state := 'forall' x '.' state | 'exists' x '.' state
///          | state '&' state | state '|' state | '(' state ')'
///          | '[' p ':' '(' agent '=' x {',' agent '=' x} ')' {';' ...} ']' path
/// Path atoms are written 'ap@pathvar' (split at the last '@').
HyperPtr parse_hypersl(const std::string& text);

} // namespace slhyper
