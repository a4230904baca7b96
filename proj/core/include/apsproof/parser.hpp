// Rule-file parsing with located diagnostics.
//
// Grammar:
//   system ::= stmt*
//   stmt   ::= atom ("<-" atom ("," atom)*)? "."
//   atom   ::= IDENT "(" word ")"
//   word   ::= (SYM ws)* ("x" | "eps" | <empty>)
// Comments run from "#" to end of line; whitespace is insignificant. "x" is
// reserved as the rule variable and "eps" as the empty word; P() == P(eps).
// Elimination rules put the stepped premise first, as in Q(x) <- P(a x), R(x).
#ifndef APSPROOF_PARSER_HPP
#define APSPROOF_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "apsproof/system.hpp"

namespace aps {

struct Diagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct ParseResult {
  std::optional<System> system;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return system.has_value() && diagnostics.empty(); }
};

/// Parses a rule file, infers the signature from use and validates that
/// every rule matches one of the five pushdown-system shapes. Rule ids are
/// "r1", "r2", ... in file order. All diagnostics are collected; `system`
/// is absent when any were produced.
ParseResult parse_system(const std::string& text);

/// Parses a closed atom ("P(a a)", "P(eps)", "P()"). The variable is not
/// allowed. Validates against `sig` when given.
std::optional<Atom> parse_atom(const std::string& text, std::string* error = nullptr,
                               const Signature* sig = nullptr);

}  // namespace aps

#endif  // APSPROOF_PARSER_HPP
