// Shared fixtures: the reference pushdown system and friends.
#ifndef APSPROOF_TESTS_FIXTURES_HPP
#define APSPROOF_TESTS_FIXTURES_HPP

#include <stdexcept>
#include <string>

#include "apsproof/parser.hpp"
#include "apsproof/system.hpp"

namespace fixtures {

// The running example used across the suites: seven rules over predicates
// P, Q, R, S, T, U, V and the single stack symbol a. P is provable nowhere:
// its Q-and-R route needs U or V (no rules) and its S route needs S (no
// rules); T holds everywhere and R(a w) always holds.
inline const char* kReferenceText =
    "Q(a x) <- U(x).\n"
    "Q(a x) <- V(x).\n"
    "R(a x) <- T(x).\n"
    "T(x).\n"
    "P(x) <- Q(x), R(x).\n"
    "P(x) <- S(x).\n"
    "Q(x) <- P(a x).\n";

// The automaton the reference system saturates to.
inline const char* kReferenceAutomatonText =
    "P(a x) <- U(x), T(x).\n"
    "P(a x) <- V(x), T(x).\n"
    "Q(a x) <- U(x).\n"
    "Q(a x) <- V(x).\n"
    "R(a x) <- T(x).\n"
    "T(x).\n";

// The refutation side of the automaton: one premise picked from every
// automaton rule concluding each basis pattern.
inline const char* kReferenceComplementText =
    "P(a x) <- U(x), V(x).\n"
    "P(a x) <- U(x), T(x).\n"
    "P(a x) <- T(x), V(x).\n"
    "P(a x) <- T(x).\n"
    "P(eps).\n"
    "Q(a x) <- U(x), V(x).\n"
    "Q(eps).\n"
    "R(a x) <- T(x).\n"
    "R(eps).\n"
    "S(x).\n"
    "U(x).\n"
    "V(x).\n";

inline aps::System parse_or_die(const std::string& text) {
  aps::ParseResult parsed = aps::parse_system(text);
  if (!parsed.system.has_value()) {
    std::string message = "fixture must parse";
    for (const auto& d : parsed.diagnostics) message += "\n  " + aps::to_string(d);
    throw std::logic_error(message);
  }
  return std::move(*parsed.system);
}

inline aps::System reference_system() { return parse_or_die(kReferenceText); }
inline aps::System reference_automaton() { return parse_or_die(kReferenceAutomatonText); }

inline aps::Atom atom(const std::string& text) {
  std::string error;
  auto out = aps::parse_atom(text, &error);
  if (!out.has_value()) throw std::logic_error("fixture atom '" + text + "': " + error);
  return *out;
}

}  // namespace fixtures

#endif  // APSPROOF_TESTS_FIXTURES_HPP
