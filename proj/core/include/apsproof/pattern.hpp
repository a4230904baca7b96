// Prefix patterns over one shared variable, matching and unification.
#ifndef APSPROOF_PATTERN_HPP
#define APSPROOF_PATTERN_HPP

#include <optional>
#include <string>
#include <utility>

#include "apsproof/types.hpp"

namespace aps {

enum class Tail { Var, Ground };

/// An atom schema: P(prefix . x) when tail is Var, the closed atom P(prefix)
/// when tail is Ground. All Var patterns of one rule share the variable.
struct Pattern {
  std::string predicate;
  Word prefix;
  Tail tail = Tail::Var;

  auto operator<=>(const Pattern&) const = default;

  bool is_ground() const { return tail == Tail::Ground; }
};

std::string to_string(const Pattern& p);

Pattern ground_pattern(std::string predicate, Word word);
Pattern var_pattern(std::string predicate, Word prefix);

/// A substitution for the rule variable: x -> word . x' when keeps_var,
/// x -> word (closing the pattern) otherwise.
struct PatternSubst {
  Word word;
  bool keeps_var = true;

  static PatternSubst identity() { return {{}, true}; }
  static PatternSubst close(Word w) { return {std::move(w), false}; }
  static PatternSubst extend(Word w) { return {std::move(w), true}; }

  bool operator==(const PatternSubst&) const = default;
};

/// Applies a substitution; ground patterns are returned unchanged.
Pattern apply(const Pattern& p, const PatternSubst& s);

/// Matches an atom against a pattern. Var: returns the suffix bound to x
/// when the prefix matches. Ground: the ground binding on exact equality.
/// Total; no match yields nullopt.
std::optional<Binding> match_pattern(const Pattern& p, const Atom& a);

/// Instantiates a pattern with a binding. Ground patterns yield their own
/// word. Throws Error when a Var pattern meets the ground binding.
Atom instantiate(const Pattern& p, const Binding& b);

/// Most general unifier of two patterns over distinct variables. On success
/// returns substitutions (for p's variable, for q's variable) such that
/// apply(p, first) == apply(q, second). Substitutions for ground patterns
/// are identities.
std::optional<std::pair<PatternSubst, PatternSubst>> unify_patterns(const Pattern& p,
                                                                    const Pattern& q);

}  // namespace aps

#endif  // APSPROOF_PATTERN_HPP
