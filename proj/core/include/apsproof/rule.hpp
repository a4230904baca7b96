// Inference rules: classification, simplification, composition.
#ifndef APSPROOF_RULE_HPP
#define APSPROOF_RULE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "apsproof/pattern.hpp"

namespace aps {

using RuleId = std::string;

/// Shape classes. Intro, Elim, Arbitrary, Neutral and Empty are the five
/// pushdown-system shapes; anything else is classified by the introduction
/// flag alone and non-introductions become DerivedNonIntro.
enum class RuleClass { Intro, Elim, Arbitrary, Neutral, Empty, DerivedNonIntro };

std::string to_string(RuleClass c);

/// Where a rule came from.
struct PrimitiveProvenance {
  bool operator==(const PrimitiveProvenance&) const = default;
};

/// Instance of a base rule produced by conclusion specialization.
struct HatProvenance {
  RuleId base;
  PatternSubst subst;  // applied to the base rule's variable
  bool operator==(const HatProvenance&) const = default;
};

/// Identifies where a premise of a composed rule, before simplification,
/// came from: premise `base_premise` of the base rule (identity position) or
/// premise `part_premise` of the part plugged in at that position.
struct ComposedPremiseSource {
  std::size_t base_premise = 0;
  std::optional<std::size_t> part_premise;  // nullopt for identity positions
  bool operator==(const ComposedPremiseSource&) const = default;
};

/// Result of composing a base rule with one rule or identity per premise,
/// then simplifying. premise_map sends each pre-simplification position
/// (aligned with sources) to a premise index of the composed rule, so proofs
/// through the composed rule can be expanded back.
struct ComposedProvenance {
  RuleId base;
  std::vector<std::optional<RuleId>> parts;  // per base premise; nullopt = identity
  std::vector<ComposedPremiseSource> sources;
  std::vector<std::size_t> premise_map;
  bool operator==(const ComposedProvenance&) const = default;
};

using Provenance = std::variant<PrimitiveProvenance, HatProvenance, ComposedProvenance>;

/// Classification result: shape class, introduction flag (every premise
/// strictly smaller than the conclusion under word length), major premises.
struct Classification {
  RuleClass rule_class = RuleClass::Intro;
  bool introduction = true;
  std::vector<std::size_t> majors;
};

/// An inference rule: conclusion pattern over ordered premise patterns.
struct Rule {
  RuleId id;
  Pattern conclusion;
  std::vector<Pattern> premises;
  RuleClass rule_class = RuleClass::Intro;
  bool introduction = true;
  std::vector<std::size_t> majors;
  Provenance provenance = PrimitiveProvenance{};

  /// Builds a rule and classifies it. Throws Error when the patterns
  /// violate the single-variable discipline (a Var premise under a Ground
  /// conclusion). Duplicate premises are allowed here; simplify_rule
  /// removes them and systems only hold simplified rules.
  static Rule make(RuleId id, Pattern conclusion, std::vector<Pattern> premises,
                   Provenance provenance = PrimitiveProvenance{});

  bool is_ground() const { return conclusion.is_ground(); }
};

/// True iff the rule matches one of the five pushdown-system templates
/// exactly: intro Q(a x) <- P_1(x)..P_n(x); elim Q(x) <- P_1(a x),
/// P_2(x)..P_n(x) with n >= 1; arbitrary Q(x) <-; neutral Q(x) <-
/// P_1(x)..P_n(x) with n >= 1; empty Q(eps) <-.
bool matches_aps_template(const Rule& r);

std::string to_string(const Rule& r);

/// Classifies conclusion/premise patterns. Throws Error on a Var premise
/// under a Ground conclusion (the premise variable would be unbound).
Classification classify_rule(const Pattern& conclusion, const std::vector<Pattern>& premises);
Classification classify_rule(const Rule& r);

/// Removes duplicate premise patterns, keeping first occurrences and
/// remapping major positions. Idempotent.
Rule simplify_rule(const Rule& r);

/// One part per premise of the base rule: a rule whose conclusion unifies
/// with that premise, or identity.
using CompositionPart = std::optional<Rule>;

/// Composes `g` with one rule or identity per premise and simplifies the
/// result. The id of the returned rule is empty; callers name it. Returns
/// nullopt when the joint prefix unification fails.
std::optional<Rule> compose_rule(const Rule& g, const std::vector<CompositionPart>& parts);

/// Structural rule equality: same conclusion and same premise set, ignoring
/// premise order (rules are compared after simplification).
bool structurally_equal(const Rule& lhs, const Rule& rhs);

/// Key used for structural deduplication.
struct RuleKey {
  Pattern conclusion;
  std::vector<Pattern> sorted_premises;

  explicit RuleKey(const Rule& r);
  auto operator<=>(const RuleKey&) const = default;
};

}  // namespace aps

#endif  // APSPROOF_RULE_HPP
