#include <doctest.h>

#include "apsproof/proof.hpp"
#include "apsproof/rule.hpp"
#include "support/generators.hpp"

using namespace aps;

namespace {

Rule rule(const std::string& id, Pattern conclusion, std::vector<Pattern> premises) {
  return Rule::make(id, std::move(conclusion), std::move(premises));
}

}  // namespace

TEST_CASE("classify_rule on the five shapes") {
  // Q(a x) <- U(x): intro.
  Rule intro = rule("i", var_pattern("Q", {"a"}), {var_pattern("U", {})});
  CHECK(intro.rule_class == RuleClass::Intro);
  CHECK(intro.introduction);
  CHECK(intro.majors.empty());

  // Q(x) <- P(a x): elim with the leftmost premise major.
  Rule elim = rule("e", var_pattern("Q", {}), {var_pattern("P", {"a"})});
  CHECK(elim.rule_class == RuleClass::Elim);
  CHECK_FALSE(elim.introduction);
  CHECK(elim.majors == std::vector<std::size_t>{0});

  // T(x) <- : arbitrary, introduction flag true.
  Rule arbitrary = rule("a", var_pattern("T", {}), {});
  CHECK(arbitrary.rule_class == RuleClass::Arbitrary);
  CHECK(arbitrary.introduction);

  // P(x) <- Q(x), R(x): neutral, all premises major.
  Rule neutral = rule("n", var_pattern("P", {}), {var_pattern("Q", {}), var_pattern("R", {})});
  CHECK(neutral.rule_class == RuleClass::Neutral);
  CHECK_FALSE(neutral.introduction);
  CHECK(neutral.majors == std::vector<std::size_t>{0, 1});

  // Q(eps) <- : empty.
  Rule empty = rule("z", ground_pattern("Q", {}), {});
  CHECK(empty.rule_class == RuleClass::Empty);
  CHECK(empty.introduction);
}

TEST_CASE("classify_rule outside the five shapes") {
  // Hatted neutral instance: P(a x) <- Q(a x), R(a x) is not introduction.
  Rule wide = rule("w", var_pattern("P", {"a"}),
                   {var_pattern("Q", {"a"}), var_pattern("R", {"a"})});
  CHECK(wide.rule_class == RuleClass::DerivedNonIntro);
  CHECK_FALSE(wide.introduction);
  CHECK(wide.majors == std::vector<std::size_t>{0, 1});

  // Fully closed instance with a strictly shorter premise is an
  // introduction.
  Rule closed = rule("c", ground_pattern("Q", {"a", "a"}), {ground_pattern("P", {"a"})});
  CHECK(closed.introduction);
  CHECK(closed.rule_class == RuleClass::Intro);

  // Closed instance without decrease: Q(eps) <- P(a).
  Rule flat = rule("f", ground_pattern("Q", {}), {ground_pattern("P", {"a"})});
  CHECK_FALSE(flat.introduction);
  CHECK(flat.rule_class == RuleClass::DerivedNonIntro);

  // Ground premise under a variable conclusion: decided by word length
  // against the conclusion prefix.
  Rule mixed = rule("m", var_pattern("Q", {"a", "a"}), {ground_pattern("P", {"a"})});
  CHECK(mixed.introduction);

  // A variable premise under a closed conclusion violates the
  // single-variable discipline.
  CHECK_THROWS_AS(rule("bad", ground_pattern("Q", {}), {var_pattern("P", {})}), Error);
}

TEST_CASE("introduction flag is sound on random instantiations") {
  testgen::Rng rng(31337);
  const auto symbols = testgen::symbol_pool(2);
  const auto predicates = testgen::predicate_pool(4);
  std::size_t intro_rules = 0;
  for (int round = 0; round < 60 && intro_rules < 20; ++round) {
    Pattern conclusion = testgen::random_pattern(rng, predicates, symbols, 2);
    std::vector<Pattern> premises;
    for (std::size_t i = 0; i < testgen::pick_index(rng, 4); ++i) {
      premises.push_back(testgen::random_pattern(rng, predicates, symbols, 2));
    }
    Rule r;
    try {
      r = Rule::make("r", conclusion, premises);
    } catch (const Error&) {
      continue;
    }
    if (!r.introduction) continue;
    ++intro_rules;
    for (int i = 0; i < 1000; ++i) {
      Binding binding = r.conclusion.is_ground()
                            ? Binding::ground()
                            : Binding::suffix(testgen::random_word(rng, symbols, 4));
      Atom conclusion_atom = instantiate(r.conclusion, binding);
      for (const auto& p : r.premises) {
        CHECK(instantiate(p, binding).word.size() < conclusion_atom.word.size());
      }
    }
  }
  CHECK(intro_rules > 0);
}

TEST_CASE("simplify_rule removes duplicate premises") {
  // Q(x) <- P(x), P(x) collapses to Q(x) <- P(x).
  Rule doubled = rule("d", var_pattern("Q", {}), {var_pattern("P", {}), var_pattern("P", {})});
  Rule simplified = simplify_rule(doubled);
  CHECK(simplified.premises == std::vector<Pattern>{var_pattern("P", {})});
  CHECK(simplified.rule_class == RuleClass::Neutral);

  // Already simplified rules are unchanged; simplify is idempotent.
  Rule plain = rule("p", var_pattern("Q", {}), {var_pattern("P", {})});
  CHECK(structurally_equal(simplify_rule(plain), plain));
  CHECK(structurally_equal(simplify_rule(simplified), simplified));

  // P(a x) <- T(x), T(x) collapses to the intro P(a x) <- T(x).
  Rule intro2 = rule("i", var_pattern("P", {"a"}), {var_pattern("T", {}), var_pattern("T", {})});
  Rule collapsed = simplify_rule(intro2);
  CHECK(collapsed.premises == std::vector<Pattern>{var_pattern("T", {})});
  CHECK(collapsed.rule_class == RuleClass::Intro);
}

TEST_CASE("simplify_rule preserves the instance relation") {
  testgen::Rng rng(99);
  const auto symbols = testgen::symbol_pool(2);
  for (int i = 0; i < 300; ++i) {
    // Random rule with duplicates forced in.
    std::vector<Pattern> premises;
    const auto predicates = testgen::predicate_pool(3);
    for (std::size_t k = 0; k < 1 + testgen::pick_index(rng, 3); ++k) {
      premises.push_back(aps::var_pattern(testgen::pick(rng, predicates), {}));
    }
    premises.insert(premises.end(), premises.begin(), premises.end());  // duplicate all
    Rule r = rule("r", var_pattern("Q", {}), premises);
    Rule s = simplify_rule(r);
    // Same conclusion; premise sets coincide after deduplication.
    CHECK(r.conclusion == s.conclusion);
    std::set<Pattern> before(r.premises.begin(), r.premises.end());
    std::set<Pattern> after(s.premises.begin(), s.premises.end());
    CHECK(before == after);
    // No duplicates remain.
    CHECK(after.size() == s.premises.size());
  }
}

TEST_CASE("compose_rule examples") {
  Rule g = rule("g", var_pattern("P", {}), {var_pattern("Q", {}), var_pattern("R", {})});
  Rule f1 = rule("f1", var_pattern("Q", {"a"}), {var_pattern("U", {})});
  Rule f2 = rule("f2", var_pattern("R", {"a"}), {var_pattern("T", {})});

  // P(x) <- Q(x), R(x) with Q(a x) <- U(x) and R(a x) <- T(x) gives
  // P(a x) <- U(x), T(x).
  auto composed = compose_rule(g, {f1, f2});
  REQUIRE(composed.has_value());
  CHECK(composed->conclusion == var_pattern("P", {"a"}));
  CHECK(composed->premises ==
        std::vector<Pattern>{var_pattern("U", {}), var_pattern("T", {})});
  CHECK(composed->rule_class == RuleClass::Intro);

  // Q(x) <- P(a x) with P(a x) <- U(x), T(x) gives Q(x) <- U(x), T(x).
  Rule elim = rule("e", var_pattern("Q", {}), {var_pattern("P", {"a"})});
  auto through = compose_rule(elim, {*composed});
  REQUIRE(through.has_value());
  CHECK(through->conclusion == var_pattern("Q", {}));
  CHECK(through->premises ==
        std::vector<Pattern>{var_pattern("U", {}), var_pattern("T", {})});
  CHECK(through->rule_class == RuleClass::Neutral);
  CHECK(through->majors == std::vector<std::size_t>{0, 1});

  // All-identity composition is plain simplification.
  auto identity = compose_rule(g, {std::nullopt, std::nullopt});
  REQUIRE(identity.has_value());
  CHECK(structurally_equal(*identity, simplify_rule(g)));

  // Symbol clash: premise P(b x) against a conclusion P(a y).
  Rule clash_g = rule("cg", var_pattern("Q", {}), {var_pattern("P", {"b"})});
  Rule clash_f = rule("cf", var_pattern("P", {"a"}), {var_pattern("U", {})});
  CHECK_FALSE(compose_rule(clash_g, {clash_f}).has_value());

  // Cross-position clash through the shared variable: the first premise
  // forces x := a x', the second then needs R(a x') to unify with R(b y).
  Rule fb = rule("fb", var_pattern("R", {"b"}), {var_pattern("T", {})});
  CHECK_FALSE(compose_rule(g, {f1, fb}).has_value());
}

TEST_CASE("compose_rule result is derivable: two-layer proof check") {
  testgen::Rng rng(4242);
  const auto symbols = testgen::symbol_pool(2);
  std::size_t checked = 0;
  for (int round = 0; round < 400 && checked < 120; ++round) {
    // Random base rule.
    const auto predicates = testgen::predicate_pool(4);
    std::vector<Pattern> g_premises;
    for (std::size_t i = 0; i < 1 + testgen::pick_index(rng, 2); ++i) {
      g_premises.push_back(
          var_pattern(testgen::pick(rng, predicates), testgen::random_word(rng, symbols, 1)));
    }
    Rule g;
    try {
      g = Rule::make("g", var_pattern("P1", testgen::random_word(rng, symbols, 1)),
                     g_premises);
    } catch (const Error&) {
      continue;
    }

    g = simplify_rule(g);

    // One random part per premise: identity or a rule concluding something
    // compatible.
    std::vector<CompositionPart> parts;
    bool ok = true;
    for (std::size_t i = 0; i < g.premises.size(); ++i) {
      if (testgen::coin(rng, 0.3)) {
        parts.push_back(std::nullopt);
        continue;
      }
      Word extended = g.premises[i].prefix;
      for (const auto& s : testgen::random_word(rng, symbols, 1)) extended.push_back(s);
      std::vector<Pattern> f_premises;
      for (std::size_t k = 0; k < testgen::pick_index(rng, 3); ++k) {
        f_premises.push_back(var_pattern(testgen::pick(rng, predicates),
                                         testgen::random_word(rng, symbols, 1)));
      }
      Rule f;
      try {
        f = simplify_rule(Rule::make("f" + std::to_string(i),
                                     var_pattern(g.premises[i].predicate, extended),
                                     f_premises));
      } catch (const Error&) {
        ok = false;
        break;
      }
      parts.push_back(std::move(f));
    }
    if (!ok) continue;

    auto composed = compose_rule(g, parts);
    if (!composed.has_value()) continue;
    composed->id = "h";
    ++checked;

    // Close the composed rule with a random binding; build the two-layer
    // proof of the same conclusion and check it.
    Binding binding = composed->conclusion.is_ground()
                          ? Binding::ground()
                          : Binding::suffix(testgen::random_word(rng, symbols, 2));
    Atom conclusion = instantiate(composed->conclusion, binding);

    Signature sig{{predicates.begin(), predicates.end()},
                  {symbols.begin(), symbols.end()}};
    System sys(sig);
    sys.add_rule(g);
    // Structural duplicates collapse; remember the surviving id per part.
    std::vector<std::optional<RuleId>> part_ids;
    for (const auto& part : parts) {
      if (!part.has_value()) {
        part_ids.push_back(std::nullopt);
        continue;
      }
      auto existing = sys.find_structural(*part);
      if (!existing.has_value()) {
        sys.add_rule(*part);
        existing = sys.find_structural(*part);
      }
      part_ids.push_back(sys.rule_at(*existing).id);
    }

    // The composed instance's premises, as atoms.
    auto composed_instance = instance_concluding(*composed, conclusion);
    REQUIRE(composed_instance.has_value());

    // Two layers: g over the parts.
    auto g_instance = instance_concluding(g, conclusion);
    REQUIRE(g_instance.has_value());
    std::vector<Proof> g_children;
    bool buildable = true;
    for (std::size_t i = 0; i < g.premises.size(); ++i) {
      Atom premise_atom = g_instance->premises[i];
      if (!parts[i].has_value()) {
        g_children.push_back(Proof::unexpanded(Sequent{Polarity::Proved, premise_atom}));
        continue;
      }
      const Rule& f = *sys.find_by_id(*part_ids[i]);
      auto f_instance = instance_concluding(f, premise_atom);
      if (!f_instance.has_value()) {
        buildable = false;
        break;
      }
      std::vector<Proof> f_children;
      for (const auto& leaf : f_instance->premises) {
        f_children.push_back(Proof::unexpanded(Sequent{Polarity::Proved, leaf}));
      }
      g_children.push_back(Proof::node(Sequent{Polarity::Proved, premise_atom}, f.id,
                                       f_instance->binding, std::move(f_children)));
    }
    REQUIRE(buildable);
    Proof two_layer = Proof::node(Sequent{Polarity::Proved, conclusion}, g.id,
                                  g_instance->binding, std::move(g_children));
    CHECK(check_proof(sys, two_layer, Polarity::Proved, CheckMode::Prefix));

    // The two-layer proof's leaves are exactly the composed instance's
    // premises (with duplicates collapsed).
    std::set<Atom> leaves;
    for (const auto& child : two_layer.children) {
      if (child.marker == Marker::Unexpanded) {
        leaves.insert(child.sequent.atom);
      } else {
        for (const auto& leaf : child.children) leaves.insert(leaf.sequent.atom);
      }
    }
    std::set<Atom> expected(composed_instance->premises.begin(),
                            composed_instance->premises.end());
    CHECK(leaves == expected);
  }
  CHECK(checked >= 100);
}
