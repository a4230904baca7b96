// Seeded random generators for property tests: words, atoms, patterns,
// pushdown systems and valid proofs.
#ifndef APSPROOF_TESTS_GENERATORS_HPP
#define APSPROOF_TESTS_GENERATORS_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "apsproof/decide.hpp"
#include "apsproof/saturation.hpp"
#include "apsproof/system.hpp"

namespace testgen {

using Rng = std::mt19937_64;

inline std::size_t pick_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[pick_index(rng, items.size())];
}

inline std::vector<std::string> predicate_pool(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("P" + std::to_string(i + 1));
  return out;
}

inline std::vector<std::string> symbol_pool(std::size_t n) {
  const std::vector<std::string> names{"a", "b", "c", "d"};
  return {names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n)};
}

inline aps::Word random_word(Rng& rng, const std::vector<std::string>& symbols,
                             std::size_t max_len) {
  aps::Word out;
  const std::size_t len = pick_index(rng, max_len + 1);
  for (std::size_t i = 0; i < len; ++i) out.push_back(pick(rng, symbols));
  return out;
}

inline aps::Atom random_atom(Rng& rng, const std::vector<std::string>& predicates,
                             const std::vector<std::string>& symbols, std::size_t max_len) {
  return aps::Atom{pick(rng, predicates), random_word(rng, symbols, max_len)};
}

inline aps::Pattern random_pattern(Rng& rng, const std::vector<std::string>& predicates,
                                   const std::vector<std::string>& symbols,
                                   std::size_t max_len) {
  aps::Word prefix = random_word(rng, symbols, max_len);
  return coin(rng) ? aps::var_pattern(pick(rng, predicates), prefix)
                   : aps::ground_pattern(pick(rng, predicates), prefix);
}

/// A random system over the five pushdown shapes. Structural duplicates are
/// dropped, so the result may hold fewer than `rule_count` rules; it always
/// holds at least one.
inline aps::System random_aps_system(Rng& rng, std::size_t predicate_count,
                                     std::size_t symbol_count, std::size_t rule_count) {
  const auto predicates = predicate_pool(predicate_count);
  const auto symbols = symbol_pool(symbol_count);
  aps::Signature sig;
  sig.predicates.insert(predicates.begin(), predicates.end());
  sig.symbols.insert(symbols.begin(), symbols.end());
  aps::System out{sig};

  auto distinct_premises = [&](std::size_t max_extra) {
    std::vector<aps::Pattern> premises;
    std::size_t count = pick_index(rng, max_extra + 1);
    std::vector<std::string> pool = predicates;
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t i = 0; i < count && i < pool.size(); ++i) {
      premises.push_back(aps::var_pattern(pool[i], {}));
    }
    return premises;
  };

  std::size_t next_id = 1;
  for (std::size_t attempt = 0; attempt < rule_count * 4 && out.size() < rule_count;
       ++attempt) {
    const std::string head = pick(rng, predicates);
    aps::Rule rule;
    switch (pick_index(rng, 5)) {
      case 0:  // intro
        rule = aps::Rule::make("", aps::var_pattern(head, {pick(rng, symbols)}),
                               distinct_premises(3));
        break;
      case 1: {  // elim
        std::vector<aps::Pattern> premises{
            aps::var_pattern(pick(rng, predicates), {pick(rng, symbols)})};
        for (auto& p : distinct_premises(2)) premises.push_back(std::move(p));
        rule = aps::Rule::make("", aps::var_pattern(head, {}), std::move(premises));
        break;
      }
      case 2:  // arbitrary
        rule = aps::Rule::make("", aps::var_pattern(head, {}), {});
        break;
      case 3: {  // neutral
        auto premises = distinct_premises(3);
        if (premises.empty()) premises.push_back(aps::var_pattern(pick(rng, predicates), {}));
        rule = aps::Rule::make("", aps::var_pattern(head, {}), std::move(premises));
        break;
      }
      default:  // empty
        rule = aps::Rule::make("", aps::ground_pattern(head, {}), {});
        break;
    }
    if (out.find_structural(rule).has_value()) continue;
    rule.id = "r" + std::to_string(next_id);
    out.add_rule(std::move(rule));
    ++next_id;
  }
  if (out.empty()) {
    out.add_rule(aps::Rule::make("r1", aps::var_pattern(predicates.front(), {}), {}));
  }
  out.set_aps_shaped(true);
  return out;
}

/// A random valid proof of `target` in the closure. Prefers rules with
/// premises while the budget lasts, then falls back to introduction rules,
/// whose recursion shortens the word. Requires `target` to be provable.
inline aps::Proof random_closure_proof(const aps::SaturatedSystem& ss,
                                       aps::DecisionSession& session, Rng& rng,
                                       const aps::Atom& target, std::size_t budget) {
  std::vector<aps::RuleInstance> usable;
  for (auto& inst : aps::rule_instances_concluding(ss.rules, target)) {
    bool provable = std::all_of(inst.premises.begin(), inst.premises.end(),
                                [&](const aps::Atom& p) {
                                  return session.decide(p) == aps::Verdict::Provable;
                                });
    if (provable) usable.push_back(std::move(inst));
  }
  std::vector<aps::RuleInstance> intro_only;
  for (const auto& inst : usable) {
    if (ss.rules.find_by_id(inst.rule)->introduction) intro_only.push_back(inst);
  }
  // A provable atom always has a usable introduction instance, so the
  // budget-exhausted recursion shortens the word and terminates.
  const auto& candidates = budget == 0 ? intro_only : usable;
  if (candidates.empty()) {
    throw std::logic_error("random_closure_proof: no usable instance for " +
                           aps::to_string(target));
  }
  const aps::RuleInstance& inst = pick(rng, candidates);
  std::vector<aps::Proof> children;
  children.reserve(inst.premises.size());
  for (const auto& premise : inst.premises) {
    children.push_back(
        random_closure_proof(ss, session, rng, premise, budget == 0 ? 0 : budget - 1));
  }
  return aps::Proof::node(aps::Sequent{aps::Polarity::Proved, target}, inst.rule,
                          inst.binding, std::move(children));
}

/// A random valid proof in the automaton (introduction rules only).
inline aps::Proof random_automaton_proof(const aps::System& automaton,
                                         aps::DecisionSession& session, Rng& rng,
                                         const aps::Atom& target) {
  std::vector<aps::RuleInstance> usable;
  for (auto& inst : aps::rule_instances_concluding(automaton, target)) {
    bool provable = std::all_of(inst.premises.begin(), inst.premises.end(),
                                [&](const aps::Atom& p) {
                                  return session.decide(p) == aps::Verdict::Provable;
                                });
    if (provable) usable.push_back(std::move(inst));
  }
  if (usable.empty()) {
    throw std::logic_error("random_automaton_proof: no usable instance for " +
                           aps::to_string(target));
  }
  const aps::RuleInstance& inst = pick(rng, usable);
  std::vector<aps::Proof> children;
  children.reserve(inst.premises.size());
  for (const auto& premise : inst.premises) {
    children.push_back(random_automaton_proof(automaton, session, rng, premise));
  }
  return aps::Proof::node(aps::Sequent{aps::Polarity::Proved, target}, inst.rule,
                          inst.binding, std::move(children));
}

}  // namespace testgen

#endif  // APSPROOF_TESTS_GENERATORS_HPP
