// Finite rule sets with structural deduplication and backward instance
// enumeration.
#ifndef APSPROOF_SYSTEM_HPP
#define APSPROOF_SYSTEM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apsproof/rule.hpp"
#include "apsproof/types.hpp"

namespace aps {

/// One way a system derives a given atom: a rule instantiated at a binding.
struct RuleInstance {
  RuleId rule;
  Binding binding = Binding::ground();
  Atom conclusion;
  std::vector<Atom> premises;
};

/// A finite inference system over a fixed signature. Rules keep insertion
/// order; no two rules are structurally equal up to premise reordering.
class System {
 public:
  System() = default;
  explicit System(Signature sig) : signature_(std::move(sig)) { signature_.validate(); }

  const Signature& signature() const { return signature_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  /// Adds a rule unless a structurally equal one is present. Returns true
  /// when added. Throws Error on duplicate id or patterns outside the
  /// signature.
  bool add_rule(Rule r);

  /// Index of the structurally equal rule, if any.
  std::optional<std::size_t> find_structural(const Rule& r) const;

  const Rule* find_by_id(const RuleId& id) const;
  const Rule& rule_at(std::size_t index) const { return rules_.at(index); }

  bool aps_shaped() const { return aps_shaped_; }
  bool hatted() const { return hatted_; }
  bool saturated() const { return saturated_; }
  bool automaton() const { return automaton_; }

  void set_aps_shaped(bool v) { aps_shaped_ = v; }
  void set_hatted(bool v) { hatted_ = v; }
  void set_saturated(bool v) { saturated_ = v; }

  /// Marks the system as an automaton after checking that every rule
  /// passes the introduction test. Throws InternalError otherwise.
  void set_automaton();

  bool operator==(const System& other) const;

 private:
  Signature signature_;
  std::vector<Rule> rules_;
  std::map<RuleKey, std::size_t> structural_index_;
  std::map<RuleId, std::size_t> id_index_;
  bool aps_shaped_ = false;
  bool hatted_ = false;
  bool saturated_ = false;
  bool automaton_ = false;
};

/// All rule instances concluding `a`, in system order. Each rule matches a
/// given closed atom at most once, so the enumeration is finite and
/// deterministic.
std::vector<RuleInstance> rule_instances_concluding(const System& s, const Atom& a);

/// The instance of one rule concluding `a`, if any.
std::optional<RuleInstance> instance_concluding(const Rule& r, const Atom& a);

/// True when the two systems contain the same rules up to structural
/// equality (ids and order ignored).
bool same_rule_set(const System& lhs, const System& rhs);

}  // namespace aps

#endif  // APSPROOF_SYSTEM_HPP
