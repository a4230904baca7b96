#include "apsproof/system.hpp"

#include <algorithm>

namespace aps {

namespace {

void validate_pattern(const Signature& sig, const Pattern& p) {
  if (!sig.has_predicate(p.predicate)) {
    throw Error("unknown predicate '" + p.predicate + "' in " + to_string(p));
  }
  for (const auto& sym : p.prefix) {
    if (!sig.has_symbol(sym)) {
      throw Error("unknown stack symbol '" + sym + "' in " + to_string(p));
    }
  }
}

}  // namespace

bool System::add_rule(Rule r) {
  if (r.id.empty()) throw Error("rule has no id: " + to_string(r));
  validate_pattern(signature_, r.conclusion);
  for (const auto& p : r.premises) validate_pattern(signature_, p);
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    for (std::size_t j = i + 1; j < r.premises.size(); ++j) {
      if (r.premises[i] == r.premises[j]) {
        throw Error("rule " + r.id + " has duplicate premise " + to_string(r.premises[i]) +
                    "; simplify before adding");
      }
    }
  }
  RuleKey key(r);
  if (structural_index_.count(key) != 0) return false;
  if (id_index_.count(r.id) != 0) throw Error("duplicate rule id: " + r.id);
  const std::size_t index = rules_.size();
  structural_index_.emplace(std::move(key), index);
  id_index_.emplace(r.id, index);
  rules_.push_back(std::move(r));
  return true;
}

std::optional<std::size_t> System::find_structural(const Rule& r) const {
  auto it = structural_index_.find(RuleKey(r));
  if (it == structural_index_.end()) return std::nullopt;
  return it->second;
}

const Rule* System::find_by_id(const RuleId& id) const {
  auto it = id_index_.find(id);
  if (it == id_index_.end()) return nullptr;
  return &rules_[it->second];
}

void System::set_automaton() {
  for (const auto& r : rules_) {
    if (!r.introduction) {
      throw InternalError("automaton flag on a system with non-introduction rule " + r.id);
    }
  }
  automaton_ = true;
}

bool System::operator==(const System& other) const {
  return signature_ == other.signature_ && same_rule_set(*this, other);
}

std::optional<RuleInstance> instance_concluding(const Rule& r, const Atom& a) {
  auto binding = match_pattern(r.conclusion, a);
  if (!binding.has_value()) return std::nullopt;
  RuleInstance inst;
  inst.rule = r.id;
  inst.binding = *binding;
  inst.conclusion = a;
  inst.premises.reserve(r.premises.size());
  for (const auto& p : r.premises) inst.premises.push_back(instantiate(p, *binding));
  return inst;
}

std::vector<RuleInstance> rule_instances_concluding(const System& s, const Atom& a) {
  std::vector<RuleInstance> out;
  for (const auto& r : s.rules()) {
    if (auto inst = instance_concluding(r, a)) out.push_back(std::move(*inst));
  }
  return out;
}

bool same_rule_set(const System& lhs, const System& rhs) {
  if (lhs.size() != rhs.size()) return false;
  return std::all_of(lhs.rules().begin(), lhs.rules().end(),
                     [&](const Rule& r) { return rhs.find_structural(r).has_value(); });
}

}  // namespace aps
