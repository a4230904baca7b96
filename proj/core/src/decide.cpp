#include "apsproof/decide.hpp"

#include <algorithm>

namespace aps {

std::string to_string(Verdict v) { return v == Verdict::Provable ? "provable" : "refutable"; }

DecisionSession::DecisionSession(System automaton, SignedSystem signed_system)
    : automaton_(std::move(automaton)), signed_(std::move(signed_system)) {
  if (!automaton_.automaton()) {
    throw Error("decision session needs an automaton (introduction rules only)");
  }
  if (!signed_.negative.automaton()) {
    throw Error("decision session needs an automaton complementation");
  }
}

Verdict DecisionSession::decide(const Atom& a) {
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;
  Verdict verdict = Verdict::Refutable;
  auto instances = rule_instances_concluding(automaton_, a);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    bool all_provable = std::all_of(
        instances[i].premises.begin(), instances[i].premises.end(),
        [this](const Atom& premise) { return decide(premise) == Verdict::Provable; });
    if (all_provable) {
      verdict = Verdict::Provable;
      witness_instance_.emplace(a, i);
      break;
    }
  }
  memo_.emplace(a, verdict);
  return verdict;
}

const Proof& DecisionSession::prove(const Atom& a) {
  if (decide(a) != Verdict::Provable) {
    throw Error("prove: " + to_string(a) + " is refutable");
  }
  auto cached = proof_cache_.find(a);
  if (cached != proof_cache_.end()) return cached->second;
  const auto instances = rule_instances_concluding(automaton_, a);
  const RuleInstance& inst = instances[witness_instance_.at(a)];
  std::vector<Proof> children;
  children.reserve(inst.premises.size());
  for (const auto& premise : inst.premises) children.push_back(prove(premise));
  Proof pf = Proof::node(Sequent{Polarity::Proved, a}, inst.rule, inst.binding,
                         std::move(children));
  return proof_cache_.emplace(a, std::move(pf)).first->second;
}

const Proof& DecisionSession::refute(const Atom& a) {
  if (decide(a) != Verdict::Refutable) {
    throw Error("refute: " + to_string(a) + " is provable");
  }
  auto cached = refutation_cache_.find(a);
  if (cached != refutation_cache_.end()) return cached->second;
  for (const auto& inst : rule_instances_concluding(signed_.negative, a)) {
    bool all_refutable = std::all_of(
        inst.premises.begin(), inst.premises.end(),
        [this](const Atom& premise) { return decide(premise) == Verdict::Refutable; });
    if (!all_refutable) continue;
    std::vector<Proof> children;
    children.reserve(inst.premises.size());
    for (const auto& premise : inst.premises) children.push_back(refute(premise));
    Proof pf = Proof::node(Sequent{Polarity::Refuted, a}, inst.rule, inst.binding,
                           std::move(children));
    return refutation_cache_.emplace(a, std::move(pf)).first->second;
  }
  throw InternalError("refute: no negative rule instance concludes " + to_string(a) +
                      " with refutable premises");
}

std::set<Atom> kleene_step(const System& s, const std::set<Atom>& universe,
                           const std::set<Atom>& current) {
  std::set<Atom> out;
  for (const Atom& a : universe) {
    for (const auto& inst : rule_instances_concluding(s, a)) {
      bool usable = std::all_of(inst.premises.begin(), inst.premises.end(),
                                [&](const Atom& p) { return current.count(p) != 0; });
      if (usable) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

bool is_suffix_closed(const Signature& sig, const std::set<Atom>& universe) {
  for (const Atom& a : universe) {
    if (a.word.empty()) continue;
    const Word tail(a.word.begin() + 1, a.word.end());
    for (const auto& pred : sig.predicates) {
      if (universe.count(Atom{pred, tail}) == 0) return false;
    }
  }
  return true;
}

KleeneResult kleene(const System& s, const std::set<Atom>& universe, std::size_t steps) {
  KleeneResult result;
  result.universe_suffix_closed = is_suffix_closed(s.signature(), universe);
  for (std::size_t i = 0; i < steps; ++i) {
    std::set<Atom> next = kleene_step(s, universe, result.atoms);
    if (next == result.atoms) {
      result.stabilized = true;
      return result;
    }
    result.atoms = std::move(next);
  }
  // One more application to detect stabilization exactly at the bound.
  result.stabilized = kleene_step(s, universe, result.atoms) == result.atoms;
  return result;
}

KleeneResult kleene_fixpoint(const System& s, const std::set<Atom>& universe) {
  return kleene(s, universe, universe.size() + 1);
}

std::set<Atom> atom_universe(const Signature& sig, std::size_t max_word_len) {
  std::vector<Word> words{{}};
  std::set<Atom> out;
  for (std::size_t len = 0; len <= max_word_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : words) {
      for (const auto& pred : sig.predicates) out.insert(Atom{pred, w});
      if (len < max_word_len) {
        for (const auto& sym : sig.symbols) {
          Word extended{sym};
          extended.insert(extended.end(), w.begin(), w.end());
          next.push_back(std::move(extended));
        }
      }
    }
    words = std::move(next);
  }
  return out;
}

}  // namespace aps
