#include "apsproof/counterproof.hpp"

#include <algorithm>
#include <optional>

namespace aps {

UnfoldContext make_unfold_context(const System& base, std::size_t work_limit) {
  SaturatedSystem saturated = saturate(base);
  System automaton = extract_automaton(saturated);
  SignedSystem original_signed = complementation(base, "j");
  SignedSystem automaton_signed = complementation(automaton, "b");
  DecisionSession session(std::move(automaton), automaton_signed);
  UnfoldContext ctx(std::move(saturated), std::move(original_signed),
                    std::move(automaton_signed), std::move(session));
  ctx.work_limit = work_limit;
  return ctx;
}

namespace {

bool family_tuples_meet(const std::vector<SetFamily>& families, std::size_t count,
                        const std::set<Atom>& w) {
  // Every union over the first `count` families contains an element of w.
  std::vector<std::size_t> cursor(count, 0);
  for (;;) {
    bool met = false;
    for (std::size_t i = 0; i < count && !met; ++i) {
      for (const Atom& a : families[i][cursor[i]]) {
        if (w.count(a) != 0) {
          met = true;
          break;
        }
      }
    }
    if (!met) return false;
    std::size_t pos = count;
    bool done = count == 0;
    while (pos > 0) {
      --pos;
      if (++cursor[pos] < families[pos].size()) break;
      cursor[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) return true;
  }
}

}  // namespace

std::size_t combinatorial_select(const std::vector<SetFamily>& families,
                                 const std::set<Atom>& w) {
  if (families.empty()) throw Error("combinatorial_select: no families");
  for (const auto& family : families) {
    if (family.empty()) throw Error("combinatorial_select: empty family");
  }
  if (!family_tuples_meet(families, families.size(), w)) {
    throw InternalError("combinatorial_select: some family union misses the witness set");
  }
  // Case analysis on the last family: while every union over the shorter
  // prefix still meets w, drop the last family; the level where the prefix
  // property first fails names the answer.
  std::size_t n = families.size();
  while (n > 1 && family_tuples_meet(families, n - 1, w)) --n;
  const std::size_t result = n - 1;
  // The postcondition, checked literally: every set of the chosen family
  // contains an element of w.
  for (const auto& set : families[result]) {
    bool met = std::any_of(set.begin(), set.end(),
                           [&](const Atom& a) { return w.count(a) != 0; });
    if (!met) throw InternalError("combinatorial_select: chosen family misses the witness set");
  }
  return result;
}

namespace {

/// The rule of the hatted positive system mapped back to its base rule, as
/// an instance concluding the same atom.
RuleInstance base_instance_for(const UnfoldContext& ctx, const System& hatted,
                               const RuleInstance& hat_instance) {
  const Rule* h = hatted.find_by_id(hat_instance.rule);
  if (h == nullptr) throw Error("unknown hatted rule '" + hat_instance.rule + "'");
  RuleId base_id = h->id;
  if (const auto* prov = std::get_if<HatProvenance>(&h->provenance)) base_id = prov->base;
  const Rule* base = ctx.saturated.base.find_by_id(base_id);
  if (base == nullptr) {
    throw InternalError("hatted rule '" + h->id + "' has no base rule '" + base_id + "'");
  }
  auto inst = instance_concluding(*base, hat_instance.conclusion);
  if (!inst.has_value()) {
    throw InternalError("base rule '" + base_id + "' does not conclude " +
                        to_string(hat_instance.conclusion));
  }
  return *inst;
}

/// The hatted automaton rule corresponding to a base introduction rule,
/// among those concluding `a`.
const Rule* hat_rule_for(const System& hatted, const RuleId& base_id, const Atom& a) {
  for (const auto& h : hatted.rules()) {
    RuleId origin = h.id;
    if (const auto* prov = std::get_if<HatProvenance>(&h.provenance)) origin = prov->base;
    if (origin != base_id) continue;
    if (match_pattern(h.conclusion, a).has_value()) return &h;
  }
  return nullptr;
}

/// Rank-0 step: read the selection provenance off the stored refutation
/// certificate of the conclusion.
std::pair<std::size_t, Proof> select_from_certificate(UnfoldContext& ctx,
                                                      const RuleInstance& instance) {
  const Proof& cert = ctx.session.refute(instance.conclusion);
  auto prov_it = ctx.automaton_signed.selection_provenance.find(cert.rule);
  if (prov_it == ctx.automaton_signed.selection_provenance.end() ||
      prov_it->second.selections.empty()) {
    throw InternalError("refutation rule '" + cert.rule + "' has no selection provenance");
  }
  const Rule* h = hat_rule_for(ctx.automaton_signed.positive, instance.rule,
                               instance.conclusion);
  if (h == nullptr) {
    throw InternalError("introduction rule '" + instance.rule +
                        "' has no hatted counterpart concluding " +
                        to_string(instance.conclusion));
  }
  const Selection& selection = prov_it->second.selections.front();
  for (const auto& entry : selection.entries) {
    if (entry.positive_rule == h->id) {
      return {entry.premise_index, cert.children[entry.simplified_position]};
    }
  }
  throw InternalError("selection provenance of '" + cert.rule + "' does not cover rule '" +
                      h->id + "'");
}

struct MajorFamily {
  std::size_t position = 0;                  // premise position in the rule
  std::vector<RuleInstance> intro_instances; // empty for the degenerate case
};

/// Builds the refutation certificate of `target` out of one refutable
/// premise per introduction instance concluding it: the refutation rule
/// whose selection picks exactly those premises concludes target from
/// sequents whose certificates are already in hand.
Proof assemble_major_certificate(UnfoldContext& ctx, const Atom& target,
                                 const std::vector<RuleInstance>& intro_instances,
                                 const std::set<Atom>& witness,
                                 const std::map<Atom, Proof>& certificates) {
  std::map<RuleId, std::size_t> wanted;  // hatted rule id -> selected premise index
  for (const auto& intro : intro_instances) {
    std::size_t pick = intro.premises.size();
    for (std::size_t i = 0; i < intro.premises.size(); ++i) {
      if (witness.count(intro.premises[i]) != 0) {
        pick = i;
        break;
      }
    }
    if (pick == intro.premises.size()) {
      throw InternalError("introduction instance concluding " + to_string(target) +
                          " has no refutable premise");
    }
    const Rule* h = hat_rule_for(ctx.automaton_signed.positive, intro.rule, target);
    if (h == nullptr) {
      throw InternalError("introduction rule '" + intro.rule + "' has no hatted counterpart");
    }
    wanted[h->id] = pick;
  }

  for (const auto& neg : ctx.automaton_signed.negative.rules()) {
    auto inst = instance_concluding(neg, target);
    if (!inst.has_value()) continue;
    for (const auto& sel : ctx.automaton_signed.selection_provenance.at(neg.id).selections) {
      bool matches = sel.entries.size() == wanted.size();
      for (const auto& entry : sel.entries) {
        auto it = wanted.find(entry.positive_rule);
        if (it == wanted.end() || it->second != entry.premise_index) {
          matches = false;
          break;
        }
      }
      if (!matches) continue;
      std::vector<Proof> children(neg.premises.size());
      for (const auto& entry : sel.entries) {
        Atom premise = instantiate(neg.premises[entry.simplified_position], inst->binding);
        children[entry.simplified_position] = certificates.at(premise);
      }
      return Proof::node(Sequent{Polarity::Refuted, target}, neg.id, inst->binding,
                         std::move(children));
    }
  }
  throw InternalError("no refutation rule matches the selection for " + to_string(target));
}

std::pair<std::size_t, Proof> select_impl(UnfoldContext& ctx, const RuleInstance& instance) {
  const Atom& conclusion = instance.conclusion;
  if (ctx.session.decide(conclusion) != Verdict::Refutable) {
    throw Error("premise selection: " + to_string(conclusion) + " is provable");
  }

  const auto memo_key = std::make_pair(instance.rule, instance.binding);
  if (auto it = ctx.selection_memo.find(memo_key); it != ctx.selection_memo.end()) {
    return it->second;
  }

  const Rule* rule = ctx.saturated.rules.find_by_id(instance.rule);
  if (rule == nullptr) {
    throw Error("premise selection: rule '" + instance.rule + "' is not in the closure");
  }
  const std::size_t rank = ctx.saturated.rank(instance.rule);

  std::pair<std::size_t, Proof> result;
  if (rank == 0) {
    result = select_from_certificate(ctx, instance);
  } else {
    // Gather, per major premise, the introduction-rule instances of the
    // closure concluding it. A major premise with none is refutable
    // straight away.
    std::optional<std::pair<std::size_t, Proof>> degenerate;
    std::vector<MajorFamily> majors;
    for (std::size_t pos : rule->majors) {
      MajorFamily family;
      family.position = pos;
      for (auto& intro : rule_instances_concluding(ctx.saturated.rules,
                                                   instance.premises[pos])) {
        const Rule* r = ctx.saturated.rules.find_by_id(intro.rule);
        if (r->introduction) family.intro_instances.push_back(std::move(intro));
      }
      if (family.intro_instances.empty()) {
        degenerate = {pos, ctx.session.refute(instance.premises[pos])};
        break;
      }
      majors.push_back(std::move(family));
    }

    if (degenerate.has_value()) {
      result = std::move(*degenerate);
    } else {
      // One family per premise position: introduction premise sets for the
      // majors, singletons for the rest.
      const std::size_t n = instance.premises.size();
      std::vector<SetFamily> families(n);
      std::vector<const MajorFamily*> major_at(n, nullptr);
      for (const auto& family : majors) major_at[family.position] = &family;
      for (std::size_t i = 0; i < n; ++i) {
        if (major_at[i] != nullptr) {
          for (const auto& intro : major_at[i]->intro_instances) {
            families[i].push_back({intro.premises.begin(), intro.premises.end()});
          }
        } else {
          families[i].push_back({instance.premises[i]});
        }
      }

      // For every tuple of introduction rules over the majors, the closure
      // holds a lower-rank rule concluding the same atom; recurse to find a
      // refutable premise per tuple.
      std::set<Atom> witness;
      std::map<Atom, Proof> certificates;
      std::vector<std::size_t> cursor(majors.size(), 0);
      for (;;) {
        if (++ctx.work_done > ctx.work_limit) {
          throw Error("premise selection exceeded the work limit of " +
                      std::to_string(ctx.work_limit) + " steps");
        }
        std::vector<CompositionPart> parts(n);
        for (std::size_t i = 0; i < majors.size(); ++i) {
          parts[majors[i].position] =
              *ctx.saturated.rules.find_by_id(majors[i].intro_instances[cursor[i]].rule);
        }
        auto composed = compose_rule(*rule, parts);
        if (!composed.has_value()) {
          throw InternalError("premise selection: tuple does not compose for rule '" +
                              rule->id + "'");
        }
        auto stored_index = ctx.saturated.rules.find_structural(*composed);
        if (!stored_index.has_value()) {
          throw InternalError("saturation closure is missing the composition of '" +
                              rule->id + "'");
        }
        const Rule& stored = ctx.saturated.rules.rule_at(*stored_index);
        if (ctx.saturated.rank(stored.id) >= rank) {
          throw InternalError("rank does not decrease from '" + rule->id + "' to '" +
                              stored.id + "'");
        }
        auto stored_instance = instance_concluding(stored, conclusion);
        if (!stored_instance.has_value()) {
          throw InternalError("composed rule '" + stored.id + "' does not conclude " +
                              to_string(conclusion));
        }
        auto [index, cert] = select_impl(ctx, *stored_instance);
        const Atom& k = stored_instance->premises[index];
        witness.insert(k);
        certificates.emplace(k, std::move(cert));

        std::size_t pos = majors.size();
        bool done = majors.empty();
        while (pos > 0) {
          --pos;
          if (++cursor[pos] < majors[pos].intro_instances.size()) break;
          cursor[pos] = 0;
          if (pos == 0) done = true;
        }
        if (done) break;
      }

      const std::size_t chosen = combinatorial_select(families, witness);
      if (major_at[chosen] == nullptr) {
        // Non-major position: its singleton family meets the witness set,
        // so its certificate is already in hand.
        result = {chosen, certificates.at(instance.premises[chosen])};
      } else {
        result = {chosen,
                  assemble_major_certificate(ctx, instance.premises[chosen],
                                             major_at[chosen]->intro_instances, witness,
                                             certificates)};
      }
    }
  }

  ctx.selection_memo.emplace(memo_key, result);
  return result;
}

}  // namespace

std::pair<std::size_t, Proof> select_refutable_premise(UnfoldContext& ctx,
                                                       const RuleInstance& instance) {
  return select_impl(ctx, instance);
}

std::pair<std::size_t, Proof> select_refutable_premise_naive(UnfoldContext& ctx,
                                                             const RuleInstance& instance) {
  if (ctx.session.decide(instance.conclusion) != Verdict::Refutable) {
    throw Error("premise selection: " + to_string(instance.conclusion) + " is provable");
  }
  for (std::size_t i = 0; i < instance.premises.size(); ++i) {
    if (ctx.session.decide(instance.premises[i]) == Verdict::Refutable) {
      return {i, ctx.session.refute(instance.premises[i])};
    }
  }
  throw InternalError("rule instance concluding " + to_string(instance.conclusion) +
                      " has no refutable premise");
}

namespace {

Proof unfold_node(UnfoldContext& ctx, const Atom& atom, std::size_t depth,
                  std::vector<Sequent>& ancestors, Selector selector) {
  const Sequent sequent{Polarity::Refuted, atom};
  const bool loop =
      std::find(ancestors.begin(), ancestors.end(), sequent) != ancestors.end();
  if (depth == 0) {
    Proof leaf = Proof::unexpanded(sequent);
    leaf.loop = loop;
    return leaf;
  }

  // One refutable premise per positive rule instance concluding the atom.
  std::vector<Atom> selected;
  for (const auto& hat_instance :
       rule_instances_concluding(ctx.original_signed.positive, atom)) {
    RuleInstance base = base_instance_for(ctx, ctx.original_signed.positive, hat_instance);
    auto [index, cert] = selector == Selector::Efficient
                             ? select_refutable_premise(ctx, base)
                             : select_refutable_premise_naive(ctx, base);
    const Atom& premise = base.premises[index];
    if (ctx.session.decide(premise) != Verdict::Refutable) {
      throw InternalError("selected premise " + to_string(premise) + " is provable");
    }
    if (std::find(selected.begin(), selected.end(), premise) == selected.end()) {
      selected.push_back(premise);
    }
  }

  // The selected premises identify the refutation rule instance.
  std::optional<RuleInstance> chosen;
  std::set<Atom> selected_set(selected.begin(), selected.end());
  for (const auto& inst : rule_instances_concluding(ctx.original_signed.negative, atom)) {
    std::set<Atom> premises(inst.premises.begin(), inst.premises.end());
    if (premises == selected_set) {
      chosen = inst;
      break;
    }
  }
  if (!chosen.has_value()) {
    throw InternalError("no refutation rule instance concluding " + to_string(atom) +
                        " matches the selected premises");
  }

  ancestors.push_back(sequent);
  std::vector<Proof> children;
  children.reserve(chosen->premises.size());
  for (const auto& premise : chosen->premises) {
    children.push_back(unfold_node(ctx, premise, depth - 1, ancestors, selector));
  }
  ancestors.pop_back();

  Proof node = Proof::node(sequent, chosen->rule, chosen->binding, std::move(children));
  node.loop = loop;
  return node;
}

}  // namespace

Proof unfold(UnfoldContext& ctx, const Atom& a, std::size_t depth, Selector selector) {
  if (ctx.session.decide(a) == Verdict::Provable) {
    throw Error("unfold: " + to_string(a) + " is provable; no counter-proof exists");
  }
  std::vector<Sequent> ancestors;
  return unfold_node(ctx, a, depth, ancestors, selector);
}

}  // namespace aps
