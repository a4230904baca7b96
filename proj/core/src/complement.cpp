#include "apsproof/complement.hpp"

#include <algorithm>
#include <map>

namespace aps {

std::vector<Pattern> conclusion_basis(const Signature& sig) {
  std::vector<Pattern> out;
  for (const auto& pred : sig.predicates) {
    out.push_back(ground_pattern(pred, {}));
    for (const auto& sym : sig.symbols) out.push_back(var_pattern(pred, {sym}));
  }
  return out;
}

Pattern basis_pattern_for(const Signature& sig, const Atom& a) {
  if (!sig.has_predicate(a.predicate)) {
    throw Error("basis_pattern_for: unknown predicate '" + a.predicate + "'");
  }
  if (a.word.empty()) return ground_pattern(a.predicate, {});
  if (!sig.has_symbol(a.word.front())) {
    throw Error("basis_pattern_for: unknown stack symbol '" + a.word.front() + "'");
  }
  return var_pattern(a.predicate, {a.word.front()});
}

namespace {

bool in_basis(const Pattern& conclusion) {
  if (conclusion.is_ground()) return conclusion.prefix.empty();
  return conclusion.prefix.size() == 1;
}

}  // namespace

System hat(const System& s) {
  System out(s.signature());
  for (const auto& r : s.rules()) {
    if (in_basis(r.conclusion)) {
      out.add_rule(r);
      continue;
    }
    if (r.conclusion.is_ground()) {
      throw Error("hat: conclusion " + to_string(r.conclusion) + " of rule " + r.id +
                  " is closed but not in the conclusion basis");
    }
    if (!r.conclusion.prefix.empty()) {
      throw Error("hat: conclusion " + to_string(r.conclusion) + " of rule " + r.id +
                  " has a prefix longer than one symbol");
    }
    // Replace P(x) <- ... with one instance per basis pattern of P.
    auto specialize = [&](const PatternSubst& subst, const std::string& suffix) {
      std::vector<Pattern> premises;
      premises.reserve(r.premises.size());
      for (const auto& p : r.premises) premises.push_back(apply(p, subst));
      Rule inst = Rule::make(r.id + "@" + suffix, apply(r.conclusion, subst),
                             std::move(premises), HatProvenance{r.id, subst});
      if (inst.rule_class == RuleClass::DerivedNonIntro) inst.majors = r.majors;
      out.add_rule(std::move(inst));
    };
    specialize(PatternSubst::close({}), "eps");
    for (const auto& sym : s.signature().symbols) {
      specialize(PatternSubst::extend({sym}), sym);
    }
  }
  out.set_hatted(true);
  if (s.automaton()) out.set_automaton();
  return out;
}

ComplementResult complement(const System& s, const ComplementOptions& options) {
  if (!s.hatted()) throw Error("complement: input system is not hatted");

  ComplementResult out;
  out.system = System(s.signature());
  std::size_t next_id = 1;

  for (const auto& basis : conclusion_basis(s.signature())) {
    // The group of rules concluding exactly this basis pattern, in system
    // order.
    std::vector<const Rule*> group;
    for (const auto& r : s.rules()) {
      if (r.conclusion == basis) group.push_back(&r);
    }

    std::size_t tuple_count = 1;
    for (const Rule* r : group) {
      tuple_count *= r->premises.size();  // zero kills the whole product
      if (tuple_count > options.max_rules_per_conclusion) {
        throw Error("complement: conclusion " + to_string(basis) + " would generate more than " +
                    std::to_string(options.max_rules_per_conclusion) + " rules");
      }
    }
    if (tuple_count == 0) continue;  // some rule is premise-free: no rules for this pattern

    // Walk the cross product in lexicographic order. The empty group yields
    // the single empty selection, i.e. the axiom for this pattern.
    std::vector<std::size_t> cursor(group.size(), 0);
    for (;;) {
      std::vector<Pattern> flat;
      flat.reserve(group.size());
      for (std::size_t i = 0; i < group.size(); ++i) {
        flat.push_back(group[i]->premises[cursor[i]]);
      }

      // Simplify the selection and remember where each pick landed.
      std::vector<Pattern> premises;
      Selection selection;
      for (std::size_t i = 0; i < group.size(); ++i) {
        auto it = std::find(premises.begin(), premises.end(), flat[i]);
        std::size_t position;
        if (it == premises.end()) {
          position = premises.size();
          premises.push_back(flat[i]);
        } else {
          position = static_cast<std::size_t>(it - premises.begin());
        }
        selection.entries.push_back({group[i]->id, cursor[i], position});
      }

      Rule rule = Rule::make(options.id_prefix + std::to_string(next_id), basis,
                             std::move(premises));
      auto existing = out.system.find_structural(rule);
      if (existing.has_value()) {
        // Collapsed duplicate: remap the picks onto the surviving rule's
        // premise order and keep the selection as an alternate.
        const Rule& survivor = out.system.rule_at(*existing);
        for (std::size_t i = 0; i < selection.entries.size(); ++i) {
          const Pattern& picked = group[i]->premises[selection.entries[i].premise_index];
          auto pos = std::find(survivor.premises.begin(), survivor.premises.end(), picked);
          selection.entries[i].simplified_position =
              static_cast<std::size_t>(pos - survivor.premises.begin());
        }
        out.selection_provenance[survivor.id].selections.push_back(std::move(selection));
      } else {
        ++next_id;
        RuleId id = rule.id;
        out.system.add_rule(std::move(rule));
        out.selection_provenance[id].selections.push_back(std::move(selection));
      }

      // Advance the odometer.
      std::size_t pos = group.size();
      bool done = group.empty();
      while (pos > 0) {
        --pos;
        if (++cursor[pos] < group[pos]->premises.size()) break;
        cursor[pos] = 0;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
  }

  out.system.set_hatted(true);
  return out;
}

SignedSystem complementation(const System& s, const std::string& negative_id_prefix,
                             const ComplementOptions& options) {
  SignedSystem out;
  out.positive = hat(s);
  ComplementOptions opts = options;
  opts.id_prefix = negative_id_prefix;
  ComplementResult neg = complement(out.positive, opts);
  out.negative = std::move(neg.system);
  out.selection_provenance = std::move(neg.selection_provenance);
  if (s.automaton()) {
    // The complement of an automaton is an automaton.
    out.negative.set_automaton();
  }
  return out;
}

}  // namespace aps
