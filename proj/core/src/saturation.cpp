#include "apsproof/saturation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace aps {

namespace {

/// For each major premise of g, the introduction rules of `sys` whose
/// conclusion unifies with it, in system order.
std::vector<std::vector<std::size_t>> major_candidates(const System& sys, const Rule& g) {
  std::vector<std::vector<std::size_t>> out(g.majors.size());
  for (std::size_t m = 0; m < g.majors.size(); ++m) {
    const Pattern& premise = g.premises[g.majors[m]];
    for (std::size_t k = 0; k < sys.size(); ++k) {
      const Rule& r = sys.rule_at(k);
      if (!r.introduction) continue;
      if (unify_patterns(premise, r.conclusion).has_value()) out[m].push_back(k);
    }
  }
  return out;
}

/// Calls fn for every complete tuple over the candidate lists, in
/// lexicographic order.
template <typename Fn>
void for_each_tuple(const std::vector<std::vector<std::size_t>>& candidates, Fn&& fn) {
  for (const auto& c : candidates) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> cursor(candidates.size(), 0);
  for (;;) {
    std::vector<std::size_t> tuple(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) tuple[i] = candidates[i][cursor[i]];
    fn(tuple);
    std::size_t pos = candidates.size();
    while (pos > 0) {
      --pos;
      if (++cursor[pos] < candidates[pos].size()) break;
      cursor[pos] = 0;
      if (pos == 0) return;
    }
    if (candidates.empty()) return;
  }
}

std::vector<CompositionPart> parts_for_tuple(const System& sys, const Rule& g,
                                             const std::vector<std::size_t>& tuple) {
  std::vector<CompositionPart> parts(g.premises.size());
  for (std::size_t m = 0; m < g.majors.size(); ++m) {
    parts[g.majors[m]] = sys.rule_at(tuple[m]);
  }
  return parts;
}

}  // namespace

std::size_t SaturatedSystem::rank(const RuleId& id) const {
  auto it = rank_table.find(id);
  if (it == rank_table.end()) throw Error("rank: unknown rule '" + id + "'");
  return it->second;
}

namespace {

enum class Mark { White, Grey, Black };

std::size_t rank_of(const SaturatedSystem& ss, std::size_t index, std::vector<Mark>& marks,
                    std::map<RuleId, std::size_t>& table) {
  const Rule& r = ss.rules.rule_at(index);
  if (r.introduction) return 0;
  if (marks[index] == Mark::Grey) {
    throw InternalError("rank: composition chain revisits rule '" + r.id + "'");
  }
  if (marks[index] == Mark::Black) return table.at(r.id);
  marks[index] = Mark::Grey;
  std::size_t best = 0;
  for (const auto& edge : major_compositions(ss, r.id)) {
    const Rule* result = ss.rules.find_by_id(edge.result);
    if (result->introduction) continue;
    auto idx = ss.rules.find_structural(*result);
    best = std::max(best, rank_of(ss, *idx, marks, table));
  }
  marks[index] = Mark::Black;
  const std::size_t rank = 1 + best;
  table[r.id] = rank;
  return rank;
}

}  // namespace

std::vector<CompositionEdge> major_compositions(const SaturatedSystem& ss, const RuleId& rule) {
  const Rule* g = ss.rules.find_by_id(rule);
  if (g == nullptr) throw Error("major_compositions: unknown rule '" + rule + "'");
  std::vector<CompositionEdge> out;
  if (g->introduction) return out;
  auto candidates = major_candidates(ss.rules, *g);
  for_each_tuple(candidates, [&](const std::vector<std::size_t>& tuple) {
    auto composed = compose_rule(*g, parts_for_tuple(ss.rules, *g, tuple));
    if (!composed.has_value()) return;
    auto idx = ss.rules.find_structural(*composed);
    if (!idx.has_value()) {
      throw InternalError("saturation closure is missing the composition of '" + g->id +
                          "': " + to_string(*composed));
    }
    CompositionEdge edge;
    edge.source = g->id;
    for (std::size_t t : tuple) edge.intro_tuple.push_back(ss.rules.rule_at(t).id);
    edge.result = ss.rules.rule_at(*idx).id;
    out.push_back(std::move(edge));
  });
  return out;
}

SaturatedSystem saturate(const System& s) {
  for (const auto& r : s.rules()) {
    if (!matches_aps_template(r)) {
      throw Error("saturate: rule " + r.id + " (" + to_string(r) +
                  ") is not an alternating pushdown rule");
    }
  }

  System closure = s;
  closure.set_aps_shaped(true);

  // FIFO worklist over (non-introduction rule, introduction tuple) pairs.
  std::deque<std::pair<std::size_t, std::vector<std::size_t>>> work;

  auto push_tuples = [&](std::size_t g_index, std::optional<std::size_t> must_contain) {
    const Rule& g = closure.rule_at(g_index);
    if (g.introduction || g.majors.empty()) return;
    auto candidates = major_candidates(closure, g);
    for_each_tuple(candidates, [&](const std::vector<std::size_t>& tuple) {
      if (must_contain.has_value() &&
          std::find(tuple.begin(), tuple.end(), *must_contain) == tuple.end()) {
        return;
      }
      work.emplace_back(g_index, tuple);
    });
  };

  for (std::size_t i = 0; i < closure.size(); ++i) push_tuples(i, std::nullopt);

  std::size_t next_id = 1;
  while (!work.empty()) {
    auto [g_index, tuple] = work.front();
    work.pop_front();
    const Rule& g = closure.rule_at(g_index);
    auto composed = compose_rule(g, parts_for_tuple(closure, g, tuple));
    if (!composed.has_value()) continue;
    if (closure.find_structural(*composed).has_value()) continue;
    if (!matches_aps_template(*composed)) {
      throw InternalError("saturation produced a rule outside the pushdown shapes: " +
                          to_string(*composed));
    }
    composed->id = "s" + std::to_string(next_id++);
    closure.add_rule(*composed);
    const std::size_t new_index = closure.size() - 1;
    if (closure.rule_at(new_index).introduction) {
      for (std::size_t i = 0; i < closure.size(); ++i) push_tuples(i, new_index);
    } else {
      push_tuples(new_index, std::nullopt);
    }
  }

  closure.set_saturated(true);
  SaturatedSystem ss{s, std::move(closure), {}};

  std::vector<Mark> marks(ss.rules.size(), Mark::White);
  for (std::size_t i = 0; i < ss.rules.size(); ++i) {
    const Rule& r = ss.rules.rule_at(i);
    ss.rank_table[r.id] = r.introduction ? 0 : rank_of(ss, i, marks, ss.rank_table);
  }
  return ss;
}

System extract_automaton(const SaturatedSystem& ss) {
  System out(ss.rules.signature());
  for (const auto& r : ss.rules.rules()) {
    if (r.introduction) out.add_rule(r);
  }
  out.set_automaton();
  return out;
}

namespace {

bool is_cut(const System& rules, const Proof& node) {
  const Rule* rule = rules.find_by_id(node.rule);
  if (rule == nullptr) throw Error("find_cut: unknown rule '" + node.rule + "'");
  if (rule->introduction) return false;
  for (std::size_t m : rule->majors) {
    const Rule* major_rule = rules.find_by_id(node.children[m].rule);
    if (major_rule == nullptr) {
      throw Error("find_cut: unknown rule '" + node.children[m].rule + "'");
    }
    if (!major_rule->introduction) return false;
  }
  return true;
}

bool find_cut_preorder(const System& rules, const Proof& node, ProofPath& path,
                       ProofPath& found) {
  if (is_cut(rules, node)) {
    found = path;
    return true;
  }
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(i);
    if (find_cut_preorder(rules, node.children[i], path, found)) return true;
    path.pop_back();
  }
  return false;
}

bool find_cut_postorder(const System& rules, const Proof& node, ProofPath& path,
                        ProofPath& found) {
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(i);
    if (find_cut_postorder(rules, node.children[i], path, found)) return true;
    path.pop_back();
  }
  if (is_cut(rules, node)) {
    found = path;
    return true;
  }
  return false;
}

std::size_t flat_position(const ComposedProvenance& prov, std::size_t base_premise,
                          std::optional<std::size_t> part_premise) {
  for (std::size_t i = 0; i < prov.sources.size(); ++i) {
    if (prov.sources[i].base_premise == base_premise &&
        prov.sources[i].part_premise == part_premise) {
      return i;
    }
  }
  throw InternalError("composed provenance has no source for premise " +
                      std::to_string(base_premise));
}

/// Rewrites one cut: composes the rule below with the introduction rules
/// proving its majors and reroutes the subproofs.
Proof rewrite_cut(const SaturatedSystem& ss, const Proof& node) {
  const Rule& g = *ss.rules.find_by_id(node.rule);
  std::vector<CompositionPart> parts(g.premises.size());
  for (std::size_t m : g.majors) parts[m] = *ss.rules.find_by_id(node.children[m].rule);
  auto composed = compose_rule(g, parts);
  if (!composed.has_value()) {
    throw InternalError("cut at " + to_string(node.sequent) + " does not compose");
  }
  auto index = ss.rules.find_structural(*composed);
  if (!index.has_value()) {
    throw InternalError("saturation closure is missing the composed rule " +
                        to_string(*composed));
  }
  const Rule& stored = ss.rules.rule_at(*index);
  const auto& prov = std::get<ComposedProvenance>(composed->provenance);

  // Children for the fresh composition's premise order.
  std::vector<const Proof*> by_fresh_premise(composed->premises.size(), nullptr);
  std::set<std::size_t> g_majors(g.majors.begin(), g.majors.end());
  for (std::size_t i = 0; i < g.premises.size(); ++i) {
    if (g_majors.count(i) != 0) {
      const Rule& f = *parts[i];
      for (std::size_t j = 0; j < f.premises.size(); ++j) {
        std::size_t target = prov.premise_map[flat_position(prov, i, j)];
        if (by_fresh_premise[target] == nullptr) {
          by_fresh_premise[target] = &node.children[i].children[j];
        }
      }
    } else {
      std::size_t target = prov.premise_map[flat_position(prov, i, std::nullopt)];
      if (by_fresh_premise[target] == nullptr) by_fresh_premise[target] = &node.children[i];
    }
  }

  // The stored rule may list the same premises in another order.
  auto binding = match_pattern(stored.conclusion, node.sequent.atom);
  if (!binding.has_value()) {
    throw InternalError("stored composition does not conclude " + to_string(node.sequent.atom));
  }
  std::vector<Proof> children;
  children.reserve(stored.premises.size());
  for (const auto& premise : stored.premises) {
    auto it = std::find(composed->premises.begin(), composed->premises.end(), premise);
    if (it == composed->premises.end()) {
      throw InternalError("stored composition and fresh composition disagree");
    }
    children.push_back(*by_fresh_premise[static_cast<std::size_t>(
        it - composed->premises.begin())]);
  }
  return Proof::node(node.sequent, stored.id, *binding, std::move(children));
}

}  // namespace

std::optional<ProofPath> find_cut(const System& rules, const Proof& pf) {
  if (!pf.fully_expanded()) throw Error("find_cut: proof has unexpanded nodes");
  ProofPath path;
  ProofPath found;
  if (find_cut_preorder(rules, pf, path, found)) return found;
  return std::nullopt;
}

Proof eliminate_cuts(const SaturatedSystem& ss, const Proof& pf) {
  if (!pf.fully_expanded()) throw Error("eliminate_cuts: proof has unexpanded nodes");
  Proof out = pf;
  for (;;) {
    ProofPath path;
    ProofPath found;
    if (!find_cut_postorder(ss.rules, out, path, found)) return out;
    Proof* node = &out;
    for (std::size_t i : found) node = &node->children[i];
    *node = rewrite_cut(ss, *node);
  }
}

namespace {

Proof expand_rule_application(const SaturatedSystem& ss, const Sequent& sequent,
                              const RuleId& rule_id, const Binding& binding,
                              std::vector<Proof> children);

Proof expand_composed(const SaturatedSystem& ss, const Sequent& sequent,
                      const ComposedProvenance& prov, const std::vector<Proof>& children) {
  const Rule* g = ss.rules.find_by_id(prov.base);
  if (g == nullptr) throw Error("lift_proof: provenance references unknown rule '" +
                                prov.base + "'");
  auto g_binding = match_pattern(g->conclusion, sequent.atom);
  if (!g_binding.has_value()) {
    throw InternalError("lift_proof: base rule does not conclude " + to_string(sequent.atom));
  }
  std::vector<Proof> g_children;
  g_children.reserve(g->premises.size());
  for (std::size_t i = 0; i < g->premises.size(); ++i) {
    Atom premise = instantiate(g->premises[i], *g_binding);
    if (!prov.parts[i].has_value()) {
      g_children.push_back(children[prov.premise_map[flat_position(prov, i, std::nullopt)]]);
      continue;
    }
    const Rule* f = ss.rules.find_by_id(*prov.parts[i]);
    if (f == nullptr) throw Error("lift_proof: provenance references unknown rule '" +
                                  *prov.parts[i] + "'");
    auto f_binding = match_pattern(f->conclusion, premise);
    if (!f_binding.has_value()) {
      throw InternalError("lift_proof: part rule does not conclude " + to_string(premise));
    }
    std::vector<Proof> f_children;
    f_children.reserve(f->premises.size());
    for (std::size_t j = 0; j < f->premises.size(); ++j) {
      f_children.push_back(children[prov.premise_map[flat_position(prov, i, j)]]);
    }
    g_children.push_back(expand_rule_application(ss, Sequent{sequent.polarity, premise},
                                                 f->id, *f_binding, std::move(f_children)));
  }
  return expand_rule_application(ss, sequent, g->id, *g_binding, std::move(g_children));
}

Proof expand_rule_application(const SaturatedSystem& ss, const Sequent& sequent,
                              const RuleId& rule_id, const Binding& binding,
                              std::vector<Proof> children) {
  const Rule* rule = ss.rules.find_by_id(rule_id);
  if (rule == nullptr) throw Error("lift_proof: unknown rule '" + rule_id + "'");
  if (std::holds_alternative<PrimitiveProvenance>(rule->provenance)) {
    return Proof::node(sequent, rule_id, binding, std::move(children));
  }
  if (const auto* hat = std::get_if<HatProvenance>(&rule->provenance)) {
    Binding base_binding = hat->subst.keeps_var
                               ? Binding::suffix(concat(hat->subst.word, binding.word()))
                               : Binding::suffix(hat->subst.word);
    return expand_rule_application(ss, sequent, hat->base, base_binding, std::move(children));
  }
  return expand_composed(ss, sequent, std::get<ComposedProvenance>(rule->provenance), children);
}

}  // namespace

Proof lift_proof(const SaturatedSystem& ss, const Proof& pf) {
  if (pf.marker == Marker::Unexpanded) {
    throw Error("lift_proof: proof has unexpanded nodes");
  }
  std::vector<Proof> children;
  children.reserve(pf.children.size());
  for (const auto& c : pf.children) children.push_back(lift_proof(ss, c));
  return expand_rule_application(ss, pf.sequent, pf.rule, pf.binding, std::move(children));
}

}  // namespace aps
