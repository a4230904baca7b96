// Saturation: closing a system under composition of non-introduction rules
// with introduction rules, automaton extraction, ranks, cuts.
#ifndef APSPROOF_SATURATION_HPP
#define APSPROOF_SATURATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "apsproof/proof.hpp"
#include "apsproof/system.hpp"

namespace aps {

/// A base system together with its saturation closure. The closure contains
/// the base and, for every non-introduction rule g and every tuple of
/// introduction rules unifiable with g's major premises, the simplified
/// composition. rank_table maps every rule to its rank: 0 for introduction
/// rules, 1 + max rank of the non-introduction compositions otherwise.
struct SaturatedSystem {
  System base;
  System rules;
  std::map<RuleId, std::size_t> rank_table;

  std::size_t rank(const RuleId& id) const;
};

/// Saturates an APS-shaped system. Added rule ids are "s1", "s2", ... in
/// worklist order (FIFO over (non-introduction rule, introduction tuple)
/// pairs). Throws Error when the input is not APS-shaped.
SaturatedSystem saturate(const System& s);

/// One composition edge of the closure: the tuple of introduction rules
/// plugged into the majors and the resulting rule of the closure.
struct CompositionEdge {
  RuleId source;
  std::vector<RuleId> intro_tuple;   // one per major premise
  RuleId result;
};

/// Every composition of `rule`'s majors with introduction rules of the
/// closure, in deterministic order. Used by rank computation and tests.
std::vector<CompositionEdge> major_compositions(const SaturatedSystem& ss, const RuleId& rule);

/// The introduction fragment of the closure, flagged as an automaton.
System extract_automaton(const SaturatedSystem& ss);

/// Path to the first cut in pre-order: a subtree ending with a
/// non-introduction rule whose major premises are all proved by subtrees
/// ending with introduction rules. Requires a fully expanded proof.
std::optional<ProofPath> find_cut(const System& rules, const Proof& pf);

/// Rewrites innermost cuts with the corresponding composed rules of the
/// closure until none remain. The result is cut free, valid in ss.rules and
/// proves the same atom. Throws InternalError when a needed composed rule
/// is missing from the closure.
Proof eliminate_cuts(const SaturatedSystem& ss, const Proof& pf);

/// Replays composition and specialization provenance, turning a proof in
/// the extracted automaton into a proof in the base system with the same
/// conclusion.
Proof lift_proof(const SaturatedSystem& ss, const Proof& pf);

}  // namespace aps

#endif  // APSPROOF_SATURATION_HPP
