// Turning finite refutation certificates into depth-bounded prefixes of the
// (possibly infinite) counter-proof in the complementation of the original
// system.
#ifndef APSPROOF_COUNTERPROOF_HPP
#define APSPROOF_COUNTERPROOF_HPP

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "apsproof/complement.hpp"
#include "apsproof/decide.hpp"
#include "apsproof/proof.hpp"
#include "apsproof/saturation.hpp"

namespace aps {

/// Everything an unfolding needs: the saturation closure of the base
/// system, both complementations, and a decision session over the
/// automaton. Single writer during an unfolding.
struct UnfoldContext {
  SaturatedSystem saturated;   // closure of the base system
  SignedSystem original_signed;  // complementation of the base system ("j" rules)
  SignedSystem automaton_signed; // complementation of the automaton ("b" rules)
  DecisionSession session;
  std::size_t work_limit = 1000000;
  std::size_t work_done = 0;
  std::map<std::pair<RuleId, Binding>, std::pair<std::size_t, Proof>> selection_memo;

  UnfoldContext(SaturatedSystem saturated_in, SignedSystem original_signed_in,
                SignedSystem automaton_signed_in, DecisionSession session_in)
      : saturated(std::move(saturated_in)),
        original_signed(std::move(original_signed_in)),
        automaton_signed(std::move(automaton_signed_in)),
        session(std::move(session_in)) {}
};

/// Builds the full pipeline from an APS-shaped base system.
UnfoldContext make_unfold_context(const System& base, std::size_t work_limit = 1000000);

/// A family of sets indexed 0..k-1.
using SetFamily = std::vector<std::set<Atom>>;

/// Given families H^1..H^n and a set W such that every union
/// H^1_{j1} u ... u H^n_{jn} meets W, returns the smallest index l (0-based)
/// such that every H^l_j meets W. Computed by recursive case analysis on
/// the last family. The precondition is checked; violations throw
/// InternalError.
std::size_t combinatorial_select(const std::vector<SetFamily>& families, const std::set<Atom>& w);

/// Premise selection by rank induction: given a rule instance of the base
/// system concluding a Refutable atom, returns the index of a Refutable
/// premise together with its refuted certificate in the complementation of
/// the automaton. Memoized on (rule id, binding).
std::pair<std::size_t, Proof> select_refutable_premise(UnfoldContext& ctx,
                                                       const RuleInstance& instance);

/// Oracle variant: first premise the decision procedure marks Refutable,
/// certificate from the session.
std::pair<std::size_t, Proof> select_refutable_premise_naive(UnfoldContext& ctx,
                                                             const RuleInstance& instance);

enum class Selector { Efficient, Naive };

/// Depth-bounded prefix of the counter-proof of `a` in the complementation
/// of the base system. The root is the refuted sequent for `a`; at every
/// node one refutable premise is selected from each positive rule instance
/// concluding the atom, and the selected premises identify the negative
/// rule instance. Nodes at the depth frontier are Unexpanded; a node whose
/// sequent repeats an ancestor is annotated as a loop and still expanded.
/// Throws Error when `a` is Provable.
Proof unfold(UnfoldContext& ctx, const Atom& a, std::size_t depth,
             Selector selector = Selector::Efficient);

}  // namespace aps

#endif  // APSPROOF_COUNTERPROOF_HPP
