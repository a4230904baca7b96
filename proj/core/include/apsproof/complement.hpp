// Conclusion specialization (the hat construction) and the cross-product
// complement.
#ifndef APSPROOF_COMPLEMENT_HPP
#define APSPROOF_COMPLEMENT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "apsproof/signed_system.hpp"
#include "apsproof/system.hpp"

namespace aps {

/// The conclusion basis over a signature: for every predicate P, the
/// patterns P(eps) and P(a x) for each symbol a, in deterministic order
/// (predicate, then eps, then symbols). Every closed atom is an instance of
/// exactly one basis pattern.
std::vector<Pattern> conclusion_basis(const Signature& sig);

/// The basis pattern covering a closed atom.
Pattern basis_pattern_for(const Signature& sig, const Atom& a);

/// Specializes every rule conclusion into the basis: rules whose conclusion
/// is already a basis pattern are kept; a rule concluding P(x) is replaced
/// by its instance at eps and one instance per symbol. Kept rules keep
/// their ids; instances are named "<id>@eps" / "<id>@<symbol>". Throws
/// Error on conclusions that cannot be specialized (Var prefix of length
/// two or more, or a ground conclusion with a nonempty word that is not a
/// basis pattern).
System hat(const System& s);

struct ComplementResult {
  System system;
  std::map<RuleId, SelectionAlternatives> selection_provenance;
};

/// Options for the cross-product complement.
struct ComplementOptions {
  std::string id_prefix = "c";
  /// Abort with a diagnostic when one conclusion pattern would generate
  /// more than this many rules.
  std::size_t max_rules_per_conclusion = 1000000;
};

/// Builds the complement of a hatted system: for every basis pattern B and
/// the n rules concluding B with premise lists of sizes m_1..m_n, emits the
/// m_1 x ... x m_n simplified selection rules B <- A^1_{j1}, ..., A^n_{jn}.
/// No rules concluding B yields the axiom for B; a premise-free rule in the
/// group yields no rules for B. Duplicates collapsing after simplification
/// keep every selection tuple. Throws Error on non-hatted input.
ComplementResult complement(const System& s, const ComplementOptions& options = {});

/// Positive side = hat(s) read over proved sequents, negative side =
/// complement(hat(s)) over refuted sequents. `negative_id_prefix` names the
/// negative rules (e.g. "j" for the complement of the original system, "b"
/// for the complement of the automaton). When the input is an automaton the
/// negative side is verified to be one as well.
SignedSystem complementation(const System& s, const std::string& negative_id_prefix = "c",
                             const ComplementOptions& options = {});

}  // namespace aps

#endif  // APSPROOF_COMPLEMENT_HPP
