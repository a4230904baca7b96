// Proof trees and the independent proof checker.
#ifndef APSPROOF_PROOF_HPP
#define APSPROOF_PROOF_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "apsproof/signed_system.hpp"
#include "apsproof/system.hpp"

namespace aps {

enum class Marker { Expanded, Unexpanded };

/// A finite proof tree, or a depth-bounded prefix of an infinite one when
/// Unexpanded frontier nodes are present. At every Expanded node the rule
/// instantiated at the binding must conclude the node's atom and its
/// premises must be exactly the children's atoms, in order.
struct Proof {
  Sequent sequent;
  RuleId rule;                      // empty on Unexpanded nodes
  Binding binding = Binding::ground();
  std::vector<Proof> children;
  Marker marker = Marker::Expanded;
  bool loop = false;                // display-only: sequent repeats on its branch

  bool fully_expanded() const;
  std::size_t node_count() const;

  bool operator==(const Proof&) const = default;

  static Proof unexpanded(Sequent s);
  static Proof node(Sequent s, RuleId rule, Binding binding, std::vector<Proof> children);
};

/// Path from the root: child indices.
using ProofPath = std::vector<std::size_t>;

std::string to_string(const ProofPath& path);

/// Whether Unexpanded leaves are acceptable.
enum class CheckMode { Full, Prefix };

struct CheckResult {
  bool valid = true;
  ProofPath path;       // first offending node when invalid
  std::string reason;

  explicit operator bool() const { return valid; }
};

/// Checks a single-polarity proof against a system. Every node must carry
/// `polarity`, every Expanded node a rule instance of `s`.
CheckResult check_proof(const System& s, const Proof& pf, Polarity polarity,
                        CheckMode mode = CheckMode::Full);

/// Checks a signed proof: Proved nodes against the positive side, Refuted
/// nodes against the negative side.
CheckResult check_proof(const SignedSystem& s, const Proof& pf,
                        CheckMode mode = CheckMode::Full);

/// Subtree lookup; throws Error on a bad path.
const Proof& subproof_at(const Proof& pf, const ProofPath& path);

}  // namespace aps

#endif  // APSPROOF_PROOF_HPP
