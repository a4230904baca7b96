// Terminating decision procedure over automata plus the Kleene iteration
// oracle.
#ifndef APSPROOF_DECIDE_HPP
#define APSPROOF_DECIDE_HPP

#include <cstddef>
#include <map>
#include <set>

#include "apsproof/proof.hpp"
#include "apsproof/signed_system.hpp"
#include "apsproof/system.hpp"

namespace aps {

enum class Verdict { Provable, Refutable };

std::string to_string(Verdict v);

/// Decides closed atoms over an automaton and builds certificates on both
/// sides: proved certificates in the automaton, refuted certificates in the
/// negative side of its complementation. Memoized; single writer.
class DecisionSession {
 public:
  /// `automaton` must be flagged as an automaton; `signed_system` is its
  /// complementation.
  DecisionSession(System automaton, SignedSystem signed_system);

  const System& automaton() const { return automaton_; }
  const SignedSystem& signed_system() const { return signed_; }

  /// An atom is Provable iff some automaton rule instance concludes it with
  /// all premises Provable. Terminates: premises are strictly shorter.
  Verdict decide(const Atom& a);

  /// Proved certificate, valid in the automaton. Throws Error on a
  /// Refutable atom.
  const Proof& prove(const Atom& a);

  /// Refuted certificate, valid in the negative side. Picks the first
  /// negative rule instance all of whose premises are Refutable. Throws
  /// Error on a Provable atom.
  const Proof& refute(const Atom& a);

 private:
  System automaton_;
  SignedSystem signed_;
  std::map<Atom, Verdict> memo_;
  std::map<Atom, std::size_t> witness_instance_;  // index into positive instances
  std::map<Atom, Proof> proof_cache_;
  std::map<Atom, Proof> refutation_cache_;
};

struct KleeneResult {
  std::set<Atom> atoms;
  bool stabilized = false;
  /// Whether the universe was suffix closed (see is_suffix_closed). When it
  /// is not, the result is still a sound under-approximation but may miss
  /// atoms even on automata.
  bool universe_suffix_closed = false;
};

/// True when the universe contains, for every atom with a nonempty word and
/// every predicate of the signature, the atom over the word's tail. Kleene
/// iteration on an automaton is exact exactly on such universes.
bool is_suffix_closed(const Signature& sig, const std::set<Atom>& universe);

/// Iterates X <- F_s(X) intersected with the universe, starting from the
/// empty set, `steps` times or until stable. A sound under-approximation of
/// the least fixed point; exact on the universe when `s` is an automaton
/// and the universe is suffix closed (the result carries the check).
KleeneResult kleene(const System& s, const std::set<Atom>& universe, std::size_t steps);

/// Iterates to stabilization (bounded by the universe size).
KleeneResult kleene_fixpoint(const System& s, const std::set<Atom>& universe);

/// One application of F_s clipped to the universe.
std::set<Atom> kleene_step(const System& s, const std::set<Atom>& universe,
                           const std::set<Atom>& current);

/// All atoms with word length at most max_word_len: suffix closed.
std::set<Atom> atom_universe(const Signature& sig, std::size_t max_word_len);

}  // namespace aps

#endif  // APSPROOF_DECIDE_HPP
