// Basic vocabulary: stack words, signatures, atoms, sequents, bindings.
#ifndef APSPROOF_TYPES_HPP
#define APSPROOF_TYPES_HPP

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace aps {

/// A stack word: a finite sequence of stack-symbol names. Empty = epsilon.
using Word = std::vector<std::string>;

/// Concatenation helper.
Word concat(const Word& lhs, const Word& rhs);

/// Renders a word as space-separated symbols, "eps" when empty.
std::string word_to_string(const Word& w);

/// Thrown on contract violations visible to callers (bad input, bad usage).
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an internal invariant breaks; always indicates a bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Predicate and stack-symbol alphabets. The empty word is implicit.
struct Signature {
  std::set<std::string> predicates;
  std::set<std::string> symbols;

  bool operator==(const Signature&) const = default;

  /// Checks name well-formedness, non-emptiness and disjointness.
  /// Throws Error on violation.
  void validate() const;

  bool has_predicate(const std::string& name) const { return predicates.count(name) != 0; }
  bool has_symbol(const std::string& name) const { return symbols.count(name) != 0; }
};

/// True iff the name is a nonempty string over [A-Za-z0-9_] and not a
/// reserved token ("x" is the rule variable, "eps" the empty word).
bool is_valid_name(const std::string& name);

/// A closed proposition: predicate applied to a stack word.
struct Atom {
  std::string predicate;
  Word word;

  auto operator<=>(const Atom&) const = default;
};

std::string to_string(const Atom& a);

enum class Polarity { Proved, Refuted };

std::string to_string(Polarity p);

/// A signed proposition, written "|- A" or "|/- A".
struct Sequent {
  Polarity polarity = Polarity::Proved;
  Atom atom;

  auto operator<=>(const Sequent&) const = default;
};

std::string to_string(const Sequent& s);

/// The value bound to a rule's variable in a rule instance. Ground rules
/// (fully instantiated, no variable) use the distinguished ground binding.
class Binding {
 public:
  static Binding ground() { return Binding(std::nullopt); }
  static Binding suffix(Word w) { return Binding(std::move(w)); }

  bool is_ground() const { return !word_.has_value(); }
  const Word& word() const;

  auto operator<=>(const Binding&) const = default;

 private:
  explicit Binding(std::optional<Word> w) : word_(std::move(w)) {}
  std::optional<Word> word_;
};

std::string to_string(const Binding& b);

}  // namespace aps

#endif  // APSPROOF_TYPES_HPP
