#include "apsproof/types.hpp"

#include <cctype>

namespace aps {

Word concat(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ' ';
    out += w[i];
  }
  return out;
}

bool is_valid_name(const std::string& name) {
  if (name.empty() || name == "x" || name == "eps") return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

void Signature::validate() const {
  if (predicates.empty()) throw Error("signature has no predicates");
  if (symbols.empty()) throw Error("signature has no stack symbols");
  for (const auto& p : predicates) {
    if (!is_valid_name(p)) throw Error("invalid predicate name: '" + p + "'");
    if (symbols.count(p) != 0) {
      throw Error("name used both as predicate and stack symbol: '" + p + "'");
    }
  }
  for (const auto& s : symbols) {
    if (!is_valid_name(s)) throw Error("invalid stack symbol name: '" + s + "'");
  }
}

std::string to_string(const Atom& a) {
  return a.predicate + "(" + word_to_string(a.word) + ")";
}

std::string to_string(Polarity p) { return p == Polarity::Proved ? "proved" : "refuted"; }

std::string to_string(const Sequent& s) {
  return (s.polarity == Polarity::Proved ? "|- " : "|/- ") + to_string(s.atom);
}

const Word& Binding::word() const {
  if (!word_.has_value()) throw Error("ground binding has no word");
  return *word_;
}

std::string to_string(const Binding& b) {
  return b.is_ground() ? "<ground>" : word_to_string(b.word());
}

}  // namespace aps
