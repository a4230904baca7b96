#include "apsproof/parser.hpp"

#include <cctype>

namespace aps {

std::string to_string(const Diagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
}

namespace {

struct Token {
  enum class Kind { Ident, LParen, RParen, Comma, Dot, Arrow, Bad, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) {
      tok.kind = Token::Kind::End;
      return tok;
    }
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        tok.text += text_[pos_];
        advance();
      }
      tok.kind = Token::Kind::Ident;
      return tok;
    }
    if (c == '<' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      advance();
      advance();
      tok.kind = Token::Kind::Arrow;
      tok.text = "<-";
      return tok;
    }
    switch (c) {
      case '(': tok.kind = Token::Kind::LParen; break;
      case ')': tok.kind = Token::Kind::RParen; break;
      case ',': tok.kind = Token::Kind::Comma; break;
      case '.': tok.kind = Token::Kind::Dot; break;
      default:
        tok.kind = Token::Kind::Bad;
        tok.text = std::string(1, c);
        advance();
        return tok;
    }
    tok.text = std::string(1, c);
    advance();
    return tok;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      }
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct RawAtom {
  std::string predicate;
  std::vector<std::string> items;  // word symbols, without the tail token
  bool has_var = false;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct RawRule {
  RawAtom conclusion;
  std::vector<RawAtom> premises;
};

class Parser {
 public:
  Parser(const std::string& text, std::vector<Diagnostic>& diagnostics)
      : lexer_(text), diagnostics_(diagnostics) {
    advance();
  }

  std::optional<std::vector<RawRule>> parse_rules() {
    std::vector<RawRule> rules;
    while (current_.kind != Token::Kind::End) {
      if (current_.kind == Token::Kind::Bad) {
        error_here("unexpected character '" + current_.text + "'");
        return std::nullopt;
      }
      auto rule = parse_rule();
      if (!rule.has_value()) return std::nullopt;
      rules.push_back(std::move(*rule));
    }
    return rules;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  void error_here(const std::string& message) {
    diagnostics_.push_back({current_.line, current_.column, message});
  }

  std::optional<RawRule> parse_rule() {
    RawRule rule;
    auto conclusion = parse_atom();
    if (!conclusion.has_value()) return std::nullopt;
    rule.conclusion = std::move(*conclusion);
    if (current_.kind == Token::Kind::Arrow) {
      advance();
      for (;;) {
        auto premise = parse_atom();
        if (!premise.has_value()) return std::nullopt;
        rule.premises.push_back(std::move(*premise));
        if (current_.kind != Token::Kind::Comma) break;
        advance();
      }
    }
    if (current_.kind != Token::Kind::Dot) {
      error_here("expected '.' at the end of the rule");
      return std::nullopt;
    }
    advance();
    return rule;
  }

  std::optional<RawAtom> parse_atom() {
    if (current_.kind != Token::Kind::Ident) {
      error_here("expected a predicate name");
      return std::nullopt;
    }
    RawAtom atom;
    atom.predicate = current_.text;
    atom.line = current_.line;
    atom.column = current_.column;
    if (atom.predicate == "x" || atom.predicate == "eps") {
      error_here("'" + atom.predicate + "' is reserved and cannot be a predicate");
      return std::nullopt;
    }
    advance();
    if (current_.kind != Token::Kind::LParen) {
      error_here("expected '(' after predicate '" + atom.predicate + "'");
      return std::nullopt;
    }
    advance();
    bool word_closed = false;  // set once "x" or "eps" is seen
    while (current_.kind == Token::Kind::Ident) {
      if (word_closed) {
        error_here("'" + current_.text + "' appears after the end of the word");
        return std::nullopt;
      }
      if (current_.text == "x") {
        atom.has_var = true;
        word_closed = true;
      } else if (current_.text == "eps") {
        word_closed = true;
      } else {
        atom.items.push_back(current_.text);
      }
      advance();
    }
    if (current_.kind != Token::Kind::RParen) {
      error_here("expected ')' to close the atom");
      return std::nullopt;
    }
    advance();
    return atom;
  }

  Lexer lexer_;
  Token current_;
  std::vector<Diagnostic>& diagnostics_;
};

Pattern pattern_of(const RawAtom& atom) {
  return atom.has_var ? var_pattern(atom.predicate, atom.items)
                      : ground_pattern(atom.predicate, atom.items);
}

}  // namespace

ParseResult parse_system(const std::string& text) {
  ParseResult result;
  Parser parser(text, result.diagnostics);
  auto raw = parser.parse_rules();
  if (!raw.has_value()) return result;

  // Infer the signature from use.
  Signature sig;
  auto note = [&](const RawAtom& atom) {
    sig.predicates.insert(atom.predicate);
    for (const auto& item : atom.items) sig.symbols.insert(item);
  };
  for (const auto& rule : *raw) {
    note(rule.conclusion);
    for (const auto& premise : rule.premises) note(premise);
  }
  for (const auto& name : sig.predicates) {
    if (sig.symbols.count(name) != 0) {
      result.diagnostics.push_back(
          {1, 1, "'" + name + "' is used both as a predicate and as a stack symbol"});
    }
  }
  if (sig.predicates.empty()) {
    result.diagnostics.push_back({1, 1, "the file declares no rules"});
    return result;
  }
  if (sig.symbols.empty()) {
    result.diagnostics.push_back({1, 1, "no stack symbol appears in the file"});
  }
  if (!result.diagnostics.empty()) return result;

  // Build and validate the rules.
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < raw->size(); ++i) {
    const RawRule& rr = (*raw)[i];
    const auto line = rr.conclusion.line;
    const auto column = rr.conclusion.column;
    for (std::size_t a = 0; a < rr.premises.size(); ++a) {
      for (std::size_t b = a + 1; b < rr.premises.size(); ++b) {
        if (pattern_of(rr.premises[a]) == pattern_of(rr.premises[b])) {
          result.diagnostics.push_back(
              {rr.premises[b].line, rr.premises[b].column,
               "duplicate premise " + to_string(pattern_of(rr.premises[b]))});
        }
      }
    }
    std::vector<Pattern> premises;
    premises.reserve(rr.premises.size());
    for (const auto& p : rr.premises) premises.push_back(pattern_of(p));
    Rule rule;
    try {
      rule = Rule::make("r" + std::to_string(i + 1), pattern_of(rr.conclusion),
                        std::move(premises));
    } catch (const Error& e) {
      result.diagnostics.push_back({line, column, e.what()});
      continue;
    }
    if (!matches_aps_template(rule)) {
      result.diagnostics.push_back(
          {line, column,
           "rule " + to_string(rule) +
               " matches no pushdown shape (intro, elim, arbitrary, neutral, empty)"});
      continue;
    }
    for (const auto& prev : rules) {
      if (structurally_equal(prev, rule)) {
        result.diagnostics.push_back({line, column, "duplicate rule " + to_string(rule)});
        break;
      }
    }
    rules.push_back(std::move(rule));
  }
  if (!result.diagnostics.empty()) return result;

  System system(sig);
  for (auto& rule : rules) system.add_rule(std::move(rule));
  system.set_aps_shaped(true);
  result.system = std::move(system);
  return result;
}

std::optional<Atom> parse_atom(const std::string& text, std::string* error,
                               const Signature* sig) {
  auto fail = [&](const std::string& message) -> std::optional<Atom> {
    if (error != nullptr) *error = message;
    return std::nullopt;
  };

  // An atom is a premise-free statement of the rule grammar.
  std::vector<Diagnostic> diagnostics;
  const std::string padded = text + " .";
  Parser parser(padded, diagnostics);
  auto raw = parser.parse_rules();
  if (!raw.has_value()) {
    return fail(diagnostics.empty() ? "malformed atom" : to_string(diagnostics.front()));
  }
  if (raw->size() != 1 || !(*raw)[0].premises.empty()) return fail("expected a single atom");
  const RawAtom& atom = (*raw)[0].conclusion;
  if (atom.has_var) return fail("the atom must be closed (no 'x')");

  Atom out{atom.predicate, atom.items};
  if (sig != nullptr) {
    if (!sig->has_predicate(out.predicate)) {
      return fail("unknown predicate '" + out.predicate + "'");
    }
    for (const auto& sym : out.word) {
      if (!sig->has_symbol(sym)) return fail("unknown stack symbol '" + sym + "'");
    }
  }
  return out;
}

}  // namespace aps
