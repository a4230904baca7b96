#include "apsproof/pattern.hpp"

#include <algorithm>

namespace aps {

namespace {

bool is_prefix(const Word& prefix, const Word& word) {
  if (prefix.size() > word.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), word.begin());
}

Word suffix_from(const Word& word, std::size_t start) {
  return Word(word.begin() + static_cast<std::ptrdiff_t>(start), word.end());
}

}  // namespace

std::string to_string(const Pattern& p) {
  std::string inner;
  for (const auto& sym : p.prefix) {
    if (!inner.empty()) inner += ' ';
    inner += sym;
  }
  if (p.tail == Tail::Var) {
    if (!inner.empty()) inner += ' ';
    inner += 'x';
  } else if (inner.empty()) {
    inner = "eps";
  }
  return p.predicate + "(" + inner + ")";
}

Pattern ground_pattern(std::string predicate, Word word) {
  return Pattern{std::move(predicate), std::move(word), Tail::Ground};
}

Pattern var_pattern(std::string predicate, Word prefix) {
  return Pattern{std::move(predicate), std::move(prefix), Tail::Var};
}

Pattern apply(const Pattern& p, const PatternSubst& s) {
  if (p.is_ground()) return p;
  return Pattern{p.predicate, concat(p.prefix, s.word), s.keeps_var ? Tail::Var : Tail::Ground};
}

std::optional<Binding> match_pattern(const Pattern& p, const Atom& a) {
  if (p.predicate != a.predicate) return std::nullopt;
  if (p.is_ground()) {
    if (p.prefix == a.word) return Binding::ground();
    return std::nullopt;
  }
  if (!is_prefix(p.prefix, a.word)) return std::nullopt;
  return Binding::suffix(suffix_from(a.word, p.prefix.size()));
}

Atom instantiate(const Pattern& p, const Binding& b) {
  if (p.is_ground()) return Atom{p.predicate, p.prefix};
  if (b.is_ground()) {
    throw Error("cannot instantiate variable pattern " + to_string(p) +
                " with the ground binding");
  }
  return Atom{p.predicate, concat(p.prefix, b.word())};
}

std::optional<std::pair<PatternSubst, PatternSubst>> unify_patterns(const Pattern& p,
                                                                    const Pattern& q) {
  if (p.predicate != q.predicate) return std::nullopt;
  const bool pv = !p.is_ground();
  const bool qv = !q.is_ground();
  if (pv && qv) {
    if (p.prefix.size() <= q.prefix.size()) {
      if (!is_prefix(p.prefix, q.prefix)) return std::nullopt;
      return std::make_pair(PatternSubst::extend(suffix_from(q.prefix, p.prefix.size())),
                            PatternSubst::identity());
    }
    if (!is_prefix(q.prefix, p.prefix)) return std::nullopt;
    return std::make_pair(PatternSubst::identity(),
                          PatternSubst::extend(suffix_from(p.prefix, q.prefix.size())));
  }
  if (pv && !qv) {
    if (!is_prefix(p.prefix, q.prefix)) return std::nullopt;
    return std::make_pair(PatternSubst::close(suffix_from(q.prefix, p.prefix.size())),
                          PatternSubst::identity());
  }
  if (!pv && qv) {
    if (!is_prefix(q.prefix, p.prefix)) return std::nullopt;
    return std::make_pair(PatternSubst::identity(),
                          PatternSubst::close(suffix_from(p.prefix, q.prefix.size())));
  }
  if (p.prefix == q.prefix) {
    return std::make_pair(PatternSubst::identity(), PatternSubst::identity());
  }
  return std::nullopt;
}

}  // namespace aps
