#include "apsproof/rule.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace aps {

namespace {

bool is_prefix_of(const Word& prefix, const Word& word) {
  if (prefix.size() > word.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), word.begin());
}

Word word_suffix(const Word& word, std::size_t start) {
  return Word(word.begin() + static_cast<std::ptrdiff_t>(start), word.end());
}

/// Every instantiation of `premise` yields a strictly shorter word than the
/// same instantiation of `conclusion`. The well-founded order is word
/// length.
bool premise_strictly_smaller(const Pattern& conclusion, const Pattern& premise) {
  if (premise.tail == Tail::Var) {
    // Var premise under a Ground conclusion is rejected before this point.
    return conclusion.tail == Tail::Var && premise.prefix.size() < conclusion.prefix.size();
  }
  if (conclusion.tail == Tail::Var) return premise.prefix.size() < conclusion.prefix.size();
  return premise.prefix.size() < conclusion.prefix.size();
}

bool all_var_with_prefix(const std::vector<Pattern>& premises, std::size_t len) {
  return std::all_of(premises.begin(), premises.end(), [len](const Pattern& p) {
    return p.tail == Tail::Var && p.prefix.size() == len;
  });
}

}  // namespace

std::string to_string(RuleClass c) {
  switch (c) {
    case RuleClass::Intro: return "intro";
    case RuleClass::Elim: return "elim";
    case RuleClass::Arbitrary: return "arbitrary";
    case RuleClass::Neutral: return "neutral";
    case RuleClass::Empty: return "empty";
    case RuleClass::DerivedNonIntro: return "derived-non-intro";
  }
  return "?";
}

Classification classify_rule(const Pattern& conclusion, const std::vector<Pattern>& premises) {
  if (conclusion.is_ground()) {
    for (const auto& p : premises) {
      if (!p.is_ground()) {
        throw Error("premise " + to_string(p) + " uses the variable but the conclusion " +
                    to_string(conclusion) + " is closed");
      }
    }
  }

  Classification out;
  out.introduction = std::all_of(premises.begin(), premises.end(), [&](const Pattern& p) {
    return premise_strictly_smaller(conclusion, p);
  });

  const std::size_t n = premises.size();
  const bool concl_var = conclusion.tail == Tail::Var;
  if (concl_var && conclusion.prefix.size() == 1 && all_var_with_prefix(premises, 0)) {
    out.rule_class = RuleClass::Intro;
  } else if (concl_var && conclusion.prefix.empty() && n == 0) {
    out.rule_class = RuleClass::Arbitrary;
  } else if (concl_var && conclusion.prefix.empty() && n >= 1 &&
             all_var_with_prefix(premises, 0)) {
    out.rule_class = RuleClass::Neutral;
  } else if (concl_var && conclusion.prefix.empty() && n >= 1 &&
             premises[0].tail == Tail::Var && premises[0].prefix.size() == 1 &&
             all_var_with_prefix({premises.begin() + 1, premises.end()}, 0)) {
    out.rule_class = RuleClass::Elim;
  } else if (!concl_var && conclusion.prefix.empty() && n == 0) {
    out.rule_class = RuleClass::Empty;
  } else {
    out.rule_class = out.introduction ? RuleClass::Intro : RuleClass::DerivedNonIntro;
  }

  switch (out.rule_class) {
    case RuleClass::Elim:
      out.majors = {0};
      break;
    case RuleClass::Neutral:
    case RuleClass::DerivedNonIntro:
      out.majors.resize(n);
      for (std::size_t i = 0; i < n; ++i) out.majors[i] = i;
      break;
    default:
      break;  // introduction rules have no majors
  }
  return out;
}

Classification classify_rule(const Rule& r) { return classify_rule(r.conclusion, r.premises); }

Rule Rule::make(RuleId id, Pattern conclusion, std::vector<Pattern> premises,
                Provenance provenance) {
  Rule r;
  r.id = std::move(id);
  r.conclusion = std::move(conclusion);
  r.premises = std::move(premises);
  r.provenance = std::move(provenance);
  Classification c = classify_rule(r.conclusion, r.premises);
  r.rule_class = c.rule_class;
  r.introduction = c.introduction;
  r.majors = std::move(c.majors);
  return r;
}

std::string to_string(const Rule& r) {
  std::string out = to_string(r.conclusion);
  if (!r.premises.empty()) {
    out += " <- ";
    for (std::size_t i = 0; i < r.premises.size(); ++i) {
      if (i != 0) out += ", ";
      out += to_string(r.premises[i]);
    }
  }
  return out;
}

bool matches_aps_template(const Rule& r) {
  switch (classify_rule(r).rule_class) {
    case RuleClass::Intro:
      return r.conclusion.tail == Tail::Var && r.conclusion.prefix.size() == 1;
    case RuleClass::Elim:
    case RuleClass::Arbitrary:
    case RuleClass::Neutral:
    case RuleClass::Empty:
      return true;
    case RuleClass::DerivedNonIntro:
      return false;
  }
  return false;
}

Rule simplify_rule(const Rule& r) {
  std::vector<Pattern> premises;
  std::vector<std::size_t> remap(r.premises.size());
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    auto it = std::find(premises.begin(), premises.end(), r.premises[i]);
    if (it == premises.end()) {
      remap[i] = premises.size();
      premises.push_back(r.premises[i]);
    } else {
      remap[i] = static_cast<std::size_t>(it - premises.begin());
    }
  }
  Rule out = Rule::make(r.id, r.conclusion, std::move(premises), r.provenance);
  if (out.rule_class == RuleClass::DerivedNonIntro) {
    std::set<std::size_t> majors;
    for (std::size_t m : r.majors) majors.insert(remap[m]);
    if (!majors.empty()) out.majors.assign(majors.begin(), majors.end());
  }
  return out;
}

std::optional<Rule> compose_rule(const Rule& g, const std::vector<CompositionPart>& parts) {
  if (parts.size() != g.premises.size()) {
    throw Error("compose_rule: expected " + std::to_string(g.premises.size()) +
                " parts, got " + std::to_string(parts.size()));
  }

  // Joint unification: fold every non-identity position into one
  // substitution for g's variable.
  PatternSubst binding = PatternSubst::identity();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].has_value() || g.premises[i].is_ground()) continue;
    Pattern inst = apply(g.premises[i], binding);
    auto unified = unify_patterns(inst, parts[i]->conclusion);
    if (!unified.has_value()) return std::nullopt;
    binding.word = concat(binding.word, unified->first.word);
    binding.keeps_var = binding.keeps_var && unified->first.keeps_var;
  }

  // Instantiate and splice in the parts' premises.
  std::vector<Pattern> flat;
  std::vector<ComposedPremiseSource> sources;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Pattern inst = apply(g.premises[i], binding);
    if (!parts[i].has_value()) {
      flat.push_back(inst);
      sources.push_back({i, std::nullopt});
      continue;
    }
    const Rule& part = *parts[i];
    PatternSubst part_subst = PatternSubst::identity();
    if (part.conclusion.is_ground()) {
      if (!inst.is_ground() || inst.prefix != part.conclusion.prefix) return std::nullopt;
    } else {
      if (!is_prefix_of(part.conclusion.prefix, inst.prefix)) return std::nullopt;
      Word suffix = word_suffix(inst.prefix, part.conclusion.prefix.size());
      part_subst = inst.is_ground() ? PatternSubst::close(std::move(suffix))
                                    : PatternSubst::extend(std::move(suffix));
    }
    for (std::size_t j = 0; j < part.premises.size(); ++j) {
      flat.push_back(apply(part.premises[j], part_subst));
      sources.push_back({i, j});
    }
  }

  // Simplify, remembering where every pre-simplification premise went.
  std::vector<Pattern> premises;
  std::vector<std::size_t> premise_map(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    auto it = std::find(premises.begin(), premises.end(), flat[i]);
    if (it == premises.end()) {
      premise_map[i] = premises.size();
      premises.push_back(flat[i]);
    } else {
      premise_map[i] = static_cast<std::size_t>(it - premises.begin());
    }
  }

  ComposedProvenance prov;
  prov.base = g.id;
  prov.parts.reserve(parts.size());
  for (const auto& p : parts) {
    prov.parts.push_back(p.has_value() ? std::optional<RuleId>(p->id) : std::nullopt);
  }
  prov.sources = sources;
  prov.premise_map = premise_map;

  Rule out = Rule::make("", apply(g.conclusion, binding), std::move(premises), std::move(prov));

  if (out.rule_class == RuleClass::DerivedNonIntro) {
    // Majors inherited from expanded major positions, plus g's majors left
    // in place.
    std::set<std::size_t> majors;
    std::set<std::size_t> g_majors(g.majors.begin(), g.majors.end());
    for (std::size_t flat_pos = 0; flat_pos < sources.size(); ++flat_pos) {
      if (g_majors.count(sources[flat_pos].base_premise) != 0) {
        majors.insert(premise_map[flat_pos]);
      }
    }
    if (!majors.empty()) out.majors.assign(majors.begin(), majors.end());
  }
  return out;
}

bool structurally_equal(const Rule& lhs, const Rule& rhs) {
  return RuleKey(lhs) == RuleKey(rhs);
}

RuleKey::RuleKey(const Rule& r) : conclusion(r.conclusion), sorted_premises(r.premises) {
  std::sort(sorted_premises.begin(), sorted_premises.end());
}

}  // namespace aps
