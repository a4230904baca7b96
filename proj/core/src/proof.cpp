#include "apsproof/proof.hpp"

namespace aps {

bool Proof::fully_expanded() const {
  if (marker == Marker::Unexpanded) return false;
  for (const auto& c : children) {
    if (!c.fully_expanded()) return false;
  }
  return true;
}

std::size_t Proof::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

Proof Proof::unexpanded(Sequent s) {
  Proof p;
  p.sequent = std::move(s);
  p.marker = Marker::Unexpanded;
  return p;
}

Proof Proof::node(Sequent s, RuleId rule, Binding binding, std::vector<Proof> children) {
  Proof p;
  p.sequent = std::move(s);
  p.rule = std::move(rule);
  p.binding = std::move(binding);
  p.children = std::move(children);
  p.marker = Marker::Expanded;
  return p;
}

std::string to_string(const ProofPath& path) {
  std::string out = "root";
  for (std::size_t i : path) out += "." + std::to_string(i);
  return out;
}

namespace {

struct Checker {
  const System* positive = nullptr;   // rules for Proved nodes
  const System* negative = nullptr;   // rules for Refuted nodes
  CheckMode mode = CheckMode::Full;
  CheckResult result;
  ProofPath path;

  bool fail(const std::string& reason) {
    result.valid = false;
    result.path = path;
    result.reason = reason;
    return false;
  }

  const System* system_for(Polarity p) const {
    return p == Polarity::Proved ? positive : negative;
  }

  bool visit(const Proof& node) {
    const System* sys = system_for(node.sequent.polarity);
    if (sys == nullptr) {
      return fail("no rules for polarity '" + to_string(node.sequent.polarity) + "'");
    }
    if (node.marker == Marker::Unexpanded) {
      if (!node.children.empty()) return fail("unexpanded node has children");
      if (mode == CheckMode::Full) return fail("unexpanded node in a finite certificate");
      return true;
    }
    const Rule* rule = sys->find_by_id(node.rule);
    if (rule == nullptr) {
      return fail("no rule '" + node.rule + "' concludes " + to_string(node.sequent));
    }
    if (rule->conclusion.is_ground() && !node.binding.is_ground() &&
        !node.binding.word().empty()) {
      return fail("closed rule '" + node.rule + "' used with a nonempty binding");
    }
    Atom conclusion;
    try {
      conclusion = instantiate(rule->conclusion, node.binding);
    } catch (const Error&) {
      return fail("binding does not instantiate rule '" + node.rule + "'");
    }
    if (conclusion != node.sequent.atom) {
      return fail("rule '" + node.rule + "' at binding " + to_string(node.binding) +
                  " concludes " + to_string(conclusion) + ", not " +
                  to_string(node.sequent.atom));
    }
    if (node.children.size() != rule->premises.size()) {
      return fail("rule '" + node.rule + "' needs " + std::to_string(rule->premises.size()) +
                  " premises, found " + std::to_string(node.children.size()) + " children");
    }
    // Children are checked before the premise comparison so a broken leaf
    // is reported at the leaf.
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (node.children[i].sequent.polarity != node.sequent.polarity) {
        path.push_back(i);
        return fail("polarity mismatch under " + to_string(node.sequent));
      }
      path.push_back(i);
      if (!visit(node.children[i])) return false;
      path.pop_back();
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      Atom premise = instantiate(rule->premises[i], node.binding);
      if (premise != node.children[i].sequent.atom) {
        return fail("premise " + std::to_string(i + 1) + " of rule '" + node.rule +
                    "' is " + to_string(premise) + ", child proves " +
                    to_string(node.children[i].sequent.atom));
      }
    }
    return true;
  }
};

}  // namespace

CheckResult check_proof(const System& s, const Proof& pf, Polarity polarity, CheckMode mode) {
  Checker checker;
  checker.mode = mode;
  if (polarity == Polarity::Proved) {
    checker.positive = &s;
  } else {
    checker.negative = &s;
  }
  if (pf.sequent.polarity != polarity) {
    checker.result.valid = false;
    checker.result.reason = "root polarity is not '" + to_string(polarity) + "'";
    return checker.result;
  }
  checker.visit(pf);
  return checker.result;
}

CheckResult check_proof(const SignedSystem& s, const Proof& pf, CheckMode mode) {
  Checker checker;
  checker.mode = mode;
  checker.positive = &s.positive;
  checker.negative = &s.negative;
  checker.visit(pf);
  return checker.result;
}

const Proof& subproof_at(const Proof& pf, const ProofPath& path) {
  const Proof* node = &pf;
  for (std::size_t i : path) {
    if (i >= node->children.size()) throw Error("bad proof path " + to_string(path));
    node = &node->children[i];
  }
  return *node;
}

}  // namespace aps
