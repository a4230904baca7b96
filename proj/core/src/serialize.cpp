#include "apsproof/serialize.hpp"

#include <json.hpp>

#include "apsproof/complement.hpp"
#include "apsproof/printer.hpp"
#include "apsproof/saturation.hpp"

namespace aps {

namespace {

using json = nlohmann::json;  // std::map-backed: keys come out sorted

json word_to_json(const Word& w) {
  json out = json::array();
  for (const auto& sym : w) out.push_back(sym);
  return out;
}

Word word_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string("certificate: ") + what + " must be an array");
  Word out;
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw Error(std::string("certificate: ") + what + " must hold strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

json node_to_json(const Proof& node) {
  json out;
  out["polarity"] = to_string(node.sequent.polarity);
  out["predicate"] = node.sequent.atom.predicate;
  out["word"] = word_to_json(node.sequent.atom.word);
  out["rule"] = node.marker == Marker::Expanded ? node.rule : "";
  out["binding"] = node.binding.is_ground() ? json::array() : word_to_json(node.binding.word());
  out["marker"] = node.marker == Marker::Expanded ? "expanded" : "unexpanded";
  json children = json::array();
  for (const auto& c : node.children) children.push_back(node_to_json(c));
  out["children"] = std::move(children);
  return out;
}

Proof node_from_json(const json& j) {
  if (!j.is_object()) throw Error("certificate: node must be an object");
  for (const char* key : {"polarity", "predicate", "word", "rule", "binding", "marker",
                          "children"}) {
    if (!j.contains(key)) throw Error(std::string("certificate: node lacks '") + key + "'");
  }
  Proof node;
  const std::string polarity = j.at("polarity").get<std::string>();
  if (polarity == "proved") {
    node.sequent.polarity = Polarity::Proved;
  } else if (polarity == "refuted") {
    node.sequent.polarity = Polarity::Refuted;
  } else {
    throw Error("certificate: unknown polarity '" + polarity + "'");
  }
  node.sequent.atom.predicate = j.at("predicate").get<std::string>();
  node.sequent.atom.word = word_from_json(j.at("word"), "word");
  node.rule = j.at("rule").get<std::string>();
  node.binding = Binding::suffix(word_from_json(j.at("binding"), "binding"));
  const std::string marker = j.at("marker").get<std::string>();
  if (marker == "expanded") {
    node.marker = Marker::Expanded;
  } else if (marker == "unexpanded") {
    node.marker = Marker::Unexpanded;
  } else {
    throw Error("certificate: unknown marker '" + marker + "'");
  }
  if (!j.at("children").is_array()) throw Error("certificate: children must be an array");
  for (const auto& c : j.at("children")) node.children.push_back(node_from_json(c));
  if (node.marker == Marker::Unexpanded && !node.children.empty()) {
    throw Error("certificate: unexpanded node has children");
  }
  return node;
}

/// Ground bindings serialize as the empty array; restore them wherever the
/// rule is closed so checking is strict about spurious bindings.
void restore_ground_bindings(const System& positive, const System& negative, Proof& node) {
  const System& sys = node.sequent.polarity == Polarity::Proved ? positive : negative;
  const Rule* rule = sys.find_by_id(node.rule);
  if (rule != nullptr && rule->conclusion.is_ground() && !node.binding.is_ground() &&
      node.binding.word().empty()) {
    node.binding = Binding::ground();
  }
  for (auto& c : node.children) restore_ground_bindings(positive, negative, c);
}

}  // namespace

std::string certificate_to_json(const Proof& pf, const std::string& system_hash) {
  json out;
  out["system_hash"] = system_hash;
  out["root"] = node_to_json(pf);
  return out.dump(2) + "\n";
}

ParsedCertificate certificate_from_json(const std::string& json_text) {
  try {
    json j = json::parse(json_text);
    if (!j.is_object() || !j.contains("system_hash") || !j.contains("root")) {
      throw Error("certificate: expected an object with 'system_hash' and 'root'");
    }
    if (!j.at("system_hash").is_string()) {
      throw Error("certificate: system_hash must be a string");
    }
    ParsedCertificate out;
    out.system_hash = j.at("system_hash").get<std::string>();
    out.root = node_from_json(j.at("root"));
    return out;
  } catch (const json::exception& e) {
    throw Error(std::string("certificate: invalid JSON: ") + e.what());
  }
}

namespace {

void dot_escape_into(std::string& out, const std::string& text) {
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
}

std::size_t dot_node(const Proof& node, std::size_t& next_id, std::string& out) {
  const std::size_t id = next_id++;
  out += "  n" + std::to_string(id) + " [label=\"";
  dot_escape_into(out, to_string(node.sequent) + (node.loop ? " (loop)" : ""));
  out += "\"";
  if (node.marker == Marker::Unexpanded) out += " style=dashed";
  out += "];\n";
  for (const auto& c : node.children) {
    const std::size_t child_id = dot_node(c, next_id, out);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(child_id) + ";\n";
  }
  return id;
}

}  // namespace

std::string proof_to_dot(const Proof& pf) {
  std::string out = "digraph proof {\n  node [shape=box];\n";
  std::size_t next_id = 0;
  dot_node(pf, next_id, out);
  out += "}\n";
  return out;
}

VerifyResult verify_certificate(const System& base, const ParsedCertificate& cert) {
  VerifyResult out;
  const std::string expected = system_fingerprint(base);
  if (cert.system_hash != expected) {
    out.detail = "system hash mismatch: certificate has " + cert.system_hash +
                 ", the system hashes to " + expected;
    return out;
  }

  SaturatedSystem saturated;
  System automaton;
  SignedSystem automaton_signed;
  SignedSystem original_signed;
  try {
    saturated = saturate(base);
    automaton = extract_automaton(saturated);
    automaton_signed = complementation(automaton, "b");
    original_signed = complementation(base, "j");
  } catch (const Error& e) {
    out.detail = std::string("cannot rebuild the certifying systems: ") + e.what();
    return out;
  }

  Proof pf = cert.root;
  if (pf.sequent.polarity == Polarity::Proved) {
    Proof in_automaton = pf;
    restore_ground_bindings(automaton, automaton, in_automaton);
    if (check_proof(automaton, in_automaton, Polarity::Proved)) {
      out.valid = true;
      out.detail = "valid proof in the automaton";
      return out;
    }
    Proof in_base = pf;
    restore_ground_bindings(base, base, in_base);
    CheckResult base_check = check_proof(base, in_base, Polarity::Proved);
    if (base_check) {
      out.valid = true;
      out.detail = "valid proof in the input system";
      return out;
    }
    out.detail = "invalid proof: at " + to_string(base_check.path) + ": " + base_check.reason;
    return out;
  }

  Proof in_b = pf;
  restore_ground_bindings(automaton_signed.positive, automaton_signed.negative, in_b);
  if (check_proof(automaton_signed, in_b, CheckMode::Full)) {
    out.valid = true;
    out.detail = "valid refutation in the complement of the automaton";
    return out;
  }
  Proof in_j = pf;
  restore_ground_bindings(original_signed.positive, original_signed.negative, in_j);
  CheckResult prefix_check = check_proof(original_signed, in_j, CheckMode::Prefix);
  if (prefix_check) {
    out.valid = true;
    out.detail = "valid counter-proof prefix in the complement of the input system";
    return out;
  }
  out.detail =
      "invalid refutation: at " + to_string(prefix_check.path) + ": " + prefix_check.reason;
  return out;
}

}  // namespace aps
