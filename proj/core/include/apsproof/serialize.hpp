// Certificate serialization (JSON, DOT) and independent re-checking.
//
// JSON schema: {"system_hash": hex, "root": node} with
//   node = {"binding": [sym...], "children": [node...],
//           "marker": "expanded"|"unexpanded", "polarity": "proved"|"refuted",
//           "predicate": str, "rule": str, "word": [sym...]}
// Keys are sorted and orderings deterministic, so output is byte stable.
#ifndef APSPROOF_SERIALIZE_HPP
#define APSPROOF_SERIALIZE_HPP

#include <string>

#include "apsproof/proof.hpp"
#include "apsproof/system.hpp"

namespace aps {

/// Serializes a certificate for a proof rooted in the given base system.
/// `system_hash` must be system_fingerprint of the system the certificate
/// was produced from.
std::string certificate_to_json(const Proof& pf, const std::string& system_hash);

struct ParsedCertificate {
  std::string system_hash;
  Proof root;
};

/// Parses certificate JSON. Throws Error on malformed input (bad JSON,
/// missing fields, unexpanded nodes with children, ...).
ParsedCertificate certificate_from_json(const std::string& json_text);

/// DOT rendering: one node per sequent, edge order = child order.
/// Unexpanded nodes are dashed; loop annotations become label suffixes.
std::string proof_to_dot(const Proof& pf);

struct VerifyResult {
  bool valid = false;
  std::string detail;  // which system validated, or why verification failed
};

/// Independent re-check of a certificate against the base system it claims
/// to certify: recomputes the saturation closure, the automaton and both
/// complementations, then checks proved certificates against the automaton
/// or the base system and refuted certificates against the complement of
/// the automaton (fully expanded) or the complement of the base system
/// (prefixes allowed). The fingerprint must match.
VerifyResult verify_certificate(const System& base, const ParsedCertificate& cert);

}  // namespace aps

#endif  // APSPROOF_SERIALIZE_HPP
