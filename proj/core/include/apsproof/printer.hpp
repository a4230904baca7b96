// Canonical printing of systems and proofs.
#ifndef APSPROOF_PRINTER_HPP
#define APSPROOF_PRINTER_HPP

#include <string>

#include "apsproof/proof.hpp"
#include "apsproof/system.hpp"

namespace aps {

/// Canonical rule-file text, one rule per line, parseable back into a
/// structurally equal system.
std::string print_system(const System& s);

/// Like print_system but with "# id: ..." provenance comments per rule.
std::string print_system_annotated(const System& s);

/// Hash (FNV-1a, 16 hex digits) of the canonical printed system; used to
/// tie certificates to the system they certify.
std::string system_fingerprint(const System& s);

/// Indented ASCII rendering of a proof tree.
std::string print_proof_tree(const Proof& pf);

}  // namespace aps

#endif  // APSPROOF_PRINTER_HPP
