// Command-line interface: rule-file checking, saturation, automaton
// extraction, complements, decision, certificates and counter-proof
// unfolding.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "apsproof/complement.hpp"
#include "apsproof/counterproof.hpp"
#include "apsproof/decide.hpp"
#include "apsproof/parser.hpp"
#include "apsproof/printer.hpp"
#include "apsproof/saturation.hpp"
#include "apsproof/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefutableOrInvalid = 1;
constexpr int kExitError = 2;

struct CommandError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kExitError, "cannot open '" + path + "'"};
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

aps::System load_system(const std::string& path) {
  aps::ParseResult parsed = aps::parse_system(read_file(path));
  if (!parsed.system.has_value()) {
    std::string message;
    for (const auto& d : parsed.diagnostics) {
      if (!message.empty()) message += '\n';
      message += path + ":" + aps::to_string(d);
    }
    if (message.empty()) message = path + ": unreadable rule file";
    throw CommandError{kExitError, message};
  }
  return std::move(*parsed.system);
}

aps::Atom load_atom(const std::string& text, const aps::Signature& sig) {
  std::string error;
  auto atom = aps::parse_atom(text, &error, &sig);
  if (!atom.has_value()) throw CommandError{kExitError, "atom '" + text + "': " + error};
  return *atom;
}

void emit_proof(const aps::Proof& proof, const std::string& format,
                const std::string& fingerprint) {
  if (format == "json") {
    std::cout << aps::certificate_to_json(proof, fingerprint);
  } else if (format == "tree") {
    std::cout << aps::print_proof_tree(proof);
  } else if (format == "dot") {
    std::cout << aps::proof_to_dot(proof);
  } else {
    throw CommandError{kExitError, "unknown format '" + format + "'"};
  }
}

int run_check(const std::string& path) {
  aps::System system = load_system(path);
  std::cout << "ok: " << system.size() << " rules, " << system.signature().predicates.size()
            << " predicates, " << system.signature().symbols.size() << " stack symbols\n";
  return kExitOk;
}

int run_saturate(const std::string& path) {
  aps::System system = load_system(path);
  aps::SaturatedSystem saturated = aps::saturate(system);
  std::cout << aps::print_system_annotated(saturated.rules);
  return kExitOk;
}

int run_automaton(const std::string& path) {
  aps::System system = load_system(path);
  std::cout << aps::print_system(aps::extract_automaton(aps::saturate(system)));
  return kExitOk;
}

int run_complement(const std::string& path, const std::string& of) {
  aps::System system = load_system(path);
  if (of == "original") {
    std::cout << aps::print_system(aps::complementation(system, "j").negative);
  } else if (of == "automaton") {
    aps::System automaton = aps::extract_automaton(aps::saturate(system));
    std::cout << aps::print_system(aps::complementation(automaton, "b").negative);
  } else {
    throw CommandError{kExitError, "unknown target '" + of + "' (use automaton or original)"};
  }
  return kExitOk;
}

int run_decide(const std::string& path, const std::string& atom_text) {
  aps::System system = load_system(path);
  aps::Atom atom = load_atom(atom_text, system.signature());
  aps::System automaton = aps::extract_automaton(aps::saturate(system));
  aps::DecisionSession session(automaton, aps::complementation(automaton, "b"));
  aps::Verdict verdict = session.decide(atom);
  std::cout << aps::to_string(verdict) << "\n";
  return verdict == aps::Verdict::Provable ? kExitOk : kExitRefutableOrInvalid;
}

int run_certify(const std::string& path, const std::string& atom_text,
                const std::string& format, bool lift) {
  aps::System system = load_system(path);
  aps::Atom atom = load_atom(atom_text, system.signature());
  aps::SaturatedSystem saturated = aps::saturate(system);
  aps::System automaton = aps::extract_automaton(saturated);
  aps::DecisionSession session(automaton, aps::complementation(automaton, "b"));
  aps::Proof proof;
  if (session.decide(atom) == aps::Verdict::Provable) {
    proof = session.prove(atom);
    if (lift) proof = aps::lift_proof(saturated, proof);
  } else {
    if (lift) {
      throw CommandError{kExitError,
                         "--lift applies to proofs; " + aps::to_string(atom) + " is refutable"};
    }
    proof = session.refute(atom);
  }
  emit_proof(proof, format, aps::system_fingerprint(system));
  return kExitOk;
}

int run_unfold(const std::string& path, const std::string& atom_text, std::size_t depth,
               bool naive, const std::string& format) {
  aps::System system = load_system(path);
  aps::Atom atom = load_atom(atom_text, system.signature());
  aps::UnfoldContext ctx = aps::make_unfold_context(system);
  if (ctx.session.decide(atom) == aps::Verdict::Provable) {
    throw CommandError{kExitError,
                       aps::to_string(atom) + " is provable; no counter-proof exists"};
  }
  aps::Proof prefix = aps::unfold(ctx, atom, depth,
                                  naive ? aps::Selector::Naive : aps::Selector::Efficient);
  emit_proof(prefix, format, aps::system_fingerprint(system));
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& cert_path) {
  aps::System system = load_system(path);
  aps::ParsedCertificate cert = aps::certificate_from_json(read_file(cert_path));
  aps::VerifyResult result = aps::verify_certificate(system, cert);
  std::cout << (result.valid ? "valid" : "invalid") << ": " << result.detail << "\n";
  return result.valid ? kExitOk : kExitRefutableOrInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Provability decisions and certificates for alternating pushdown systems"};
  app.require_subcommand(1);

  std::string file;
  std::string atom_text;
  std::string cert_path;
  std::string format = "json";
  std::string of = "automaton";
  std::size_t depth = 0;
  bool lift = false;
  bool naive = false;

  auto* check = app.add_subcommand("check", "Validate a rule file");
  check->add_option("file", file)->required();

  auto* saturate = app.add_subcommand("saturate", "Print the saturation closure");
  saturate->add_option("file", file)->required();

  auto* automaton = app.add_subcommand("automaton", "Print the equivalent automaton");
  automaton->add_option("file", file)->required();

  auto* complement = app.add_subcommand("complement", "Print a refutation rule system");
  complement->add_option("file", file)->required();
  complement->add_option("--of", of, "automaton (default) or original");

  auto* decide = app.add_subcommand("decide", "Decide provability of a closed atom");
  decide->add_option("file", file)->required();
  decide->add_option("atom", atom_text)->required();

  auto* certify = app.add_subcommand("certify", "Emit a proof or refutation certificate");
  certify->add_option("file", file)->required();
  certify->add_option("atom", atom_text)->required();
  certify->add_option("--format", format, "json (default), tree or dot");
  certify->add_flag("--lift", lift, "emit the proof in the input system");

  auto* unfold = app.add_subcommand("unfold", "Unfold a refutation into a counter-proof prefix");
  unfold->add_option("file", file)->required();
  unfold->add_option("atom", atom_text)->required();
  unfold->add_option("--depth", depth, "expansion depth")->required();
  unfold->add_flag("--naive", naive, "use the decision-procedure selector");
  unfold->add_option("--format", format, "json (default), tree or dot");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate against a rule file");
  verify->add_option("file", file)->required();
  verify->add_option("certificate", cert_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (check->parsed()) return run_check(file);
    if (saturate->parsed()) return run_saturate(file);
    if (automaton->parsed()) return run_automaton(file);
    if (complement->parsed()) return run_complement(file, of);
    if (decide->parsed()) return run_decide(file, atom_text);
    if (certify->parsed()) return run_certify(file, atom_text, format, lift);
    if (unfold->parsed()) return run_unfold(file, atom_text, depth, naive, format);
    if (verify->parsed()) return run_verify(file, cert_path);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
