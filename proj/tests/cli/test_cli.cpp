// End-to-end tests against the command-line binary. The test runner passes
// its path in APSPROOF_BIN.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "support/fixtures.hpp"

namespace {

std::string binary_path() {
  const char* env = std::getenv("APSPROOF_BIN");
  if (env == nullptr || *env == '\0') {
    throw std::runtime_error("APSPROOF_BIN is not set; run through ctest");
  }
  return env;
}

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  const std::string command = "'" + binary_path() + "' " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  RunResult result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "apsproof-cli-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  return path.string();
}

std::string reference_file() { return write_file("reference.aps", fixtures::kReferenceText); }

}  // namespace

TEST_CASE("check validates rule files") {
  RunResult ok = run("check " + reference_file());
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("ok: 7 rules") != std::string::npos);

  std::string broken = write_file("broken.aps", "P(a x) <- Q(x)\n");
  RunResult bad = run("check " + broken);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("error") != std::string::npos);

  CHECK(run("check /nonexistent/file.aps").exit_code == 2);
}

TEST_CASE("decide reports the verdict through the exit code") {
  const std::string file = reference_file();
  RunResult refutable = run("decide " + file + " 'P(a)'");
  CHECK(refutable.exit_code == 1);
  CHECK(refutable.output == "refutable\n");

  RunResult provable = run("decide " + file + " 'R(a)'");
  CHECK(provable.exit_code == 0);
  CHECK(provable.output == "provable\n");

  CHECK(run("decide " + file + " 'P(a x)'").exit_code == 2);
  CHECK(run("decide " + file + " 'Z(a)'").exit_code == 2);
}

TEST_CASE("saturate prints the closure with provenance") {
  RunResult r = run("saturate " + reference_file());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("P(a x) <- U(x), T(x).") != std::string::npos);
  CHECK(r.output.find("Q(x) <- V(x), T(x).") != std::string::npos);
  CHECK(r.output.find("composed from r5") != std::string::npos);
}

TEST_CASE("automaton prints the introduction fragment") {
  RunResult r = run("automaton " + reference_file());
  CHECK(r.exit_code == 0);
  aps::ParseResult reparsed = aps::parse_system(r.output);
  REQUIRE(reparsed.ok());
  CHECK(aps::same_rule_set(*reparsed.system, fixtures::reference_automaton()));
}

TEST_CASE("complement prints either refutation system") {
  RunResult of_automaton = run("complement " + reference_file());
  CHECK(of_automaton.exit_code == 0);
  aps::ParseResult b = aps::parse_system(of_automaton.output);
  REQUIRE(b.system.has_value());
  CHECK(b.system->size() == 15);

  RunResult of_original = run("complement " + reference_file() + " --of original");
  CHECK(of_original.exit_code == 0);
  // The complement of the base system is not pushdown shaped (one rule has
  // a two-symbol prefix), so count lines instead of reparsing.
  std::size_t lines = 0;
  for (char c : of_original.output) lines += c == '\n';
  CHECK(lines == 14);
  CHECK(of_original.output.find("Q(a x) <- U(x), V(x), P(a a x).") != std::string::npos);

  CHECK(run("complement " + reference_file() + " --of nonsense").exit_code == 2);
}

TEST_CASE("certify emits certificates that verify accepts") {
  const std::string file = reference_file();
  RunResult cert = run("certify " + file + " 'P(a)'");
  CHECK(cert.exit_code == 0);
  const std::string cert_path = write_file("p_a.cert.json", cert.output);
  RunResult verify = run("verify " + file + " " + cert_path);
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("valid") == 0);

  // Byte stability across processes.
  RunResult again = run("certify " + file + " 'P(a)'");
  CHECK(again.output == cert.output);

  // Tree and dot formats render.
  RunResult tree = run("certify " + file + " 'P(a)' --format tree");
  CHECK(tree.exit_code == 0);
  CHECK(tree.output.find("|/- P(a)") != std::string::npos);
  RunResult dot = run("certify " + file + " 'R(a)' --format dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.find("digraph") != std::string::npos);

  // Proof certificates, plain and lifted.
  RunResult proof = run("certify " + file + " 'R(a)'");
  const std::string proof_path = write_file("r_a.cert.json", proof.output);
  CHECK(run("verify " + file + " " + proof_path).exit_code == 0);
  RunResult lifted = run("certify " + file + " 'R(a)' --lift");
  const std::string lifted_path = write_file("r_a.lifted.json", lifted.output);
  CHECK(run("verify " + file + " " + lifted_path).exit_code == 0);

  // Lifting a refutation is an error.
  CHECK(run("certify " + file + " 'P(a)' --lift").exit_code == 2);
}

TEST_CASE("unfold emits counter-proof prefixes") {
  const std::string file = reference_file();
  RunResult zero = run("unfold " + file + " 'P(a)' --depth 0");
  CHECK(zero.exit_code == 0);
  CHECK(zero.output.find("\"marker\": \"unexpanded\"") != std::string::npos);

  RunResult deep = run("unfold " + file + " 'P(a)' --depth 6");
  const std::string prefix_path = write_file("p_a.unfold.json", deep.output);
  CHECK(run("verify " + file + " " + prefix_path).exit_code == 0);

  RunResult naive = run("unfold " + file + " 'P(a)' --depth 6 --naive");
  CHECK(naive.exit_code == 0);
  CHECK(naive.output == deep.output);  // the selectors agree on this system

  // Provable atoms have no counter-proof.
  CHECK(run("unfold " + file + " 'R(a)' --depth 2").exit_code == 2);
  // --depth is required.
  CHECK(run("unfold " + file + " 'P(a)'").exit_code == 2);
}

TEST_CASE("verify rejects tampered certificates") {
  const std::string file = reference_file();
  RunResult cert = run("certify " + file + " 'P(a)'");
  std::string tampered = cert.output;
  auto pos = tampered.find("U");
  REQUIRE(pos != std::string::npos);
  tampered[pos] = 'V';
  const std::string tampered_path = write_file("tampered.json", tampered);
  RunResult verify = run("verify " + file + " " + tampered_path);
  CHECK(verify.exit_code == 1);
  CHECK(verify.output.find("invalid") == 0);

  const std::string junk_path = write_file("junk.json", "{]");
  CHECK(run("verify " + file + " " + junk_path).exit_code == 2);
}

TEST_CASE("two-symbol system end to end") {
  // Z holds at eps; W holds at words b^n a; G holds where W holds after a b.
  const std::string file = write_file("two_symbol.aps",
                                      "W(a x) <- Z(x).\n"
                                      "W(b x) <- W(x).\n"
                                      "Z(eps).\n"
                                      "G(x) <- W(b x).\n");
  CHECK(run("check " + file).exit_code == 0);
  CHECK(run("decide " + file + " 'W(a)'").exit_code == 0);
  CHECK(run("decide " + file + " 'W(b b a)'").exit_code == 0);
  CHECK(run("decide " + file + " 'W(a a)'").exit_code == 1);
  CHECK(run("decide " + file + " 'G(a)'").exit_code == 0);
  CHECK(run("decide " + file + " 'G(b)'").exit_code == 1);
  CHECK(run("decide " + file + " 'Z(eps)'").exit_code == 0);

  // The saturation derives the neutral bridge and its introductions.
  RunResult closure = run("saturate " + file);
  CHECK(closure.output.find("G(x) <- W(x).") != std::string::npos);
  CHECK(closure.output.find("G(a x) <- Z(x).") != std::string::npos);
  CHECK(closure.output.find("G(b x) <- W(x).") != std::string::npos);

  // Certificates on both sides verify, lifted ones too.
  RunResult proof = run("certify " + file + " 'G(a)' --lift");
  const std::string proof_path = write_file("two_symbol.proof.json", proof.output);
  CHECK(run("verify " + file + " " + proof_path).exit_code == 0);
  RunResult refutation = run("certify " + file + " 'G(b)'");
  const std::string refutation_path = write_file("two_symbol.ref.json", refutation.output);
  CHECK(run("verify " + file + " " + refutation_path).exit_code == 0);
  RunResult prefix = run("unfold " + file + " 'W(a a)' --depth 5");
  const std::string prefix_path = write_file("two_symbol.unfold.json", prefix.output);
  CHECK(run("verify " + file + " " + prefix_path).exit_code == 0);

  // Certificates do not verify against the other example.
  CHECK(run("verify " + reference_file() + " " + refutation_path).exit_code == 1);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate x").exit_code == 2);
  CHECK(run("certify " + reference_file() + " 'P(a)' --format yaml").exit_code == 2);
  CHECK(run("unfold " + reference_file() + " 'P(a)' --depth 2 --format yaml").exit_code == 2);
}
