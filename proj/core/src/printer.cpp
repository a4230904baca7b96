#include "apsproof/printer.hpp"

#include <cstdint>

namespace aps {

namespace {

std::string rule_line(const Rule& r) {
  std::string out = to_string(r.conclusion);
  if (!r.premises.empty()) {
    out += " <- ";
    for (std::size_t i = 0; i < r.premises.size(); ++i) {
      if (i != 0) out += ", ";
      out += to_string(r.premises[i]);
    }
  }
  out += ".";
  return out;
}

std::string provenance_comment(const Rule& r) {
  if (const auto* hat = std::get_if<HatProvenance>(&r.provenance)) {
    return "instance of " + hat->base + " at x := " +
           (hat->subst.keeps_var ? word_to_string(hat->subst.word) + " x"
                                 : word_to_string(hat->subst.word));
  }
  if (const auto* composed = std::get_if<ComposedProvenance>(&r.provenance)) {
    std::string out = "composed from " + composed->base + " via ";
    bool first = true;
    for (const auto& part : composed->parts) {
      if (!part.has_value()) continue;
      if (!first) out += ", ";
      out += *part;
      first = false;
    }
    if (first) out += "(nothing)";
    return out;
  }
  return "";
}

}  // namespace

std::string print_system(const System& s) {
  std::string out;
  for (const auto& r : s.rules()) {
    out += rule_line(r);
    out += '\n';
  }
  return out;
}

std::string print_system_annotated(const System& s) {
  std::string out;
  for (const auto& r : s.rules()) {
    out += rule_line(r);
    std::string comment = provenance_comment(r);
    out += "  # " + r.id + (comment.empty() ? "" : ": " + comment);
    out += '\n';
  }
  return out;
}

std::string system_fingerprint(const System& s) {
  // FNV-1a over the canonical text.
  const std::string text = print_system(s);
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

namespace {

void render_tree(const Proof& node, const std::string& indent, bool last, bool root,
                 std::string& out) {
  if (!root) {
    out += indent;
    out += last ? "`- " : "|- ";
  }
  out += to_string(node.sequent);
  if (node.marker == Marker::Unexpanded) {
    out += "  ...";
  } else {
    out += "  [" + node.rule;
    if (!node.binding.is_ground()) out += " @ " + word_to_string(node.binding.word());
    out += "]";
  }
  if (node.loop) out += "  (loop)";
  out += '\n';
  const std::string child_indent = root ? "" : indent + (last ? "   " : "|  ");
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    render_tree(node.children[i], child_indent, i + 1 == node.children.size(), false, out);
  }
}

}  // namespace

std::string print_proof_tree(const Proof& pf) {
  std::string out;
  render_tree(pf, "", true, true, out);
  return out;
}

}  // namespace aps
