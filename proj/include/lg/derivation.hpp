#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lg/ast.hpp"
#include "lg/render.hpp"
#include "lg/rules.hpp"

namespace lg {

/// A proof tree: rule applications from Ax leaves down to the root conclusion.
struct Derivation {
  Sequent conclusion;
  RuleLabel rule = RuleLabel::Ax;
  std::vector<Derivation> premises;
};

struct CheckReport {
  bool ok = true;
  long logicalCount = 0;
  long grishinCount = 0;
  long displayCount = 0;
  long cutCount = 0;
  std::optional<std::string> firstError;
};

namespace detail {

inline void check_node(const Derivation& d, bool allow_cut,
                       const std::string& path, CheckReport& report) {
  if (!report.ok) return;
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.firstError = (path.empty() ? "root" : path) + ": " + msg;
  };
  if (auto pe = validate(d.conclusion)) {
    fail("ill-formed conclusion at " + pe->path + ": " + pe->message);
    return;
  }
  switch (rule_class(d.rule)) {
    case RuleClass::CutRule:
      if (!allow_cut) {
        fail("Cut is not allowed in this check mode");
        return;
      }
      ++report.cutCount;
      break;
    case RuleClass::Logical:
      ++report.logicalCount;
      break;
    case RuleClass::Grishin:
      ++report.grishinCount;
      break;
    case RuleClass::Display:
      ++report.displayCount;
      break;
    case RuleClass::Axiom:
      break;
  }
  std::vector<Sequent> premise_seqs;
  premise_seqs.reserve(d.premises.size());
  for (const Derivation& p : d.premises) premise_seqs.push_back(p.conclusion);
  if (auto err = apply_forward(d.rule, premise_seqs, d.conclusion)) {
    fail(*err);
    return;
  }
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    check_node(d.premises[i], allow_cut,
               path.empty() ? std::to_string(i) : path + "." + std::to_string(i),
               report);
    if (!report.ok) return;
  }
}

}  // namespace detail

/// Validates every node of `d` against the rule schemas. With
/// `allow_cut = false` any Cut node fails the check.
inline CheckReport check(const Derivation& d, bool allow_cut) {
  CheckReport report;
  detail::check_node(d, allow_cut, "", report);
  return report;
}

/// Indented plain-text listing, one node per line, premises above their rule.
inline void to_text(const Derivation& d, std::string& out, int indent = 0) {
  for (const Derivation& p : d.premises) to_text(p, out, indent + 1);
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += render(d.conclusion);
  out += "   [";
  out += rule_name(d.rule);
  out += "]\n";
}

inline std::string to_text(const Derivation& d) {
  std::string out;
  to_text(d, out);
  return out;
}

namespace detail {

inline const char* latex_rule_name(RuleLabel r) {
  switch (r) {
    case RuleLabel::Ax: return "Ax";
    case RuleLabel::Cut: return "Cut";
    case RuleLabel::ResOver:
    case RuleLabel::ResUnder:
    case RuleLabel::ResOverInv:
    case RuleLabel::ResUnderInv: return "r";
    case RuleLabel::DResRDiff:
    case RuleLabel::DResLDiff:
    case RuleLabel::DResRDiffInv:
    case RuleLabel::DResLDiffInv: return "dr";
    case RuleLabel::GrishinRDiffOver: return "d\\oslash/";
    case RuleLabel::GrishinRDiffUnder: return "d\\oslash\\backslash";
    case RuleLabel::GrishinLDiffOver: return "d\\obslash/";
    case RuleLabel::GrishinLDiffUnder: return "d\\obslash\\backslash";
    case RuleLabel::TensorL: return "\\otimes L";
    case RuleLabel::TensorR: return "\\otimes R";
    case RuleLabel::CoprodL: return "\\oplus L";
    case RuleLabel::CoprodR: return "\\oplus R";
    case RuleLabel::OverL: return "/ L";
    case RuleLabel::OverR: return "/ R";
    case RuleLabel::UnderL: return "\\backslash L";
    case RuleLabel::UnderR: return "\\backslash R";
    case RuleLabel::RDiffL: return "\\oslash L";
    case RuleLabel::RDiffR: return "\\oslash R";
    case RuleLabel::LDiffL: return "\\obslash L";
    case RuleLabel::LDiffR: return "\\obslash R";
  }
  return "";
}

inline const char* latex_formula_op(Conn c) {
  switch (c) {
    case Conn::Prod: return "\\otimes";
    case Conn::Over: return "/";
    case Conn::Under: return "\\backslash";
    case Conn::Coprod: return "\\oplus";
    case Conn::RDiff: return "\\oslash";
    case Conn::LDiff: return "\\obslash";
  }
  return "";
}

inline void latex_formula(const Formula& f, bool nested, std::string& out) {
  if (f.is_atom()) {
    const std::string& n = f.atom_name();
    // p12 typesets as p_{12}.
    std::size_t digits = n.size();
    while (digits > 0 && n[digits - 1] >= '0' && n[digits - 1] <= '9') --digits;
    if (digits == n.size() || digits == 0) {
      out += n;
    } else {
      out += n.substr(0, digits);
      out += "_{";
      out += n.substr(digits);
      out += '}';
    }
    return;
  }
  if (nested) out += '(';
  latex_formula(*f.left(), true, out);
  out += ' ';
  out += latex_formula_op(f.op());
  out += ' ';
  latex_formula(*f.right(), true, out);
  if (nested) out += ')';
}

inline void latex_structure(const Structure& s, bool nested, std::string& out) {
  if (s.is_leaf()) {
    latex_formula(*s.formula(), nested, out);
    return;
  }
  if (nested) out += '(';
  latex_structure(*s.left(), true, out);
  out += " \\circ_{";
  out += latex_formula_op(s.op());
  out += "} ";
  latex_structure(*s.right(), true, out);
  if (nested) out += ')';
}

inline void latex_node(const Derivation& d, std::string& out, int indent) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += "\\infer[";
  out += latex_rule_name(d.rule);
  out += "]{";
  latex_structure(*d.conclusion.lhs, false, out);
  out += " \\vdash ";
  latex_structure(*d.conclusion.rhs, false, out);
  out += "}{";
  if (d.premises.empty()) {
    out += "}";
    return;
  }
  out += '\n';
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    latex_node(d.premises[i], out, indent + 1);
    if (i + 1 < d.premises.size()) {
      out.append(static_cast<std::size_t>(indent + 1) * 2, ' ');
      out += "&\n";
    } else {
      out += '\n';
    }
  }
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += '}';
}

}  // namespace detail

/// Nested \infer proof tree. `\obslash` is nonstandard; a suggested
/// definition ships in the preamble comment.
inline std::string to_latex(const Derivation& d) {
  std::string out =
      "% requires \\usepackage{proof}\n"
      "% suggested: \\newcommand{\\obslash}{\\oslash\\hspace{-0.55em}"
      "\\backslash}\n";
  detail::latex_node(d, out, 0);
  out += '\n';
  return out;
}

}  // namespace lg
