#pragma once

#include <string>
#include <string_view>

#include "lg/ast.hpp"

namespace lg {

constexpr std::string_view formula_token(Conn c) {
  switch (c) {
    case Conn::Prod: return "*";
    case Conn::Over: return "/";
    case Conn::Under: return "\\";
    case Conn::Coprod: return "(+)";
    case Conn::RDiff: return "(/)";
    case Conn::LDiff: return "(\\)";
  }
  return {};
}

constexpr std::string_view structural_token(Conn c) {
  switch (c) {
    case Conn::Prod: return ".*.";
    case Conn::Over: return "./.";
    case Conn::Under: return ".\\.";
    case Conn::Coprod: return ".(+).";
    case Conn::RDiff: return ".(/).";
    case Conn::LDiff: return ".(\\).";
  }
  return {};
}

namespace detail {

inline void render_into(const Formula& f, bool nested, std::string& out) {
  if (f.is_atom()) {
    out += f.atom_name();
    return;
  }
  if (nested) out += '(';
  render_into(*f.left(), true, out);
  out += ' ';
  out += formula_token(f.op());
  out += ' ';
  render_into(*f.right(), true, out);
  if (nested) out += ')';
}

inline void render_into(const Structure& s, bool nested, std::string& out) {
  if (s.is_leaf()) {
    render_into(*s.formula(), nested, out);
    return;
  }
  if (nested) out += '(';
  render_into(*s.left(), true, out);
  out += ' ';
  out += structural_token(s.op());
  out += ' ';
  render_into(*s.right(), true, out);
  if (nested) out += ')';
}

}  // namespace detail

/// Canonical concrete syntax: one space around every operator, parentheses
/// around every binary application except the outermost one.
inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(f, false, out);
  return out;
}

inline std::string render(const Structure& s) {
  std::string out;
  detail::render_into(s, false, out);
  return out;
}

inline std::string render(const Sequent& s) {
  std::string out;
  detail::render_into(*s.lhs, false, out);
  out += " |- ";
  detail::render_into(*s.rhs, false, out);
  return out;
}

}  // namespace lg
