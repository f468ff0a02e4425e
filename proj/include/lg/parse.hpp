#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lg/ast.hpp"

namespace lg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("parse error at offset " + std::to_string(offset) +
                           ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

enum class TokKind : unsigned char {
  Atom,
  FormulaOp,
  StructuralOp,
  LParen,
  RParen,
  Turnstile,
  End
};

struct Token {
  TokKind kind;
  Conn conn = Conn::Prod;
  std::size_t offset = 0;
  std::string text;  // atom spelling
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::size_t at, std::string_view lit) {
    return src.substr(at, lit.size()) == lit;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < src.size() &&
             ((src[j] >= 'a' && src[j] <= 'z') ||
              (src[j] >= '0' && src[j] <= '9') || src[j] == '_'))
        ++j;
      out.push_back({TokKind::Atom, Conn::Prod, i,
                     std::string(src.substr(i, j - i))});
      i = j;
      continue;
    }
    if (c == '*') {
      out.push_back({TokKind::FormulaOp, Conn::Prod, i, {}});
      ++i;
      continue;
    }
    if (c == '/') {
      out.push_back({TokKind::FormulaOp, Conn::Over, i, {}});
      ++i;
      continue;
    }
    if (c == '\\') {
      out.push_back({TokKind::FormulaOp, Conn::Under, i, {}});
      ++i;
      continue;
    }
    if (c == '(') {
      // "(+)", "(/)", "(\)" are single operator tokens; anything else is a
      // grouping parenthesis.
      if (starts(i, "(+)")) {
        out.push_back({TokKind::FormulaOp, Conn::Coprod, i, {}});
        i += 3;
      } else if (starts(i, "(/)")) {
        out.push_back({TokKind::FormulaOp, Conn::RDiff, i, {}});
        i += 3;
      } else if (starts(i, "(\\)")) {
        out.push_back({TokKind::FormulaOp, Conn::LDiff, i, {}});
        i += 3;
      } else {
        out.push_back({TokKind::LParen, Conn::Prod, i, {}});
        ++i;
      }
      continue;
    }
    if (c == ')') {
      out.push_back({TokKind::RParen, Conn::Prod, i, {}});
      ++i;
      continue;
    }
    if (c == '.') {
      static constexpr std::pair<std::string_view, Conn> kStructural[] = {
          {".*.", Conn::Prod},     {"./.", Conn::Over},
          {".\\.", Conn::Under},   {".(+).", Conn::Coprod},
          {".(/).", Conn::RDiff},  {".(\\).", Conn::LDiff},
      };
      bool matched = false;
      for (const auto& [lit, conn] : kStructural) {
        if (starts(i, lit)) {
          out.push_back({TokKind::StructuralOp, conn, i, {}});
          i += lit.size();
          matched = true;
          break;
        }
      }
      if (!matched) throw ParseError(i, "malformed structural connective");
      continue;
    }
    if (c == '|') {
      if (starts(i, "|-")) {
        out.push_back({TokKind::Turnstile, Conn::Prod, i, {}});
        i += 2;
        continue;
      }
      throw ParseError(i, "stray '|' (expected '|-')");
    }
    throw ParseError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({TokKind::End, Conn::Prod, src.size(), {}});
  return out;
}

/// Parse tree over the full 12-operator vocabulary, before the split into a
/// structural skeleton with formula leaves.
struct Generic {
  bool is_atom;
  bool structural = false;  // operator level for non-atoms
  Conn op = Conn::Prod;
  std::string name;         // atoms
  std::size_t offset = 0;   // atom start or operator token offset
  std::vector<Generic> kids;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Generic parse_side() {
    Generic first = primary();
    if (is_op(peek().kind)) {
      const Token op = next();
      Generic second = primary();
      reject_chain();
      return binapp(op, std::move(first), std::move(second));
    }
    return first;
  }

  void expect_turnstile() {
    if (peek().kind != TokKind::Turnstile)
      throw ParseError(peek().offset, "expected '|-'");
    next();
  }

  void expect_end() {
    if (peek().kind != TokKind::End)
      throw ParseError(peek().offset, "trailing input");
  }

 private:
  static bool is_op(TokKind k) {
    return k == TokKind::FormulaOp || k == TokKind::StructuralOp;
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  void reject_chain() {
    if (is_op(peek().kind))
      throw ParseError(peek().offset,
                       "operator chain without parentheses (every binary "
                       "application must be parenthesized)");
  }

  static Generic binapp(const Token& op, Generic l, Generic r) {
    Generic g;
    g.is_atom = false;
    g.structural = op.kind == TokKind::StructuralOp;
    g.op = op.conn;
    g.offset = op.offset;
    g.kids.push_back(std::move(l));
    g.kids.push_back(std::move(r));
    return g;
  }

  Generic primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Atom: {
        next();
        Generic g;
        g.is_atom = true;
        g.name = t.text;
        g.offset = t.offset;
        return g;
      }
      case TokKind::LParen: {
        next();
        Generic first = primary();
        if (!is_op(peek().kind))
          throw ParseError(peek().offset,
                           "expected an operator (redundant parentheses are "
                           "not allowed)");
        const Token op = next();
        Generic second = primary();
        reject_chain();
        if (peek().kind != TokKind::RParen)
          throw ParseError(peek().offset, "expected ')'");
        next();
        return binapp(op, std::move(first), std::move(second));
      }
      default:
        throw ParseError(t.offset, "expected an atom or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline bool pure_formula(const Generic& g) {
  if (g.is_atom) return true;
  return !g.structural && pure_formula(g.kids[0]) && pure_formula(g.kids[1]);
}

inline const Generic* find_structural(const Generic& g) {
  if (g.is_atom) return nullptr;
  if (g.structural) return &g;
  if (const Generic* s = find_structural(g.kids[0])) return s;
  return find_structural(g.kids[1]);
}

inline FormulaPtr to_formula(const Generic& g) {
  if (g.is_atom) return Formula::atom(g.name);
  if (g.structural)
    throw ParseError(g.offset, "structural connective inside a formula");
  return Formula::make(g.op, to_formula(g.kids[0]), to_formula(g.kids[1]));
}

inline StructurePtr to_structure(const Generic& g) {
  if (pure_formula(g)) return Structure::leaf(to_formula(g));
  if (!g.structural) {
    // A formula operator applied to structural material.
    const Generic* s = find_structural(g);
    throw ParseError(s->offset,
                     "structural connective nested under a formula connective");
  }
  return Structure::make(g.op, to_structure(g.kids[0]),
                         to_structure(g.kids[1]));
}

/// Byte offset of the node a polarity-error path ("0.1", "" = root) points at.
inline std::size_t offset_at(const Generic& g, std::string_view path) {
  const Generic* cur = &g;
  while (!path.empty()) {
    const char step = path[0];
    path.remove_prefix(path.size() > 1 ? 2 : 1);  // skip index and '.'
    cur = &cur->kids[step == '0' ? 0 : 1];
  }
  return cur->offset;
}

inline StructurePtr side_to_structure(const Generic& g, Polarity expected,
                                      std::string_view side_name) {
  StructurePtr s = to_structure(g);
  if (auto e = validate(*s, expected)) {
    throw ParseError(offset_at(g, e->path),
                     std::string(side_name) + " side: " + e->message +
                         (e->path.empty() ? "" : " (at path " + e->path + ")"));
  }
  return s;
}

}  // namespace detail

inline FormulaPtr parse_formula(std::string_view src) {
  detail::Parser p(src);
  detail::Generic g = p.parse_side();
  p.expect_end();
  return detail::to_formula(g);
}

inline StructurePtr parse_structure(std::string_view src, Polarity expected) {
  detail::Parser p(src);
  detail::Generic g = p.parse_side();
  p.expect_end();
  return detail::side_to_structure(g, expected, expected == Polarity::Input
                                                    ? "input"
                                                    : "output");
}

inline Sequent parse_sequent(std::string_view src) {
  detail::Parser p(src);
  detail::Generic l = p.parse_side();
  p.expect_turnstile();
  detail::Generic r = p.parse_side();
  p.expect_end();
  Sequent s{detail::side_to_structure(l, Polarity::Input, "left"),
            detail::side_to_structure(r, Polarity::Output, "right")};
  return s;
}

}  // namespace lg
