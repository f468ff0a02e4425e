#pragma once

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lg {

struct Literal {
  int var = 0;  // 1-based variable index
  bool negated = false;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<Literal>> clauses;
};

class DimacsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline long dimacs_int(const std::string& tok, const char* where) {
  long v = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || end != tok.data() + tok.size())
    throw DimacsError(std::string("not an integer in ") + where + ": `" + tok +
                      "`");
  return v;
}

}  // namespace detail

/// Parses DIMACS CNF text: `c` comment lines, one `p cnf <vars> <clauses>`
/// header, then whitespace-separated literals with `0` ending each clause.
/// Instances must have at least one variable and one clause, no empty
/// clauses, and every literal within the declared range.
inline CnfFormula parse_dimacs(const std::string& text) {
  std::vector<std::string> toks;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] == 'c') continue;
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) toks.push_back(tok);
    }
  }
  std::size_t pos = 0;
  auto next = [&](const char* where) -> const std::string& {
    if (pos >= toks.size())
      throw DimacsError(std::string("unexpected end of input in ") + where);
    return toks[pos++];
  };

  if (toks.size() < 2 || toks[0] != "p" || toks[1] != "cnf")
    throw DimacsError("expected `p cnf <vars> <clauses>` header");
  pos = 2;
  const long num_vars = detail::dimacs_int(next("header"), "header");
  const long num_clauses = detail::dimacs_int(next("header"), "header");
  if (num_vars < 1 || num_clauses < 1)
    throw DimacsError("header must declare at least one variable and one clause");

  CnfFormula cnf;
  cnf.num_vars = static_cast<int>(num_vars);
  for (long ci = 1; ci <= num_clauses; ++ci) {
    std::vector<Literal> clause;
    for (;;) {
      const long lit = detail::dimacs_int(next("clause"), "clause");
      if (lit == 0) break;
      const long var = lit < 0 ? -lit : lit;
      if (var > num_vars)
        throw DimacsError("literal " + std::to_string(lit) +
                          " out of range: header declares " +
                          std::to_string(num_vars) + " variables");
      clause.push_back({static_cast<int>(var), lit < 0});
    }
    if (clause.empty())
      throw DimacsError("empty clause (clause " + std::to_string(ci) + ")");
    cnf.clauses.push_back(std::move(clause));
  }
  if (pos != toks.size())
    throw DimacsError("trailing input after the declared clauses");
  return cnf;
}

/// True iff every clause has a literal made true by the assignment
/// (values indexed by variable − 1).
inline bool satisfies(const CnfFormula& cnf, const std::vector<bool>& values) {
  if (static_cast<int>(values.size()) != cnf.num_vars)
    throw std::invalid_argument("assignment length does not match variable count");
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (const Literal& l : clause)
      if (values[static_cast<std::size_t>(l.var) - 1] != l.negated) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

}  // namespace lg
