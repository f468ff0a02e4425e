#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lg/ast.hpp"
#include "lg/cnf.hpp"

namespace lg {

namespace detail {

inline void check_cnf(const CnfFormula& cnf) {
  if (cnf.num_vars < 1 || cnf.clauses.empty())
    throw std::invalid_argument("reduction needs at least one variable and one clause");
  for (const auto& clause : cnf.clauses) {
    if (clause.empty()) throw std::invalid_argument("reduction rejects empty clauses");
    for (const Literal& l : clause)
      if (l.var < 1 || l.var > cnf.num_vars)
        throw std::invalid_argument("literal variable out of range");
  }
}

inline void check_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi)
    throw std::out_of_range(std::string(what) + " index " +
                            std::to_string(value) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) +
                            "]");
}

/// Setting x_j := t satisfies clause i iff the literal (t ? x_j : ¬x_j)
/// appears in it.
inline bool clause_supports(const std::vector<Literal>& clause, int j, bool t) {
  for (const Literal& l : clause)
    if (l.var == j && l.negated != t) return true;
  return false;
}

inline FormulaPtr right_product_chain(const std::vector<FormulaPtr>& parts) {
  FormulaPtr chain = parts.back();
  for (std::size_t k = parts.size() - 1; k-- > 0;)
    chain = Formula::make(Conn::Prod, parts[k], chain);
  return chain;
}

}  // namespace detail

/// The atom owned by clause i.
inline FormulaPtr clause_atom(int i) {
  return Formula::atom("p" + std::to_string(i));
}

/// p_i ⊘ (p_i ⦸ p_i): derivable to p_i, but only through the coproduct
/// family. One occurrence per satisfied clause drives the reduction.
inline FormulaPtr divided_atom(int i) {
  const FormulaPtr p = clause_atom(i);
  return Formula::make(Conn::RDiff, p, Formula::make(Conn::LDiff, p, p));
}

/// Clause i's slot in e_formula(j, t): the divided atom when setting
/// x_j := t satisfies clause i, the bare atom otherwise.
inline FormulaPtr e_component(const CnfFormula& cnf, int i, int j, bool t) {
  detail::check_cnf(cnf);
  detail::check_range(i, 1, static_cast<int>(cnf.clauses.size()), "clause");
  detail::check_range(j, 1, cnf.num_vars, "variable");
  const auto& clause = cnf.clauses[static_cast<std::size_t>(i) - 1];
  return detail::clause_supports(clause, j, t) ? divided_atom(i)
                                               : clause_atom(i);
}

/// E_j(t): the right-nested product of e_component over all clauses.
inline FormulaPtr e_formula(const CnfFormula& cnf, int j, bool t) {
  detail::check_cnf(cnf);
  detail::check_range(j, 1, cnf.num_vars, "variable");
  std::vector<FormulaPtr> parts;
  for (int i = 1; i <= static_cast<int>(cnf.clauses.size()); ++i)
    parts.push_back(e_component(cnf, i, j, t));
  return detail::right_product_chain(parts);
}

/// H_j: the right-nested product p_1 ⊗ (p_2 ⊗ … p_n); the same formula for
/// every variable j, kept indexed to mirror the construction.
inline FormulaPtr h_formula(const CnfFormula& cnf, int j) {
  detail::check_cnf(cnf);
  detail::check_range(j, 1, cnf.num_vars, "variable");
  std::vector<FormulaPtr> parts;
  for (int i = 1; i <= static_cast<int>(cnf.clauses.size()); ++i)
    parts.push_back(clause_atom(i));
  return detail::right_product_chain(parts);
}

/// (A / ((C/C)\C)) ⊗ ((C/C)\B): a formula derivable into any context that
/// accepts A or accepts B, once both convert to C. The reduction's switch.
inline FormulaPtr meet_type(const FormulaPtr& A, const FormulaPtr& B,
                            const FormulaPtr& C) {
  const FormulaPtr cc = Formula::make(Conn::Over, C, C);
  return Formula::make(
      Conn::Prod,
      Formula::make(Conn::Over, A, Formula::make(Conn::Under, cc, C)),
      Formula::make(Conn::Under, cc, B));
}

/// F_j = meet_type(E_j(1), E_j(0), H_j).
inline FormulaPtr f_formula(const CnfFormula& cnf, int j) {
  return meet_type(e_formula(cnf, j, true), e_formula(cnf, j, false),
                   h_formula(cnf, j));
}

/// G_i: for i = 0 the right-nested product H_1 ⊗ (… ⊗ H_m); each further
/// step divides by that clause's atom pair, G_i = G_{i−1} ⊘ (p_i ⦸ p_i).
inline FormulaPtr g_formula(const CnfFormula& cnf, int i) {
  detail::check_cnf(cnf);
  detail::check_range(i, 0, static_cast<int>(cnf.clauses.size()), "clause");
  std::vector<FormulaPtr> hs;
  for (int j = 1; j <= cnf.num_vars; ++j) hs.push_back(h_formula(cnf, j));
  FormulaPtr g = detail::right_product_chain(hs);
  for (int k = 1; k <= i; ++k)
    g = Formula::make(Conn::RDiff, g,
                      Formula::make(Conn::LDiff, clause_atom(k), clause_atom(k)));
  return g;
}

/// The target sequent F_1 ⊗ (… ⊗ F_m) ⊢ G_n, both sides single formula
/// leaves. Derivable exactly when the CNF instance is satisfiable.
inline Sequent reduce(const CnfFormula& cnf) {
  detail::check_cnf(cnf);
  std::vector<FormulaPtr> fs;
  for (int j = 1; j <= cnf.num_vars; ++j) fs.push_back(f_formula(cnf, j));
  return {Structure::leaf(detail::right_product_chain(fs)),
          Structure::leaf(g_formula(cnf, static_cast<int>(cnf.clauses.size())))};
}

/// Connective count of reduce(cnf) predicted without building it:
/// 8m − 2 + 8m(n−1) + 2T + 2n, where m is the variable count, n the clause
/// count and T the number of (clause, literal-shape) incidences.
inline long reduced_length(const CnfFormula& cnf) {
  detail::check_cnf(cnf);
  const long m = cnf.num_vars;
  const long n = static_cast<long>(cnf.clauses.size());
  long t = 0;
  for (const auto& clause : cnf.clauses)
    for (int j = 1; j <= cnf.num_vars; ++j)
      for (bool sign : {false, true})
        if (detail::clause_supports(clause, j, sign)) ++t;
  return 8 * m - 2 + 8 * m * (n - 1) + 2 * t + 2 * n;
}

}  // namespace lg
