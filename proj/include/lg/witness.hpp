#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lg/cnf.hpp"
#include "lg/derivation.hpp"
#include "lg/prover.hpp"
#include "lg/reduction.hpp"

namespace lg {

/// Truth values ⟨t_1 … t_m⟩, indexed by variable − 1; true means 1.
using Assignment = std::vector<bool>;

/// First satisfying assignment in lexicographic order (t_1 most significant,
/// 0 before 1), or nullopt once all 2^m assignments are exhausted.
inline std::optional<Assignment> brute_force_sat(const CnfFormula& cnf) {
  detail::check_cnf(cnf);
  if (cnf.num_vars > 24)
    throw std::invalid_argument("brute_force_sat is limited to 24 variables");
  const int m = cnf.num_vars;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Assignment a(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(j)] = (mask >> (m - 1 - j)) & 1;
    if (satisfies(cnf, a)) return a;
  }
  return std::nullopt;
}

namespace detail {

inline Derivation node(Sequent concl, RuleLabel rule) {
  return Derivation{std::move(concl), rule, {}};
}
inline Derivation node(Sequent concl, RuleLabel rule, Derivation only) {
  Derivation d{std::move(concl), rule, {}};
  d.premises.push_back(std::move(only));
  return d;
}
inline Derivation node(Sequent concl, RuleLabel rule, Derivation first,
                       Derivation second) {
  Derivation d{std::move(concl), rule, {}};
  d.premises.reserve(2);
  d.premises.push_back(std::move(first));
  d.premises.push_back(std::move(second));
  return d;
}

}  // namespace detail

/// Cut-free derivation of A ⊢ A for any formula A.
inline Derivation identity_derivation(const FormulaPtr& f) {
  const StructurePtr lf = Structure::leaf(f);
  const Sequent goal{lf, lf};
  if (f->is_atom()) return detail::node(goal, RuleLabel::Ax);
  const StructurePtr la = Structure::leaf(f->left());
  const StructurePtr lb = Structure::leaf(f->right());
  Derivation da = identity_derivation(f->left());
  Derivation db = identity_derivation(f->right());
  Derivation mid;
  RuleLabel outer = RuleLabel::Ax;
  switch (f->op()) {
    case Conn::Prod:
      mid = detail::node({Structure::make(Conn::Prod, la, lb), lf},
                         RuleLabel::TensorR, std::move(da), std::move(db));
      outer = RuleLabel::TensorL;
      break;
    case Conn::Coprod:
      mid = detail::node({lf, Structure::make(Conn::Coprod, la, lb)},
                         RuleLabel::CoprodL, std::move(da), std::move(db));
      outer = RuleLabel::CoprodR;
      break;
    case Conn::Over:
      mid = detail::node({lf, Structure::make(Conn::Over, la, lb)},
                         RuleLabel::OverL, std::move(db), std::move(da));
      outer = RuleLabel::OverR;
      break;
    case Conn::Under:
      mid = detail::node({lf, Structure::make(Conn::Under, la, lb)},
                         RuleLabel::UnderL, std::move(da), std::move(db));
      outer = RuleLabel::UnderR;
      break;
    case Conn::RDiff:
      mid = detail::node({Structure::make(Conn::RDiff, la, lb), lf},
                         RuleLabel::RDiffR, std::move(da), std::move(db));
      outer = RuleLabel::RDiffL;
      break;
    case Conn::LDiff:
      mid = detail::node({Structure::make(Conn::LDiff, la, lb), lf},
                         RuleLabel::LDiffR, std::move(db), std::move(da));
      outer = RuleLabel::LDiffL;
      break;
  }
  return detail::node(goal, outer, std::move(mid));
}

/// Cut-free derivation of p_i ⊘ (p_i ⦸ p_i) ⊢ p_i.
inline Derivation gadget_derivation(int i) {
  const FormulaPtr p = clause_atom(i);
  const FormulaPtr pbp = Formula::make(Conn::LDiff, p, p);
  const StructurePtr lp = Structure::leaf(p);
  const StructurePtr lpbp = Structure::leaf(pbp);
  Derivation ax = detail::node({lp, lp}, RuleLabel::Ax);
  Derivation d = detail::node({Structure::make(Conn::LDiff, lp, lp), lpbp},
                              RuleLabel::LDiffR, ax, ax);
  d = detail::node({lp, Structure::make(Conn::Coprod, lp, lpbp)},
                   RuleLabel::DResLDiff, std::move(d));
  d = detail::node({Structure::make(Conn::RDiff, lp, lpbp), lp},
                   RuleLabel::DResRDiffInv, std::move(d));
  return detail::node({Structure::leaf(divided_atom(i)), lp}, RuleLabel::RDiffL,
                      std::move(d));
}

namespace detail {

inline StructurePtr right_structure_chain(const std::vector<StructurePtr>& parts) {
  StructurePtr chain = parts.back();
  for (std::size_t k = parts.size() - 1; k-- > 0;)
    chain = Structure::make(Conn::Prod, parts[k], chain);
  return chain;
}

// Path of element i in a right-nested i-of-n chain: 'r'…'r' then 'l', with
// the last element sitting at the all-'r' spine end.
inline std::string chain_path(int i, int n) {
  std::string path(static_cast<std::size_t>(i - 1), 'r');
  if (i < n) path += 'l';
  return path;
}

// U ⊢ C for an s⊗-tree U whose shape mirrors the ⊗-shape of C down to the
// leaf formulas: ⊗R at every inner node, identities at the leaves.
inline Derivation product_closure(const StructurePtr& u, const FormulaPtr& c) {
  if (u->is_leaf()) {
    if (!equal(u->formula(), c))
      throw std::logic_error("product_closure: leaf mismatch");
    return identity_derivation(c);
  }
  if (c->is_atom() || c->op() != Conn::Prod || u->op() != Conn::Prod)
    throw std::logic_error("product_closure: shape mismatch");
  Derivation dl = product_closure(u->left(), c->left());
  Derivation dr = product_closure(u->right(), c->right());
  return node({u, Structure::leaf(c)}, RuleLabel::TensorR, std::move(dl),
              std::move(dr));
}

// Runs `transform` on the derivation displayed so that the subtree at `path`
// (reached through s⊗ nodes) is the whole lhs, then restores the context.
template <typename Fn>
Derivation at_product_hole(Derivation d, std::string_view path, Fn&& transform) {
  if (path.empty()) return std::forward<Fn>(transform)(std::move(d));
  const Sequent s = d.conclusion;
  const StructurePtr x = s.lhs;
  assert(!x->is_leaf() && x->op() == Conn::Prod);
  if (path[0] == 'l') {
    Derivation inner =
        node({x->left(), Structure::make(Conn::Over, s.rhs, x->right())},
             RuleLabel::ResOverInv, std::move(d));
    inner = at_product_hole(std::move(inner), path.substr(1),
                            std::forward<Fn>(transform));
    Sequent concl{Structure::make(Conn::Prod, inner.conclusion.lhs, x->right()),
                  s.rhs};
    return node(std::move(concl), RuleLabel::ResOver, std::move(inner));
  }
  Derivation inner =
      node({x->right(), Structure::make(Conn::Under, x->left(), s.rhs)},
           RuleLabel::ResUnderInv, std::move(d));
  inner = at_product_hole(std::move(inner), path.substr(1),
                          std::forward<Fn>(transform));
  Sequent concl{Structure::make(Conn::Prod, x->left(), inner.conclusion.lhs),
                s.rhs};
  return node(std::move(concl), RuleLabel::ResUnder, std::move(inner));
}

// From X[B] ⊢ P and side = (A ⊢ B) concludes X[A] ⊢ P, where the hole is the
// formula leaf reached through s⊗ nodes along `path`. The base case is Cut.
inline Derivation replace_leaf(Derivation d, std::string_view path,
                               Derivation side) {
  return at_product_hole(std::move(d), path, [&side](Derivation inner) {
    Sequent concl{side.conclusion.lhs, inner.conclusion.rhs};
    return node(std::move(concl), RuleLabel::Cut, std::move(side),
                std::move(inner));
  });
}

// From X[A] ∘⊘ B ⊢ P concludes X[A ⊘ B] ⊢ P: the divisor leaf travels to the
// formula leaf at `path`, across s⊗ nodes, one Grishin step per level.
inline Derivation move_out(Derivation d, std::string_view path) {
  const Sequent s = d.conclusion;
  const StructurePtr x = s.lhs->left();
  const StructurePtr b = s.lhs->right();
  const StructurePtr p = s.rhs;
  if (path.empty()) {
    const FormulaPtr ab =
        Formula::make(Conn::RDiff, x->formula(), b->formula());
    return node({Structure::leaf(ab), p}, RuleLabel::RDiffL, std::move(d));
  }
  Derivation d1 = node({x, Structure::make(Conn::Coprod, p, b)},
                       RuleLabel::DResRDiff, std::move(d));
  if (path[0] == 'l') {
    Derivation d2 = node({Structure::make(Conn::RDiff, x->left(), b),
                          Structure::make(Conn::Over, p, x->right())},
                         RuleLabel::GrishinRDiffOver, std::move(d1));
    d2 = move_out(std::move(d2), path.substr(1));
    Sequent concl{Structure::make(Conn::Prod, d2.conclusion.lhs, x->right()), p};
    return node(std::move(concl), RuleLabel::ResOver, std::move(d2));
  }
  Derivation d2 = node({Structure::make(Conn::RDiff, x->right(), b),
                        Structure::make(Conn::Under, x->left(), p)},
                       RuleLabel::GrishinRDiffUnder, std::move(d1));
  d2 = move_out(std::move(d2), path.substr(1));
  Sequent concl{Structure::make(Conn::Prod, x->left(), d2.conclusion.lhs), p};
  return node(std::move(concl), RuleLabel::ResUnder, std::move(d2));
}

// ⊗L closure: from A_1 ∘⊗ (A_2 ∘⊗ (… A_c)) ⊢ P with formula leaves concludes
// A_1 ⊗ (A_2 ⊗ (… A_c)) ⊢ P, collapsing the right-nested spine to one leaf.
inline Derivation fold_chain(Derivation d) {
  const StructurePtr lhs = d.conclusion.lhs;
  if (lhs->is_leaf()) return d;
  const StructurePtr p = d.conclusion.rhs;
  const StructurePtr head = lhs->left();
  FormulaPtr rest;
  if (lhs->right()->is_leaf()) {
    rest = lhs->right()->formula();
  } else {
    Derivation d1 = node({lhs->right(), Structure::make(Conn::Under, head, p)},
                         RuleLabel::ResUnderInv, std::move(d));
    d1 = fold_chain(std::move(d1));
    rest = d1.conclusion.lhs->formula();
    Sequent folded{Structure::make(Conn::Prod, head, d1.conclusion.lhs), p};
    d = node(std::move(folded), RuleLabel::ResUnder, std::move(d1));
  }
  const FormulaPtr chain = Formula::make(Conn::Prod, head->formula(), rest);
  return node({Structure::leaf(chain), p}, RuleLabel::TensorL, std::move(d));
}

inline Derivation fold_chain_at(Derivation d, std::string_view path) {
  return at_product_hole(std::move(d), path, [](Derivation inner) {
    return fold_chain(std::move(inner));
  });
}

}  // namespace detail

/// E_j(t) ⊢ H_j: every gadget component collapses onto its clause atom.
inline Derivation join_derivation(const CnfFormula& cnf, int j, bool t) {
  detail::check_cnf(cnf);
  detail::check_range(j, 1, cnf.num_vars, "variable");
  const int n = static_cast<int>(cnf.clauses.size());
  std::vector<StructurePtr> atoms;
  for (int i = 1; i <= n; ++i) atoms.push_back(Structure::leaf(clause_atom(i)));
  Derivation d =
      detail::product_closure(detail::right_structure_chain(atoms), h_formula(cnf, j));
  for (int i = n; i >= 1; --i)
    if (detail::clause_supports(cnf.clauses[static_cast<std::size_t>(i) - 1], j, t))
      d = detail::replace_leaf(std::move(d), detail::chain_path(i, n),
                               gadget_derivation(i));
  return detail::fold_chain(std::move(d));
}

/// F_j ⊢ E_j(t): the switch template that keeps the component matching t and
/// sends the other one through the shared join type H_j.
inline Derivation meet_derivation(const CnfFormula& cnf, int j, bool t) {
  detail::check_cnf(cnf);
  detail::check_range(j, 1, cnf.num_vars, "variable");
  const FormulaPtr a = e_formula(cnf, j, true);
  const FormulaPtr b = e_formula(cnf, j, false);
  const FormulaPtr c = h_formula(cnf, j);
  const FormulaPtr cc = Formula::make(Conn::Over, c, c);
  const FormulaPtr k = Formula::make(Conn::Under, cc, c);
  const StructurePtr sa = Structure::leaf(a);
  const StructurePtr sb = Structure::leaf(b);
  const StructurePtr sc = Structure::leaf(c);
  const StructurePtr scc = Structure::leaf(cc);
  const StructurePtr sk = Structure::leaf(k);
  const StructurePtr slf = Structure::leaf(Formula::make(Conn::Over, a, k));
  const StructurePtr sm = Structure::leaf(Formula::make(Conn::Under, cc, b));
  const StructurePtr p = t ? sa : sb;
  Derivation inner;
  if (t) {
    inner = detail::node({sm, Structure::make(Conn::Under, scc, sc)},
                         RuleLabel::UnderL, identity_derivation(cc),
                         join_derivation(cnf, j, false));
    inner = detail::node({sm, sk}, RuleLabel::UnderR, std::move(inner));
    inner = detail::node({slf, Structure::make(Conn::Over, p, sm)},
                         RuleLabel::OverL, std::move(inner),
                         identity_derivation(a));
    inner = detail::node({Structure::make(Conn::Prod, slf, sm), p},
                         RuleLabel::ResOver, std::move(inner));
  } else {
    inner = detail::node({scc, Structure::make(Conn::Over, sc, sc)},
                         RuleLabel::OverL, identity_derivation(c),
                         identity_derivation(c));
    inner = detail::node({Structure::make(Conn::Prod, scc, sc), sc},
                         RuleLabel::ResOver, std::move(inner));
    inner = detail::node({sc, Structure::make(Conn::Under, scc, sc)},
                         RuleLabel::ResUnderInv, std::move(inner));
    inner = detail::node({sc, sk}, RuleLabel::UnderR, std::move(inner));
    inner = detail::node({slf, Structure::make(Conn::Over, sc, sc)},
                         RuleLabel::OverL, std::move(inner),
                         join_derivation(cnf, j, true));
    inner = detail::node({slf, scc}, RuleLabel::OverR, std::move(inner));
    inner = detail::node({sm, Structure::make(Conn::Under, slf, p)},
                         RuleLabel::UnderL, std::move(inner),
                         identity_derivation(b));
    inner = detail::node({Structure::make(Conn::Prod, slf, sm), p},
                         RuleLabel::ResUnder, std::move(inner));
  }
  return detail::node({Structure::leaf(f_formula(cnf, j)), p},
                      RuleLabel::TensorL, std::move(inner));
}

/// Explicit derivation of reduce(cnf) assembled from a satisfying assignment.
/// Contains Cut (inside the leaf replacements); validate with allow_cut=true.
inline Derivation build_witness(const CnfFormula& cnf, const Assignment& a) {
  detail::check_cnf(cnf);
  if (static_cast<int>(a.size()) != cnf.num_vars)
    throw std::invalid_argument("assignment length does not match variable count");
  if (!satisfies(cnf, a))
    throw std::invalid_argument("assignment does not satisfy the CNF instance");
  const int m = cnf.num_vars;
  const int n = static_cast<int>(cnf.clauses.size());

  // Atom-level s⊗ mirror of the undivided goal, closed by ⊗R down to Ax.
  std::vector<StructurePtr> subchains;
  for (int j = 1; j <= m; ++j) {
    std::vector<StructurePtr> atoms;
    for (int i = 1; i <= n; ++i) atoms.push_back(Structure::leaf(clause_atom(i)));
    subchains.push_back(detail::right_structure_chain(atoms));
  }
  Derivation d = detail::product_closure(detail::right_structure_chain(subchains),
                                         g_formula(cnf, 0));

  // Divide by p_i ⦸ p_i clause by clause; the divisor lands on the leftmost
  // supporting occurrence, every other one is rewritten in place.
  for (int i = 1; i <= n; ++i) {
    const FormulaPtr pbp =
        Formula::make(Conn::LDiff, clause_atom(i), clause_atom(i));
    Sequent concl{
        Structure::make(Conn::RDiff, d.conclusion.lhs, Structure::leaf(pbp)),
        Structure::leaf(g_formula(cnf, i))};
    d = detail::node(std::move(concl), RuleLabel::RDiffR, std::move(d),
                     identity_derivation(pbp));
    bool moved = false;
    for (int j = 1; j <= m; ++j) {
      if (!detail::clause_supports(cnf.clauses[static_cast<std::size_t>(i) - 1],
                                   j, a[static_cast<std::size_t>(j) - 1]))
        continue;
      const std::string path =
          detail::chain_path(j, m) + detail::chain_path(i, n);
      if (!moved) {
        d = detail::move_out(std::move(d), path);
        moved = true;
      } else {
        d = detail::replace_leaf(std::move(d), path, gadget_derivation(i));
      }
    }
  }

  // Fold each variable's component chain, switch it to the meet formula, and
  // fold the result into the reduction's product.
  if (n > 1)
    for (int j = m; j >= 1; --j)
      d = detail::fold_chain_at(std::move(d), detail::chain_path(j, m));
  for (int j = m; j >= 1; --j)
    d = detail::replace_leaf(std::move(d), detail::chain_path(j, m),
                             meet_derivation(cnf, j, a[static_cast<std::size_t>(j) - 1]));
  return detail::fold_chain(std::move(d));
}

/// Joint verdict of the SAT oracle and the derivability engine on reduce(cnf).
struct RoundtripVerdict {
  std::optional<Assignment> satResult;
  ProveOutcome lgResult;
  /// The search ran out of budget, so the engines could not be compared.
  bool inconclusive = false;
  /// Agreement between the two engines; vacuously true when inconclusive.
  bool consistent = false;
  /// Validation of the constructed derivation, set when satisfiable.
  std::optional<CheckReport> witnessReport;
};

inline RoundtripVerdict roundtrip(const CnfFormula& cnf, const Budgets& budgets) {
  RoundtripVerdict v;
  v.satResult = brute_force_sat(cnf);
  const Sequent goal = reduce(cnf);
  v.lgResult = prove(goal, budgets);
  if (v.lgResult.kind == ProveOutcome::Kind::BudgetExceeded) {
    v.inconclusive = true;
    v.consistent = true;
    return v;
  }
  const bool proved = v.lgResult.kind == ProveOutcome::Kind::Proved;
  v.consistent = v.satResult.has_value() == proved;
  if (v.satResult) {
    const Derivation w = build_witness(cnf, *v.satResult);
    v.witnessReport = check(w, /*allow_cut=*/true);
    if (!v.witnessReport->ok || !equal(w.conclusion, goal)) v.consistent = false;
  }
  return v;
}

inline RoundtripVerdict roundtrip(const CnfFormula& cnf) {
  return roundtrip(cnf, Budgets::defaults_for(reduce(cnf)));
}

}  // namespace lg
