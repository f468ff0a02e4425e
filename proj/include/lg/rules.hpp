#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lg/ast.hpp"
#include "lg/render.hpp"

namespace lg {

enum class RuleLabel : unsigned char {
  Ax,
  Cut,
  ResOver,
  ResUnder,
  ResOverInv,
  ResUnderInv,
  DResRDiff,
  DResLDiff,
  DResRDiffInv,
  DResLDiffInv,
  GrishinRDiffOver,
  GrishinRDiffUnder,
  GrishinLDiffOver,
  GrishinLDiffUnder,
  TensorL,
  TensorR,
  CoprodL,
  CoprodR,
  OverL,
  OverR,
  UnderL,
  UnderR,
  RDiffL,
  RDiffR,
  LDiffL,
  LDiffR,
};

enum class RuleClass : unsigned char { Axiom, CutRule, Display, Grishin, Logical };

constexpr RuleClass rule_class(RuleLabel r) {
  switch (r) {
    case RuleLabel::Ax:
      return RuleClass::Axiom;
    case RuleLabel::Cut:
      return RuleClass::CutRule;
    case RuleLabel::ResOver:
    case RuleLabel::ResUnder:
    case RuleLabel::ResOverInv:
    case RuleLabel::ResUnderInv:
    case RuleLabel::DResRDiff:
    case RuleLabel::DResLDiff:
    case RuleLabel::DResRDiffInv:
    case RuleLabel::DResLDiffInv:
      return RuleClass::Display;
    case RuleLabel::GrishinRDiffOver:
    case RuleLabel::GrishinRDiffUnder:
    case RuleLabel::GrishinLDiffOver:
    case RuleLabel::GrishinLDiffUnder:
      return RuleClass::Grishin;
    default:
      return RuleClass::Logical;
  }
}

constexpr int rule_arity(RuleLabel r) {
  switch (r) {
    case RuleLabel::Ax:
      return 0;
    case RuleLabel::Cut:
    case RuleLabel::TensorR:
    case RuleLabel::CoprodL:
    case RuleLabel::OverL:
    case RuleLabel::UnderL:
    case RuleLabel::RDiffR:
    case RuleLabel::LDiffR:
      return 2;
    default:
      return 1;
  }
}

constexpr std::string_view rule_name(RuleLabel r) {
  switch (r) {
    case RuleLabel::Ax: return "Ax";
    case RuleLabel::Cut: return "Cut";
    case RuleLabel::ResOver: return "ResOver";
    case RuleLabel::ResUnder: return "ResUnder";
    case RuleLabel::ResOverInv: return "ResOverInv";
    case RuleLabel::ResUnderInv: return "ResUnderInv";
    case RuleLabel::DResRDiff: return "DResRDiff";
    case RuleLabel::DResLDiff: return "DResLDiff";
    case RuleLabel::DResRDiffInv: return "DResRDiffInv";
    case RuleLabel::DResLDiffInv: return "DResLDiffInv";
    case RuleLabel::GrishinRDiffOver: return "GrishinRDiffOver";
    case RuleLabel::GrishinRDiffUnder: return "GrishinRDiffUnder";
    case RuleLabel::GrishinLDiffOver: return "GrishinLDiffOver";
    case RuleLabel::GrishinLDiffUnder: return "GrishinLDiffUnder";
    case RuleLabel::TensorL: return "TensorL";
    case RuleLabel::TensorR: return "TensorR";
    case RuleLabel::CoprodL: return "CoprodL";
    case RuleLabel::CoprodR: return "CoprodR";
    case RuleLabel::OverL: return "OverL";
    case RuleLabel::OverR: return "OverR";
    case RuleLabel::UnderL: return "UnderL";
    case RuleLabel::UnderR: return "UnderR";
    case RuleLabel::RDiffL: return "RDiffL";
    case RuleLabel::RDiffR: return "RDiffR";
    case RuleLabel::LDiffL: return "LDiffL";
    case RuleLabel::LDiffR: return "LDiffR";
  }
  return {};
}

inline constexpr RuleLabel kAllRules[] = {
    RuleLabel::Ax,          RuleLabel::Cut,
    RuleLabel::ResOver,     RuleLabel::ResUnder,
    RuleLabel::ResOverInv,  RuleLabel::ResUnderInv,
    RuleLabel::DResRDiff,   RuleLabel::DResLDiff,
    RuleLabel::DResRDiffInv, RuleLabel::DResLDiffInv,
    RuleLabel::GrishinRDiffOver, RuleLabel::GrishinRDiffUnder,
    RuleLabel::GrishinLDiffOver, RuleLabel::GrishinLDiffUnder,
    RuleLabel::TensorL,     RuleLabel::TensorR,
    RuleLabel::CoprodL,     RuleLabel::CoprodR,
    RuleLabel::OverL,       RuleLabel::OverR,
    RuleLabel::UnderL,      RuleLabel::UnderR,
    RuleLabel::RDiffL,      RuleLabel::RDiffR,
    RuleLabel::LDiffL,      RuleLabel::LDiffR,
};

inline std::optional<RuleLabel> rule_from_name(std::string_view name) {
  for (RuleLabel r : kAllRules)
    if (rule_name(r) == name) return r;
  return std::nullopt;
}

struct RuleInstance {
  RuleLabel rule;
  std::vector<Sequent> premises;
};

namespace detail {

inline bool snode(const StructurePtr& s, Conn op) {
  return !s->is_leaf() && s->op() == op;
}
inline bool fleaf(const StructurePtr& s, Conn op) {
  return s->is_leaf() && !s->formula()->is_atom() && s->formula()->op() == op;
}
inline StructurePtr fl(const FormulaPtr& f) { return Structure::leaf(f); }
inline StructurePtr sn(Conn op, StructurePtr l, StructurePtr r) {
  return Structure::make(op, std::move(l), std::move(r));
}

}  // namespace detail

/// Enumerates the eight reversible display moves applicable to `goal`
/// (conclusion side); at most four can fire for any given root shape.
inline std::vector<RuleInstance> backward_display_steps(const Sequent& goal) {
  using namespace detail;
  std::vector<RuleInstance> out;
  const StructurePtr& l = goal.lhs;
  const StructurePtr& r = goal.rhs;
  if (snode(l, Conn::Prod)) {
    out.push_back({RuleLabel::ResOver,
                   {Sequent{l->left(), sn(Conn::Over, r, l->right())}}});
    out.push_back({RuleLabel::ResUnder,
                   {Sequent{l->right(), sn(Conn::Under, l->left(), r)}}});
  }
  if (snode(r, Conn::Over))
    out.push_back({RuleLabel::ResOverInv,
                   {Sequent{sn(Conn::Prod, l, r->right()), r->left()}}});
  if (snode(r, Conn::Under))
    out.push_back({RuleLabel::ResUnderInv,
                   {Sequent{sn(Conn::Prod, r->left(), l), r->right()}}});
  if (snode(r, Conn::Coprod)) {
    out.push_back({RuleLabel::DResRDiff,
                   {Sequent{sn(Conn::RDiff, l, r->right()), r->left()}}});
    out.push_back({RuleLabel::DResLDiff,
                   {Sequent{sn(Conn::LDiff, r->left(), l), r->right()}}});
  }
  if (snode(l, Conn::RDiff))
    out.push_back({RuleLabel::DResRDiffInv,
                   {Sequent{l->left(), sn(Conn::Coprod, r, l->right())}}});
  if (snode(l, Conn::LDiff))
    out.push_back({RuleLabel::DResLDiffInv,
                   {Sequent{l->right(), sn(Conn::Coprod, l->left(), r)}}});
  return out;
}

/// Every rule instance (excluding Cut) whose conclusion is exactly `goal`:
/// Ax, then one-premise logical rules, two-premise logical rules, display
/// moves, and Grishin interactions, in that fixed order.
inline std::vector<RuleInstance> backward_steps(const Sequent& goal) {
  using namespace detail;
  std::vector<RuleInstance> out;
  const StructurePtr& l = goal.lhs;
  const StructurePtr& r = goal.rhs;

  if (l->is_leaf() && r->is_leaf() && l->formula()->is_atom() &&
      r->formula()->is_atom() &&
      l->formula()->atom_name() == r->formula()->atom_name())
    out.push_back({RuleLabel::Ax, {}});

  if (l->is_leaf() && !l->formula()->is_atom()) {
    const FormulaPtr& f = l->formula();
    switch (f->op()) {
      case Conn::Prod:
        out.push_back({RuleLabel::TensorL,
                       {Sequent{sn(Conn::Prod, fl(f->left()), fl(f->right())), r}}});
        break;
      case Conn::RDiff:
        out.push_back({RuleLabel::RDiffL,
                       {Sequent{sn(Conn::RDiff, fl(f->left()), fl(f->right())), r}}});
        break;
      case Conn::LDiff:
        out.push_back({RuleLabel::LDiffL,
                       {Sequent{sn(Conn::LDiff, fl(f->left()), fl(f->right())), r}}});
        break;
      default:
        break;
    }
  }
  if (r->is_leaf() && !r->formula()->is_atom()) {
    const FormulaPtr& f = r->formula();
    switch (f->op()) {
      case Conn::Coprod:
        out.push_back({RuleLabel::CoprodR,
                       {Sequent{l, sn(Conn::Coprod, fl(f->left()), fl(f->right()))}}});
        break;
      case Conn::Over:
        out.push_back({RuleLabel::OverR,
                       {Sequent{l, sn(Conn::Over, fl(f->left()), fl(f->right()))}}});
        break;
      case Conn::Under:
        out.push_back({RuleLabel::UnderR,
                       {Sequent{l, sn(Conn::Under, fl(f->left()), fl(f->right()))}}});
        break;
      default:
        break;
    }
  }

  if (snode(l, Conn::Prod) && fleaf(r, Conn::Prod)) {
    const FormulaPtr& f = r->formula();
    out.push_back({RuleLabel::TensorR,
                   {Sequent{l->left(), fl(f->left())},
                    Sequent{l->right(), fl(f->right())}}});
  }
  if (fleaf(l, Conn::Coprod) && snode(r, Conn::Coprod)) {
    const FormulaPtr& f = l->formula();
    out.push_back({RuleLabel::CoprodL,
                   {Sequent{fl(f->left()), r->left()},
                    Sequent{fl(f->right()), r->right()}}});
  }
  // B/A ⊢ P s/ X from X ⊢ A and B ⊢ P.
  if (fleaf(l, Conn::Over) && snode(r, Conn::Over)) {
    const FormulaPtr& f = l->formula();
    out.push_back({RuleLabel::OverL,
                   {Sequent{r->right(), fl(f->right())},
                    Sequent{fl(f->left()), r->left()}}});
  }
  // A\B ⊢ X s\ P from X ⊢ A and B ⊢ P.
  if (fleaf(l, Conn::Under) && snode(r, Conn::Under)) {
    const FormulaPtr& f = l->formula();
    out.push_back({RuleLabel::UnderL,
                   {Sequent{r->left(), fl(f->left())},
                    Sequent{fl(f->right()), r->right()}}});
  }
  // X s⊘ P ⊢ B⊘A from X ⊢ B and A ⊢ P.
  if (snode(l, Conn::RDiff) && fleaf(r, Conn::RDiff)) {
    const FormulaPtr& f = r->formula();
    out.push_back({RuleLabel::RDiffR,
                   {Sequent{l->left(), fl(f->left())},
                    Sequent{fl(f->right()), l->right()}}});
  }
  // P s⦸ X ⊢ A⦸B from X ⊢ B and A ⊢ P.
  if (snode(l, Conn::LDiff) && fleaf(r, Conn::LDiff)) {
    const FormulaPtr& f = r->formula();
    out.push_back({RuleLabel::LDiffR,
                   {Sequent{l->right(), fl(f->right())},
                    Sequent{fl(f->left()), l->left()}}});
  }

  for (auto& inst : backward_display_steps(goal)) out.push_back(std::move(inst));

  if (snode(l, Conn::RDiff) && snode(r, Conn::Over))
    out.push_back({RuleLabel::GrishinRDiffOver,
                   {Sequent{sn(Conn::Prod, l->left(), r->right()),
                            sn(Conn::Coprod, r->left(), l->right())}}});
  if (snode(l, Conn::RDiff) && snode(r, Conn::Under))
    out.push_back({RuleLabel::GrishinRDiffUnder,
                   {Sequent{sn(Conn::Prod, r->left(), l->left()),
                            sn(Conn::Coprod, r->right(), l->right())}}});
  if (snode(l, Conn::LDiff) && snode(r, Conn::Over))
    out.push_back({RuleLabel::GrishinLDiffOver,
                   {Sequent{sn(Conn::Prod, l->right(), r->right()),
                            sn(Conn::Coprod, l->left(), r->left())}}});
  if (snode(l, Conn::LDiff) && snode(r, Conn::Under))
    out.push_back({RuleLabel::GrishinLDiffUnder,
                   {Sequent{sn(Conn::Prod, r->left(), l->right()),
                            sn(Conn::Coprod, l->left(), r->right())}}});
  return out;
}

namespace detail {

struct ForwardResult {
  std::optional<Sequent> conclusion;
  std::string error;
};

inline ForwardResult fwd_err(std::string msg) { return {std::nullopt, std::move(msg)}; }
inline ForwardResult fwd_ok(Sequent s) { return {std::move(s), {}}; }

/// Conclusion determined by a rule's premises (all rules except Ax). Fails
/// when the premises do not fit the rule's schema.
inline ForwardResult forward_conclusion(RuleLabel rule,
                                        const std::vector<Sequent>& ps) {
  using namespace detail;
  if (static_cast<int>(ps.size()) != rule_arity(rule))
    return fwd_err("wrong premise count");
  auto formula_rhs = [](const Sequent& s) -> FormulaPtr {
    return s.rhs->is_leaf() ? s.rhs->formula() : nullptr;
  };
  auto formula_lhs = [](const Sequent& s) -> FormulaPtr {
    return s.lhs->is_leaf() ? s.lhs->formula() : nullptr;
  };
  switch (rule) {
    case RuleLabel::Ax:
      return fwd_err("axiom conclusion is not premise-determined");
    case RuleLabel::Cut: {
      FormulaPtr a = formula_rhs(ps[0]);
      FormulaPtr b = formula_lhs(ps[1]);
      if (!a || !b) return fwd_err("cut formula must be displayed in both premises");
      if (!equal(a, b)) return fwd_err("cut formulas differ between premises");
      return fwd_ok(Sequent{ps[0].lhs, ps[1].rhs});
    }

    case RuleLabel::ResOver:
      if (!snode(ps[0].rhs, Conn::Over)) return fwd_err("premise rhs must be P ./. Y");
      return fwd_ok(Sequent{sn(Conn::Prod, ps[0].lhs, ps[0].rhs->right()),
                            ps[0].rhs->left()});
    case RuleLabel::ResUnder:
      if (!snode(ps[0].rhs, Conn::Under)) return fwd_err("premise rhs must be X .\\. P");
      return fwd_ok(Sequent{sn(Conn::Prod, ps[0].rhs->left(), ps[0].lhs),
                            ps[0].rhs->right()});
    case RuleLabel::ResOverInv:
      if (!snode(ps[0].lhs, Conn::Prod)) return fwd_err("premise lhs must be X .*. Y");
      return fwd_ok(Sequent{ps[0].lhs->left(),
                            sn(Conn::Over, ps[0].rhs, ps[0].lhs->right())});
    case RuleLabel::ResUnderInv:
      if (!snode(ps[0].lhs, Conn::Prod)) return fwd_err("premise lhs must be X .*. Y");
      return fwd_ok(Sequent{ps[0].lhs->right(),
                            sn(Conn::Under, ps[0].lhs->left(), ps[0].rhs)});
    case RuleLabel::DResRDiff:
      if (!snode(ps[0].lhs, Conn::RDiff)) return fwd_err("premise lhs must be X .(/). Q");
      return fwd_ok(Sequent{ps[0].lhs->left(),
                            sn(Conn::Coprod, ps[0].rhs, ps[0].lhs->right())});
    case RuleLabel::DResLDiff:
      if (!snode(ps[0].lhs, Conn::LDiff)) return fwd_err("premise lhs must be P .(\\). X");
      return fwd_ok(Sequent{ps[0].lhs->right(),
                            sn(Conn::Coprod, ps[0].lhs->left(), ps[0].rhs)});
    case RuleLabel::DResRDiffInv:
      if (!snode(ps[0].rhs, Conn::Coprod)) return fwd_err("premise rhs must be P .(+). Q");
      return fwd_ok(Sequent{sn(Conn::RDiff, ps[0].lhs, ps[0].rhs->right()),
                            ps[0].rhs->left()});
    case RuleLabel::DResLDiffInv:
      if (!snode(ps[0].rhs, Conn::Coprod)) return fwd_err("premise rhs must be P .(+). Q");
      return fwd_ok(Sequent{sn(Conn::LDiff, ps[0].rhs->left(), ps[0].lhs),
                            ps[0].rhs->right()});

    case RuleLabel::GrishinRDiffOver:
    case RuleLabel::GrishinRDiffUnder:
    case RuleLabel::GrishinLDiffOver:
    case RuleLabel::GrishinLDiffUnder: {
      if (!snode(ps[0].lhs, Conn::Prod) || !snode(ps[0].rhs, Conn::Coprod))
        return fwd_err("premise must be X .*. Y |- P .(+). Q");
      const StructurePtr &x = ps[0].lhs->left(), &y = ps[0].lhs->right();
      const StructurePtr &p = ps[0].rhs->left(), &q = ps[0].rhs->right();
      switch (rule) {
        case RuleLabel::GrishinRDiffOver:
          return fwd_ok(Sequent{sn(Conn::RDiff, x, q), sn(Conn::Over, p, y)});
        case RuleLabel::GrishinRDiffUnder:
          return fwd_ok(Sequent{sn(Conn::RDiff, y, q), sn(Conn::Under, x, p)});
        case RuleLabel::GrishinLDiffOver:
          return fwd_ok(Sequent{sn(Conn::LDiff, p, x), sn(Conn::Over, q, y)});
        default:
          return fwd_ok(Sequent{sn(Conn::LDiff, p, y), sn(Conn::Under, x, q)});
      }
    }

    case RuleLabel::TensorL:
      if (!snode(ps[0].lhs, Conn::Prod) || !ps[0].lhs->left()->is_leaf() ||
          !ps[0].lhs->right()->is_leaf())
        return fwd_err("premise lhs must be A .*. B with formula leaves");
      return fwd_ok(Sequent{
          fl(Formula::make(Conn::Prod, ps[0].lhs->left()->formula(),
                           ps[0].lhs->right()->formula())),
          ps[0].rhs});
    case RuleLabel::RDiffL:
      if (!snode(ps[0].lhs, Conn::RDiff) || !ps[0].lhs->left()->is_leaf() ||
          !ps[0].lhs->right()->is_leaf())
        return fwd_err("premise lhs must be A .(/). B with formula leaves");
      return fwd_ok(Sequent{
          fl(Formula::make(Conn::RDiff, ps[0].lhs->left()->formula(),
                           ps[0].lhs->right()->formula())),
          ps[0].rhs});
    case RuleLabel::LDiffL:
      if (!snode(ps[0].lhs, Conn::LDiff) || !ps[0].lhs->left()->is_leaf() ||
          !ps[0].lhs->right()->is_leaf())
        return fwd_err("premise lhs must be A .(\\). B with formula leaves");
      return fwd_ok(Sequent{
          fl(Formula::make(Conn::LDiff, ps[0].lhs->left()->formula(),
                           ps[0].lhs->right()->formula())),
          ps[0].rhs});
    case RuleLabel::CoprodR:
      if (!snode(ps[0].rhs, Conn::Coprod) || !ps[0].rhs->left()->is_leaf() ||
          !ps[0].rhs->right()->is_leaf())
        return fwd_err("premise rhs must be A .(+). B with formula leaves");
      return fwd_ok(Sequent{
          ps[0].lhs,
          fl(Formula::make(Conn::Coprod, ps[0].rhs->left()->formula(),
                           ps[0].rhs->right()->formula()))});
    case RuleLabel::OverR:
      if (!snode(ps[0].rhs, Conn::Over) || !ps[0].rhs->left()->is_leaf() ||
          !ps[0].rhs->right()->is_leaf())
        return fwd_err("premise rhs must be A ./. B with formula leaves");
      return fwd_ok(Sequent{
          ps[0].lhs,
          fl(Formula::make(Conn::Over, ps[0].rhs->left()->formula(),
                           ps[0].rhs->right()->formula()))});
    case RuleLabel::UnderR:
      if (!snode(ps[0].rhs, Conn::Under) || !ps[0].rhs->left()->is_leaf() ||
          !ps[0].rhs->right()->is_leaf())
        return fwd_err("premise rhs must be A .\\. B with formula leaves");
      return fwd_ok(Sequent{
          ps[0].lhs,
          fl(Formula::make(Conn::Under, ps[0].rhs->left()->formula(),
                           ps[0].rhs->right()->formula()))});

    case RuleLabel::TensorR: {
      FormulaPtr a = formula_rhs(ps[0]), b = formula_rhs(ps[1]);
      if (!a || !b) return fwd_err("premise rhs must be a formula leaf");
      return fwd_ok(Sequent{sn(Conn::Prod, ps[0].lhs, ps[1].lhs),
                            fl(Formula::make(Conn::Prod, a, b))});
    }
    case RuleLabel::CoprodL: {
      FormulaPtr a = formula_lhs(ps[0]), b = formula_lhs(ps[1]);
      if (!a || !b) return fwd_err("premise lhs must be a formula leaf");
      return fwd_ok(Sequent{fl(Formula::make(Conn::Coprod, a, b)),
                            sn(Conn::Coprod, ps[0].rhs, ps[1].rhs)});
    }
    case RuleLabel::OverL: {
      // X ⊢ A and B ⊢ P give B/A ⊢ P ./. X.
      FormulaPtr a = formula_rhs(ps[0]), b = formula_lhs(ps[1]);
      if (!a || !b) return fwd_err("side formulas must be displayed as leaves");
      return fwd_ok(Sequent{fl(Formula::make(Conn::Over, b, a)),
                            sn(Conn::Over, ps[1].rhs, ps[0].lhs)});
    }
    case RuleLabel::UnderL: {
      // X ⊢ A and B ⊢ P give A\B ⊢ X .\. P.
      FormulaPtr a = formula_rhs(ps[0]), b = formula_lhs(ps[1]);
      if (!a || !b) return fwd_err("side formulas must be displayed as leaves");
      return fwd_ok(Sequent{fl(Formula::make(Conn::Under, a, b)),
                            sn(Conn::Under, ps[0].lhs, ps[1].rhs)});
    }
    case RuleLabel::RDiffR: {
      // X ⊢ B and A ⊢ P give X .(/). P ⊢ B⊘A.
      FormulaPtr b = formula_rhs(ps[0]), a = formula_lhs(ps[1]);
      if (!a || !b) return fwd_err("side formulas must be displayed as leaves");
      return fwd_ok(Sequent{sn(Conn::RDiff, ps[0].lhs, ps[1].rhs),
                            fl(Formula::make(Conn::RDiff, b, a))});
    }
    case RuleLabel::LDiffR: {
      // X ⊢ B and A ⊢ P give P .(\). X ⊢ A⦸B.
      FormulaPtr b = formula_rhs(ps[0]), a = formula_lhs(ps[1]);
      if (!a || !b) return fwd_err("side formulas must be displayed as leaves");
      return fwd_ok(Sequent{sn(Conn::LDiff, ps[1].rhs, ps[0].lhs),
                            fl(Formula::make(Conn::LDiff, a, b))});
    }
  }
  return fwd_err("unknown rule");
}

}  // namespace detail

/// Validates one rule instance; nullopt means the instance fits the schema.
/// Cut is accepted here (and only here) so external derivations can use it.
inline std::optional<std::string> apply_forward(RuleLabel rule,
                                                const std::vector<Sequent>& premises,
                                                const Sequent& conclusion) {
  if (static_cast<int>(premises.size()) != rule_arity(rule))
    return "rule " + std::string(rule_name(rule)) + " expects " +
           std::to_string(rule_arity(rule)) + " premises, got " +
           std::to_string(premises.size());
  if (rule == RuleLabel::Ax) {
    if (conclusion.lhs->is_leaf() && conclusion.rhs->is_leaf() &&
        conclusion.lhs->formula()->is_atom() &&
        conclusion.rhs->formula()->is_atom() &&
        conclusion.lhs->formula()->atom_name() ==
            conclusion.rhs->formula()->atom_name())
      return std::nullopt;
    return "Ax conclusion must be p |- p for an atom p";
  }
  detail::ForwardResult fr = detail::forward_conclusion(rule, premises);
  if (!fr.conclusion) return std::string(rule_name(rule)) + ": " + fr.error;
  if (!equal(*fr.conclusion, conclusion))
    return std::string(rule_name(rule)) + ": conclusion mismatch, expected `" +
           render(*fr.conclusion) + "` got `" + render(conclusion) + "`";
  return std::nullopt;
}

/// Conclusion of a display move applied downward from `premise`; the shape of
/// `premise` must fit the move. Used when assembling derivations bottom-up.
inline Sequent forward_display(RuleLabel rule, const Sequent& premise) {
  detail::ForwardResult fr = detail::forward_conclusion(rule, {premise});
  if (!fr.conclusion)
    throw std::logic_error("forward_display: " + fr.error);
  return *std::move(fr.conclusion);
}

/// The other direction of each reversible display move.
constexpr RuleLabel display_inverse(RuleLabel r) {
  switch (r) {
    case RuleLabel::ResOver: return RuleLabel::ResOverInv;
    case RuleLabel::ResOverInv: return RuleLabel::ResOver;
    case RuleLabel::ResUnder: return RuleLabel::ResUnderInv;
    case RuleLabel::ResUnderInv: return RuleLabel::ResUnder;
    case RuleLabel::DResRDiff: return RuleLabel::DResRDiffInv;
    case RuleLabel::DResRDiffInv: return RuleLabel::DResRDiff;
    case RuleLabel::DResLDiff: return RuleLabel::DResLDiffInv;
    case RuleLabel::DResLDiffInv: return RuleLabel::DResLDiff;
    default: throw std::logic_error("display_inverse: not a display move");
  }
}

}  // namespace lg
