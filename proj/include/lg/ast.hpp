#pragma once

#include <cassert>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lg {

/// The six binary connectives. The same tags name the formula connectives
/// (⊗ / \ ⊕ ⊘ ⦸) and their structural counterparts; whether an occurrence is
/// structural is decided by the node that carries it (Structure vs Formula).
enum class Conn : unsigned char { Prod, Over, Under, Coprod, RDiff, LDiff };

inline constexpr Conn kAllConns[] = {Conn::Prod,   Conn::Over,  Conn::Under,
                                     Conn::Coprod, Conn::RDiff, Conn::LDiff};

/// Product family {⊗, /, \}; the complement is the coproduct family {⊕, ⊘, ⦸}.
constexpr bool product_family(Conn c) {
  return c == Conn::Prod || c == Conn::Over || c == Conn::Under;
}

enum class Polarity : unsigned char { Input, Output };

constexpr Polarity flip(Polarity p) {
  return p == Polarity::Input ? Polarity::Output : Polarity::Input;
}

/// Polarity of a structural node: {s⊗, s⊘, s⦸} build input structures,
/// {s⊕, s/, s\} output structures.
constexpr Polarity node_polarity(Conn op) {
  switch (op) {
    case Conn::Prod:
    case Conn::RDiff:
    case Conn::LDiff:
      return Polarity::Input;
    default:
      return Polarity::Output;
  }
}

/// Polarity of the two child slots given the parent's polarity. One table
/// serves structures and formula subterms alike: ⊗ and ⊕ preserve both sides,
/// / and ⊘ flip the right operand, \ and ⦸ flip the left.
constexpr Polarity child_polarity(Conn op, Polarity parent, bool right_child) {
  switch (op) {
    case Conn::Prod:
    case Conn::Coprod:
      return parent;
    case Conn::Over:
    case Conn::RDiff:
      return right_child ? flip(parent) : parent;
    case Conn::Under:
    case Conn::LDiff:
      return right_child ? parent : flip(parent);
  }
  return parent;  // unreachable
}

inline bool valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name.substr(1)) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula tree: an atom or a binary application. Subtrees are
/// shared freely; all operations treat formulas as values.
class Formula {
 public:
  static FormulaPtr atom(std::string name) {
    assert(valid_atom_name(name));
    return FormulaPtr(new Formula(std::move(name)));
  }
  static FormulaPtr make(Conn op, FormulaPtr left, FormulaPtr right) {
    assert(left && right);
    return FormulaPtr(new Formula(op, std::move(left), std::move(right)));
  }

  bool is_atom() const { return std::holds_alternative<std::string>(node_); }
  const std::string& atom_name() const { return std::get<std::string>(node_); }
  Conn op() const { return std::get<App>(node_).op; }
  const FormulaPtr& left() const { return std::get<App>(node_).left; }
  const FormulaPtr& right() const { return std::get<App>(node_).right; }

 private:
  struct App {
    Conn op;
    FormulaPtr left, right;
  };
  explicit Formula(std::string name) : node_(std::move(name)) {}
  Formula(Conn op, FormulaPtr l, FormulaPtr r)
      : node_(App{op, std::move(l), std::move(r)}) {}
  std::variant<std::string, App> node_;
};

inline bool equal(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  if (a.is_atom() != b.is_atom()) return false;
  if (a.is_atom()) return a.atom_name() == b.atom_name();
  return a.op() == b.op() && equal(*a.left(), *b.left()) &&
         equal(*a.right(), *b.right());
}
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  return equal(*a, *b);
}

class Structure;
using StructurePtr = std::shared_ptr<const Structure>;

/// Immutable structural tree. A leaf holds a formula; an inner node holds one
/// of the six structural connectives. Polarity is not stored: it is a property
/// of the position, checked by validate().
class Structure {
 public:
  static StructurePtr leaf(FormulaPtr f) {
    assert(f);
    return StructurePtr(new Structure(std::move(f)));
  }
  static StructurePtr make(Conn op, StructurePtr left, StructurePtr right) {
    assert(left && right);
    return StructurePtr(new Structure(op, std::move(left), std::move(right)));
  }

  bool is_leaf() const { return std::holds_alternative<FormulaPtr>(node_); }
  const FormulaPtr& formula() const { return std::get<FormulaPtr>(node_); }
  Conn op() const { return std::get<App>(node_).op; }
  const StructurePtr& left() const { return std::get<App>(node_).left; }
  const StructurePtr& right() const { return std::get<App>(node_).right; }

 private:
  struct App {
    Conn op;
    StructurePtr left, right;
  };
  explicit Structure(FormulaPtr f) : node_(std::move(f)) {}
  Structure(Conn op, StructurePtr l, StructurePtr r)
      : node_(App{op, std::move(l), std::move(r)}) {}
  std::variant<FormulaPtr, App> node_;
};

inline bool equal(const Structure& a, const Structure& b) {
  if (&a == &b) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return equal(a.formula(), b.formula());
  return a.op() == b.op() && equal(*a.left(), *b.left()) &&
         equal(*a.right(), *b.right());
}
inline bool equal(const StructurePtr& a, const StructurePtr& b) {
  return equal(*a, *b);
}

struct PolarityError {
  std::string path;  // "", "0", "0.1", ... premise-style child indices
  std::string message;
};

/// Checks that every node of `s` sits at a position of the polarity the
/// structure grammar assigns to it, assuming the root is at `expected`.
inline std::optional<PolarityError> validate(const Structure& s,
                                             Polarity expected,
                                             const std::string& path = "") {
  if (s.is_leaf()) return std::nullopt;  // a formula leaf fits either polarity
  if (node_polarity(s.op()) != expected) {
    const bool want_input = expected == Polarity::Input;
    return PolarityError{
        path, std::string(want_input ? "output" : "input") +
                  " structural connective in " +
                  (want_input ? "input" : "output") + " position"};
  }
  if (auto e = validate(*s.left(), child_polarity(s.op(), expected, false),
                        path.empty() ? "0" : path + ".0"))
    return e;
  return validate(*s.right(), child_polarity(s.op(), expected, true),
                  path.empty() ? "1" : path + ".1");
}

/// A sequent lhs ⊢ rhs; lhs must validate as input, rhs as output.
struct Sequent {
  StructurePtr lhs, rhs;
};

inline bool equal(const Sequent& a, const Sequent& b) {
  return equal(a.lhs, b.lhs) && equal(a.rhs, b.rhs);
}

inline std::optional<PolarityError> validate(const Sequent& s) {
  if (auto e = validate(*s.lhs, Polarity::Input)) {
    e->path = e->path.empty() ? "lhs" : "lhs." + e->path;
    return e;
  }
  if (auto e = validate(*s.rhs, Polarity::Output)) {
    e->path = e->path.empty() ? "rhs" : "rhs." + e->path;
    return e;
  }
  return std::nullopt;
}

/// Connective counts of a sequent (or of one tree). inputFamily/outputFamily
/// split the formula connectives by family; structural connectives are tallied
/// separately.
struct ConnectiveCensus {
  long formulaTotal = 0;
  long structuralTotal = 0;
  long inputFamily = 0;
  long outputFamily = 0;
};

inline void census_into(const Formula& f, ConnectiveCensus& c) {
  if (f.is_atom()) return;
  ++c.formulaTotal;
  ++(product_family(f.op()) ? c.inputFamily : c.outputFamily);
  census_into(*f.left(), c);
  census_into(*f.right(), c);
}

inline void census_into(const Structure& s, ConnectiveCensus& c) {
  if (s.is_leaf()) {
    census_into(*s.formula(), c);
    return;
  }
  ++c.structuralTotal;
  census_into(*s.left(), c);
  census_into(*s.right(), c);
}

inline ConnectiveCensus census(const Formula& f) {
  ConnectiveCensus c;
  census_into(f, c);
  return c;
}
inline ConnectiveCensus census(const Structure& s) {
  ConnectiveCensus c;
  census_into(s, c);
  return c;
}
inline ConnectiveCensus census(const Sequent& s) {
  ConnectiveCensus c;
  census_into(*s.lhs, c);
  census_into(*s.rhs, c);
  return c;
}

/// |φ| of the length lemmas: formula plus structural connectives.
inline long sequent_length(const Sequent& s) {
  const ConnectiveCensus c = census(s);
  return c.formulaTotal + c.structuralTotal;
}

}  // namespace lg
