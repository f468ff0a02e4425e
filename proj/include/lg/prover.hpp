#pragma once

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lg/ast.hpp"
#include "lg/derivation.hpp"
#include "lg/display.hpp"
#include "lg/render.hpp"
#include "lg/rules.hpp"

namespace lg {

inline constexpr long kDefaultNodeMax = 2'000'000;

struct Budgets {
  long grishinMax = 0;
  long depthMax = 0;
  long nodeMax = kDefaultNodeMax;

  /// grishinMax = ⌈¼L²⌉ and depthMax = 2L² + ⌈½L³⌉ for L = sequent_length.
  static Budgets defaults_for(const Sequent& goal) {
    const long L = sequent_length(goal);
    return Budgets{(L * L + 3) / 4, 2 * L * L + (L * L * L + 1) / 2,
                   kDefaultNodeMax};
  }
};

struct SearchStats {
  long classesExplored = 0;
  long memoHits = 0;
};

struct ProveOutcome {
  enum class Kind { Proved, Unprovable, BudgetExceeded };
  Kind kind = Kind::Unprovable;
  std::optional<Derivation> derivation;  // present iff Proved
  std::string exceeded;                  // "grishin" | "depth" | "node"
  SearchStats stats;
};

struct ProverOptions {
  bool use_memo = true;
  bool balance_prune = true;
};

namespace detail {

/// Per-atom (input occurrences − output occurrences). Every rule of the
/// calculus preserves these differences, and Ax leaves are balanced, so an
/// unbalanced sequent has no derivation at all.
inline void balance_into(const Formula& f, Polarity pol,
                         std::map<std::string, long>& acc) {
  if (f.is_atom()) {
    acc[f.atom_name()] += pol == Polarity::Input ? 1 : -1;
    return;
  }
  balance_into(*f.left(), child_polarity(f.op(), pol, false), acc);
  balance_into(*f.right(), child_polarity(f.op(), pol, true), acc);
}

inline void balance_into(const Structure& s, Polarity pol,
                         std::map<std::string, long>& acc) {
  if (s.is_leaf()) {
    balance_into(*s.formula(), pol, acc);
    return;
  }
  balance_into(*s.left(), child_polarity(s.op(), pol, false), acc);
  balance_into(*s.right(), child_polarity(s.op(), pol, true), acc);
}

inline bool balanced(const Sequent& s) {
  std::map<std::string, long> acc;
  balance_into(*s.lhs, Polarity::Input, acc);
  balance_into(*s.rhs, Polarity::Output, acc);
  for (const auto& [_, diff] : acc)
    if (diff != 0) return false;
  return true;
}

class Searcher {
  static constexpr int kNoTouch = std::numeric_limits<int>::max();

 public:
  Searcher(const Budgets& budgets, const ProverOptions& opts)
      : budgets_(budgets), opts_(opts) {}

  struct SubResult {
    bool proved = false;
    bool floor = false;  // a Grishin step was skipped for lack of budget
    bool hard = false;   // the depth or node tripwire fired below this node
    // Smallest search-stack index of an ancestor this failure leaned on via
    // cycle pruning; failures touching a strict ancestor are context-bound
    // and must not enter the memo table.
    int touch = kNoTouch;
    long grishin_spent = 0;
    Derivation deriv;
  };

  SubResult solve(const Sequent& goal, long grishin_budget, long depth) {
    SubResult res;
    if (depth > budgets_.depthMax) {
      trip("depth");
      res.hard = true;
      return res;
    }
    if (++stats_.classesExplored > budgets_.nodeMax) {
      trip("node");
      aborted_ = true;
      res.hard = true;
      return res;
    }
    if (opts_.balance_prune && !balanced(goal)) return res;  // final failure

    DisplayClosurePaths dc = display_closure_paths(goal);
    std::string canon = render(dc.members[0]);
    for (std::size_t i = 1; i < dc.members.size(); ++i) {
      std::string key = render(dc.members[i]);
      if (key < canon) canon = std::move(key);
    }

    if (opts_.use_memo) {
      auto it = memo_.find(canon);
      if (it != memo_.end() &&
          (it->second.infinite || grishin_budget <= it->second.failed_at)) {
        ++stats_.memoHits;
        if (!it->second.infinite) {
          res.floor = true;
          floor_hit_ = true;
        }
        return res;
      }
    }
    if (auto it = path_.find(canon); it != path_.end()) {
      res.touch = it->second;  // cycle: fails here, leaning on an ancestor
      return res;
    }
    const int my_index = static_cast<int>(path_.size());
    path_.emplace(canon, my_index);

    bool proved = false;
    for (std::size_t mi = 0; mi < dc.members.size() && !proved; ++mi) {
      const Sequent& member = dc.members[mi];
      for (const RuleInstance& inst : backward_steps(member)) {
        const RuleClass rc = rule_class(inst.rule);
        if (rc == RuleClass::Display) continue;  // already in the closure
        long cost = 0;
        if (rc == RuleClass::Grishin) {
          if (grishin_budget < 1) {
            res.floor = true;
            floor_hit_ = true;
            continue;
          }
          cost = 1;
        }
        std::vector<Derivation> kids;
        long spent = cost;
        bool fits = true;
        for (const Sequent& premise : inst.premises) {
          // Display moves between goal and member occupy depth too.
          SubResult child =
              solve(premise, grishin_budget - spent, depth + dc.depth[mi] + 1);
          if (aborted_) {
            path_.erase(canon);
            res.hard = true;
            return res;
          }
          if (!child.proved) {
            fits = false;
            res.floor = res.floor || child.floor;
            res.hard = res.hard || child.hard;
            res.touch = std::min(res.touch, child.touch);
            break;
          }
          spent += child.grishin_spent;
          kids.push_back(std::move(child.deriv));
        }
        if (!fits) continue;
        Derivation node{member, inst.rule, std::move(kids)};
        res.deriv = wrap_display_chain(dc, mi, std::move(node));
        res.grishin_spent = spent;
        proved = true;
        break;
      }
    }
    path_.erase(canon);
    if (proved) {
      res.proved = true;
      res.floor = false;
      res.hard = false;
      res.touch = kNoTouch;
      return res;
    }
    if (opts_.use_memo && !res.hard && res.touch >= my_index) {
      Failure& f = memo_[canon];
      if (!res.floor)
        f.infinite = true;
      else if (!f.infinite && grishin_budget > f.failed_at)
        f.failed_at = grishin_budget;
    }
    // Cycles resolved at or below this node are invisible to ancestors.
    if (res.touch >= my_index) res.touch = kNoTouch;
    return res;
  }

  const SearchStats& stats() const { return stats_; }
  bool tripped() const { return !first_trip_.empty() || floor_hit_; }
  std::string verdict_trip() const {
    if (!first_trip_.empty()) return first_trip_;
    return floor_hit_ ? "grishin" : "";
  }

 private:
  struct Failure {
    long failed_at = -1;
    bool infinite = false;
  };

  void trip(const char* which) {
    if (first_trip_.empty()) first_trip_ = which;
  }

  static Derivation wrap_display_chain(const DisplayClosurePaths& dc,
                                       std::size_t mi, Derivation inner) {
    int at = static_cast<int>(mi);
    while (at != 0) {
      const int par = dc.parent[at];
      inner = Derivation{dc.members[par], dc.via[at], {std::move(inner)}};
      at = par;
    }
    return inner;
  }

  Budgets budgets_;
  ProverOptions opts_;
  SearchStats stats_;
  std::unordered_map<std::string, Failure> memo_;
  std::unordered_map<std::string, int> path_;
  std::string first_trip_;
  bool floor_hit_ = false;
  bool aborted_ = false;
};

}  // namespace detail

/// Backward Cut-free proof search over display-equivalence classes.
/// Deterministic; Proved results are re-validated before being returned.
inline ProveOutcome prove(const Sequent& goal, const Budgets& budgets,
                          const ProverOptions& opts = {}) {
  if (auto pe = validate(goal))
    throw std::invalid_argument("prove: ill-formed goal at " + pe->path + ": " +
                                pe->message);
  detail::Searcher searcher(budgets, opts);
  detail::Searcher::SubResult res =
      searcher.solve(goal, budgets.grishinMax, 0);
  ProveOutcome out;
  out.stats = searcher.stats();
  if (res.proved) {
    CheckReport report = check(res.deriv, /*allow_cut=*/false);
    if (!report.ok)
      throw std::logic_error("prove: search returned an invalid derivation: " +
                             *report.firstError);
    if (report.grishinCount > budgets.grishinMax)
      throw std::logic_error("prove: derivation exceeds the Grishin budget");
    if (!equal(res.deriv.conclusion, goal))
      throw std::logic_error("prove: derivation concludes the wrong sequent");
    out.kind = ProveOutcome::Kind::Proved;
    out.derivation = std::move(res.deriv);
    return out;
  }
  if (searcher.tripped()) {
    out.kind = ProveOutcome::Kind::BudgetExceeded;
    out.exceeded = searcher.verdict_trip();
    return out;
  }
  out.kind = ProveOutcome::Kind::Unprovable;
  return out;
}

inline ProveOutcome prove(const Sequent& goal) {
  return prove(goal, Budgets::defaults_for(goal));
}

struct StatsReport {
  Budgets budgets;
  ConnectiveCensus counts;
  long length = 0;
};

inline StatsReport stats(const Sequent& goal) {
  StatsReport r;
  r.budgets = Budgets::defaults_for(goal);
  r.counts = census(goal);
  r.length = sequent_length(goal);
  return r;
}

}  // namespace lg
