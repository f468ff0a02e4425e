#pragma once

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "lg/ast.hpp"
#include "lg/render.hpp"
#include "lg/rules.hpp"

namespace lg {

/// All sequents reachable from `s` through reversible display moves, in BFS
/// discovery order with `s` first. The closure is finite; `cap` (0 = none) is
/// a tripwire against engine bugs, not an expected limit.
inline std::vector<Sequent> display_closure(const Sequent& s,
                                            std::size_t cap = 0) {
  std::vector<Sequent> members{s};
  std::unordered_set<std::string> seen{render(s)};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const RuleInstance& inst : backward_display_steps(members[i])) {
      const Sequent& next = inst.premises[0];
      if (seen.insert(render(next)).second) {
        members.push_back(next);
        if (cap != 0 && members.size() > cap)
          throw std::runtime_error("display closure exceeded cap of " +
                                   std::to_string(cap));
      }
    }
  }
  return members;
}

/// Closure annotated with BFS tree edges: member i ≠ 0 was discovered from
/// members[parent[i]] by the display move via[i]; depth[i] is the move count
/// from the root. Lets callers materialize the display chain to any member.
struct DisplayClosurePaths {
  std::vector<Sequent> members;
  std::vector<int> parent;
  std::vector<RuleLabel> via;
  std::vector<int> depth;
};

inline DisplayClosurePaths display_closure_paths(const Sequent& s,
                                                 std::size_t cap = 0) {
  DisplayClosurePaths dc;
  dc.members.push_back(s);
  dc.parent.push_back(-1);
  dc.via.push_back(RuleLabel::Ax);  // unused sentinel for the root
  dc.depth.push_back(0);
  std::unordered_set<std::string> seen{render(s)};
  for (std::size_t i = 0; i < dc.members.size(); ++i) {
    for (const RuleInstance& inst : backward_display_steps(dc.members[i])) {
      const Sequent& next = inst.premises[0];
      if (seen.insert(render(next)).second) {
        dc.members.push_back(next);
        dc.parent.push_back(static_cast<int>(i));
        dc.via.push_back(inst.rule);
        dc.depth.push_back(dc.depth[i] + 1);
        if (cap != 0 && dc.members.size() > cap)
          throw std::runtime_error("display closure exceeded cap of " +
                                   std::to_string(cap));
      }
    }
  }
  return dc;
}

/// Class representative: the member whose rendering is lexicographically
/// least. Stable across all members of one display-equivalence class.
inline Sequent canonical(const Sequent& s) {
  std::vector<Sequent> members = display_closure(s);
  const Sequent* best = &members[0];
  std::string best_key = render(members[0]);
  for (std::size_t i = 1; i < members.size(); ++i) {
    std::string key = render(members[i]);
    if (key < best_key) {
      best_key = std::move(key);
      best = &members[i];
    }
  }
  return *best;
}

inline std::string canonical_key(const Sequent& s) {
  std::vector<Sequent> members = display_closure(s);
  std::string best = render(members[0]);
  for (std::size_t i = 1; i < members.size(); ++i) {
    std::string key = render(members[i]);
    if (key < best) best = std::move(key);
  }
  return best;
}

}  // namespace lg
