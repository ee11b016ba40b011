#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zipkit/detail/fn.hpp"
#include "zipkit/formula.hpp"
#include "zipkit/unify.hpp"
#include "zipkit/union_find.hpp"

namespace zipkit {

// Goals under a shared substitution. Invariant: no goal mentions a
// metavariable the substitution maps, enforced by applying the substitution
// whenever it grows.
struct GoalState {
  std::vector<Sequent> goals;
  Substitution substitution;
};

inline bool operator==(const GoalState& a, const GoalState& b) {
  return a.goals == b.goals && a.substitution == b.substitution;
}
inline bool operator!=(const GoalState& a, const GoalState& b) { return !(a == b); }

inline std::string to_string(const GoalState& gs) {
  std::string out = "[";
  for (std::size_t i = 0; i < gs.goals.size(); ++i) {
    if (i) out += "; ";
    out += to_string(gs.goals[i]);
  }
  out += ']';
  if (!gs.substitution.empty()) {
    out += " {";
    bool first = true;
    for (const auto& [k, v] : gs.substitution) {
      if (!first) out += ", ";
      first = false;
      out += '?';
      out += k;
      out += " := ";
      out += to_string(v);
    }
    out += '}';
  }
  return out;
}

// Partition of goal indices into groups transitively linked by shared
// metavariables; metavariable-free goals are singletons. Groups are ordered by
// least member, members ascending.
inline std::vector<std::vector<std::size_t>> goal_clusters(const GoalState& gs) {
  const std::size_t n = gs.goals.size();
  UnionFind uf(n);
  std::map<std::string, std::size_t> owner;  // metavariable -> first goal seen with it
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& mv : metavars_of(gs.goals[i])) {
      auto [it, inserted] = owner.emplace(mv, i);
      if (!inserted) uf.unite(i, it->second);
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::map<std::size_t, std::size_t> block_of;  // root -> index into blocks
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = uf.find(i);
    auto [it, inserted] = block_of.emplace(root, blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  return blocks;
}

// A tactic maps a goal state and a goal index to the list of successor goal
// states; an empty list means the tactic does not apply.
struct Tactic {
  std::string name;
  detail::fn<std::vector<GoalState>(const GoalState&, std::size_t)> run;
};

enum class RuleKind { ConjI, DisjILeft, DisjIRight, ImpI, Assm, TrueI };

inline const char* to_string(RuleKind k) {
  switch (k) {
    case RuleKind::ConjI: return "conjI";
    case RuleKind::DisjILeft: return "disjI_left";
    case RuleKind::DisjIRight: return "disjI_right";
    case RuleKind::ImpI: return "impI";
    case RuleKind::Assm: return "assm";
    case RuleKind::TrueI: return "trueI";
  }
  return "conjI";
}

inline std::optional<RuleKind> rule_kind_from(const std::string& s) {
  if (s == "conjI") return RuleKind::ConjI;
  if (s == "disjI_left") return RuleKind::DisjILeft;
  if (s == "disjI_right") return RuleKind::DisjIRight;
  if (s == "impI") return RuleKind::ImpI;
  if (s == "assm") return RuleKind::Assm;
  if (s == "trueI") return RuleKind::TrueI;
  return std::nullopt;
}

namespace logic_detail {

inline GoalState replace_goal(const GoalState& gs, std::size_t idx, std::vector<Sequent> repl) {
  GoalState out;
  out.substitution = gs.substitution;
  out.goals.reserve(gs.goals.size() - 1 + repl.size());
  for (std::size_t i = 0; i < gs.goals.size(); ++i) {
    if (i == idx) {
      for (auto& g : repl) out.goals.push_back(std::move(g));
    } else {
      out.goals.push_back(gs.goals[i]);
    }
  }
  return out;
}

}  // namespace logic_detail

// Intro rules split or rewrite the indexed goal; the assumption rule yields
// one successor per hypothesis unifying with the conclusion, applying the
// extended substitution across the whole state and discharging the goal.
inline std::vector<GoalState> run_rule(RuleKind kind, const GoalState& gs, std::size_t idx) {
  if (idx >= gs.goals.size()) return {};
  const Sequent& goal = gs.goals[idx];
  const Formula& c = goal.conclusion;
  using logic_detail::replace_goal;
  switch (kind) {
    case RuleKind::ConjI: {
      if (c.kind() != FormulaKind::And) return {};
      Sequent l{goal.hypotheses, c.left()}, r{goal.hypotheses, c.right()};
      return {replace_goal(gs, idx, {std::move(l), std::move(r)})};
    }
    case RuleKind::DisjILeft: {
      if (c.kind() != FormulaKind::Or) return {};
      return {replace_goal(gs, idx, {Sequent{goal.hypotheses, c.left()}})};
    }
    case RuleKind::DisjIRight: {
      if (c.kind() != FormulaKind::Or) return {};
      return {replace_goal(gs, idx, {Sequent{goal.hypotheses, c.right()}})};
    }
    case RuleKind::ImpI: {
      if (c.kind() != FormulaKind::Imp) return {};
      Sequent g{goal.hypotheses, c.right()};
      g.hypotheses.push_back(c.left());
      return {replace_goal(gs, idx, {std::move(g)})};
    }
    case RuleKind::TrueI: {
      if (c.kind() != FormulaKind::Top) return {};
      return {replace_goal(gs, idx, {})};
    }
    case RuleKind::Assm: {
      std::vector<GoalState> out;
      for (const auto& h : goal.hypotheses) {
        auto s = unify(h, c, gs.substitution);
        if (!s) continue;
        GoalState succ = replace_goal(gs, idx, {});
        succ.substitution = std::move(*s);
        for (auto& g : succ.goals) g = apply_subst(succ.substitution, g);
        out.push_back(std::move(succ));
      }
      return out;
    }
  }
  return {};
}

// Whether creating an action node for this rule on this goal can pay off:
// shape of the conclusion for intro rules, existence of a unifying hypothesis
// for the assumption rule.
inline bool rule_applicable(RuleKind kind, const GoalState& gs, std::size_t idx) {
  if (idx >= gs.goals.size()) return false;
  const Sequent& goal = gs.goals[idx];
  switch (kind) {
    case RuleKind::ConjI: return goal.conclusion.kind() == FormulaKind::And;
    case RuleKind::DisjILeft:
    case RuleKind::DisjIRight: return goal.conclusion.kind() == FormulaKind::Or;
    case RuleKind::ImpI: return goal.conclusion.kind() == FormulaKind::Imp;
    case RuleKind::TrueI: return goal.conclusion.kind() == FormulaKind::Top;
    case RuleKind::Assm: {
      for (const auto& h : goal.hypotheses)
        if (unify(h, goal.conclusion, gs.substitution)) return true;
      return false;
    }
  }
  return false;
}

inline Tactic rule_tactic(RuleKind kind) {
  return Tactic{to_string(kind), [kind](const GoalState& gs, std::size_t idx) { return run_rule(kind, gs, idx); }};
}

}  // namespace zipkit
