// End-to-end prover pipeline: parse a sequent, search best-first, print the
// selection trace and the proved part of the final tree.
#include <cstdio>

#include "zipkit/dump.hpp"
#include "zipkit/engine.hpp"
#include "zipkit/goal_parser.hpp"

using namespace zipkit;

int main() {
  SearchConfig cfg;
  cfg.rules = {{RuleKind::DisjILeft, 0.8}, {RuleKind::DisjIRight, 0.8}, {RuleKind::ImpI, 0.6},
               {RuleKind::ConjI, 0.5},     {RuleKind::Assm, 0.3}};

  GoalState gs;
  gs.goals.push_back(parse_goal("A |- (B -> C) | (A & A)"));
  std::printf("goal: %s\n\n", to_string(gs).c_str());

  using Kit = DefaultKit;
  Engine<Kit> engine;
  auto result = engine.best_first(Kit::make_root(gs, cfg), SearchState{}, 100);

  std::printf("status: %s after %zu selections\n", to_string(result.status), result.steps);
  for (const auto& t : result.trace)
    std::printf("  %zu. %-12s goal %zu  score %.2f  node %s\n", t.step, t.action.c_str(), t.goal_index,
                t.score, t.node_id.c_str());

  auto dump = build_dump<Kit>(result.tree, result.state, result.status, result.trace);
  std::printf("\nproved nodes:\n");
  for (const auto& n : dump.nodes)
    if (n.proved) std::printf("  [%s] %-11s %s\n", n.id.c_str(), n.kind.c_str(), n.label.c_str());
  return 0;
}
