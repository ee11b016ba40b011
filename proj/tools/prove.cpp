#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zipkit/dump.hpp"
#include "zipkit/engine.hpp"
#include "zipkit/goal_parser.hpp"
#include "zipkit/rules.hpp"

// Exit codes: 0 proved, 1 stuck, 2 budget exhausted, 3 usage or input errors.
int main(int argc, char** argv) {
  CLI::App app{"Best-first sequent prover"};
  std::string goal_text, rules_path, dump_tree, dump_dot, clusters = "on";
  std::size_t max_steps = 1000;
  bool trace = false;

  app.add_option("--goal", goal_text, "Goal sequent, e.g. \"A |- (B -> C) | (A & A)\"")->required();
  app.add_option("--rules", rules_path, "Rule table JSON file")->required();
  app.add_option("--max-steps", max_steps, "Selection budget")->capture_default_str();
  app.add_option("--dump-tree", dump_tree, "Write the final search tree as JSON to this file");
  app.add_option("--dump-dot", dump_dot, "Write the final search tree as Graphviz DOT to this file");
  app.add_flag("--trace", trace, "Print one line per selection");
  app.add_option("--clusters", clusters, "Group goals by shared metavariables: on|off")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  zipkit::SearchConfig cfg;
  cfg.clusters = clusters == "on";
  try {
    cfg.rules = zipkit::load_rules(rules_path);
  } catch (const zipkit::RulesError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }

  zipkit::GoalState gs;
  try {
    gs.goals.push_back(zipkit::parse_goal(goal_text));
  } catch (const zipkit::ParseError& e) {
    std::cerr << "goal: " << e.what() << "\n";
    return 3;
  }

  using Kit = zipkit::DefaultKit;
  zipkit::Engine<Kit> engine;
  auto result = engine.best_first(Kit::make_root(gs, cfg), zipkit::SearchState{}, max_steps);

  std::cout << "status: " << zipkit::to_string(result.status) << "\n";
  std::cout << "steps: " << result.steps << "\n";
  std::cout << "revision: " << result.state.revision << "\n";
  if (trace) {
    for (const auto& t : result.trace) {
      std::cout << "step " << t.step << ": " << t.action << " @" << t.goal_index << " score=" << t.score
                << " node=" << t.node_id << " pos=" << zipkit::to_string(t.position)
                << (t.applied ? "" : " (failed, disabled)") << "\n";
    }
  }

  if (!dump_tree.empty() || !dump_dot.empty()) {
    auto dump = zipkit::build_dump<Kit>(result.tree, result.state, result.status, result.trace);
    if (!dump_tree.empty()) {
      std::ofstream out(dump_tree, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << dump_tree << "\n";
        return 3;
      }
      out << zipkit::export_json(dump);
    }
    if (!dump_dot.empty()) {
      std::ofstream out(dump_dot, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << dump_dot << "\n";
        return 3;
      }
      out << zipkit::export_dot(dump);
    }
  }

  switch (result.status) {
    case zipkit::Status::Proved: return 0;
    case zipkit::Status::Stuck: return 1;
    case zipkit::Status::BudgetExhausted: return 2;
  }
  return 1;
}
