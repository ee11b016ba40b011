#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zipkit/alt_zipper.hpp"
#include "zipkit/lens.hpp"
#include "zipkit/logic.hpp"
#include "zipkit/position.hpp"

namespace zipkit {

// Worth of an action node. Disabled is the bottom element: it compares below
// every enabled priority, so exhausted actions fall out of selection without
// being removed from the tree. Scores are compared, never computed with.
struct Priority {
  bool enabled = true;
  double score = 0.0;

  static Priority disabled() { return {false, 0.0}; }
};

inline bool operator==(const Priority& a, const Priority& b) {
  return a.enabled == b.enabled && (!a.enabled || a.score == b.score);
}
inline bool operator!=(const Priority& a, const Priority& b) { return !(a == b); }
inline bool operator<(const Priority& a, const Priority& b) {
  if (a.enabled != b.enabled) return !a.enabled;
  return a.enabled && a.score < b.score;
}

inline std::string to_string(const Priority& p) {
  return p.enabled ? std::to_string(p.score) : "disabled";
}

enum class SolvedState { Proved, Open, Failed };

inline const char* to_string(SolvedState s) {
  switch (s) {
    case SolvedState::Proved: return "proved";
    case SolvedState::Open: return "open";
    case SolvedState::Failed: return "failed";
  }
  return "open";
}

struct RuleTableEntry {
  RuleKind kind;
  double priority = 0.0;
};

// What the search is allowed to do: the rule table (in selection-tie order)
// and whether goals are grouped by shared metavariables or kept in one block.
struct SearchConfig {
  std::vector<RuleTableEntry> rules;
  bool clusters = true;
};

// State threaded through every effect of the search. `revision` counts tree
// edits; `scratch` belongs to callers and tests, the search never touches it.
struct SearchState {
  std::int64_t revision = 0;
  std::int64_t scratch = 0;
};

inline bool operator==(const SearchState& a, const SearchState& b) {
  return a.revision == b.revision && a.scratch == b.scratch;
}
inline bool operator!=(const SearchState& a, const SearchState& b) { return !(a == b); }

// The four-level search tree over goal states: a goal-state node owns goal
// clusters, a cluster owns candidate actions, an action owns its applications,
// and an application owns the successor goal states — closing the cycle. The
// M1..M4 slots extend the per-level contents without touching the machinery.
//
// Zippers come paired with a Position (the product of the tree's moves and the
// positional moves), so every focus knows the path that reaches it.
template <class M1 = Unit, class M2 = Unit, class M3 = Unit, class M4 = Unit>
struct ProofKit {
  using State = SearchState;
  static constexpr std::size_t level_count = 4;

  struct GsContent;
  struct ClusterContent;
  struct ActionContent;
  struct AppContent;

  using Tree = AltTree<State, GsContent, ClusterContent, ActionContent, AppContent>;

  template <std::size_t I>
  using TreeZipper = typename Tree::template Zipper<I>;
  template <std::size_t I>
  using TreeContainer = typename Tree::template EContainer<I>;
  template <std::size_t I>
  using Node = typename Tree::template Node<I>;
  template <std::size_t I>
  using Children = typename Tree::template Container<I>;

  template <std::size_t I>
  using Z = std::pair<TreeZipper<I>, Position>;
  template <std::size_t I>
  using Co = std::pair<TreeContainer<I>, Position>;
  using Co1 = Co<0>;

  using ActionArrow = Kleisli<State, Z<2>, Z<2>>;

  struct GsContent {
    GoalState state;
    SolvedState solved = SolvedState::Open;
    M1 more{};
  };

  // goal_indices index into the owning goal state's goal list; cluster_state
  // restricts that state to this cluster's goals (same substitution). Actions
  // below run against cluster_state and index into it.
  struct ClusterContent {
    std::vector<std::size_t> goal_indices;
    GoalState cluster_state;
    M2 more{};
  };

  struct ActionContent {
    ActionArrow act;
    std::size_t goal_index = 0;
    Priority priority{};
    std::string name;
    M3 more{};
  };

  struct AppContent {
    std::string result;
    bool promising = false;
    M4 more{};
  };

  // ----- construction -------------------------------------------------

  // Eager three-level skeleton for one goal state: its clusters and their
  // applicable actions, each action's children still empty. The tree only
  // grows below an action when that action is selected, so the recursive
  // structure stays finite at every moment.
  static Children<0> init_tree(GoalState s, const SearchConfig& cfg) {
    bool done = s.goals.empty();
    std::vector<std::vector<std::size_t>> blocks;
    if (cfg.clusters) {
      blocks = goal_clusters(s);
    } else if (!s.goals.empty()) {
      blocks.emplace_back();
      for (std::size_t i = 0; i < s.goals.size(); ++i) blocks.back().push_back(i);
    }

    Children<1> clusters;
    clusters.reserve(blocks.size());
    for (auto& block : blocks) {
      GoalState cs;
      cs.substitution = s.substitution;
      cs.goals.reserve(block.size());
      for (std::size_t gi : block) cs.goals.push_back(s.goals[gi]);

      Children<2> actions;
      for (std::size_t local = 0; local < cs.goals.size(); ++local) {
        for (const auto& entry : cfg.rules) {
          if (!rule_applicable(entry.kind, cs, local)) continue;
          ActionContent ac;
          ac.act = tac_action(rule_tactic(entry.kind), entry.kind == RuleKind::Assm, cfg);
          ac.goal_index = local;
          ac.priority = Priority{true, entry.priority};
          ac.name = to_string(entry.kind);
          actions.push_back(Node<2>{std::move(ac), Effect<State, Children<3>>::pure(Children<3>{})});
        }
      }

      ClusterContent cc{std::move(block), std::move(cs), M2{}};
      clusters.push_back(Node<1>{std::move(cc), Effect<State, Children<2>>::pure(std::move(actions))});
    }

    GsContent gc{std::move(s), done ? SolvedState::Proved : SolvedState::Open, M1{}};
    Children<0> out;
    out.push_back(Node<0>{std::move(gc), Effect<State, Children<1>>::pure(std::move(clusters))});
    return out;
  }

  static Co1 make_root(GoalState s, const SearchConfig& cfg) {
    return {Tree::root(init_tree(std::move(s), cfg)), Position{}};
  }

  // Product of the tree's moves with the positional moves: zipper and path
  // advance in lockstep, and a move succeeds only when both halves do.
  static auto moves() {
    return product(make_alternating<State, GsContent, ClusterContent, ActionContent, AppContent>(),
                   positional_moves<State, level_count>());
  }

  // ----- actions ------------------------------------------------------

  // First selection: run the tactic once against the owning cluster's state
  // (read through the parent suspension, no navigation), then hand the
  // successor list straight to the list behaviour so this same selection
  // already attaches the first application.
  static ActionArrow tac_action(Tactic t, bool promising, SearchConfig cfg) {
    return ActionArrow([t, promising, cfg](Z<2> z) -> Effect<State, Z<2>> {
      return Effect<State, Z<2>>([t, promising, cfg, z](State s) -> Outcome<Z<2>, State> {
        auto pr = z.first.context.parent.run(std::move(s));
        if (!succeeded(pr)) return failure_of(pr);
        const auto& pd = std::get<1>(pr).first;
        auto succs = t.run(pd.content.cluster_state, z.first.node.content.goal_index);
        return attach_next(z, succs, promising, cfg, std::get<1>(pr).second);
      });
    });
  }

  // Later selections: attach the head successor as a new application, re-arm
  // with the tail, disable once nothing is left to attach.
  static ActionArrow list_action(std::vector<GoalState> succs, bool promising, SearchConfig cfg) {
    return ActionArrow([succs, promising, cfg](Z<2> z) -> Effect<State, Z<2>> {
      return Effect<State, Z<2>>([succs, promising, cfg, z](State s) -> Outcome<Z<2>, State> {
        return attach_next(z, succs, promising, cfg, std::move(s));
      });
    });
  }

  // ----- solved labels ------------------------------------------------

  // Bottom-up relabelling. A goal state is proved when its goals are gone or
  // every cluster is proved; a cluster when some action is proved; an action
  // when some application is proved; an application when all successor goal
  // states are proved. Only goal-state nodes carry the label; Failed is never
  // assigned here. Returns the relabelled container and whether every root
  // goal state is proved. Child suspensions are pure, so forcing them with a
  // borrowed state is observation, not mutation.
  static std::pair<Children<0>, bool> mark_solved(Children<0> co, const State& s) {
    bool all = true;
    for (auto& n : co) {
      bool p = mark_gs(n, s);
      all = all && p;
    }
    return {std::move(co), all};
  }

 private:
  template <std::size_t I>
  static Children<Tree::succ(I)> force_children(const Node<I>& n, const State& s) {
    auto r = n.next.run(s);
    if (!succeeded(r)) return {};
    return std::get<1>(r).first;
  }

  static bool mark_gs(Node<0>& n, const State& s) {
    auto clusters = force_children<0>(n, s);
    bool all = true;
    for (auto& c : clusters) {
      bool p = mark_cluster(c, s);
      all = all && p;
    }
    bool proved = n.content.state.goals.empty() || (!clusters.empty() && all);
    n.next = Effect<State, Children<1>>::pure(std::move(clusters));
    n.content.solved = proved ? SolvedState::Proved : SolvedState::Open;
    return proved;
  }

  static bool mark_cluster(Node<1>& n, const State& s) {
    auto actions = force_children<1>(n, s);
    bool any = false;
    for (auto& a : actions) {
      bool p = mark_action(a, s);
      any = any || p;
    }
    n.next = Effect<State, Children<2>>::pure(std::move(actions));
    return any;
  }

  static bool mark_action(Node<2>& n, const State& s) {
    auto apps = force_children<2>(n, s);
    bool any = false;
    for (auto& a : apps) {
      bool p = mark_app(a, s);
      any = any || p;
    }
    n.next = Effect<State, Children<3>>::pure(std::move(apps));
    return any;
  }

  static bool mark_app(Node<3>& n, const State& s) {
    auto states = force_children<3>(n, s);
    bool all = true;
    for (auto& g : states) {
      bool p = mark_gs(g, s);
      all = all && p;
    }
    n.next = Effect<State, Children<0>>::pure(std::move(states));
    return all;
  }

  // Shared tail of both action behaviours. Edits the focused action node in
  // place — prepend the application, re-arm or disable — without moving the
  // focus, so the position component stays untouched. Every successful call
  // bumps the revision.
  static Outcome<Z<2>, State> attach_next(Z<2> z, const std::vector<GoalState>& succs, bool promising,
                                          const SearchConfig& cfg, State s) {
    auto& node = z.first.node;
    if (succs.empty()) {
      node.content.priority.enabled = false;  // keep the score: it records what the action was worth
      node.content.act = list_action({}, promising, cfg);
      s.revision += 1;
      return std::pair<Z<2>, State>{std::move(z), std::move(s)};
    }

    GoalState head = succs.front();
    std::vector<GoalState> rest(succs.begin() + 1, succs.end());

    auto forced = node.next.run(std::move(s));
    if (!succeeded(forced)) return failure_of(forced);
    Children<3> apps = std::move(std::get<1>(forced).first);
    s = std::move(std::get<1>(forced).second);

    Node<3> app{AppContent{to_string(head), promising, M4{}},
                Effect<State, Children<0>>::pure(init_tree(head, cfg))};
    apps.insert(apps.begin(), std::move(app));

    node.next = Effect<State, Children<3>>::pure(std::move(apps));
    bool last = rest.empty();
    node.content.act = list_action(std::move(rest), promising, cfg);
    if (last) node.content.priority.enabled = false;
    s.revision += 1;
    return std::pair<Z<2>, State>{std::move(z), std::move(s)};
  }

 public:
  // ----- lenses -------------------------------------------------------

  template <std::size_t I>
  static Lens<State, Z<I>, Node<I>> node_lens() {
    return lens_compose(pair_first<State, TreeZipper<I>, Position>(),
                        field_lens<State, TreeZipper<I>, Node<I>>(&TreeZipper<I>::node));
  }

  template <std::size_t I>
  static auto content_lens() {
    using C = typename Tree::template Content<I>;
    return lens_compose(node_lens<I>(), field_lens<State, Node<I>, C>(&Node<I>::content));
  }

  // The focused node's child suspension; modifying through this is how a
  // subtree is grafted without leaving the node.
  template <std::size_t I>
  static Lens<State, Z<I>, Effect<State, Children<Tree::succ(I)>>> next_lens() {
    using E = Effect<State, Children<Tree::succ(I)>>;
    return lens_compose(node_lens<I>(), field_lens<State, Node<I>, E>(&Node<I>::next));
  }

  static Lens<State, Z<0>, GoalState> goal_state_lens() {
    return lens_compose(content_lens<0>(), field_lens<State, GsContent, GoalState>(&GsContent::state));
  }

  static Lens<State, Z<0>, SolvedState> solved_lens() {
    return lens_compose(content_lens<0>(), field_lens<State, GsContent, SolvedState>(&GsContent::solved));
  }

  static Lens<State, Z<1>, GoalState> cluster_state_lens() {
    return lens_compose(content_lens<1>(),
                        field_lens<State, ClusterContent, GoalState>(&ClusterContent::cluster_state));
  }

  static Lens<State, Z<2>, Priority> priority_lens() {
    return lens_compose(content_lens<2>(), field_lens<State, ActionContent, Priority>(&ActionContent::priority));
  }

  static Lens<State, Z<2>, ActionArrow> action_lens() {
    return lens_compose(content_lens<2>(), field_lens<State, ActionContent, ActionArrow>(&ActionContent::act));
  }

  static Lens<State, Z<2>, std::size_t> goal_index_lens() {
    return lens_compose(content_lens<2>(), field_lens<State, ActionContent, std::size_t>(&ActionContent::goal_index));
  }

  static Lens<State, Z<2>, std::string> name_lens() {
    return lens_compose(content_lens<2>(), field_lens<State, ActionContent, std::string>(&ActionContent::name));
  }

  static Lens<State, Z<3>, bool> promising_lens() {
    return lens_compose(content_lens<3>(), field_lens<State, AppContent, bool>(&AppContent::promising));
  }
};

using DefaultKit = ProofKit<>;

}  // namespace zipkit
