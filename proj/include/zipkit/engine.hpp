#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zipkit/prooftree.hpp"

namespace zipkit {

enum class Status { Proved, Stuck, BudgetExhausted };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::Stuck: return "stuck";
    case Status::BudgetExhausted: return "budget_exhausted";
  }
  return "stuck";
}

// One selection made by the best-first loop. `node_id` is the stable id of
// the selected action (right-based sibling indices, root first), `position`
// the path that reached it at selection time, `revision` the tree revision
// after the step took effect.
struct TraceStep {
  std::size_t step = 0;
  std::string action;
  std::size_t goal_index = 0;
  double score = 0.0;
  std::string node_id;
  Position position;
  bool applied = true;
  std::int64_t revision = 0;
};

// Best-first search driver over a proof kit's tree. Enumeration is composite
// postorder: all four node kinds interleaved, children before their node,
// siblings left to right. Selection scans that order for the enabled action
// of highest priority, first visit winning ties.
template <class Kit>
class Engine {
 public:
  using State = typename Kit::State;
  template <std::size_t I>
  using Z = typename Kit::template Z<I>;
  using Co1 = typename Kit::Co1;
  using VariantZ = std::variant<Z<0>, Z<1>, Z<2>, Z<3>>;
  static constexpr std::size_t levels = Kit::level_count;

  struct Result {
    Status status = Status::Stuck;
    std::size_t steps = 0;
    Co1 tree;
    State state;
    std::vector<TraceStep> trace;
  };

  Engine() : mv_(Kit::moves()) {}

  // ----- composite postorder enumeration -------------------------------

  // Child suspensions are pure, so walking never edits the state; callers
  // lend it read-only and the walk runs on copies.
  std::optional<VariantZ> enum_first(const Co1& root, const State& s) const {
    auto r = std::get<0>(mv_.levels).zip(root).run(s);
    if (!succeeded(r)) return std::nullopt;
    return descend_at<0>(std::move(std::get<1>(r).first), s);
  }

  std::optional<VariantZ> enum_next(VariantZ v, const State& s) const {
    switch (v.index()) {
      case 0: return next_at<0>(std::move(std::get<0>(v)), s);
      case 1: return next_at<1>(std::move(std::get<1>(v)), s);
      case 2: return next_at<2>(std::move(std::get<2>(v)), s);
      default: return next_at<3>(std::move(std::get<3>(v)), s);
    }
  }

  // Highest-priority enabled action anywhere in the tree, or nothing when the
  // search is stuck. Strictly-greater comparison keeps the first visit on tie.
  std::optional<Z<2>> max_action(const Co1& root, const State& s) const {
    std::optional<Z<2>> best;
    for (auto cur = enum_first(root, s); cur; cur = enum_next(std::move(*cur), s)) {
      if (auto* az = std::get_if<2>(&*cur)) {
        const Priority& p = az->first.node.content.priority;
        if (!p.enabled) continue;
        if (!best || best->first.node.content.priority < p) best = *az;
      }
    }
    return best;
  }

  // ----- applying and surfacing -----------------------------------------

  Outcome<Z<2>, State> apply_action(Z<2> z, State s) const {
    if (!z.first.node.content.priority.enabled)
      return Failure{FailureCode::ActionDisabled, "selected action is disabled"};
    auto act = z.first.node.content.act;
    return act(std::move(z)).run(std::move(s));
  }

  // From an action focus back to the root container, committing every edit on
  // the way: full four-level ascents as long as an application lies above,
  // then the final cluster and goal-state ascents and the root unzip.
  Kleisli<State, Z<2>, Co1> to_top() const {
    auto cycle = mv_.template up_between<2>()
                     .then(mv_.template up_between<1>())
                     .then(mv_.template up_between<0>())
                     .then(mv_.template up_between<3>());
    return repeat(cycle)
        .then(mv_.template up_between<2>())
        .then(mv_.template up_between<1>())
        .then(std::get<0>(mv_.levels).unzip);
  }

  // Right-based sibling-index path from the root to the focus. New
  // applications are prepended, so distances from the right end never move
  // and these ids survive later growth of the tree.
  template <std::size_t I>
  std::string stable_id(const Z<I>& z, const State& s) const {
    std::vector<std::size_t> acc;
    collect_ids<I>(z, s, acc);
    std::reverse(acc.begin(), acc.end());
    std::string out;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(acc[i]);
    }
    return out;
  }

  // ----- the search loop -------------------------------------------------

  // Each round: relabel solved nodes, stop on a proved root, stop when the
  // budget is spent, otherwise select and run the best action and surface.
  // A failing action costs its selection, is rolled back in full (failure
  // carries no state), and is disabled so it cannot be picked again.
  Result best_first(Co1 root, State s, std::size_t max_steps) const {
    Result out;
    for (;;) {
      auto marked = Kit::mark_solved(std::move(root.first.container), s);
      root.first.container = std::move(marked.first);
      if (marked.second) {
        out.status = Status::Proved;
        break;
      }
      if (out.steps >= max_steps) {
        out.status = Status::BudgetExhausted;
        break;
      }
      auto best = max_action(root, s);
      if (!best) {
        out.status = Status::Stuck;
        break;
      }

      TraceStep ts;
      ts.step = out.steps + 1;
      ts.action = best->first.node.content.name;
      ts.goal_index = best->first.node.content.goal_index;
      ts.score = best->first.node.content.priority.score;
      ts.node_id = stable_id<2>(*best, s);
      ts.position = best->second;

      auto surfaced = [this](Z<2> z, State st) -> Outcome<Co1, State> {
        auto a = apply_action(std::move(z), std::move(st));
        if (!succeeded(a)) return failure_of(a);
        return to_top()(std::move(std::get<1>(a).first)).run(std::move(std::get<1>(a).second));
      }(*best, s);

      if (!succeeded(surfaced)) {
        ts.applied = false;
        Kleisli<State, Priority, Priority> off([](Priority p) {
          p.enabled = false;
          return Effect<State, Priority>::pure(std::move(p));
        });
        auto dis = Kit::priority_lens().modify(off, *best).run(s);
        if (succeeded(dis))
          surfaced = to_top()(std::move(std::get<1>(dis).first)).run(std::move(std::get<1>(dis).second));
        if (!succeeded(surfaced)) {
          out.status = Status::Stuck;
          break;
        }
        surfaced = std::pair<Co1, State>{std::move(std::get<1>(surfaced).first),
                                         bump(std::move(std::get<1>(surfaced).second))};
      }

      root = std::move(std::get<1>(surfaced).first);
      s = std::move(std::get<1>(surfaced).second);
      out.steps += 1;
      ts.revision = s.revision;
      out.trace.push_back(std::move(ts));
    }
    out.tree = std::move(root);
    out.state = std::move(s);
    return out;
  }

 private:
  static State bump(State s) {
    s.revision += 1;
    return s;
  }

  template <std::size_t I>
  VariantZ descend_at(Z<I> z, const State& s) const {
    auto r = mv_.template down_between<I>()(z).run(s);
    if (!succeeded(r)) return VariantZ{std::in_place_index<I>, std::move(z)};
    return descend_at<(I + 1) % levels>(std::move(std::get<1>(r).first), s);
  }

  template <std::size_t I>
  std::optional<VariantZ> next_at(Z<I> z, const State& s) const {
    auto r = std::get<I>(mv_.levels).right(z).run(s);
    if (succeeded(r)) return descend_at<I>(std::move(std::get<1>(r).first), s);
    auto u = mv_.template up_between<I>()(std::move(z)).run(s);
    if (!succeeded(u)) return std::nullopt;
    return VariantZ{std::in_place_index<(I + levels - 1) % levels>, std::move(std::get<1>(u).first)};
  }

  template <std::size_t I>
  void collect_ids(Z<I> z, const State& s, std::vector<std::size_t>& acc) const {
    acc.push_back(z.first.context.after.size());
    auto u = mv_.template up_between<I>()(std::move(z)).run(s);
    if (!succeeded(u)) return;
    collect_ids<(I + levels - 1) % levels>(std::move(std::get<1>(u).first), s, acc);
  }

  decltype(Kit::moves()) mv_;
};

}  // namespace zipkit
