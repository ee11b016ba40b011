#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "zipkit/alt_zipper.hpp"
#include "zipkit/kleisli.hpp"

namespace zipkit {

// Formal mirror of a zipper walk: one index list per zipped level, innermost
// first; within a list, indices run innermost first as well. No bounds are
// known here, so sideways moves always succeed (indices may go negative);
// paired with a real zipper via product, the real move fails first.
using Position = std::vector<std::vector<std::int64_t>>;

inline std::string to_string(const Position& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(p[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

namespace pos_detail {

template <class S>
Effect<S, Position> push_level(Position p) {
  p.insert(p.begin(), std::vector<std::int64_t>{0});
  return Effect<S, Position>::pure(std::move(p));
}

template <class S>
Effect<S, Position> pop_level(Position p, const char* what) {
  if (p.empty())
    return Effect<S, Position>::fail(FailureCode::MoveOutOfBounds, std::string(what) + " at root position");
  p.erase(p.begin());
  return Effect<S, Position>::pure(std::move(p));
}

}  // namespace pos_detail

// Entering a level focuses index 0 of it.
template <class S>
Kleisli<S, Position, Position> pos_zip() {
  return Kleisli<S, Position, Position>([](Position p) { return pos_detail::push_level<S>(std::move(p)); });
}

template <class S>
Kleisli<S, Position, Position> pos_unzip() {
  return Kleisli<S, Position, Position>(
      [](Position p) { return pos_detail::pop_level<S>(std::move(p), "unzip"); });
}

template <class S>
Kleisli<S, Position, Position> pos_left() {
  return Kleisli<S, Position, Position>([](Position p) -> Effect<S, Position> {
    if (p.empty() || p.front().empty())
      return Effect<S, Position>::fail(FailureCode::MoveOutOfBounds, "left with no focus");
    p.front().front() -= 1;
    return Effect<S, Position>::pure(std::move(p));
  });
}

template <class S>
Kleisli<S, Position, Position> pos_right() {
  return Kleisli<S, Position, Position>([](Position p) -> Effect<S, Position> {
    if (p.empty() || p.front().empty())
      return Effect<S, Position>::fail(FailureCode::MoveOutOfBounds, "right with no focus");
    p.front().front() += 1;
    return Effect<S, Position>::pure(std::move(p));
  });
}

// Nesting within a level: down records index 0 one layer deeper, up forgets
// the innermost layer. Up cannot rise past the point where the level was
// zipped; that exit is unzip's.
template <class S>
Kleisli<S, Position, Position> pos_down() {
  return Kleisli<S, Position, Position>([](Position p) -> Effect<S, Position> {
    if (p.empty())
      return Effect<S, Position>::fail(FailureCode::MoveOutOfBounds, "down with no focus");
    p.front().insert(p.front().begin(), 0);
    return Effect<S, Position>::pure(std::move(p));
  });
}

template <class S>
Kleisli<S, Position, Position> pos_up() {
  return Kleisli<S, Position, Position>([](Position p) -> Effect<S, Position> {
    if (p.empty() || p.front().size() < 2)
      return Effect<S, Position>::fail(FailureCode::MoveOutOfBounds, "up at top of level");
    p.front().erase(p.front().begin());
    return Effect<S, Position>::pure(std::move(p));
  });
}

template <class S>
Kleisli<S, Position, Position> pos_down_between() {
  return Kleisli<S, Position, Position>([](Position p) { return pos_detail::push_level<S>(std::move(p)); });
}

template <class S>
Kleisli<S, Position, Position> pos_up_between() {
  return Kleisli<S, Position, Position>(
      [](Position p) { return pos_detail::pop_level<S>(std::move(p), "up"); });
}

namespace pos_detail {

template <std::size_t>
using PosDesc = LevelDesc<Position, Position>;

template <class S, std::size_t... Is>
auto positional_moves_impl(std::index_sequence<Is...>) {
  using M = AltMoves<S, PosDesc<Is>...>;
  auto per_level = [] {
    return LevelMoves<S, Position, Position>{pos_zip<S>(),  pos_unzip<S>(), pos_left<S>(),
                                             pos_right<S>(), pos_up<S>(),    pos_down<S>()};
  };
  return M{std::make_tuple((void(Is), per_level())...),
           std::make_tuple((void(Is), pos_down_between<S>())...),
           std::make_tuple((void(Is), pos_up_between<S>())...)};
}

}  // namespace pos_detail

// Positional realization of an n-level alternating zipper: every level moves
// the same way on the bare position. Product this with a tree's moves to get
// a tree zipper that knows where it stands.
template <class S, std::size_t N>
auto positional_moves() {
  return pos_detail::positional_moves_impl<S>(std::make_index_sequence<N>{});
}

// Rebuilds the focus a position denotes by walking the kit's moves from the
// root container: one zip/descent per index list, outermost first, sideways
// steps within each. The empty position denotes the root container itself.
template <class Kit>
struct Replay {
  using S = typename Kit::State;
  using Co1 = typename Kit::Co1;
  template <std::size_t I>
  using Z = typename Kit::template Z<I>;
  using Result = std::variant<Co1, Z<0>, Z<1>, Z<2>, Z<3>>;
  static_assert(Kit::level_count == 4, "replay is written for four-level kits");

  static Outcome<Result, S> run(Co1 root, const Position& pos, S s) {
    if (pos.empty()) return std::pair<Result, S>{Result{std::in_place_index<0>, std::move(root)}, std::move(s)};
    const auto mv = Kit::moves();
    auto entered = std::get<0>(mv.levels).zip(std::move(root)).run(std::move(s));
    if (!succeeded(entered)) return failure_of(entered);
    auto& [z, s2] = std::get<1>(entered);
    return step<0>(std::move(z), pos, pos.size() - 1, std::move(s2));
  }

 private:
  template <std::size_t K>
  static Outcome<Result, S> step(Z<K> z, const Position& pos, std::size_t i, S s) {
    const auto mv = Kit::moves();
    const auto& lm = std::get<K>(mv.levels);
    const auto& list = pos[i];
    for (std::size_t j = list.size(); j-- > 0;) {
      if (j + 1 != list.size()) {
        auto r = lm.down(std::move(z)).run(std::move(s));
        if (!succeeded(r)) return failure_of(r);
        z = std::move(std::get<1>(r).first);
        s = std::move(std::get<1>(r).second);
      }
      for (std::int64_t t = list[j]; t != 0; t += t > 0 ? -1 : 1) {
        auto r = (t > 0 ? lm.right : lm.left)(std::move(z)).run(std::move(s));
        if (!succeeded(r)) return failure_of(r);
        z = std::move(std::get<1>(r).first);
        s = std::move(std::get<1>(r).second);
      }
    }
    if (i == 0)
      return std::pair<Result, S>{Result{std::in_place_index<K + 1>, std::move(z)}, std::move(s)};
    auto r = mv.template down_between<K>()(std::move(z)).run(std::move(s));
    if (!succeeded(r)) return failure_of(r);
    return step<(K + 1) % Kit::level_count>(std::move(std::get<1>(r).first), pos, i - 1,
                                            std::move(std::get<1>(r).second));
  }
};

}  // namespace zipkit
