#pragma once

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "zipkit/kleisli.hpp"
#include "zipkit/list_zipper.hpp"

namespace zipkit {

namespace alt_detail {

template <class P>
inline constexpr std::size_t levels_v = std::tuple_size_v<P>;

template <class P>
constexpr std::size_t succ_level(std::size_t i) {
  return (i + 1) % levels_v<P>;
}

template <class P>
constexpr std::size_t pred_level(std::size_t i) {
  return (i + levels_v<P> - 1) % levels_v<P>;
}

template <class S, class P, std::size_t I>
struct Node;
template <class S, class P, std::size_t I>
struct ParentData;
template <class S, class P, std::size_t I>
struct Context;

template <class S, class P, std::size_t I>
using Container = std::vector<Node<S, P, I>>;

// A node carries this level's content plus a suspension of its child
// container, which lives one level further around the cycle. The suspension
// must be pure: forcing it twice yields equal containers and never touches
// the search state.
template <class S, class P, std::size_t I>
struct Node {
  std::tuple_element_t<I, P> content;
  Effect<S, Container<S, P, succ_level<P>(I)>> next;
};

// Everything up needs to rebuild the node above: the parent's content and the
// parent's own enriched context. At the root the suspension fails.
template <class S, class P, std::size_t I>
struct ParentData {
  static constexpr std::size_t parent_level = pred_level<P>(I);
  std::tuple_element_t<parent_level, P> content;
  Context<S, P, parent_level> context;
};

// List-zipper context enriched with the link to the level above.
template <class S, class P, std::size_t I>
struct Context {
  std::vector<Node<S, P, I>> before;  // reversed, nearest sibling last
  std::vector<Node<S, P, I>> after;
  Effect<S, ParentData<S, P, I>> parent;
};

template <class S, class P, std::size_t I>
struct EContainer {
  Container<S, P, I> container;
  Effect<S, ParentData<S, P, I>> parent;
};

template <class S, class P, std::size_t I>
struct Zipper {
  Node<S, P, I> node;
  Context<S, P, I> context;
};

}  // namespace alt_detail

// Family of n mutually linked zipper levels generated from list zippers over
// per-level contents. Level indices are cyclic: down from the last level
// reaches the first again, which is what lets trees nest below themselves.
template <class S, class... Cs>
struct AltTree {
  using State = S;
  using Pack = std::tuple<Cs...>;
  static constexpr std::size_t level_count = sizeof...(Cs);
  static constexpr std::size_t succ(std::size_t i) { return (i + 1) % level_count; }
  static constexpr std::size_t pred(std::size_t i) { return (i + level_count - 1) % level_count; }

  template <std::size_t I>
  using Content = std::tuple_element_t<I, Pack>;
  template <std::size_t I>
  using Node = alt_detail::Node<S, Pack, I>;
  template <std::size_t I>
  using Container = alt_detail::Container<S, Pack, I>;
  template <std::size_t I>
  using ParentData = alt_detail::ParentData<S, Pack, I>;
  template <std::size_t I>
  using Context = alt_detail::Context<S, Pack, I>;
  template <std::size_t I>
  using EContainer = alt_detail::EContainer<S, Pack, I>;
  template <std::size_t I>
  using Zipper = alt_detail::Zipper<S, Pack, I>;
  template <std::size_t I>
  using BaseZipper = ListZipper<Node<I>>;
  template <std::size_t I>
  using ParentEffect = Effect<S, ParentData<I>>;

  template <std::size_t I>
  static ParentEffect<I> no_parent() {
    return ParentEffect<I>::fail(FailureCode::MoveOutOfBounds, "up at root");
  }

  static EContainer<0> root(Container<0> co) { return {std::move(co), no_parent<0>()}; }

  template <std::size_t I>
  static Zipper<I> from_base(BaseZipper<I> z, ParentEffect<I> parent) {
    return {std::move(z.focus), {std::move(z.before), std::move(z.after), std::move(parent)}};
  }

  template <std::size_t I>
  static BaseZipper<I> to_base(Zipper<I> z) {
    return {std::move(z.node), std::move(z.context.before), std::move(z.context.after)};
  }

  // Lifts a move on the underlying list zipper to the enriched zipper; the
  // parent suspension rides along untouched.
  template <std::size_t I>
  static Kleisli<S, Zipper<I>, Zipper<I>> lift_move(Kleisli<S, BaseZipper<I>, BaseZipper<I>> move) {
    return Kleisli<S, Zipper<I>, Zipper<I>>([move](Zipper<I> z) -> Effect<S, Zipper<I>> {
      ParentEffect<I> parent = z.context.parent;
      return move(to_base<I>(std::move(z))).map([parent](BaseZipper<I> b) {
        return from_base<I>(std::move(b), parent);
      });
    });
  }

  template <std::size_t I>
  static Effect<S, Zipper<I>> zip(EContainer<I> eco) {
    ParentEffect<I> parent = eco.parent;
    return list_zip<S>(std::move(eco.container)).map([parent](BaseZipper<I> b) {
      return from_base<I>(std::move(b), parent);
    });
  }

  template <std::size_t I>
  static Effect<S, EContainer<I>> unzip(Zipper<I> z) {
    ParentEffect<I> parent = z.context.parent;
    return list_unzip<S>(to_base<I>(std::move(z))).map([parent](Container<I> co) {
      return EContainer<I>{std::move(co), parent};
    });
  }

  template <std::size_t I>
  static Effect<S, Zipper<I>> left(Zipper<I> z) {
    return lift_move<I>(base_move<I>(&list_left<S, Node<I>>))(std::move(z));
  }

  template <std::size_t I>
  static Effect<S, Zipper<I>> right(Zipper<I> z) {
    return lift_move<I>(base_move<I>(&list_right<S, Node<I>>))(std::move(z));
  }

  template <std::size_t I>
  static Effect<S, Zipper<I>> up(Zipper<I> z) {
    return lift_move<I>(base_move<I>(&list_up<S, Node<I>>))(std::move(z));
  }

  template <std::size_t I>
  static Effect<S, Zipper<I>> down(Zipper<I> z) {
    return lift_move<I>(base_move<I>(&list_down<S, Node<I>>))(std::move(z));
  }

  // Descend into the focused node's children; the new level's parent
  // suspension remembers this node's content and context.
  template <std::size_t I>
  static Effect<S, Zipper<succ(I)>> down_between(Zipper<I> z) {
    constexpr std::size_t J = succ(I);
    Content<I> nc = z.node.content;
    Context<I> ctx = std::move(z.context);
    Effect<S, Container<J>> next = z.node.next;
    return next.and_then([nc = std::move(nc), ctx = std::move(ctx)](Container<J> co) {
      return zip<J>(EContainer<J>{std::move(co), ParentEffect<J>::pure(ParentData<J>{nc, ctx})});
    });
  }

  // Ascend, committing this level: the rebuilt parent's child suspension is
  // replaced by the container exactly as it stands here, so edits made below
  // become visible above.
  template <std::size_t I>
  static Effect<S, Zipper<pred(I)>> up_between(Zipper<I> z) {
    constexpr std::size_t J = pred(I);
    return unzip<I>(std::move(z)).and_then([](EContainer<I> eco) {
      ParentEffect<I> parent = eco.parent;
      Container<I> co = std::move(eco.container);
      return parent.map([co = std::move(co)](ParentData<I> pd) {
        return Zipper<J>{Node<J>{std::move(pd.content), Effect<S, Container<I>>::pure(co)},
                         std::move(pd.context)};
      });
    });
  }

 private:
  template <std::size_t I>
  static Kleisli<S, BaseZipper<I>, BaseZipper<I>> base_move(Effect<S, BaseZipper<I>> (*mv)(BaseZipper<I>)) {
    return Kleisli<S, BaseZipper<I>, BaseZipper<I>>([mv](BaseZipper<I> z) { return mv(std::move(z)); });
  }
};

// Value-level bundle of one level's six moves; what the product construction
// and generic traversals consume.
template <class S, class CoT, class ZT>
struct LevelMoves {
  Kleisli<S, CoT, ZT> zip;
  Kleisli<S, ZT, CoT> unzip;
  Kleisli<S, ZT, ZT> left;
  Kleisli<S, ZT, ZT> right;
  Kleisli<S, ZT, ZT> up;
  Kleisli<S, ZT, ZT> down;
};

template <class Co_, class Z_>
struct LevelDesc {
  using container = Co_;
  using zipper = Z_;
};

template <class S, class Levels, class Seq>
struct AltMovesImpl;

// Bundle of n mutually linked zippers: per-level moves plus the inter-level
// down/up moves, with cyclic level arithmetic baked into the types.
template <class S, class... Ls, std::size_t... Is>
struct AltMovesImpl<S, std::tuple<Ls...>, std::index_sequence<Is...>> {
  using State = S;
  static constexpr std::size_t level_count = sizeof...(Ls);

  template <std::size_t I>
  using Desc = std::tuple_element_t<I, std::tuple<Ls...>>;
  template <std::size_t I>
  using Co = typename Desc<I>::container;
  template <std::size_t I>
  using Z = typename Desc<I>::zipper;

  std::tuple<LevelMoves<S, typename Ls::container, typename Ls::zipper>...> levels;
  std::tuple<Kleisli<S, Z<Is>, Z<(Is + 1) % sizeof...(Ls)>>...> downs;
  std::tuple<Kleisli<S, Z<Is>, Z<(Is + sizeof...(Ls) - 1) % sizeof...(Ls)>>...> ups;

  template <std::size_t I>
  const LevelMoves<S, Co<I>, Z<I>>& level() const {
    return std::get<I>(levels);
  }
  template <std::size_t I>
  const auto& down_between() const {
    return std::get<I>(downs);
  }
  template <std::size_t I>
  const auto& up_between() const {
    return std::get<I>(ups);
  }
};

template <class S, class... Ls>
using AltMoves = AltMovesImpl<S, std::tuple<Ls...>, std::index_sequence_for<Ls...>>;

namespace alt_detail {

template <class S, class T, std::size_t I>
LevelMoves<S, typename T::template EContainer<I>, typename T::template Zipper<I>> tree_level_moves() {
  using Co = typename T::template EContainer<I>;
  using Z = typename T::template Zipper<I>;
  return {
      Kleisli<S, Co, Z>([](Co co) { return T::template zip<I>(std::move(co)); }),
      Kleisli<S, Z, Co>([](Z z) { return T::template unzip<I>(std::move(z)); }),
      Kleisli<S, Z, Z>([](Z z) { return T::template left<I>(std::move(z)); }),
      Kleisli<S, Z, Z>([](Z z) { return T::template right<I>(std::move(z)); }),
      Kleisli<S, Z, Z>([](Z z) { return T::template up<I>(std::move(z)); }),
      Kleisli<S, Z, Z>([](Z z) { return T::template down<I>(std::move(z)); }),
  };
}

template <class S, class T, std::size_t... Is>
auto make_alternating_impl(std::index_sequence<Is...>) {
  constexpr std::size_t n = sizeof...(Is);
  using M = AltMoves<S, LevelDesc<typename T::template EContainer<Is>, typename T::template Zipper<Is>>...>;
  return M{
      std::make_tuple(tree_level_moves<S, T, Is>()...),
      std::make_tuple(Kleisli<S, typename T::template Zipper<Is>, typename T::template Zipper<(Is + 1) % n>>(
          [](typename T::template Zipper<Is> z) { return T::template down_between<Is>(std::move(z)); })...),
      std::make_tuple(Kleisli<S, typename T::template Zipper<Is>, typename T::template Zipper<(Is + n - 1) % n>>(
          [](typename T::template Zipper<Is> z) { return T::template up_between<Is>(std::move(z)); })...),
  };
}

}  // namespace alt_detail

// Generates the alternating zipper for the given per-level contents and hands
// back its moves as a bundle.
template <class S, class... Cs>
auto make_alternating() {
  using T = AltTree<S, Cs...>;
  return alt_detail::make_alternating_impl<S, T>(std::index_sequence_for<Cs...>{});
}

// Componentwise product: every move is the split of the component moves, so a
// move succeeds on the pair exactly when it succeeds on both halves.
template <class S, class... L1, class... L2, std::size_t... Is>
auto product(const AltMovesImpl<S, std::tuple<L1...>, std::index_sequence<Is...>>& a,
             const AltMovesImpl<S, std::tuple<L2...>, std::index_sequence<Is...>>& b) {
  using M = AltMoves<S,
                     LevelDesc<std::pair<typename L1::container, typename L2::container>,
                               std::pair<typename L1::zipper, typename L2::zipper>>...>;
  return M{
      std::make_tuple(LevelMoves<S, std::pair<typename L1::container, typename L2::container>,
                                 std::pair<typename L1::zipper, typename L2::zipper>>{
          split(std::get<Is>(a.levels).zip, std::get<Is>(b.levels).zip),
          split(std::get<Is>(a.levels).unzip, std::get<Is>(b.levels).unzip),
          split(std::get<Is>(a.levels).left, std::get<Is>(b.levels).left),
          split(std::get<Is>(a.levels).right, std::get<Is>(b.levels).right),
          split(std::get<Is>(a.levels).up, std::get<Is>(b.levels).up),
          split(std::get<Is>(a.levels).down, std::get<Is>(b.levels).down)}...),
      std::make_tuple(split(std::get<Is>(a.downs), std::get<Is>(b.downs))...),
      std::make_tuple(split(std::get<Is>(a.ups), std::get<Is>(b.ups))...)};
}

// Postorder enumeration within one level: first focuses the deepest-first
// node, next moves sideways-and-deep or surfaces. On flat list levels these
// degenerate to head / left-to-right.
template <class S, class Co, class Z>
Kleisli<S, Co, Z> level_first(const LevelMoves<S, Co, Z>& m) {
  return kleisli_compose(m.zip, repeat(m.down));
}

template <class S, class Co, class Z>
Kleisli<S, Z, Z> level_next(const LevelMoves<S, Co, Z>& m) {
  return catch_(kleisli_compose(m.right, repeat(m.down)), m.up);
}

}  // namespace zipkit
