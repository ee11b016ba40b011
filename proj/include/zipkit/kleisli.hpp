#pragma once

#include <type_traits>
#include <utility>

#include "zipkit/effect.hpp"

namespace zipkit {

// Effectful function A -> Effect(S, B): the morphisms everything else in the
// library composes. Copy = share.
template <class S, class A, class B>
class Kleisli {
  detail::fn<Effect<S, B>(A)> f_;

 public:
  using state_type = S;
  using source_type = A;
  using target_type = B;

  Kleisli() = default;

  template <class F,
            class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, Kleisli> &&
                                     std::is_invocable_r_v<Effect<S, B>, const std::decay_t<F>&, A>>>
  Kleisli(F f) : f_(std::move(f)) {}

  Effect<S, B> operator()(A a) const { return f_(std::move(a)); }

  // Left-to-right composition: this, then g.
  template <class C>
  Kleisli<S, A, C> then(Kleisli<S, B, C> g) const {
    Kleisli self = *this;
    return Kleisli<S, A, C>([self, g = std::move(g)](A a) -> Effect<S, C> {
      return self(std::move(a)).and_then([g](B b) { return g(std::move(b)); });
    });
  }
};

template <class S, class A>
Kleisli<S, A, A> kleisli_id() {
  return Kleisli<S, A, A>([](A a) { return Effect<S, A>::pure(std::move(a)); });
}

template <class S, class A, class B, class C>
Kleisli<S, A, C> kleisli_compose(Kleisli<S, A, B> f, Kleisli<S, B, C> g) {
  return f.then(std::move(g));
}

// Lifts a pure function into the Kleisli category.
template <class S, class A, class F>
auto arr(F f) {
  using B = std::invoke_result_t<F, A>;
  return Kleisli<S, A, B>([f = std::move(f)](A a) { return Effect<S, B>::pure(f(std::move(a))); });
}

// Runs f on the first component, then g on the second, threading state through
// both; if f fails, g never runs.
template <class S, class A1, class B1, class A2, class B2>
Kleisli<S, std::pair<A1, A2>, std::pair<B1, B2>> split(Kleisli<S, A1, B1> f, Kleisli<S, A2, B2> g) {
  return Kleisli<S, std::pair<A1, A2>, std::pair<B1, B2>>(
      [f = std::move(f), g = std::move(g)](std::pair<A1, A2> p) -> Effect<S, std::pair<B1, B2>> {
        auto a2 = std::move(p.second);
        return f(std::move(p.first)).and_then([g, a2 = std::move(a2)](B1 b1) {
          return g(std::move(a2)).map([b1 = std::move(b1)](B2 b2) {
            return std::pair<B1, B2>{b1, std::move(b2)};
          });
        });
      });
}

// Alternative with rollback: runs first on x; if it fails, every state edit the
// failed attempt made is discarded and second runs on the same x and the same
// entry state.
template <class S, class A, class B>
Kleisli<S, A, B> catch_(Kleisli<S, A, B> first, Kleisli<S, A, B> second) {
  return Kleisli<S, A, B>([first = std::move(first), second = std::move(second)](A a) -> Effect<S, B> {
    return Effect<S, B>([first, second, a = std::move(a)](S s) -> Outcome<B, S> {
      auto r = first(a).run(s);
      if (succeeded(r)) return r;
      return second(a).run(std::move(s));
    });
  });
}

// try move = catch move id: a move that cannot fail.
template <class S, class A>
Kleisli<S, A, A> try_(Kleisli<S, A, A> move) {
  return catch_(std::move(move), kleisli_id<S, A>());
}

// Applies move until it fails, yielding the last success (the input itself
// when the first attempt fails). Each failed attempt rolls back like catch.
template <class S, class A>
Kleisli<S, A, A> repeat(Kleisli<S, A, A> move) {
  return Kleisli<S, A, A>([move = std::move(move)](A a) -> Effect<S, A> {
    return Effect<S, A>([move, a = std::move(a)](S s) -> Outcome<A, S> {
      A cur = a;
      S st = std::move(s);
      for (;;) {
        auto r = move(cur).run(st);
        if (!succeeded(r)) return std::pair<A, S>{std::move(cur), std::move(st)};
        auto& [next, st2] = std::get<1>(r);
        cur = std::move(next);
        st = std::move(st2);
      }
    });
  });
}

}  // namespace zipkit
