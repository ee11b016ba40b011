#pragma once

#include <utility>

#include "zipkit/kleisli.hpp"

namespace zipkit {

// Lens in the Kleisli category: an effectful getter plus a modifier that runs
// an effectful function on the part inside the whole. Writing is the special
// case of modifying with a constant function.
template <class S, class W, class P>
struct Lens {
  Kleisli<S, W, P> get;
  detail::fn<Effect<S, W>(Kleisli<S, P, P>, W)> modify;
};

template <class S, class T>
Lens<S, T, T> lens_id() {
  return {kleisli_id<S, T>(),
          [](Kleisli<S, T, T> f, T x) { return f(std::move(x)); }};
}

// outer first, then inner: focuses the inner part of the outer part.
template <class S, class A, class B, class C>
Lens<S, A, C> lens_compose(Lens<S, A, B> outer, Lens<S, B, C> inner) {
  auto outer_modify = outer.modify;
  auto inner_modify = inner.modify;
  return {kleisli_compose(outer.get, inner.get),
          [outer_modify, inner_modify](Kleisli<S, C, C> f, A x) {
            Kleisli<S, B, B> through_inner([inner_modify, f](B y) { return inner_modify(f, std::move(y)); });
            return outer_modify(through_inner, std::move(x));
          }};
}

template <class S, class W, class P>
Effect<S, W> lens_set(const Lens<S, W, P>& l, P value, W whole) {
  Kleisli<S, P, P> put([value = std::move(value)](P) { return Effect<S, P>::pure(value); });
  return l.modify(put, std::move(whole));
}

// Lens onto a data member of a copyable record.
template <class S, class W, class P>
Lens<S, W, P> field_lens(P W::*member) {
  return {arr<S, W>([member](W w) { return std::move(w.*member); }),
          [member](Kleisli<S, P, P> f, W w) {
            P part = w.*member;
            return f(std::move(part)).map([member, w](P p) {
              W out = w;
              out.*member = std::move(p);
              return out;
            });
          }};
}

template <class S, class A, class B>
Lens<S, std::pair<A, B>, A> pair_first() {
  using W = std::pair<A, B>;
  return {arr<S, W>([](W w) { return std::move(w.first); }),
          [](Kleisli<S, A, A> f, W w) {
            A part = w.first;
            return f(std::move(part)).map([w](A a) {
              W out = w;
              out.first = std::move(a);
              return out;
            });
          }};
}

template <class S, class A, class B>
Lens<S, std::pair<A, B>, B> pair_second() {
  using W = std::pair<A, B>;
  return {arr<S, W>([](W w) { return std::move(w.second); }),
          [](Kleisli<S, B, B> f, W w) {
            B part = w.second;
            return f(std::move(part)).map([w](B b) {
              W out = w;
              out.second = std::move(b);
              return out;
            });
          }};
}

}  // namespace zipkit
