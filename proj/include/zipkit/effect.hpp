#pragma once

#include <type_traits>
#include <utility>
#include <variant>

#include "zipkit/detail/fn.hpp"
#include "zipkit/fail.hpp"

namespace zipkit {

struct Unit {};
inline bool operator==(Unit, Unit) { return true; }

// Result of running an effect: a failure, or a value paired with the state it
// left behind. Failure sits over state, so a failed run yields no state at all
// and the caller keeps whatever state it ran the effect with.
template <class A, class S>
using Outcome = std::variant<Failure, std::pair<A, S>>;

template <class A, class S>
bool succeeded(const Outcome<A, S>& o) {
  return o.index() == 1;
}

template <class A, class S>
const Failure& failure_of(const Outcome<A, S>& o) {
  return std::get<0>(o);
}

template <class A, class S>
const std::pair<A, S>& success_of(const Outcome<A, S>& o) {
  return std::get<1>(o);
}

// State-threading computation that either fails with a reason or produces a
// value and an updated state. Values are immutable and cheap to copy (shared
// callable underneath), so effects can be stored in data structures and run
// any number of times.
template <class S, class A>
class Effect {
  detail::fn<Outcome<A, S>(S)> run_;

 public:
  using state_type = S;
  using value_type = A;

  Effect() = default;

  template <class F,
            class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, Effect> &&
                                     std::is_invocable_r_v<Outcome<A, S>, const std::decay_t<F>&, S>>>
  Effect(F f) : run_(std::move(f)) {}

  static Effect pure(A a) {
    return Effect([a = std::move(a)](S s) -> Outcome<A, S> {
      return std::pair<A, S>{a, std::move(s)};
    });
  }

  static Effect fail(Failure f) {
    return Effect([f = std::move(f)](S) -> Outcome<A, S> { return f; });
  }

  static Effect fail(FailureCode code, std::string message) {
    return fail(Failure{code, std::move(message)});
  }

  Outcome<A, S> run(S s) const { return run_(std::move(s)); }

  // Monadic sequencing: on success feeds value and state onward, on failure
  // short-circuits without ever calling f.
  template <class F>
  auto and_then(F f) const {
    using B = typename std::invoke_result_t<F, A>::value_type;
    Effect self = *this;
    return Effect<S, B>([self, f = std::move(f)](S s) -> Outcome<B, S> {
      auto r = self.run(std::move(s));
      if (!succeeded(r)) return failure_of(r);
      auto& [a, s2] = std::get<1>(r);
      return f(std::move(a)).run(std::move(s2));
    });
  }

  template <class F>
  auto map(F f) const {
    using B = std::invoke_result_t<F, A>;
    Effect self = *this;
    return Effect<S, B>([self, f = std::move(f)](S s) -> Outcome<B, S> {
      auto r = self.run(std::move(s));
      if (!succeeded(r)) return failure_of(r);
      auto& [a, s2] = std::get<1>(r);
      return std::pair<B, S>{f(std::move(a)), std::move(s2)};
    });
  }
};

template <class S, class A>
Effect<S, A> pure(A a) {
  return Effect<S, A>::pure(std::move(a));
}

template <class S, class A, class F>
auto bind(const Effect<S, A>& m, F f) {
  return m.and_then(std::move(f));
}

template <class S>
Effect<S, S> get_state() {
  return Effect<S, S>([](S s) -> Outcome<S, S> {
    S copy = s;
    return std::pair<S, S>{std::move(copy), std::move(s)};
  });
}

template <class S>
Effect<S, Unit> set_state(S s) {
  return Effect<S, Unit>([s = std::move(s)](S) -> Outcome<Unit, S> {
    return std::pair<Unit, S>{Unit{}, s};
  });
}

template <class S, class F>
Effect<S, Unit> modify_state(F f) {
  return Effect<S, Unit>([f = std::move(f)](S s) -> Outcome<Unit, S> {
    return std::pair<Unit, S>{Unit{}, f(std::move(s))};
  });
}

}  // namespace zipkit
