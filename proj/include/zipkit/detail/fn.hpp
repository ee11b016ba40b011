#pragma once

#include <memory>
#include <type_traits>
#include <utility>

namespace zipkit::detail {

// Shared immutable callable. Unlike std::function this is guaranteed to work
// with incomplete types in the signature: completing fn<R(As...)> only needs
// the shared_ptr member, so mutually recursive node/zipper types can appear in
// effect signatures before they are defined.
template <class Sig>
class fn;

template <class R, class... As>
class fn<R(As...)> {
  struct base {
    virtual ~base() = default;
    virtual R call(As... as) const = 0;
  };
  template <class F>
  struct impl final : base {
    F f;
    explicit impl(F g) : f(std::move(g)) {}
    R call(As... as) const override { return f(std::forward<As>(as)...); }
  };

  std::shared_ptr<const base> p_;

 public:
  fn() = default;

  template <class F,
            class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, fn> &&
                                     std::is_invocable_r_v<R, const std::decay_t<F>&, As...>>>
  fn(F f) : p_(std::make_shared<impl<std::decay_t<F>>>(std::move(f))) {}

  R operator()(As... as) const { return p_->call(std::forward<As>(as)...); }

  explicit operator bool() const { return p_ != nullptr; }
};

template <std::size_t I, class... Ts>
using nth_t = std::tuple_element_t<I, std::tuple<Ts...>>;

}  // namespace zipkit::detail
