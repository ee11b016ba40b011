#pragma once

#include <utility>
#include <vector>

#include "zipkit/kleisli.hpp"

namespace zipkit {

// Focused position in a list. `before` is reversed: before.front() is the
// element immediately left of the focus.
template <class T>
struct ListZipper {
  T focus;
  std::vector<T> before;
  std::vector<T> after;
};

template <class T>
bool operator==(const ListZipper<T>& a, const ListZipper<T>& b) {
  return a.focus == b.focus && a.before == b.before && a.after == b.after;
}

// Focus the first element; an empty container has nothing to focus.
template <class S, class T>
Effect<S, ListZipper<T>> list_zip(std::vector<T> container) {
  if (container.empty())
    return Effect<S, ListZipper<T>>::fail(FailureCode::EmptyContainer, "zip on empty container");
  ListZipper<T> z;
  z.focus = std::move(container.front());
  z.after.assign(std::make_move_iterator(container.begin() + 1), std::make_move_iterator(container.end()));
  return Effect<S, ListZipper<T>>::pure(std::move(z));
}

template <class S, class T>
Effect<S, std::vector<T>> list_unzip(ListZipper<T> z) {
  std::vector<T> out;
  out.reserve(z.before.size() + 1 + z.after.size());
  for (auto it = z.before.rbegin(); it != z.before.rend(); ++it) out.push_back(std::move(*it));
  out.push_back(std::move(z.focus));
  for (auto& t : z.after) out.push_back(std::move(t));
  return Effect<S, std::vector<T>>::pure(std::move(out));
}

template <class S, class T>
Effect<S, ListZipper<T>> list_left(ListZipper<T> z) {
  if (z.before.empty())
    return Effect<S, ListZipper<T>>::fail(FailureCode::MoveOutOfBounds, "left at first element");
  z.after.insert(z.after.begin(), std::move(z.focus));
  z.focus = std::move(z.before.front());
  z.before.erase(z.before.begin());
  return Effect<S, ListZipper<T>>::pure(std::move(z));
}

template <class S, class T>
Effect<S, ListZipper<T>> list_right(ListZipper<T> z) {
  if (z.after.empty())
    return Effect<S, ListZipper<T>>::fail(FailureCode::MoveOutOfBounds, "right at last element");
  z.before.insert(z.before.begin(), std::move(z.focus));
  z.focus = std::move(z.after.front());
  z.after.erase(z.after.begin());
  return Effect<S, ListZipper<T>>::pure(std::move(z));
}

// Lists are flat: there is never a node above or below the focus, but the
// moves exist so list zippers present the full six-move interface.
template <class S, class T>
Effect<S, ListZipper<T>> list_up(ListZipper<T>) {
  return Effect<S, ListZipper<T>>::fail(FailureCode::MoveOutOfBounds, "up in a flat container");
}

template <class S, class T>
Effect<S, ListZipper<T>> list_down(ListZipper<T>) {
  return Effect<S, ListZipper<T>>::fail(FailureCode::MoveOutOfBounds, "down in a flat container");
}

template <class T>
std::size_t focus_index(const ListZipper<T>& z) {
  return z.before.size();
}

}  // namespace zipkit
