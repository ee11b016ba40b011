// Tour of the core machinery on a toy two-level tree: sections holding items,
// items holding sections again. Shows effects, moves, the positional mirror,
// and the product of the two.
#include <cstdio>
#include <string>

#include "zipkit/alt_zipper.hpp"
#include "zipkit/position.hpp"

using namespace zipkit;

using St = int;
using Tree = AltTree<St, std::string, int>;

template <class A>
static void show(const char* what, const Outcome<A, St>& o) {
  if (succeeded(o))
    std::printf("%-28s ok (state %d)\n", what, success_of(o).second);
  else
    std::printf("%-28s failed: %s\n", what, to_string(failure_of(o).code));
}

int main() {
  // Two sections; the first carries items 1 and 2, items have no children.
  auto leaf = Effect<St, Tree::Container<0>>::pure({});
  Tree::Container<1> items{{1, leaf}, {2, leaf}};
  Tree::Container<0> sections{
      {"alpha", Effect<St, Tree::Container<1>>::pure(items)},
      {"beta", Effect<St, Tree::Container<1>>::pure({})},
  };

  auto mv = product(make_alternating<St, std::string, int>(), positional_moves<St, 2>());
  using Z0 = std::pair<Tree::Zipper<0>, Position>;

  std::pair<Tree::EContainer<0>, Position> root{Tree::root(sections), {}};

  // zip -> focus "alpha"; down -> item 1; right -> item 2; up -> back.
  auto r = std::get<0>(mv.levels).zip(root).run(0);
  show("zip root", r);
  Z0 z = success_of(r).first;
  std::printf("focus: %s at %s\n", z.first.node.content.c_str(), to_string(z.second).c_str());

  auto d = mv.down_between<0>()(z).run(0);
  show("down to items", d);
  auto zi = success_of(d).first;
  std::printf("focus: %d at %s\n", zi.first.node.content, to_string(zi.second).c_str());

  auto rr = std::get<1>(mv.levels).right(zi).run(0);
  show("right", rr);
  zi = success_of(rr).first;
  std::printf("focus: %d at %s\n", zi.first.node.content, to_string(zi.second).c_str());

  auto bad = std::get<1>(mv.levels).right(zi).run(0);
  show("right past the end", bad);

  auto u = mv.up_between<1>()(zi).run(0);
  show("up to sections", u);
  z = success_of(u).first;
  std::printf("focus: %s at %s\n", z.first.node.content.c_str(), to_string(z.second).c_str());

  // repeat walks as far as it can and keeps the last success.
  auto far = repeat(std::get<0>(mv.levels).right)(z).run(0);
  show("repeat right", far);
  std::printf("focus: %s at %s\n", success_of(far).first.first.node.content.c_str(),
              to_string(success_of(far).first.second).c_str());
  return 0;
}
