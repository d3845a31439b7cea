#include <doctest.h>

#include "fixtures.hpp"
#include "lattice/components.hpp"
#include "lattice/oracle.hpp"

using namespace lattice;
using fixtures::grid_of;

TEST_CASE("component of a lone origin") {
  const Component c = component_of(fixtures::lone_origin(), {0, 0}, Adjacency::plus);
  CHECK(c.squares == SquareSet{{0, 0}});
  CHECK(c.seed == SquareCoord{0, 0});
}

TEST_CASE("corner contact joins star components only") {
  const GridConfig g = grid_of({{1, 1}});
  CHECK(component_of(g, {0, 0}, Adjacency::plus).squares == SquareSet{{0, 0}});
  CHECK(component_of(g, {0, 0}, Adjacency::star).squares == SquareSet{{0, 0}, {1, 1}});
  CHECK_THROWS_WITH_AS(component_of(g, {2, 2}, Adjacency::plus), "seed vacant", Error);
}

TEST_CASE("component_of is the same from any member") {
  const GridConfig g = grid_of({{1, 0}, {2, 0}, {2, 1}, {3, 2}, {-2, 0}});
  for (const auto kind : {Adjacency::plus, Adjacency::star}) {
    const Component c = component_of(g, {0, 0}, kind);
    for (const auto& s : c.squares) CHECK(component_of(g, s, kind).squares == c.squares);
    CHECK(is_connected(c.squares, kind));
  }
}

TEST_CASE("finiteness against the window border") {
  CHECK(is_finite(fixtures::lone_origin(), component_of(fixtures::lone_origin(), {0, 0}, Adjacency::plus)));
  const GridConfig edge = grid_of({{1, 0}, {2, 0}}, {-2, -2, 2, 2});
  CHECK_FALSE(is_finite(edge, component_of(edge, {0, 0}, Adjacency::plus)));
  const GridConfig row = grid_of({{-2, 0}, {-1, 0}, {1, 0}, {2, 0}}, {-2, -2, 2, 2});
  CHECK_FALSE(is_finite(row, component_of(row, {0, 0}, Adjacency::plus)));
  CHECK(window_margin(fixtures::lone_origin(), component_of(fixtures::lone_origin(), {0, 0}, Adjacency::plus)) == 3);
  CHECK(window_margin(edge, component_of(edge, {0, 0}, Adjacency::plus)) == 0);
}

TEST_CASE("lambda sets of the lone origin are its four neighbours") {
  const GridConfig g = fixtures::lone_origin();
  const Component c = component_of(g, {0, 0}, Adjacency::plus);
  const LambdaSets l = lambda_sets(g, c, Cycle::of_square({0, 0}));
  const SquareSet expected{{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
  CHECK(l.lambda_all == expected);
  CHECK(l.lambda_exterior == expected);
}

TEST_CASE("lambda sets of a domino") {
  const GridConfig g = grid_of({{1, 0}});
  const Component c = component_of(g, {0, 0}, Adjacency::plus);
  const LambdaSets l = lambda_sets(g, c, fixtures::contour(c.squares));
  // Hand count: two above, two below, one at each end.
  const SquareSet expected{{0, 1}, {1, 1}, {0, -1}, {1, -1}, {-1, 0}, {2, 0}};
  CHECK(l.lambda_all == expected);
  CHECK(l.lambda_exterior == expected);
}

TEST_CASE("a hole square is a candidate but not exterior") {
  // 3×3 ring with the origin at its lower-left corner.
  const GridConfig g = grid_of({{1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
  const Component c = component_of(g, {0, 0}, Adjacency::plus);
  REQUIRE(c.squares.size() == 8);
  const Cycle outer = fixtures::contour(c.squares);
  const LambdaSets l = lambda_sets(g, c, outer);
  CHECK(l.lambda_all.contains({1, 1}));
  CHECK_FALSE(l.lambda_exterior.contains({1, 1}));
  CHECK(ray_cast_interior(outer, {1, 1}));
  for (const auto& s : l.lambda_exterior) CHECK(l.lambda_all.contains(s));
  for (const auto& s : l.lambda_all) CHECK(g.vacant(s));
}

TEST_CASE("vacant graph") {
  const VacantGraph ring = vacant_graph({{0, 1}, {0, -1}, {1, 0}, {-1, 0}});
  CHECK(ring.vertices.size() == 4);
  CHECK(ring.edges.size() == 4);
  CHECK(contains_cycle(ring));

  const VacantGraph empty = vacant_graph({});
  CHECK(empty.vertices.empty());
  CHECK(empty.edges.empty());
  CHECK_FALSE(contains_cycle(empty));

  const VacantGraph apart = vacant_graph({{0, 0}, {2, 2}});
  CHECK(apart.vertices.size() == 2);
  CHECK(apart.edges.empty());

  CHECK_FALSE(contains_cycle(vacant_graph({{0, 0}, {1, 1}, {2, 2}, {3, 2}})));
  CHECK(contains_cycle(vacant_graph({{0, 0}, {1, 0}, {0, 1}})));
}
