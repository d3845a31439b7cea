#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "lattice/oracle.hpp"

using namespace lattice;
using fixtures::contour;
using fixtures::corners;

namespace {

bool has_path(const std::vector<LatticePath>& paths, const LatticePath& p) {
  return std::any_of(paths.begin(), paths.end(), [&](const LatticePath& q) { return q.same_as(p); });
}

bool encloses(const Cycle& outer, const Cycle& inner) {
  const InteriorMap m(outer);
  for (const auto& s : interior_squares(inner)) {
    if (!m.contains(s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cycle construction validates the walk") {
  CHECK_THROWS_WITH_AS(Cycle::from_vertices(corners({{1, 1}, {3, 1}, {3, 3}})), "not a cycle", Error);
  CHECK_THROWS_AS(Cycle::from_vertices(corners({{1, 1}, {5, 1}, {5, 3}, {1, 3}})), Error);
  CHECK_THROWS_AS(Cycle::from_vertices(corners({{1, 1}, {3, 1}, {3, 3}, {1, 3}, {1, 1}, {3, 1}})), Error);
  const EdgeSet star{LatticeEdge({1, 1}, {3, 1}), LatticeEdge({1, 1}, {-1, 1}), LatticeEdge({1, 1}, {1, 3}),
                     LatticeEdge({1, 1}, {1, -1})};
  const std::vector<LatticeEdge> edges(star.begin(), star.end());
  CHECK_THROWS_WITH_AS(Cycle::from_edges(edges), "not a cycle", Error);
}

TEST_CASE("cycles are canonical: smallest corner first, counterclockwise") {
  const Cycle a = Cycle::from_vertices(corners({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}));
  const Cycle b = Cycle::from_vertices(corners({{-1, 1}, {-1, -1}, {1, -1}, {1, 1}}));
  CHECK(a == b);
  CHECK(a == Cycle::of_square({0, 0}));
  CHECK(a.vertices().front() == CornerCoord{-1, -1});
  CHECK(a.vertices()[1] == CornerCoord{1, -1});
  CHECK(a.doubled_area() == 2);
  const auto edges = a.edges();
  CHECK(Cycle::from_edges(edges) == a);
  CHECK(a.size() == 4);
}

TEST_CASE("interior squares") {
  CHECK(interior_squares(Cycle::of_square({0, 0})) == SquareSet{{0, 0}});
  const Cycle domino = contour({{0, 0}, {1, 0}});
  CHECK(domino.size() == 6);
  CHECK(interior_squares(domino) == SquareSet{{0, 0}, {1, 0}});
  for (int x = -2; x <= 3; ++x) {
    for (int y = -2; y <= 2; ++y) CHECK(ray_cast_interior(domino, {x, y}) == interior_squares(domino).contains({x, y}));
  }
}

TEST_CASE("arch over a row: fixture is the cycle u-x-s-y-u") {
  const fixtures::ArchOverRow f;
  CHECK(f.c == Cycle::join(f.uxs, f.uys.reversed()));
  CHECK(f.d == Cycle::join(f.urs, f.uts.reversed()));
  CHECK(shared_vertex_count(f.c, f.d) == 2);
}

TEST_CASE("arch over a row: bridges and their common base") {
  const fixtures::ArchOverRow f;
  const BridgeSet bs = find_bridges(f.c, f.d);
  REQUIRE(bs.bridges.size() == 2);
  CHECK(has_path(bs.bridges, f.uxs));
  CHECK(has_path(bs.bridges, f.uys));
  for (const auto& b : bs.bridges) {
    const Gap g = gap_of(b, f.d);
    CHECK(g.base.same_as(f.urs));
    CHECK(g.remainder.same_as(f.uts));
  }
  const Gap inner = gap_of(f.uxs, f.d);
  CHECK(inner.cycle == Cycle::join(f.uxs, f.urs.reversed()));
  CHECK(interior_squares(inner.cycle) == SquareSet{{0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("arch over a row: bridge decomposition is uts with uys") {
  const fixtures::ArchOverRow f;
  const BridgeDecomposition bd = bridge_decomposition(f.c, f.d);
  CHECK(bd.p1.same_as(f.uts));
  CHECK(bd.p2.same_as(f.uys));
  CHECK(encloses(bd.merged, f.c));
  CHECK(encloses(bd.merged, f.d));
  CHECK(bd.merged == Cycle::join(f.uys, f.uts.reversed()));
}

TEST_CASE("arch over a row: iterative merge reaches the decomposition cycle") {
  const fixtures::ArchOverRow f;
  std::vector<MergeStep> trace;
  const Cycle e = merge_cycles(f.c, f.d, &trace);
  CHECK(e == bridge_decomposition(f.c, f.d).merged);
  // The outer bridge has the smaller first edge; once merged, the inner
  // bridge lies inside and is no longer a bridge.
  REQUIRE(trace.size() == 1);
  CHECK(trace.front().bridge.same_as(f.uys));
  CHECK(trace.back().result == e);
}

TEST_CASE("gaps of the original bridges survive earlier merges") {
  const fixtures::ArchOverRow f;
  std::vector<MergeStep> trace;
  merge_cycles(f.c, f.d, &trace);
  const auto original = find_bridges(f.c, f.d).bridges;
  for (const auto& step : trace) {
    REQUIRE(has_path(original, step.bridge));
    CHECK(step.gap.cycle == gap_of(step.bridge, f.d).cycle);
  }
}

TEST_CASE("nested gaps: an earlier merge reshapes a later gap") {
  // c has a short bridge whose gap sits inside the gap of its long bridge.
  const Cycle c = Cycle::from_vertices(corners({{1, 3}, {3, 3}, {3, 1}, {3, -1}, {3, -3}, {5, -3}, {7, -3}, {9, -3}, {9, -1},
                                                {7, -1}, {5, -1}, {5, 1}, {7, 1}, {7, 3}, {5, 3}, {5, 5}, {3, 5}, {1, 5}}));
  const Cycle d = Cycle::from_vertices(corners({{-3, 3}, {-1, 3}, {-1, 1}, {-1, -1}, {-1, -3}, {-1, -5}, {1, -5}, {1, -3},
                                                {3, -3}, {3, -1}, {3, 1}, {1, 1}, {1, 3}, {1, 5}, {-1, 5}, {-1, 7}, {-3, 7},
                                                {-3, 5}}));
  const LatticePath short_bridge(corners({{1, 3}, {3, 3}, {3, 1}}));
  std::vector<MergeStep> trace;
  const Cycle e = merge_cycles(c, d, &trace);
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].bridge.same_as(short_bridge));
  const Gap original = gap_of(trace[1].bridge, d);
  CHECK_FALSE(trace[1].gap.cycle == original.cycle);
  SquareSet expected = interior_squares(original.cycle);
  expected.erase({1, 1});
  CHECK(interior_squares(trace[1].gap.cycle) == expected);
  CHECK(e == bridge_decomposition(c, d).merged);
}

TEST_CASE("edge-sharing unit squares") {
  const Cycle c = Cycle::of_square({0, 0});
  const Cycle d = Cycle::of_square({1, 0});
  const BridgeSet bs = find_bridges(c, d);
  REQUIRE(bs.bridges.size() == 1);
  const LatticePath& p = bs.bridges.front();
  CHECK(p.edge_count() == 3);
  CHECK(p.same_as(LatticePath(corners({{1, -1}, {-1, -1}, {-1, 1}, {1, 1}}))));
  const Gap g = gap_of(p, d);
  CHECK(g.cycle == c);
  CHECK(g.base.edge_count() == 1);
  CHECK(interior_squares(g.cycle) == SquareSet{{0, 0}});

  const Cycle domino = contour({{0, 0}, {1, 0}});
  CHECK(merge_cycles(c, d) == domino);
  const BridgeDecomposition bd = bridge_decomposition(c, d);
  CHECK(bd.p1.edge_count() == 3);
  CHECK(bd.p2.edge_count() == 3);
  CHECK(bd.merged == domino);
}

TEST_CASE("base is a single edge between adjacent corners") {
  const Cycle d = Cycle::of_square({0, 0});
  const Cycle c = contour({{1, 0}, {1, 1}});
  const BridgeSet bs = find_bridges(c, d);
  REQUIRE(bs.bridges.size() == 1);
  CHECK(bs.bridges.front().edge_count() == 5);
  const Gap g = gap_of(bs.bridges.front(), d);
  CHECK(g.base.edge_count() == 1);
  CHECK(g.cycle == c);
}

TEST_CASE("a cycle has no bridges for itself") {
  const Cycle c = contour({{0, 0}, {1, 0}, {1, 1}});
  CHECK(find_bridges(c, c).bridges.empty());
  CHECK(merge_cycles(c, c) == c);
}

TEST_CASE("single bridge: decomposition is the bridge with the rest of the target") {
  const Cycle c = contour({{0, 1}, {1, 1}});
  const Cycle d = contour({{0, 0}, {1, 0}});
  const BridgeSet bs = find_bridges(c, d);
  REQUIRE(bs.bridges.size() == 1);
  const Gap g = gap_of(bs.bridges.front(), d);
  const BridgeDecomposition bd = bridge_decomposition(c, d);
  CHECK(bd.p2.same_as(bs.bridges.front()));
  CHECK(bd.p1.same_as(g.remainder));
  CHECK(bd.merged == contour({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

TEST_CASE("decomposition preconditions") {
  const Cycle c = Cycle::of_square({0, 0});
  CHECK_THROWS_WITH_AS(bridge_decomposition(c, c), "interiors intersect", Error);
  CHECK_THROWS_WITH_AS(bridge_decomposition(c, Cycle::of_square({1, 1})), "not mergeable", Error);
  CHECK_THROWS_WITH_AS(merge_cycles(c, Cycle::of_square({1, 1})), "not mergeable", Error);
  CHECK_THROWS_WITH_AS(merge_cycles(c, Cycle::of_square({3, 3})), "not mergeable", Error);
}

TEST_CASE("merging single squares") {
  const Cycle c = Cycle::of_square({0, 0});
  const Cycle domino = merge_square(c, {1, 0});
  CHECK(domino == contour({{0, 0}, {1, 0}}));
  const Cycle tromino = merge_square(domino, {0, 1});
  CHECK(tromino == contour({{0, 0}, {1, 0}, {0, 1}}));
  // 3 squares · 4 sides − 2 · 2 shared sides
  CHECK(tromino.size() == 8);
  CHECK_THROWS_WITH_AS(merge_square(tromino, {0, 0}), "square interior to cycle", Error);
  CHECK_THROWS_WITH_AS(merge_square(tromino, {3, 3}), "detached square", Error);
  CHECK_THROWS_WITH_AS(merge_square(tromino, {2, 1}), "detached square", Error);
}

TEST_CASE("square touching the cycle on two opposite sides closes the notch") {
  const Cycle c = fixtures::notch_cycle();
  const InteriorMap before(c);
  CHECK_FALSE(before.contains({1, 1}));
  CHECK_FALSE(before.contains({1, 0}));
  const Cycle merged = merge_square(c, {1, 1});
  const SquareSet inside = interior_squares(merged);
  CHECK(inside.contains({1, 1}));
  CHECK(inside.contains({1, 0}));
  for (const auto& s : interior_squares(c)) CHECK(inside.contains(s));
  CHECK(merged == contour({{0, -1}, {1, -1}, {2, -1}, {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}));
}

TEST_CASE("arcs and paths") {
  const Cycle c = Cycle::of_square({0, 0});
  const LatticePath p = c.arc({-1, -1}, {1, 1});
  CHECK(p.edge_count() == 2);
  CHECK(p.vertices()[1] == CornerCoord{1, -1});
  CHECK(p.reversed().front() == CornerCoord{1, 1});
  CHECK(p.same_as(p.reversed()));
  CHECK_THROWS_WITH_AS(LatticePath(corners({{1, 1}})), "not a path", Error);
  CHECK_THROWS_AS(LatticePath(corners({{1, 1}, {5, 1}})), Error);
  CHECK_THROWS_AS(LatticePath(corners({{1, 1}, {3, 1}, {1, 1}})), Error);
}
