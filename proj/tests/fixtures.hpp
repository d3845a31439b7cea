#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "lattice/boundary.hpp"
#include "lattice/core.hpp"
#include "lattice/cycle.hpp"

namespace fixtures {

using namespace lattice;

inline GridConfig grid_of(std::initializer_list<SquareCoord> occupied, Window w = {-4, -4, 4, 4}) {
  GridConfig g(w, {0, 0});
  for (const auto& s : occupied) g.set(s, true);
  return g;
}

inline std::vector<CornerCoord> corners(std::initializer_list<std::pair<int, int>> pts) {
  std::vector<CornerCoord> out;
  for (const auto& [u, v] : pts) out.push_back({u, v});
  return out;
}

inline Cycle contour(const SquareSet& squares) { return outermost_boundary(squares).cycles.at(0); }

/// Single occupied origin with three vacant rings around it.
inline GridConfig lone_origin() { return grid_of({{0, 0}}, {-3, -3, 3, 3}); }

/// D bounds a 1×3 row; C bounds an inverted U standing on D's top side,
/// touching D only at D's top corners u and s. C's inner side u-x-s and
/// outer side u-y-s are its two bridges; D's top side u-r-s is their common
/// base and u-t-s is the rest of D.
struct ArchOverRow {
  Cycle c;
  Cycle d;
  CornerCoord u{-1, 1};
  CornerCoord s{5, 1};
  CornerCoord r{1, 1};
  CornerCoord t{1, -1};
  CornerCoord x{1, 3};
  CornerCoord y{1, 5};
  LatticePath uxs{corners({{-1, 1}, {-1, 3}, {1, 3}, {3, 3}, {5, 3}, {5, 1}})};
  LatticePath uys{corners({{-1, 1}, {-3, 1}, {-3, 3}, {-3, 5}, {-1, 5}, {1, 5}, {3, 5}, {5, 5}, {7, 5}, {7, 3}, {7, 1}, {5, 1}})};
  LatticePath urs{corners({{-1, 1}, {1, 1}, {3, 1}, {5, 1}})};
  LatticePath uts{corners({{-1, 1}, {-1, -1}, {1, -1}, {3, -1}, {5, -1}, {5, 1}})};

  ArchOverRow()
      : c(contour({{-1, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 2}, {3, 2}, {3, 1}})),
        d(contour({{0, 0}, {1, 0}, {2, 0}})) {}
};

/// C-shaped component whose opening is crossed diagonally by two candidate
/// squares meeting at one corner. Both off-diagonal cells at that corner are
/// vacant and not adjacent to the component.
struct Pinch {
  GridConfig grid = grid_of({{0, 2}, {0, 1}, {0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}, {3, 3}},
                            {-3, -3, 7, 6});
  SquareCoord a{1, 2};
  SquareCoord b{2, 3};
  CornerCoord corner{3, 5};
  SquareCoord inner{2, 2};
  SquareCoord outer{1, 3};
};

/// U-shaped cycle with a two-deep notch; square (1,1) at the notch mouth
/// touches the cycle on its left and right sides only.
inline Cycle notch_cycle() { return contour({{0, 1}, {0, 0}, {0, -1}, {1, -1}, {2, -1}, {2, 0}, {2, 1}}); }

}  // namespace fixtures
