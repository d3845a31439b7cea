#pragma once

#include <utility>
#include <vector>

#include "lattice/core.hpp"
#include "lattice/cycle.hpp"

namespace lattice {

struct Component {
  Adjacency kind = Adjacency::plus;
  SquareSet squares;
  SquareCoord seed;
};

/// Maximal occupied set connected to `seed` under `kind` adjacency.
/// Throws Error("seed vacant").
Component component_of(const GridConfig& grid, SquareCoord seed, Adjacency kind);

/// Connected component of `seed` inside an arbitrary square set, used when a
/// set of vacant squares is treated as the labelled region.
SquareSet component_within(const SquareSet& squares, SquareCoord seed, Adjacency kind);

bool is_connected(const SquareSet& squares, Adjacency kind);

/// No square of the component touches the window's outer ring.
bool is_finite(const GridConfig& grid, const Component& comp);

/// Smallest distance (in rings) from the component to the window edge; 0 when
/// a square sits on the border ring.
int window_margin(const GridConfig& grid, const Component& comp);

struct LambdaSets {
  SquareSet lambda_all;       ///< vacant squares sharing an edge with the component
  SquareSet lambda_exterior;  ///< those outside `outer` with an edge on it
};

/// `outer` is the outermost boundary cycle of the plus component `comp`.
LambdaSets lambda_sets(const GridConfig& grid, const Component& comp, const Cycle& outer);

/// Induced star-adjacency graph on a set of squares.
struct VacantGraph {
  std::vector<SquareCoord> vertices;                     // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into vertices, i < j
};

VacantGraph vacant_graph(const SquareSet& squares);

bool contains_cycle(const VacantGraph& g);

}  // namespace lattice
