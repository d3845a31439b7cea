#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lattice/components.hpp"
#include "lattice/cycle.hpp"
#include "lattice/verdict.hpp"

namespace lattice {

/// Union of cycles bounding the unbounded face of a finite set of squares.
struct OutermostBoundary {
  std::vector<Cycle> cycles;                                  // sorted by first vertex
  std::map<CornerCoord, std::vector<std::size_t>> pinch_vertices;  // corners on 2+ cycles

  std::size_t edge_count() const;
};

/// Traces the boundary between `squares` and the vacant region reachable
/// from infinity. At a corner where two diagonal squares meet with both other
/// squares outside, the walk turns sharply around the square it is following,
/// so the result splits into cycles touching at that corner.
OutermostBoundary outermost_boundary(const SquareSet& squares);
OutermostBoundary outermost_boundary(const Component& comp);
/// As above, throwing Error("unbounded") if the component reaches the window edge.
OutermostBoundary outermost_boundary(const GridConfig& grid, const Component& comp);

/// The boundary cycle whose interior holds `s`. Throws if s is not in comp.
Cycle outermost_cycle_of(const Component& comp, SquareCoord s);

/// Edges with one cosquare in the component and the other vacant.
EdgeSet boundary_edges(const GridConfig& grid, const Component& comp);

/// Intersection graph of boundary cycles.
struct CycleGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

CycleGraph cycle_graph(const OutermostBoundary& b);
bool is_acyclic(const CycleGraph& g);

/// Checks structural properties of a boundary against the squares it claims
/// to bound: connectivity of the cycle union, pairwise disjoint interiors with
/// at most one shared corner, every square enclosed by exactly one cycle, and
/// every edge separating an enclosed member square from a square outside all
/// cycles.
Verdicts verify_outermost_boundary(const SquareSet& squares, const OutermostBoundary& b,
                                   const std::string& label = "boundary");

}  // namespace lattice
