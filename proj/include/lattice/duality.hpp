#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lattice/boundary.hpp"
#include "lattice/components.hpp"
#include "lattice/cycle.hpp"
#include "lattice/verdict.hpp"

namespace lattice {

/// Cyclic sequence of distinct squares, consecutive members (and last/first)
/// star-adjacent, at least three long.
struct SCycle {
  std::vector<SquareCoord> squares;

  SquareSet as_set() const { return {squares.begin(), squares.end()}; }
};

bool is_scycle(std::span<const SquareCoord> squares);

/// Equal up to rotation and reversal.
bool same_cyclic_sequence(std::span<const SquareCoord> a, std::span<const SquareCoord> b);

/// Result of growing the plus-component boundary by its exterior vacant
/// neighbours, one square at a time.
struct FenceMerge {
  Cycle final_cycle;
  std::vector<std::size_t> merged_edges;  ///< boundary-edge index merged at each step
  std::vector<Cycle> intermediates;       ///< cycle after each step (only if requested)
};

/// `outer` is the component's boundary cycle; `vacant_by_edge[j]` is the vacant
/// square outside edge j of `outer` (edges in canonical walk order). At each
/// step the first index in `priority` whose edge is still on the current cycle
/// selects the square to merge. Stops when no boundary edge remains on the
/// cycle. Throws Error("duality violated") if the remaining-edge count fails
/// to decrease.
FenceMerge merge_fence(const Cycle& outer, std::span<const SquareCoord> vacant_by_edge,
                       std::span<const std::size_t> priority, bool keep_intermediates = false);

/// Walks `fence` from edge `start_edge`, mapping each edge to its enclosed
/// cosquare and collapsing consecutive repeats (including the wrap-around).
/// Throws Error("duality violated") if an enclosed cosquare is not in `allowed`.
std::vector<SquareCoord> extract_sequence(const Cycle& fence, const SquareSet& allowed,
                                          std::size_t start_edge = 0);

struct DualityReport {
  Component component;                      ///< plus component of the origin
  Cycle outer;                              ///< its outermost boundary cycle
  std::vector<SquareCoord> vacant_by_edge;  ///< exterior cosquare of each outer edge
  LambdaSets lambdas;
  Cycle d_fin;
  SCycle h_out;
  Cycle partial_h;                          ///< equals d_fin
  std::vector<std::size_t> merge_order;
  std::vector<Cycle> intermediates;
  Verdicts checks;                          ///< construction-time invariants
};

/// Builds the vacant star-connected ring around the origin's finite plus
/// component. Errors: "component not finite" (component on the window
/// border), "window too tight" (fewer than two vacant rings to the border),
/// "duality violated" (construction produced something other than a ring).
DualityReport dual_fence(const GridConfig& grid);

inline constexpr int kRequiredMargin = 2;

/// Containment, outer-boundary and uniqueness verdicts for a report.
/// `reorders` is the number of alternative merge orders replayed.
Verdicts verify_order_independence(const DualityReport& report, int reorders = 3);

/// The ring's squares, taken as one labelled region, have a single-cycle
/// outermost boundary.
Check verify_scycle_boundary(const SCycle& s);

/// The squares inside `c` are plus-connected and their outermost boundary is `c`.
Check verify_interior_plus_connected(const Cycle& c);

/// Merge orders used by verify_order_independence: reversed, then seeded shuffles.
std::vector<std::vector<std::size_t>> alternative_orders(std::size_t n, int count);

}  // namespace lattice
