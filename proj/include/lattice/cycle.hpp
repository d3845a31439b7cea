#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lattice/core.hpp"

namespace lattice {

/// Self-avoiding path of lattice edges, stored as its vertex sequence.
class LatticePath {
 public:
  LatticePath() = default;
  /// Throws Error("not a path") for fewer than two vertices, non-unit steps or
  /// repeated vertices.
  explicit LatticePath(std::vector<CornerCoord> vertices);

  const std::vector<CornerCoord>& vertices() const { return vertices_; }
  CornerCoord front() const { return vertices_.front(); }
  CornerCoord back() const { return vertices_.back(); }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  std::vector<LatticeEdge> edges() const;
  LatticePath reversed() const;

  /// Same vertex sequence in either direction.
  bool same_as(const LatticePath& other) const;

  bool operator==(const LatticePath&) const = default;

 private:
  std::vector<CornerCoord> vertices_;
};

/// Closed self-avoiding loop on the corner lattice.
///
/// Canonical form: the vertex walk starts at the lexicographically smallest
/// corner and runs counterclockwise, so two cycles with the same edge set
/// compare equal.
class Cycle {
 public:
  Cycle() = default;

  /// Throws Error("not a cycle") unless consecutive vertices (cyclically) are
  /// unit steps apart, all vertices are distinct and there are at least four.
  static Cycle from_vertices(std::vector<CornerCoord> walk);
  /// Throws Error("not a cycle") unless every incident corner has degree 2 and
  /// the edges form a single loop.
  static Cycle from_edges(std::span<const LatticeEdge> edges);
  /// Concatenates `first` (a..b) and `second` (b..a) into a cycle.
  static Cycle join(const LatticePath& first, const LatticePath& second);
  static Cycle of_square(SquareCoord s);

  const std::vector<CornerCoord>& vertices() const { return walk_; }
  std::size_t size() const { return walk_.size(); }

  /// Edges in walk order; edge i joins vertex i and vertex i+1.
  std::vector<LatticeEdge> edges() const;
  LatticeEdge edge(std::size_t i) const;

  bool contains_vertex(CornerCoord c) const;
  bool contains_edge(const LatticeEdge& e) const;
  std::optional<std::size_t> vertex_index(CornerCoord c) const;

  /// Forward (counterclockwise) subpath from vertex `from` to vertex `to`.
  LatticePath arc(CornerCoord from, CornerCoord to) const;

  /// Twice the enclosed area in square units (positive: counterclockwise).
  std::int64_t doubled_area() const;

  /// Inclusive range of squares touching the cycle's corners.
  Window square_bounds() const;

  bool operator==(const Cycle& other) const { return walk_ == other.walk_; }

 private:
  explicit Cycle(std::vector<CornerCoord> walk);

  std::vector<CornerCoord> walk_;
  std::vector<CornerCoord> sorted_vertices_;
  std::vector<LatticeEdge> sorted_edges_;
};

/// Dense interior membership for one cycle, computed by flooding squares
/// from outside an expanded bounding box with the cycle's edges as walls.
class InteriorMap {
 public:
  explicit InteriorMap(const Cycle& c);

  bool contains(SquareCoord s) const {
    if (!box_.contains(s)) return false;
    return inside_[static_cast<std::size_t>(s.y - box_.ymin) * static_cast<std::size_t>(box_.width()) +
                   static_cast<std::size_t>(s.x - box_.xmin)] != 0;
  }
  /// Both cosquares interior (an edge on the cycle is never interior).
  bool edge_interior(const LatticeEdge& e) const;
  /// Both cosquares exterior.
  bool edge_exterior(const LatticeEdge& e) const;
  /// All four squares at the corner exterior (so the corner is off the cycle).
  bool vertex_exterior(CornerCoord c) const;

  SquareSet squares() const;
  std::size_t count() const { return count_; }

 private:
  Window box_;
  std::vector<std::uint8_t> inside_;
  std::size_t count_ = 0;
};

/// Squares whose cell lies in the bounded region of `c`.
SquareSet interior_squares(const Cycle& c);

struct BridgeSet {
  std::vector<LatticePath> bridges;
  Cycle host;
  Cycle target;
};

/// Maximal subpaths of `c` with endvertices on `d` and every other vertex in
/// the exterior of `d`. A vertex of `c` lying on `d` always ends a bridge.
/// Bridges follow `c`'s orientation and are sorted by smallest edge.
BridgeSet find_bridges(const Cycle& c, const Cycle& d);

struct Gap {
  Cycle cycle;             ///< bridge + base
  LatticePath base;        ///< subpath of the target, front() == bridge.front()
  LatticePath remainder;   ///< the other subpath of the target
};

/// The gap cycle `bridge ∪ base`, where the base is the subpath of `d` between
/// the bridge's endvertices that leaves every square of `d` outside.
/// Throws Error("gap undefined") when neither or both candidates qualify.
Gap gap_of(const LatticePath& bridge, const Cycle& d);

/// One step of the iterative merge, recorded for inspection by tests.
struct MergeStep {
  LatticePath bridge;
  Gap gap;
  Cycle result;
};

/// Iteratively replaces the base of each bridge of `c` for the evolving cycle
/// (starting from `d`) by the bridge itself, lexicographically smallest bridge
/// first, until `c` has no bridges left. Throws Error("not mergeable") when the
/// cycles share fewer than two vertices.
Cycle merge_cycles(const Cycle& c, const Cycle& d, std::vector<MergeStep>* trace = nullptr);

struct BridgeDecomposition {
  LatticePath p1;  ///< subpath of d, a bridge for c
  LatticePath p2;  ///< subpath of c, a bridge for d
  Cycle merged;
};

/// Decomposition of the unique cycle made of one bridge of each input that
/// encloses both. Inputs must have disjoint interiors and share at least two
/// vertices (Error "interiors intersect" / "not mergeable").
BridgeDecomposition bridge_decomposition(const Cycle& c, const Cycle& d);

/// Merges the boundary of square `y` into `c`. `y` must lie outside `c`
/// (Error "square interior to cycle") and share an edge with it
/// (Error "detached square").
Cycle merge_square(const Cycle& c, SquareCoord y);

/// Number of corners common to both cycles.
std::size_t shared_vertex_count(const Cycle& a, const Cycle& b);

}  // namespace lattice
