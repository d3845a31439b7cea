#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice/boundary.hpp"
#include "lattice/cycle.hpp"
#include "lattice/duality.hpp"
#include "lattice/rng.hpp"
#include "lattice/verdict.hpp"

namespace lattice {

// Brute-force verifiers. None of these reuse the flood fill, bridge search or
// boundary tracer they are used to check.

/// Parity of crossings between a ray from the centre of `s` towards +x and the
/// vertical edges of the closed walk.
bool ray_cast_interior(const std::vector<CornerCoord>& walk, SquareCoord s);
bool ray_cast_interior(const Cycle& c, SquareCoord s);

/// Every candidate (subpath of d, subpath of c) with common endpoints that
/// closes into a cycle enclosing both interiors; Error("uniqueness violated")
/// unless exactly one exists. Error("not mergeable") below two shared corners.
BridgeDecomposition brute_force_decomposition(const Cycle& c, const Cycle& d);

/// All simple cycles of the graph formed by the sides of `squares`, as vertex
/// walks. Exponential; intended for regions a few squares across.
std::vector<std::vector<CornerCoord>> simple_cycles(const SquareSet& squares);

/// Edges of the square graph that lie on or outside every simple cycle of it,
/// computed by enumeration.
EdgeSet outermost_edges_by_definition(const SquareSet& squares);

/// Compares the traced boundary with the enumerated definition.
Check verify_outermost_definition(const SquareSet& squares, const OutermostBoundary& b,
                                  const std::string& label = "boundary");

/// Ray cast and flood fill agree on every square near the cycle.
Check verify_interior_oracle(const Cycle& c);

/// One bridge decomposition cross-checked against the brute-force search.
Check verify_decomposition(const Cycle& c, const Cycle& d);

struct CheckOptions {
  int reorders = 3;           ///< alternative merge orders replayed
  int definition_max_side = 3;  ///< enumerate cycles only for regions this small
  bool start_edge_invariance = true;
};

struct GridOutcome {
  std::optional<std::string> precondition;  ///< set when the grid is out of scope
  Verdicts checks;

  bool applicable() const { return !precondition.has_value(); }
  bool passed() const { return applicable() && all_passed(checks); }
};

/// The full check set for one grid: duality construction and containment,
/// ring boundary, interior of every produced cycle, outermost boundaries of
/// the plus component, the origin's star component and the ring, cycle-graph
/// acyclicity, each merge step as a bridge decomposition, and start-edge
/// invariance.
GridOutcome check_grid(const GridConfig& grid, const CheckOptions& options = {});

/// Failure record with a grid-text reproduction.
struct Failure {
  std::uint64_t index = 0;  ///< configuration or trial index
  std::string grid;
  std::vector<std::string> failed;  ///< "name: detail"
};

struct EnumSpec {
  int width = 4;
  int height = 4;
  SquareSet forced_occupied;  ///< coordinates relative to the origin
  int margin = 3;
  /// Origin position inside the block, counted from the lower-left square.
  int origin_col = 1;
  int origin_row = 1;
};

inline constexpr int kEnumerationBits = 20;

struct EnumResult {
  std::uint64_t configs = 0;
  std::uint64_t applicable = 0;
  std::map<std::string, std::uint64_t> preconditions;
  std::vector<Failure> failures;
};

/// Runs check_grid on every occupancy of the block's free squares. Throws
/// Error("enumeration bound exceeded") past 2^20 configurations. With a
/// margin below the required two rings, every configuration is reported as
/// "window too tight" without being run.
EnumResult enumerate_window(const EnumSpec& spec, const CheckOptions& options = {}, unsigned jobs = 1);

/// Grid for configuration `index` of `spec` (bit i occupies the i-th free square).
GridConfig enumeration_grid(const EnumSpec& spec, std::uint64_t index);

struct McSpec {
  double p = 0.5;
  int size = 24;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
};

struct McStats {
  std::uint64_t trials = 0;
  std::uint64_t finite = 0;       ///< plus component off the window border
  std::uint64_t applicable = 0;   ///< finite with the required margin
  std::uint64_t passed = 0;       ///< dual_fence succeeded and every check passed
  std::vector<Failure> failures;  ///< trials where the equivalence fails

  double finite_fraction() const { return trials ? static_cast<double>(finite) / static_cast<double>(trials) : 0.0; }
};

/// size×size window with the origin at square (size/2, size/2) from the
/// lower-left; each other square occupied independently with probability p,
/// scanned row by row from the bottom, drawn from stream `trial`.
GridConfig sample_grid(double p, int size, std::uint64_t seed, std::uint64_t trial);

McStats mc_duality(const McSpec& spec, const CheckOptions& options = {}, unsigned jobs = 1);

/// Two cycles with disjoint interiors sharing at least one edge: the
/// boundaries of two random plus-connected regions grown side by side.
/// Returns nothing when a draw has to be rejected.
std::optional<std::pair<Cycle, Cycle>> random_disjoint_pair(Rng& rng, int max_squares = 8);

}  // namespace lattice
