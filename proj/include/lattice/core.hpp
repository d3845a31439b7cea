#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lattice/error.hpp"

namespace lattice {

// Squares are addressed by their centre; corners by doubled coordinates so
// that every corner is an odd-odd integer point and all geometry is exact.

struct SquareCoord {
  int x = 0;
  int y = 0;
  auto operator<=>(const SquareCoord&) const = default;
};

struct CornerCoord {
  int u = 1;
  int v = 1;
  auto operator<=>(const CornerCoord&) const = default;
};

/// Axis-aligned unit segment between two corners. Endpoints are stored
/// ordered (a < b) so that equal edges compare equal.
class LatticeEdge {
 public:
  LatticeEdge() = default;
  /// Throws Error("not a lattice edge") unless the endpoints are odd-odd
  /// corners at doubled distance 2 along one axis.
  LatticeEdge(CornerCoord p, CornerCoord q);

  CornerCoord a() const { return a_; }
  CornerCoord b() const { return b_; }
  bool vertical() const { return a_.u == b_.u; }
  bool has_endpoint(CornerCoord c) const { return c == a_ || c == b_; }
  CornerCoord other(CornerCoord c) const { return c == a_ ? b_ : a_; }

  auto operator<=>(const LatticeEdge&) const = default;

 private:
  CornerCoord a_{-1, -1};
  CornerCoord b_{1, -1};
};

using SquareSet = std::set<SquareCoord>;
using EdgeSet = std::set<LatticeEdge>;

enum class Adjacency { plus, star };

bool plus_adjacent(SquareCoord a, SquareCoord b);
bool star_adjacent(SquareCoord a, SquareCoord b);

bool is_corner(CornerCoord c);

/// Corners of a square in counterclockwise order starting bottom-left.
std::array<CornerCoord, 4> square_corners(SquareCoord s);

/// Edges of a square counterclockwise from the bottom edge.
std::array<LatticeEdge, 4> square_boundary(SquareCoord s);

/// The two squares having `e` on their boundary, lexicographically ordered.
std::pair<SquareCoord, SquareCoord> edge_cosquares(const LatticeEdge& e);

/// The four squares containing a corner.
std::array<SquareCoord, 4> corner_squares(CornerCoord c);

/// The edge shared by two plus-adjacent squares.
LatticeEdge shared_edge(SquareCoord a, SquareCoord b);

inline constexpr std::array<SquareCoord, 4> kPlusOffsets{{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};
inline constexpr std::array<SquareCoord, 8> kStarOffsets{
    {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}};

inline SquareCoord operator+(SquareCoord a, SquareCoord b) { return {a.x + b.x, a.y + b.y}; }

std::string to_string(SquareCoord s);
std::string to_string(CornerCoord c);
std::string to_string(const LatticeEdge& e);

/// Inclusive rectangle of squares.
struct Window {
  int xmin = 0;
  int ymin = 0;
  int xmax = 0;
  int ymax = 0;

  int width() const { return xmax - xmin + 1; }
  int height() const { return ymax - ymin + 1; }
  bool contains(SquareCoord s) const {
    return s.x >= xmin && s.x <= xmax && s.y >= ymin && s.y <= ymax;
  }
  bool on_border(SquareCoord s) const {
    return contains(s) && (s.x == xmin || s.x == xmax || s.y == ymin || s.y == ymax);
  }
  bool operator==(const Window&) const = default;
};

/// Bounding window of a non-empty square set.
Window bounding_window(const SquareSet& squares);

/// Finite window of occupied/vacant squares. Squares outside the window are
/// vacant. The origin square is always occupied.
class GridConfig {
 public:
  GridConfig() = default;
  /// All squares vacant except `origin`. Throws if origin lies outside.
  GridConfig(Window window, SquareCoord origin = {0, 0});

  const Window& window() const { return window_; }
  SquareCoord origin() const { return origin_; }

  bool occupied(SquareCoord s) const {
    return window_.contains(s) && cells_[index(s)] != 0;
  }
  bool vacant(SquareCoord s) const { return !occupied(s); }

  /// Setting the origin vacant throws; setting outside the window throws.
  void set(SquareCoord s, bool occupied);

  std::size_t occupied_count() const;

  bool operator==(const GridConfig&) const = default;

 private:
  std::size_t index(SquareCoord s) const {
    return static_cast<std::size_t>(s.y - window_.ymin) * static_cast<std::size_t>(window_.width()) +
           static_cast<std::size_t>(s.x - window_.xmin);
  }

  Window window_{0, 0, 0, 0};
  SquareCoord origin_{0, 0};
  std::vector<std::uint8_t> cells_{1};
};

}  // namespace lattice

template <>
struct std::hash<lattice::SquareCoord> {
  std::size_t operator()(const lattice::SquareCoord& s) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.x)) << 32) |
                                      static_cast<std::uint32_t>(s.y));
  }
};

template <>
struct std::hash<lattice::CornerCoord> {
  std::size_t operator()(const lattice::CornerCoord& c) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.u)) << 32) |
                                      static_cast<std::uint32_t>(c.v));
  }
};
