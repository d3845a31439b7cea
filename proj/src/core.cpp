#include "lattice/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace lattice {

namespace {

bool odd(int n) { return (n & 1) != 0; }

}  // namespace

LatticeEdge::LatticeEdge(CornerCoord p, CornerCoord q) {
  if (!is_corner(p) || !is_corner(q)) throw Error("not a lattice edge");
  const int du = std::abs(p.u - q.u);
  const int dv = std::abs(p.v - q.v);
  if (!((du == 2 && dv == 0) || (du == 0 && dv == 2))) throw Error("not a lattice edge");
  a_ = std::min(p, q);
  b_ = std::max(p, q);
}

bool plus_adjacent(SquareCoord a, SquareCoord b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}

bool star_adjacent(SquareCoord a, SquareCoord b) {
  return a != b && std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)) == 1;
}

bool is_corner(CornerCoord c) { return odd(c.u) && odd(c.v); }

std::array<CornerCoord, 4> square_corners(SquareCoord s) {
  const int u = 2 * s.x;
  const int v = 2 * s.y;
  return {{{u - 1, v - 1}, {u + 1, v - 1}, {u + 1, v + 1}, {u - 1, v + 1}}};
}

std::array<LatticeEdge, 4> square_boundary(SquareCoord s) {
  const auto c = square_corners(s);
  return {{LatticeEdge(c[0], c[1]), LatticeEdge(c[1], c[2]), LatticeEdge(c[2], c[3]),
           LatticeEdge(c[3], c[0])}};
}

std::pair<SquareCoord, SquareCoord> edge_cosquares(const LatticeEdge& e) {
  const CornerCoord a = e.a();
  if (e.vertical()) {
    const int y = (a.v + 1) / 2;
    return {{(a.u - 1) / 2, y}, {(a.u + 1) / 2, y}};
  }
  const int x = (a.u + 1) / 2;
  return {{x, (a.v - 1) / 2}, {x, (a.v + 1) / 2}};
}

std::array<SquareCoord, 4> corner_squares(CornerCoord c) {
  const int xl = (c.u - 1) / 2;
  const int yl = (c.v - 1) / 2;
  return {{{xl, yl}, {xl + 1, yl}, {xl, yl + 1}, {xl + 1, yl + 1}}};
}

LatticeEdge shared_edge(SquareCoord a, SquareCoord b) {
  if (!plus_adjacent(a, b)) throw Error("squares do not share an edge");
  const auto ea = square_boundary(a);
  const auto eb = square_boundary(b);
  for (const auto& e : ea) {
    if (std::find(eb.begin(), eb.end(), e) != eb.end()) return e;
  }
  throw Error("squares do not share an edge");
}

std::string to_string(SquareCoord s) {
  return "(" + std::to_string(s.x) + "," + std::to_string(s.y) + ")";
}

std::string to_string(CornerCoord c) {
  return "<" + std::to_string(c.u) + "," + std::to_string(c.v) + ">";
}

std::string to_string(const LatticeEdge& e) { return to_string(e.a()) + "-" + to_string(e.b()); }

Window bounding_window(const SquareSet& squares) {
  if (squares.empty()) throw Error("empty square set");
  Window w{squares.begin()->x, squares.begin()->y, squares.begin()->x, squares.begin()->y};
  for (const auto& s : squares) {
    w.xmin = std::min(w.xmin, s.x);
    w.xmax = std::max(w.xmax, s.x);
    w.ymin = std::min(w.ymin, s.y);
    w.ymax = std::max(w.ymax, s.y);
  }
  return w;
}

GridConfig::GridConfig(Window window, SquareCoord origin)
    : window_(window), origin_(origin) {
  if (window.width() <= 0 || window.height() <= 0) throw Error("empty window");
  if (!window.contains(origin)) throw Error("origin outside window");
  cells_.assign(static_cast<std::size_t>(window.width()) * static_cast<std::size_t>(window.height()), 0);
  cells_[index(origin)] = 1;
}

void GridConfig::set(SquareCoord s, bool occ) {
  if (!window_.contains(s)) throw Error("square outside window");
  if (s == origin_ && !occ) throw Error("origin must be occupied");
  cells_[index(s)] = occ ? 1 : 0;
}

std::size_t GridConfig::occupied_count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

}  // namespace lattice
