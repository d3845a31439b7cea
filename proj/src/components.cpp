#include "lattice/components.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <span>

namespace lattice {

namespace {

std::span<const SquareCoord> offsets(Adjacency kind) {
  if (kind == Adjacency::plus) return kPlusOffsets;
  return kStarOffsets;
}

template <class Member>
SquareSet flood(SquareCoord seed, Adjacency kind, Member&& member) {
  SquareSet seen{seed};
  std::deque<SquareCoord> queue{seed};
  while (!queue.empty()) {
    const SquareCoord s = queue.front();
    queue.pop_front();
    // Offsets are listed in lexicographic order so discovery is reproducible.
    for (const auto& d : offsets(kind)) {
      const SquareCoord n = s + d;
      if (!member(n) || seen.contains(n)) continue;
      seen.insert(n);
      queue.push_back(n);
    }
  }
  return seen;
}

}  // namespace

Component component_of(const GridConfig& grid, SquareCoord seed, Adjacency kind) {
  if (!grid.occupied(seed)) throw Error("seed vacant");
  return {kind, flood(seed, kind, [&](SquareCoord s) { return grid.occupied(s); }), seed};
}

SquareSet component_within(const SquareSet& squares, SquareCoord seed, Adjacency kind) {
  if (!squares.contains(seed)) throw Error("seed not in set");
  return flood(seed, kind, [&](SquareCoord s) { return squares.contains(s); });
}

bool is_connected(const SquareSet& squares, Adjacency kind) {
  if (squares.empty()) return true;
  return component_within(squares, *squares.begin(), kind).size() == squares.size();
}

bool is_finite(const GridConfig& grid, const Component& comp) {
  return std::none_of(comp.squares.begin(), comp.squares.end(),
                      [&](SquareCoord s) { return grid.window().on_border(s); });
}

int window_margin(const GridConfig& grid, const Component& comp) {
  const Window& w = grid.window();
  int margin = std::max(w.width(), w.height());
  for (const auto& s : comp.squares) {
    margin = std::min({margin, s.x - w.xmin, w.xmax - s.x, s.y - w.ymin, w.ymax - s.y});
  }
  return margin;
}

LambdaSets lambda_sets(const GridConfig& grid, const Component& comp, const Cycle& outer) {
  LambdaSets out;
  for (const auto& s : comp.squares) {
    for (const auto& d : kPlusOffsets) {
      const SquareCoord n = s + d;
      if (grid.vacant(n)) out.lambda_all.insert(n);
    }
  }
  const InteriorMap inside(outer);
  for (const auto& e : outer.edges()) {
    const auto [p, q] = edge_cosquares(e);
    const SquareCoord outside = inside.contains(p) ? q : p;
    if (grid.vacant(outside)) out.lambda_exterior.insert(outside);
  }
  return out;
}

VacantGraph vacant_graph(const SquareSet& squares) {
  VacantGraph g;
  g.vertices.assign(squares.begin(), squares.end());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (star_adjacent(g.vertices[i], g.vertices[j])) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

bool contains_cycle(const VacantGraph& g) {
  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : g.edges) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra == rb) return true;
    parent[ra] = rb;
  }
  return false;
}

}  // namespace lattice
