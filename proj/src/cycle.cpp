#include "lattice/cycle.hpp"

#include <algorithm>
#include <map>

namespace lattice {

namespace {

bool unit_step(CornerCoord p, CornerCoord q) {
  const int du = p.u > q.u ? p.u - q.u : q.u - p.u;
  const int dv = p.v > q.v ? p.v - q.v : q.v - p.v;
  return (du == 2 && dv == 0) || (du == 0 && dv == 2);
}

bool has_duplicates(std::vector<CornerCoord> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticePath

LatticePath::LatticePath(std::vector<CornerCoord> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw Error("not a path");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    if (!is_corner(vertices_[i]) || !unit_step(vertices_[i], vertices_[i + 1])) throw Error("not a path");
  }
  if (has_duplicates(vertices_)) throw Error("not a path");
}

std::vector<LatticeEdge> LatticePath::edges() const {
  std::vector<LatticeEdge> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) out.emplace_back(vertices_[i], vertices_[i + 1]);
  return out;
}

LatticePath LatticePath::reversed() const {
  std::vector<CornerCoord> r(vertices_.rbegin(), vertices_.rend());
  return LatticePath(std::move(r));
}

bool LatticePath::same_as(const LatticePath& other) const {
  if (vertices_ == other.vertices_) return true;
  return vertices_.size() == other.vertices_.size() &&
         std::equal(vertices_.begin(), vertices_.end(), other.vertices_.rbegin());
}

// ---------------------------------------------------------------------------
// Cycle

Cycle::Cycle(std::vector<CornerCoord> walk) : walk_(std::move(walk)) {
  const std::size_t n = walk_.size();
  if (n < 4) throw Error("not a cycle");
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_corner(walk_[i]) || !unit_step(walk_[i], walk_[(i + 1) % n])) throw Error("not a cycle");
  }
  sorted_vertices_ = walk_;
  std::sort(sorted_vertices_.begin(), sorted_vertices_.end());
  if (std::adjacent_find(sorted_vertices_.begin(), sorted_vertices_.end()) != sorted_vertices_.end()) {
    throw Error("not a cycle");
  }

  if (doubled_area() < 0) std::reverse(walk_.begin(), walk_.end());
  const auto first = std::min_element(walk_.begin(), walk_.end());
  std::rotate(walk_.begin(), first, walk_.end());

  sorted_edges_ = edges();
  std::sort(sorted_edges_.begin(), sorted_edges_.end());
}

Cycle Cycle::from_vertices(std::vector<CornerCoord> walk) { return Cycle(std::move(walk)); }

Cycle Cycle::from_edges(std::span<const LatticeEdge> edges) {
  std::map<CornerCoord, std::vector<CornerCoord>> adj;
  for (const auto& e : edges) {
    adj[e.a()].push_back(e.b());
    adj[e.b()].push_back(e.a());
  }
  if (adj.empty()) throw Error("not a cycle");
  for (const auto& [corner, nbrs] : adj) {
    if (nbrs.size() != 2 || nbrs[0] == nbrs[1]) throw Error("not a cycle");
  }
  std::vector<CornerCoord> walk;
  walk.reserve(adj.size());
  CornerCoord prev = adj.begin()->first;
  CornerCoord cur = adj.begin()->second[0];
  walk.push_back(prev);
  while (cur != walk.front()) {
    if (walk.size() > adj.size()) throw Error("not a cycle");
    walk.push_back(cur);
    const auto& nbrs = adj.at(cur);
    const CornerCoord next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  if (walk.size() != adj.size()) throw Error("not a cycle");
  return Cycle(std::move(walk));
}

Cycle Cycle::join(const LatticePath& first, const LatticePath& second) {
  if (first.back() != second.front() || second.back() != first.front()) throw Error("not a cycle");
  std::vector<CornerCoord> walk(first.vertices().begin(), first.vertices().end() - 1);
  walk.insert(walk.end(), second.vertices().begin(), second.vertices().end() - 1);
  return Cycle(std::move(walk));
}

Cycle Cycle::of_square(SquareCoord s) {
  const auto c = square_corners(s);
  return Cycle({c.begin(), c.end()});
}

std::vector<LatticeEdge> Cycle::edges() const {
  std::vector<LatticeEdge> out;
  out.reserve(walk_.size());
  for (std::size_t i = 0; i < walk_.size(); ++i) out.push_back(edge(i));
  return out;
}

LatticeEdge Cycle::edge(std::size_t i) const {
  return LatticeEdge(walk_[i % walk_.size()], walk_[(i + 1) % walk_.size()]);
}

bool Cycle::contains_vertex(CornerCoord c) const {
  return std::binary_search(sorted_vertices_.begin(), sorted_vertices_.end(), c);
}

bool Cycle::contains_edge(const LatticeEdge& e) const {
  return std::binary_search(sorted_edges_.begin(), sorted_edges_.end(), e);
}

std::optional<std::size_t> Cycle::vertex_index(CornerCoord c) const {
  if (!contains_vertex(c)) return std::nullopt;
  return static_cast<std::size_t>(std::find(walk_.begin(), walk_.end(), c) - walk_.begin());
}

LatticePath Cycle::arc(CornerCoord from, CornerCoord to) const {
  const auto i = vertex_index(from);
  const auto j = vertex_index(to);
  if (!i || !j || *i == *j) throw Error("arc endpoints not on cycle");
  std::vector<CornerCoord> out;
  for (std::size_t k = *i;; k = (k + 1) % walk_.size()) {
    out.push_back(walk_[k]);
    if (k == *j) break;
  }
  return LatticePath(std::move(out));
}

std::int64_t Cycle::doubled_area() const {
  // Shoelace over doubled coordinates is 8x the area; report 2x.
  std::int64_t s = 0;
  const std::size_t n = walk_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = walk_[i];
    const auto& q = walk_[(i + 1) % n];
    s += static_cast<std::int64_t>(p.u) * q.v - static_cast<std::int64_t>(q.u) * p.v;
  }
  return s / 4;
}

Window Cycle::square_bounds() const {
  int umin = walk_.front().u, umax = umin, vmin = walk_.front().v, vmax = vmin;
  for (const auto& c : walk_) {
    umin = std::min(umin, c.u);
    umax = std::max(umax, c.u);
    vmin = std::min(vmin, c.v);
    vmax = std::max(vmax, c.v);
  }
  return {(umin + 1) / 2, (vmin + 1) / 2, (umax - 1) / 2, (vmax - 1) / 2};
}

std::size_t shared_vertex_count(const Cycle& a, const Cycle& b) {
  std::size_t n = 0;
  for (const auto& v : a.vertices()) n += b.contains_vertex(v) ? 1 : 0;
  return n;
}

// ---------------------------------------------------------------------------
// Interior

InteriorMap::InteriorMap(const Cycle& c) {
  const Window b = c.square_bounds();
  box_ = {b.xmin - 1, b.ymin - 1, b.xmax + 1, b.ymax + 1};
  const int w = box_.width();
  const int h = box_.height();
  const auto idx = [&](int x, int y) {
    return static_cast<std::size_t>(y - box_.ymin) * static_cast<std::size_t>(w) +
           static_cast<std::size_t>(x - box_.xmin);
  };
  const std::size_t n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  // east_wall[i]: wall between cell i and its right neighbour;
  // north_wall[i]: wall between cell i and the cell above.
  std::vector<std::uint8_t> east_wall(n, 0), north_wall(n, 0);
  for (const auto& e : c.edges()) {
    if (e.vertical()) {
      east_wall[idx((e.a().u - 1) / 2, (e.a().v + 1) / 2)] = 1;
    } else {
      north_wall[idx((e.a().u + 1) / 2, (e.a().v - 1) / 2)] = 1;
    }
  }

  std::vector<std::uint8_t> reached(n, 0);
  std::vector<std::pair<int, int>> stack{{box_.xmin, box_.ymin}};
  reached[idx(box_.xmin, box_.ymin)] = 1;
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    const auto visit = [&](int nx, int ny, bool blocked) {
      if (blocked || nx < box_.xmin || nx > box_.xmax || ny < box_.ymin || ny > box_.ymax) return;
      auto& r = reached[idx(nx, ny)];
      if (r) return;
      r = 1;
      stack.emplace_back(nx, ny);
    };
    visit(x + 1, y, x + 1 <= box_.xmax && east_wall[idx(x, y)]);
    visit(x - 1, y, x - 1 >= box_.xmin && east_wall[idx(x - 1, y)]);
    visit(x, y + 1, y + 1 <= box_.ymax && north_wall[idx(x, y)]);
    visit(x, y - 1, y - 1 >= box_.ymin && north_wall[idx(x, y - 1)]);
  }

  inside_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!reached[i]) {
      inside_[i] = 1;
      ++count_;
    }
  }
}

bool InteriorMap::edge_interior(const LatticeEdge& e) const {
  const auto [p, q] = edge_cosquares(e);
  return contains(p) && contains(q);
}

bool InteriorMap::edge_exterior(const LatticeEdge& e) const {
  const auto [p, q] = edge_cosquares(e);
  return !contains(p) && !contains(q);
}

bool InteriorMap::vertex_exterior(CornerCoord c) const {
  for (const auto& s : corner_squares(c)) {
    if (contains(s)) return false;
  }
  return true;
}

SquareSet InteriorMap::squares() const {
  SquareSet out;
  for (int x = box_.xmin; x <= box_.xmax; ++x) {
    for (int y = box_.ymin; y <= box_.ymax; ++y) {
      if (contains({x, y})) out.insert({x, y});
    }
  }
  return out;
}

SquareSet interior_squares(const Cycle& c) { return InteriorMap(c).squares(); }

// ---------------------------------------------------------------------------
// Bridges and gaps

namespace {

BridgeSet find_bridges_with(const Cycle& c, const Cycle& d, const InteriorMap& dmap) {
  BridgeSet out{{}, c, d};
  const auto& walk = c.vertices();
  const std::size_t n = walk.size();
  std::vector<std::size_t> on_d;
  for (std::size_t i = 0; i < n; ++i) {
    if (d.contains_vertex(walk[i])) on_d.push_back(i);
  }
  if (on_d.size() < 2) return out;

  for (std::size_t k = 0; k < on_d.size(); ++k) {
    const std::size_t i = on_d[k];
    const std::size_t j = on_d[(k + 1) % on_d.size()];
    std::vector<CornerCoord> seg;
    bool exterior = true;
    for (std::size_t p = i;; p = (p + 1) % n) {
      seg.push_back(walk[p]);
      if (p == j) break;
      const LatticeEdge e(walk[p], walk[(p + 1) % n]);
      if (d.contains_edge(e) || !dmap.edge_exterior(e)) {
        exterior = false;
        break;
      }
    }
    if (exterior) out.bridges.emplace_back(std::move(seg));
  }

  const auto min_edge = [](const LatticePath& p) {
    const auto es = p.edges();
    return *std::min_element(es.begin(), es.end());
  };
  std::sort(out.bridges.begin(), out.bridges.end(),
            [&](const LatticePath& a, const LatticePath& b) { return min_edge(a) < min_edge(b); });
  return out;
}

bool disjoint_interiors(const InteriorMap& a, const Cycle& a_cycle, const InteriorMap& b) {
  const Window w = a_cycle.square_bounds();
  for (int x = w.xmin; x <= w.xmax; ++x) {
    for (int y = w.ymin; y <= w.ymax; ++y) {
      if (a.contains({x, y}) && b.contains({x, y})) return false;
    }
  }
  return true;
}

Gap gap_with(const LatticePath& bridge, const Cycle& d, const InteriorMap& dmap) {
  const CornerCoord a = bridge.front();
  const CornerCoord b = bridge.back();
  const LatticePath forward = d.arc(a, b);   // a..b along d
  const LatticePath backward = d.arc(b, a);  // b..a along d

  const Cycle via_forward = Cycle::join(bridge, forward.reversed());
  const Cycle via_backward = Cycle::join(bridge, backward);
  const bool forward_empty = disjoint_interiors(InteriorMap(via_forward), via_forward, dmap);
  const bool backward_empty = disjoint_interiors(InteriorMap(via_backward), via_backward, dmap);
  if (forward_empty == backward_empty) throw Error("gap undefined");
  if (forward_empty) return {via_forward, forward, backward.reversed()};
  return {via_backward, backward.reversed(), forward};
}

}  // namespace

BridgeSet find_bridges(const Cycle& c, const Cycle& d) { return find_bridges_with(c, d, InteriorMap(d)); }

Gap gap_of(const LatticePath& bridge, const Cycle& d) { return gap_with(bridge, d, InteriorMap(d)); }

Cycle merge_cycles(const Cycle& c, const Cycle& d, std::vector<MergeStep>* trace) {
  if (shared_vertex_count(c, d) < 2) throw Error("not mergeable");
  Cycle e = d;
  // Each step strictly grows the interior, so c.size() + 1 steps always suffice.
  for (std::size_t step = 0; step <= c.size(); ++step) {
    const InteriorMap emap(e);
    const BridgeSet bridges = find_bridges_with(c, e, emap);
    if (bridges.bridges.empty()) return e;
    const LatticePath& bridge = bridges.bridges.front();
    Gap gap = gap_with(bridge, e, emap);
    Cycle next = Cycle::join(bridge, gap.remainder.reversed());
    if (trace) trace->push_back({bridge, gap, next});
    e = std::move(next);
  }
  throw Error("merge did not terminate");
}

BridgeDecomposition bridge_decomposition(const Cycle& c, const Cycle& d) {
  const InteriorMap cmap(c);
  const InteriorMap dmap(d);
  if (!disjoint_interiors(cmap, c, dmap)) throw Error("interiors intersect");
  if (shared_vertex_count(c, d) < 2) throw Error("not mergeable");

  const SquareSet c_squares = cmap.squares();
  for (const auto& bridge : find_bridges_with(c, d, dmap).bridges) {
    const Gap gap = gap_with(bridge, d, dmap);
    const InteriorMap gmap(gap.cycle);
    const bool encloses_c =
        std::all_of(c_squares.begin(), c_squares.end(), [&](SquareCoord s) { return gmap.contains(s); });
    if (encloses_c) {
      return {gap.remainder, bridge, Cycle::join(bridge, gap.remainder.reversed())};
    }
  }
  throw Error("no gap encloses the cycle");
}

Cycle merge_square(const Cycle& c, SquareCoord y) {
  if (InteriorMap(c).contains(y)) throw Error("square interior to cycle");
  const auto sides = square_boundary(y);
  if (std::none_of(sides.begin(), sides.end(), [&](const LatticeEdge& e) { return c.contains_edge(e); })) {
    throw Error("detached square");
  }
  return merge_cycles(Cycle::of_square(y), c);
}

}  // namespace lattice
