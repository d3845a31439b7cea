#include "lattice/boundary.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace lattice {

namespace {

struct DirectedEdge {
  CornerCoord from;
  CornerCoord to;
  SquareCoord owner;  // member square on the left
  bool used = false;
};

// Side k of a square runs corners[k] -> corners[k+1] (counterclockwise) and
// faces the neighbour at kSideOffsets[k].
constexpr std::array<SquareCoord, 4> kSideOffsets{{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};

class ExteriorMask {
 public:
  explicit ExteriorMask(const SquareSet& squares) {
    const Window b = bounding_window(squares);
    box_ = {b.xmin - 1, b.ymin - 1, b.xmax + 1, b.ymax + 1};
    member_.assign(size(), 0);
    for (const auto& s : squares) member_[index(s)] = 1;
    outside_.assign(size(), 0);
    std::vector<SquareCoord> stack{{box_.xmin, box_.ymin}};
    outside_[index(stack.front())] = 1;
    while (!stack.empty()) {
      const SquareCoord s = stack.back();
      stack.pop_back();
      for (const auto& d : kPlusOffsets) {
        const SquareCoord n = s + d;
        if (!box_.contains(n) || member_[index(n)] || outside_[index(n)]) continue;
        outside_[index(n)] = 1;
        stack.push_back(n);
      }
    }
  }

  /// Squares beyond the padded box are outside by construction.
  bool outside(SquareCoord s) const { return !box_.contains(s) || outside_[index(s)] != 0; }

 private:
  std::size_t size() const {
    return static_cast<std::size_t>(box_.width()) * static_cast<std::size_t>(box_.height());
  }
  std::size_t index(SquareCoord s) const {
    return static_cast<std::size_t>(s.y - box_.ymin) * static_cast<std::size_t>(box_.width()) +
           static_cast<std::size_t>(s.x - box_.xmin);
  }

  Window box_;
  std::vector<std::uint8_t> member_;
  std::vector<std::uint8_t> outside_;
};

}  // namespace

std::size_t OutermostBoundary::edge_count() const {
  std::size_t n = 0;
  for (const auto& c : cycles) n += c.size();
  return n;
}

OutermostBoundary outermost_boundary(const SquareSet& squares) {
  OutermostBoundary out;
  if (squares.empty()) return out;
  const ExteriorMask mask(squares);

  std::vector<DirectedEdge> edges;
  for (const auto& s : squares) {
    const auto corners = square_corners(s);
    for (std::size_t k = 0; k < 4; ++k) {
      if (mask.outside(s + kSideOffsets[k])) edges.push_back({corners[k], corners[(k + 1) % 4], s});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const DirectedEdge& a, const DirectedEdge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  const auto outgoing = [&](CornerCoord c) {
    const auto lo = std::lower_bound(edges.begin(), edges.end(), c,
                                     [](const DirectedEdge& e, CornerCoord v) { return e.from < v; });
    std::vector<std::size_t> ids;
    for (auto it = lo; it != edges.end() && it->from == c; ++it) ids.push_back(static_cast<std::size_t>(it - edges.begin()));
    return ids;
  };

  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (edges[start].used) continue;
    std::vector<CornerCoord> walk;
    std::size_t cur = start;
    while (true) {
      edges[cur].used = true;
      walk.push_back(edges[cur].from);
      const auto next_ids = outgoing(edges[cur].to);
      std::size_t next = edges.size();
      if (next_ids.size() == 1) {
        next = next_ids.front();
      } else {
        // Pinch corner: stay with the square we are walking around.
        for (const auto id : next_ids) {
          if (edges[id].owner == edges[cur].owner) next = id;
        }
      }
      if (next == edges.size()) throw Error("boundary trace lost");
      if (next == start) break;
      if (edges[next].used) throw Error("boundary trace revisited an edge");
      cur = next;
    }
    out.cycles.push_back(Cycle::from_vertices(std::move(walk)));
  }

  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.vertices() < b.vertices(); });
  std::map<CornerCoord, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < out.cycles.size(); ++i) {
    for (const auto& v : out.cycles[i].vertices()) seen[v].push_back(i);
  }
  for (auto& [corner, ids] : seen) {
    if (ids.size() > 1) out.pinch_vertices.emplace(corner, std::move(ids));
  }
  return out;
}

OutermostBoundary outermost_boundary(const Component& comp) { return outermost_boundary(comp.squares); }

OutermostBoundary outermost_boundary(const GridConfig& grid, const Component& comp) {
  if (!is_finite(grid, comp)) throw Error("unbounded");
  return outermost_boundary(comp.squares);
}

Cycle outermost_cycle_of(const Component& comp, SquareCoord s) {
  if (!comp.squares.contains(s)) throw Error("square not in component");
  for (const auto& c : outermost_boundary(comp.squares).cycles) {
    if (InteriorMap(c).contains(s)) return c;
  }
  throw Error("square not enclosed by boundary");
}

EdgeSet boundary_edges(const GridConfig& grid, const Component& comp) {
  EdgeSet out;
  for (const auto& s : comp.squares) {
    const auto sides = square_boundary(s);
    for (std::size_t k = 0; k < 4; ++k) {
      const SquareCoord n = s + kSideOffsets[k];
      if (!comp.squares.contains(n) && grid.vacant(n)) out.insert(sides[k]);
    }
  }
  return out;
}

CycleGraph cycle_graph(const OutermostBoundary& b) {
  CycleGraph g{b.cycles.size(), {}};
  for (std::size_t i = 0; i < b.cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < b.cycles.size(); ++j) {
      if (shared_vertex_count(b.cycles[i], b.cycles[j]) > 0) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

bool is_acyclic(const CycleGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : g.edges) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

Verdicts verify_outermost_boundary(const SquareSet& squares, const OutermostBoundary& b,
                                   const std::string& label) {
  Verdicts out;
  const auto add = [&](const std::string& name, bool ok, std::string detail) {
    out.push_back({label + "." + name, ok, ok ? std::string{} : std::move(detail)});
  };

  std::vector<InteriorMap> maps;
  maps.reserve(b.cycles.size());
  for (const auto& c : b.cycles) maps.emplace_back(c);

  add("nonempty", squares.empty() == b.cycles.empty(), "cycle count " + std::to_string(b.cycles.size()));

  // The union of cycles is connected: every cycle reaches cycle 0 through
  // shared corners.
  {
    std::vector<std::size_t> parent(b.cycles.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (std::size_t i = 0; i < b.cycles.size(); ++i) {
      for (std::size_t j = i + 1; j < b.cycles.size(); ++j) {
        if (shared_vertex_count(b.cycles[i], b.cycles[j]) > 0) parent[find(i)] = find(j);
      }
    }
    bool connected = true;
    for (std::size_t i = 1; i < b.cycles.size(); ++i) connected = connected && find(i) == find(0);
    add("connected", connected, "cycle union is disconnected");
  }

  // Pairwise disjoint interiors and at most one common corner.
  {
    std::string detail;
    for (std::size_t i = 0; i < b.cycles.size() && detail.empty(); ++i) {
      for (std::size_t j = i + 1; j < b.cycles.size() && detail.empty(); ++j) {
        if (shared_vertex_count(b.cycles[i], b.cycles[j]) > 1) {
          detail = "cycles " + std::to_string(i) + "," + std::to_string(j) + " share 2+ corners";
        }
        const Window w = b.cycles[i].square_bounds();
        for (int x = w.xmin; x <= w.xmax && detail.empty(); ++x) {
          for (int y = w.ymin; y <= w.ymax && detail.empty(); ++y) {
            if (maps[i].contains({x, y}) && maps[j].contains({x, y})) {
              detail = "cycles " + std::to_string(i) + "," + std::to_string(j) + " both enclose " +
                       to_string(SquareCoord{x, y});
            }
          }
        }
      }
    }
    add("disjoint", detail.empty(), detail);
  }

  // Each member square enclosed by exactly one cycle.
  {
    std::string detail;
    for (const auto& s : squares) {
      const auto n = std::count_if(maps.begin(), maps.end(), [&](const InteriorMap& m) { return m.contains(s); });
      if (n != 1) {
        detail = to_string(s) + " enclosed by " + std::to_string(n) + " cycles";
        break;
      }
    }
    add("covers", detail.empty(), detail);
  }

  // Each edge separates an enclosed member square from a non-member
  // square lying outside every cycle.
  {
    std::string detail;
    for (std::size_t i = 0; i < b.cycles.size() && detail.empty(); ++i) {
      for (const auto& e : b.cycles[i].edges()) {
        const auto [p, q] = edge_cosquares(e);
        const bool p_in = squares.contains(p);
        const bool q_in = squares.contains(q);
        const SquareCoord member = p_in ? p : q;
        const SquareCoord other = p_in ? q : p;
        const bool outside_all =
            std::none_of(maps.begin(), maps.end(), [&](const InteriorMap& m) { return m.contains(other); });
        if (p_in == q_in || !maps[i].contains(member) || !outside_all) {
          detail = "edge " + to_string(e) + " of cycle " + std::to_string(i);
          break;
        }
      }
    }
    add("edges", detail.empty(), detail);
  }
  return out;
}

}  // namespace lattice
