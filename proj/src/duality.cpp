#include "lattice/duality.hpp"

#include <algorithm>
#include <numeric>

#include "lattice/rng.hpp"

namespace lattice {

bool is_scycle(std::span<const SquareCoord> squares) {
  const std::size_t n = squares.size();
  if (n < 3) return false;
  std::vector<SquareCoord> sorted(squares.begin(), squares.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!star_adjacent(squares[i], squares[(i + 1) % n])) return false;
  }
  return true;
}

bool same_cyclic_sequence(std::span<const SquareCoord> a, std::span<const SquareCoord> b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool forward = true, backward = true;
    for (std::size_t i = 0; i < n && (forward || backward); ++i) {
      forward = forward && a[i] == b[(shift + i) % n];
      backward = backward && a[i] == b[(shift + n - i) % n];
    }
    if (forward || backward) return true;
  }
  return false;
}

FenceMerge merge_fence(const Cycle& outer, std::span<const SquareCoord> vacant_by_edge,
                       std::span<const std::size_t> priority, bool keep_intermediates) {
  const auto outer_edges = outer.edges();
  if (vacant_by_edge.size() != outer_edges.size()) throw Error("one vacant square per boundary edge required");

  FenceMerge out{outer, {}, {}};
  const auto remaining = [&](const Cycle& c) {
    return static_cast<std::size_t>(
        std::count_if(outer_edges.begin(), outer_edges.end(), [&](const LatticeEdge& e) { return c.contains_edge(e); }));
  };

  std::size_t left = remaining(out.final_cycle);
  while (left > 0) {
    const auto pick = std::find_if(priority.begin(), priority.end(), [&](std::size_t j) {
      return out.final_cycle.contains_edge(outer_edges.at(j));
    });
    if (pick == priority.end()) throw Error("merge order does not cover every boundary edge");
    const SquareCoord y = vacant_by_edge[*pick];
    Cycle next = merge_square(out.final_cycle, y);
    const std::size_t after = remaining(next);
    if (after >= left) throw Error("duality violated");
    out.merged_edges.push_back(*pick);
    if (keep_intermediates) out.intermediates.push_back(next);
    out.final_cycle = std::move(next);
    left = after;
  }
  return out;
}

std::vector<SquareCoord> extract_sequence(const Cycle& fence, const SquareSet& allowed, std::size_t start_edge) {
  const InteriorMap inside(fence);
  std::vector<SquareCoord> seq;
  for (std::size_t k = 0; k < fence.size(); ++k) {
    const auto [p, q] = edge_cosquares(fence.edge(start_edge + k));
    const SquareCoord z = inside.contains(p) ? p : q;
    if (!allowed.contains(z)) throw Error("duality violated");
    if (seq.empty() || seq.back() != z) seq.push_back(z);
  }
  while (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
  return seq;
}

std::vector<std::vector<std::size_t>> alternative_orders(std::size_t n, int count) {
  std::vector<std::vector<std::size_t>> orders;
  for (int k = 0; k < count; ++k) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (k == 0) {
      std::reverse(order.begin(), order.end());
    } else {
      Rng rng(0x6f72646572ull, static_cast<std::uint64_t>(k));
      for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    }
    orders.push_back(std::move(order));
  }
  return orders;
}

namespace {

// Invariants of every intermediate cycle of the fence merge: the component
// stays enclosed, every edge comes from the component boundary or a merged
// candidate square, a boundary edge remains on the cycle exactly when its
// vacant square is still outside, and merged squares are enclosed.
Check step_invariants(const DualityReport& r) {
  const auto outer_edges = r.outer.edges();
  EdgeSet allowed(outer_edges.begin(), outer_edges.end());
  for (const auto& y : r.lambdas.lambda_exterior) {
    for (const auto& e : square_boundary(y)) allowed.insert(e);
  }
  for (std::size_t i = 0; i < r.intermediates.size(); ++i) {
    const Cycle& c = r.intermediates[i];
    const InteriorMap inside(c);
    const std::string at = "step " + std::to_string(i + 1) + ": ";
    for (const auto& s : r.component.squares) {
      if (!inside.contains(s)) return {"merge.step_invariants", false, at + "component square " + to_string(s) + " outside"};
    }
    for (const auto& e : c.edges()) {
      if (!allowed.contains(e)) return {"merge.step_invariants", false, at + "foreign edge " + to_string(e)};
    }
    for (std::size_t j = 0; j < outer_edges.size(); ++j) {
      const bool on = c.contains_edge(outer_edges[j]);
      if (on == inside.contains(r.vacant_by_edge[j])) {
        return {"merge.step_invariants", false, at + "edge/square mismatch at boundary edge " + std::to_string(j)};
      }
      if (!on && !inside.edge_interior(outer_edges[j])) {
        return {"merge.step_invariants", false, at + "boundary edge " + std::to_string(j) + " neither on nor inside"};
      }
    }
    for (std::size_t k = 0; k <= i; ++k) {
      if (!inside.contains(r.vacant_by_edge[r.merge_order[k]])) {
        return {"merge.step_invariants", false, at + "merged square left outside"};
      }
    }
  }
  return {"merge.step_invariants", true, {}};
}

}  // namespace

DualityReport dual_fence(const GridConfig& grid) {
  DualityReport r;
  r.component = component_of(grid, grid.origin(), Adjacency::plus);
  if (!is_finite(grid, r.component)) throw Error("component not finite");
  if (window_margin(grid, r.component) < kRequiredMargin) throw Error("window too tight");

  const OutermostBoundary boundary = outermost_boundary(r.component);
  if (boundary.cycles.size() != 1) throw Error("duality violated");
  r.outer = boundary.cycles.front();
  r.lambdas = lambda_sets(grid, r.component, r.outer);

  const InteriorMap outer_inside(r.outer);
  const auto outer_edges = r.outer.edges();
  for (const auto& e : outer_edges) {
    const auto [p, q] = edge_cosquares(e);
    r.vacant_by_edge.push_back(outer_inside.contains(p) ? q : p);
  }

  std::vector<std::size_t> order(outer_edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  FenceMerge merged = merge_fence(r.outer, r.vacant_by_edge, order, true);
  r.d_fin = merged.final_cycle;
  r.partial_h = r.d_fin;
  r.merge_order = std::move(merged.merged_edges);
  r.intermediates = std::move(merged.intermediates);

  const std::vector<SquareCoord> seq = extract_sequence(r.d_fin, r.lambdas.lambda_exterior);
  if (!is_scycle(seq)) throw Error("duality violated");
  r.h_out.squares = seq;

  r.checks.push_back(step_invariants(r));
  const InteriorMap fence_inside(r.d_fin);
  {
    std::string detail;
    for (const auto& e : r.d_fin.edges()) {
      const auto [p, q] = edge_cosquares(e);
      if (!r.lambdas.lambda_exterior.contains(p) && !r.lambdas.lambda_exterior.contains(q)) {
        detail = "edge " + to_string(e) + " belongs to no candidate square";
        break;
      }
    }
    r.checks.push_back({"fence.candidate_edges_only", detail.empty(), detail});
  }
  {
    std::string detail;
    for (const auto& e : outer_edges) {
      if (r.d_fin.contains_edge(e) || !fence_inside.edge_interior(e)) {
        detail = "boundary edge " + to_string(e) + " not strictly inside";
        break;
      }
    }
    r.checks.push_back({"fence.encloses_component_boundary", detail.empty(), detail});
  }
  {
    std::string detail;
    for (const auto* set : {&r.component.squares, &r.lambdas.lambda_exterior}) {
      for (const auto& s : *set) {
        if (!fence_inside.contains(s) && detail.empty()) detail = to_string(s) + " outside the fence";
      }
    }
    r.checks.push_back({"fence.encloses_component_and_candidates", detail.empty(), detail});
  }
  {
    std::string detail;
    for (const auto& z : r.h_out.squares) {
      const auto sides = square_boundary(z);
      if (std::none_of(sides.begin(), sides.end(), [&](const LatticeEdge& e) { return r.d_fin.contains_edge(e); })) {
        detail = to_string(z) + " has no edge on the fence";
        break;
      }
    }
    r.checks.push_back({"ring.edge_on_fence", detail.empty(), detail});
  }
  return r;
}

Verdicts verify_order_independence(const DualityReport& r, int reorders) {
  Verdicts out;
  const auto& ring = r.h_out.squares;
  const auto subset_of = [&](const SquareSet& big) {
    return std::all_of(ring.begin(), ring.end(), [&](SquareCoord s) { return big.contains(s); });
  };
  out.push_back({"ring.is_scycle", is_scycle(ring), "sequence is not a star ring"});
  out.push_back({"ring.within_lambda_all", subset_of(r.lambdas.lambda_all), "ring square not adjacent to component"});
  out.push_back({"ring.within_lambda_exterior", subset_of(r.lambdas.lambda_exterior), "ring square not outside boundary"});

  const OutermostBoundary ring_boundary = outermost_boundary(r.h_out.as_set());
  const bool single = ring_boundary.cycles.size() == 1 && ring_boundary.cycles.front() == r.partial_h;
  out.push_back({"ring.boundary_is_fence", single,
                 "ring boundary has " + std::to_string(ring_boundary.cycles.size()) + " cycle(s) or differs from fence"});

  {
    std::string detail;
    for (const auto& z : ring) {
      const auto sides = square_boundary(z);
      if (std::none_of(sides.begin(), sides.end(), [&](const LatticeEdge& e) { return r.partial_h.contains_edge(e); })) {
        detail = to_string(z);
        break;
      }
    }
    out.push_back({"ring.every_square_on_boundary", detail.empty(), detail});
  }

  const InteriorMap inside(r.partial_h);
  {
    std::string detail;
    for (const auto& s : r.component.squares) {
      if (!inside.contains(s)) {
        detail = to_string(s);
        break;
      }
    }
    out.push_back({"fence.encloses_component", detail.empty(), detail});
  }
  {
    std::string detail;
    for (const auto& s : r.lambdas.lambda_all) {
      if (!inside.contains(s)) {
        detail = to_string(s);
        break;
      }
    }
    out.push_back({"fence.encloses_lambda_all", detail.empty(), detail});
  }
  {
    std::string detail;
    for (const auto& order : alternative_orders(r.vacant_by_edge.size(), reorders)) {
      const Cycle alt = merge_fence(r.outer, r.vacant_by_edge, order).final_cycle;
      if (!(alt == r.d_fin)) {
        detail = "merge order starting at edge " + std::to_string(order.front()) + " gives a different fence";
        break;
      }
    }
    out.push_back({"fence.order_independent", detail.empty(), detail});
  }
  out.push_back({"ring.graph_has_cycle", contains_cycle(vacant_graph(r.h_out.as_set())), "ring graph is a forest"});
  return out;
}

Check verify_scycle_boundary(const SCycle& s) {
  if (!is_scycle(s.squares)) return {"ring.single_cycle_boundary", false, "not a star ring"};
  const auto b = outermost_boundary(s.as_set());
  return {"ring.single_cycle_boundary", b.cycles.size() == 1,
          b.cycles.size() == 1 ? std::string{} : std::to_string(b.cycles.size()) + " boundary cycles"};
}

Check verify_interior_plus_connected(const Cycle& c) {
  const SquareSet inside = interior_squares(c);
  if (!is_connected(inside, Adjacency::plus)) return {"cycle.interior_plus_connected", false, "interior not plus-connected"};
  const auto b = outermost_boundary(inside);
  const bool ok = b.cycles.size() == 1 && b.cycles.front() == c;
  return {"cycle.interior_plus_connected", ok, ok ? std::string{} : "interior boundary differs from cycle"};
}

}  // namespace lattice
