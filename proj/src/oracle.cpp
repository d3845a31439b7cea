#include "lattice/oracle.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "lattice/grid_text.hpp"

namespace lattice {

bool ray_cast_interior(const std::vector<CornerCoord>& walk, SquareCoord s) {
  // The ray runs along v = 2y and meets a vertical edge at u > 2x exactly
  // when the edge spans v = 2y - 1 .. 2y + 1.
  bool inside = false;
  const std::size_t n = walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    const CornerCoord p = walk[i];
    const CornerCoord q = walk[(i + 1) % n];
    if (p.u != q.u || p.u <= 2 * s.x) continue;
    if (std::min(p.v, q.v) == 2 * s.y - 1) inside = !inside;
  }
  return inside;
}

bool ray_cast_interior(const Cycle& c, SquareCoord s) { return ray_cast_interior(c.vertices(), s); }

namespace {

Window walk_bounds(const std::vector<CornerCoord>& walk) {
  Window w{INT32_MAX, INT32_MAX, INT32_MIN, INT32_MIN};
  for (const auto& p : walk) {
    w.xmin = std::min(w.xmin, (p.u - 1) / 2);
    w.xmax = std::max(w.xmax, (p.u + 1) / 2);
    w.ymin = std::min(w.ymin, (p.v - 1) / 2);
    w.ymax = std::max(w.ymax, (p.v + 1) / 2);
  }
  return w;
}

std::vector<SquareCoord> ray_interior(const std::vector<CornerCoord>& walk) {
  std::vector<SquareCoord> out;
  const Window w = walk_bounds(walk);
  for (int y = w.ymin; y <= w.ymax; ++y) {
    for (int x = w.xmin; x <= w.xmax; ++x) {
      if (ray_cast_interior(walk, {x, y})) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<CornerCoord> shared_corners(const Cycle& c, const Cycle& d) {
  std::vector<CornerCoord> out;
  for (const auto& v : c.vertices()) {
    if (d.contains_vertex(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::string> failure_lines(const Verdicts& v) {
  std::vector<std::string> out;
  for (const auto& c : v) {
    if (!c.passed) out.push_back(c.name + ": " + c.detail);
  }
  return out;
}

/// Runs `fn(i, local)` for i in [0, count) over `jobs` threads, each with its
/// own accumulator; returns the accumulators for merging.
template <class Local, class Fn>
std::vector<Local> run_sharded(std::uint64_t count, unsigned jobs, Fn fn) {
  jobs = std::max(1u, jobs);
  std::vector<Local> locals(jobs);
  auto worker = [&](unsigned t) {
    for (std::uint64_t i = t; i < count; i += jobs) fn(i, locals[t]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
  }
  return locals;
}

void sort_failures(std::vector<Failure>& f) {
  std::sort(f.begin(), f.end(), [](const Failure& a, const Failure& b) { return a.index < b.index; });
}

}  // namespace

BridgeDecomposition brute_force_decomposition(const Cycle& c, const Cycle& d) {
  const std::vector<CornerCoord> shared = shared_corners(c, d);
  if (shared.size() < 2) throw Error("not mergeable");

  std::vector<SquareCoord> required = ray_interior(c.vertices());
  const std::vector<SquareCoord> d_inside = ray_interior(d.vertices());
  required.insert(required.end(), d_inside.begin(), d_inside.end());
  const auto needed_area = static_cast<std::int64_t>(required.size());

  std::map<std::vector<CornerCoord>, BridgeDecomposition> found;
  for (std::size_t i = 0; i < shared.size(); ++i) {
    for (std::size_t j = i + 1; j < shared.size(); ++j) {
      const CornerCoord a = shared[i];
      const CornerCoord b = shared[j];
      // d-side runs a -> b, c-side runs b -> a.
      const LatticePath d_side[2] = {d.arc(a, b), d.arc(b, a).reversed()};
      const LatticePath c_side[2] = {c.arc(b, a), c.arc(a, b).reversed()};
      for (const auto& dp : d_side) {
        for (const auto& cp : c_side) {
          Cycle e;
          try {
            e = Cycle::join(dp, cp);
          } catch (const Error&) {
            continue;
          }
          if (e.doubled_area() < 2 * needed_area) continue;
          const bool encloses = std::all_of(required.begin(), required.end(),
                                            [&](SquareCoord s) { return ray_cast_interior(e, s); });
          if (encloses) found.emplace(e.vertices(), BridgeDecomposition{dp, cp, e});
        }
      }
    }
  }
  if (found.size() != 1) {
    throw Error("uniqueness violated: " + std::to_string(found.size()) + " enclosing cycles");
  }
  return found.begin()->second;
}

std::vector<std::vector<CornerCoord>> simple_cycles(const SquareSet& squares) {
  std::vector<CornerCoord> verts;
  for (const auto& s : squares) {
    for (const auto& p : square_corners(s)) verts.push_back(p);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto index_of = [&](CornerCoord p) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
  };
  std::vector<std::vector<std::size_t>> adj(verts.size());
  EdgeSet edges;
  for (const auto& s : squares) {
    for (const auto& e : square_boundary(s)) edges.insert(e);
  }
  for (const auto& e : edges) {
    const std::size_t i = index_of(e.a());
    const std::size_t j = index_of(e.b());
    adj[i].push_back(j);
    adj[j].push_back(i);
  }

  // Each cycle is found once from its smallest vertex, in the direction whose
  // second vertex is smaller than its last.
  std::vector<std::vector<CornerCoord>> out;
  std::vector<std::size_t> path;
  std::vector<char> on_path(verts.size(), 0);
  std::size_t start = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    for (std::size_t w : adj[v]) {
      if (w == start) {
        if (path.size() >= 4 && path[1] < path.back()) {
          std::vector<CornerCoord> walk;
          walk.reserve(path.size());
          for (std::size_t k : path) walk.push_back(verts[k]);
          out.push_back(std::move(walk));
        }
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        dfs(w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (start = 0; start < verts.size(); ++start) {
    path = {start};
    on_path[start] = 1;
    dfs(start);
    on_path[start] = 0;
  }
  return out;
}

EdgeSet outermost_edges_by_definition(const SquareSet& squares) {
  EdgeSet candidates;
  for (const auto& s : squares) {
    for (const auto& e : square_boundary(s)) candidates.insert(e);
  }
  for (const auto& walk : simple_cycles(squares)) {
    EdgeSet on_cycle;
    for (std::size_t i = 0; i < walk.size(); ++i) on_cycle.insert(LatticeEdge(walk[i], walk[(i + 1) % walk.size()]));
    for (auto it = candidates.begin(); it != candidates.end();) {
      // An edge off the cycle has both cosquares on the same side of it.
      if (!on_cycle.contains(*it) && ray_cast_interior(walk, edge_cosquares(*it).first)) {
        it = candidates.erase(it);
      } else {
        ++it;
      }
    }
  }
  return candidates;
}

Check verify_outermost_definition(const SquareSet& squares, const OutermostBoundary& b, const std::string& label) {
  const std::string name = label + ".definition";
  EdgeSet traced;
  for (const auto& c : b.cycles) {
    for (const auto& e : c.edges()) traced.insert(e);
  }
  const EdgeSet expected = outermost_edges_by_definition(squares);
  for (const auto& e : expected) {
    if (!traced.contains(e)) return {name, false, "missing edge " + to_string(e)};
  }
  for (const auto& e : traced) {
    if (!expected.contains(e)) return {name, false, "extra edge " + to_string(e)};
  }
  return {name, true, {}};
}

Check verify_interior_oracle(const Cycle& c) {
  const InteriorMap fill(c);
  Window w = c.square_bounds();
  for (int y = w.ymin - 1; y <= w.ymax + 1; ++y) {
    for (int x = w.xmin - 1; x <= w.xmax + 1; ++x) {
      if (fill.contains({x, y}) != ray_cast_interior(c, {x, y})) {
        return {"oracle.interior", false, "disagree at " + to_string(SquareCoord{x, y})};
      }
    }
  }
  return {"oracle.interior", true, {}};
}

Check verify_decomposition(const Cycle& c, const Cycle& d) {
  const std::string name = "decomposition.brute_force";
  BridgeDecomposition fast;
  BridgeDecomposition slow;
  try {
    fast = bridge_decomposition(c, d);
  } catch (const Error& e) {
    return {name, false, std::string("construction: ") + e.what()};
  }
  try {
    slow = brute_force_decomposition(c, d);
  } catch (const Error& e) {
    return {name, false, std::string("enumeration: ") + e.what()};
  }
  if (!(fast.merged == slow.merged)) return {name, false, "merged cycles differ"};
  if (!fast.p1.same_as(slow.p1) || !fast.p2.same_as(slow.p2)) return {name, false, "bridges differ"};
  return {name, true, {}};
}

namespace {

/// Folds a per-item check over a list into one verdict naming the first failure.
template <class Items, class Fn>
Check first_failure(const std::string& name, const Items& items, Fn fn) {
  std::size_t i = 0;
  for (const auto& item : items) {
    const Check c = fn(item);
    if (!c.passed) return {name, false, "item " + std::to_string(i) + ": " + c.detail};
    ++i;
  }
  return {name, true, {}};
}

void check_region(Verdicts& out, const SquareSet& squares, const std::string& label, const CheckOptions& options) {
  OutermostBoundary b;
  try {
    b = outermost_boundary(squares);
  } catch (const Error& e) {
    out.push_back({label + ".trace", false, e.what()});
    return;
  }
  append(out, verify_outermost_boundary(squares, b, label));
  out.push_back({label + ".acyclic", is_acyclic(cycle_graph(b)), "boundary cycles form a loop"});
  const Window box = bounding_window(squares);
  if (box.width() <= options.definition_max_side && box.height() <= options.definition_max_side) {
    out.push_back(verify_outermost_definition(squares, b, label));
  }
}

}  // namespace

GridOutcome check_grid(const GridConfig& grid, const CheckOptions& options) {
  GridOutcome out;
  DualityReport r;
  try {
    r = dual_fence(grid);
  } catch (const Error& e) {
    const std::string what = e.what();
    if (what == "component not finite" || what == "window too tight") {
      out.precondition = what;
    } else {
      out.checks.push_back({"duality.construct", false, what});
    }
    return out;
  }

  append(out.checks, r.checks);
  append(out.checks, verify_order_independence(r, options.reorders));
  out.checks.push_back(verify_scycle_boundary(r.h_out));

  std::vector<Cycle> produced = {r.outer};
  produced.insert(produced.end(), r.intermediates.begin(), r.intermediates.end());
  if (!(produced.back() == r.d_fin)) produced.push_back(r.d_fin);
  out.checks.push_back(first_failure("cycle.interior_plus_connected", produced,
                                     [](const Cycle& c) { return verify_interior_plus_connected(c); }));
  out.checks.push_back(
      first_failure("oracle.interior", produced, [](const Cycle& c) { return verify_interior_oracle(c); }));

  std::vector<std::size_t> steps(r.merge_order.size());
  for (std::size_t i = 0; i < steps.size(); ++i) steps[i] = i;
  out.checks.push_back(first_failure("decomposition.merge_steps", steps, [&](std::size_t i) {
    const Cycle& before = i == 0 ? r.outer : r.intermediates[i - 1];
    return verify_decomposition(before, Cycle::of_square(r.vacant_by_edge[r.merge_order[i]]));
  }));

  check_region(out.checks, r.component.squares, "plus", options);
  check_region(out.checks, component_of(grid, grid.origin(), Adjacency::star).squares, "star", options);
  check_region(out.checks, r.h_out.as_set(), "ring", options);

  if (options.start_edge_invariance) {
    std::string detail;
    for (std::size_t k = 1; k < r.d_fin.size() && detail.empty(); ++k) {
      try {
        const auto seq = extract_sequence(r.d_fin, r.lambdas.lambda_exterior, k);
        if (!same_cyclic_sequence(seq, r.h_out.squares)) detail = "start edge " + std::to_string(k) + " differs";
      } catch (const Error& e) {
        detail = "start edge " + std::to_string(k) + ": " + e.what();
      }
    }
    out.checks.push_back({"ring.start_edge_invariant", detail.empty(), detail});
  }
  return out;
}

namespace {

struct Block {
  Window box;
  std::vector<SquareCoord> free;
};

Block block_of(const EnumSpec& spec) {
  if (spec.width < 1 || spec.height < 1) throw Error("empty enumeration block");
  if (spec.origin_col < 0 || spec.origin_col >= spec.width || spec.origin_row < 0 || spec.origin_row >= spec.height) {
    throw Error("origin outside enumeration block");
  }
  if (spec.margin < 0) throw Error("negative margin");
  Block b;
  b.box = {-spec.origin_col, -spec.origin_row, spec.width - 1 - spec.origin_col, spec.height - 1 - spec.origin_row};
  for (const auto& s : spec.forced_occupied) {
    if (!b.box.contains(s)) throw Error("forced square outside enumeration block");
  }
  for (int y = b.box.ymin; y <= b.box.ymax; ++y) {
    for (int x = b.box.xmin; x <= b.box.xmax; ++x) {
      const SquareCoord s{x, y};
      if (s != SquareCoord{0, 0} && !spec.forced_occupied.contains(s)) b.free.push_back(s);
    }
  }
  if (b.free.size() > static_cast<std::size_t>(kEnumerationBits)) throw Error("enumeration bound exceeded");
  return b;
}

GridConfig grid_for(const EnumSpec& spec, const Block& b, std::uint64_t index) {
  const Window win{b.box.xmin - spec.margin, b.box.ymin - spec.margin, b.box.xmax + spec.margin,
                   b.box.ymax + spec.margin};
  GridConfig grid(win, SquareCoord{0, 0});
  for (const auto& s : spec.forced_occupied) grid.set(s, true);
  for (std::size_t i = 0; i < b.free.size(); ++i) {
    if ((index >> i) & 1u) grid.set(b.free[i], true);
  }
  return grid;
}

}  // namespace

GridConfig enumeration_grid(const EnumSpec& spec, std::uint64_t index) {
  const Block b = block_of(spec);
  return grid_for(spec, b, index);
}

EnumResult enumerate_window(const EnumSpec& spec, const CheckOptions& options, unsigned jobs) {
  const Block b = block_of(spec);
  EnumResult result;
  result.configs = std::uint64_t{1} << b.free.size();
  if (spec.margin < kRequiredMargin) {
    result.preconditions["window too tight"] = result.configs;
    return result;
  }
  auto locals = run_sharded<EnumResult>(result.configs, jobs, [&](std::uint64_t i, EnumResult& local) {
    const GridConfig grid = grid_for(spec, b, i);
    const GridOutcome o = check_grid(grid, options);
    if (!o.applicable()) {
      ++local.preconditions[*o.precondition];
      return;
    }
    ++local.applicable;
    if (!all_passed(o.checks)) local.failures.push_back({i, emit_grid(grid), failure_lines(o.checks)});
  });
  for (auto& l : locals) {
    result.applicable += l.applicable;
    for (const auto& [k, n] : l.preconditions) result.preconditions[k] += n;
    result.failures.insert(result.failures.end(), l.failures.begin(), l.failures.end());
  }
  sort_failures(result.failures);
  return result;
}

GridConfig sample_grid(double p, int size, std::uint64_t seed, std::uint64_t trial) {
  if (size < 1) throw Error("window size must be positive");
  const int lo = -(size / 2);
  GridConfig grid(Window{lo, lo, lo + size - 1, lo + size - 1}, SquareCoord{0, 0});
  Rng rng(seed, trial);
  for (int y = lo; y < lo + size; ++y) {
    for (int x = lo; x < lo + size; ++x) {
      if (x == 0 && y == 0) continue;
      grid.set({x, y}, rng.bernoulli(p));
    }
  }
  return grid;
}

McStats mc_duality(const McSpec& spec, const CheckOptions& options, unsigned jobs) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw Error("p must lie in [0, 1]");
  if (spec.trials < 1) throw Error("trials must be positive");
  auto locals = run_sharded<McStats>(spec.trials, jobs, [&](std::uint64_t t, McStats& local) {
    const GridConfig grid = sample_grid(spec.p, spec.size, spec.seed, t);
    const Component comp = component_of(grid, grid.origin(), Adjacency::plus);
    const bool finite = is_finite(grid, comp);
    const bool in_scope = finite && window_margin(grid, comp) >= kRequiredMargin;
    const GridOutcome o = check_grid(grid, options);
    ++local.trials;
    local.finite += finite;
    local.applicable += in_scope;
    local.passed += o.passed();
    if (in_scope != o.passed()) {
      std::vector<std::string> why = failure_lines(o.checks);
      if (!in_scope) why.push_back("checks passed on an out-of-scope grid");
      if (in_scope && o.precondition) why.push_back("rejected: " + *o.precondition);
      local.failures.push_back({t, emit_grid(grid), std::move(why)});
    }
  });
  McStats stats;
  for (auto& l : locals) {
    stats.trials += l.trials;
    stats.finite += l.finite;
    stats.applicable += l.applicable;
    stats.passed += l.passed;
    stats.failures.insert(stats.failures.end(), l.failures.begin(), l.failures.end());
  }
  sort_failures(stats.failures);
  return stats;
}

namespace {

SquareSet grow_region(Rng& rng, SquareCoord seed, std::size_t n, const SquareSet& forbidden) {
  SquareSet region{seed};
  while (region.size() < n) {
    std::vector<SquareCoord> frontier;
    for (const auto& s : region) {
      for (const auto& off : kPlusOffsets) {
        const SquareCoord t = s + off;
        if (!region.contains(t) && !forbidden.contains(t)) frontier.push_back(t);
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    if (frontier.empty()) break;
    region.insert(frontier[rng.below(frontier.size())]);
  }
  return region;
}

}  // namespace

std::optional<std::pair<Cycle, Cycle>> random_disjoint_pair(Rng& rng, int max_squares) {
  const auto size_a = 1 + rng.below(static_cast<std::uint64_t>(max_squares));
  const SquareSet a = grow_region(rng, {0, 0}, size_a, {});
  const OutermostBoundary ba = outermost_boundary(a);
  if (ba.cycles.size() != 1) return std::nullopt;
  const Cycle c = ba.cycles.front();
  const SquareSet a_filled = interior_squares(c);

  std::vector<SquareCoord> seeds;
  for (const auto& s : a_filled) {
    for (const auto& off : kPlusOffsets) {
      if (!a_filled.contains(s + off)) seeds.push_back(s + off);
    }
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  const SquareCoord seed = seeds[rng.below(seeds.size())];

  const auto size_b = 1 + rng.below(static_cast<std::uint64_t>(max_squares));
  const SquareSet b = grow_region(rng, seed, size_b, a_filled);
  const OutermostBoundary bb = outermost_boundary(b);
  if (bb.cycles.size() != 1) return std::nullopt;
  const Cycle d = bb.cycles.front();
  for (const auto& s : interior_squares(d)) {
    if (a_filled.contains(s)) return std::nullopt;
  }
  if (rng.bernoulli(0.5)) return std::make_pair(d, c);
  return std::make_pair(c, d);
}

}  // namespace lattice
