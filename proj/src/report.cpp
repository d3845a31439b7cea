#include "lattice/report.hpp"

#include <json.hpp>

namespace lattice {

using nlohmann::json;

namespace {

json squares_json(const SquareSet& s) {
  json out = json::array();
  for (const auto& q : s) out.push_back({q.x, q.y});
  return out;
}

json squares_json(const std::vector<SquareCoord>& s) {
  json out = json::array();
  for (const auto& q : s) out.push_back({q.x, q.y});
  return out;
}

json closed_walk(const Cycle& c) {
  json out = json::array();
  for (const auto& p : c.vertices()) out.push_back({p.u, p.v});
  if (!c.vertices().empty()) out.push_back({c.vertices().front().u, c.vertices().front().v});
  return out;
}

json checks_json(const Verdicts& v) {
  json out = json::object();
  for (const auto& c : v) out[c.name] = c.passed;
  return out;
}

json failures_json(const Verdicts& v) {
  json out = json::object();
  for (const auto& c : v) {
    if (!c.passed) out[c.name] = c.detail;
  }
  return out;
}

json boundary_json(const OutermostBoundary& b) {
  json out;
  out["cycles"] = json::array();
  for (const auto& c : b.cycles) out["cycles"].push_back(closed_walk(c));
  out["pinch_vertices"] = json::array();
  for (const auto& [p, cycles] : b.pinch_vertices) out["pinch_vertices"].push_back({p.u, p.v});
  out["edge_count"] = b.edge_count();
  return out;
}

json failure_list(const std::vector<Failure>& failures) {
  json out = json::array();
  for (const auto& f : failures) out.push_back({{"index", f.index}, {"grid", f.grid}, {"failed", f.failed}});
  return out;
}

}  // namespace

std::string duality_json(const DualityReport& r, const Verdicts& checks, std::optional<double> timing_ms) {
  json j;
  j["schema"] = kReportSchema;
  j["kind"] = "duality";
  j["component"] = squares_json(r.component.squares);
  j["outer"] = closed_walk(r.outer);
  j["lambda_all"] = squares_json(r.lambdas.lambda_all);
  j["lambda_exterior"] = squares_json(r.lambdas.lambda_exterior);
  j["d_fin"] = closed_walk(r.d_fin);
  j["h_out"] = squares_json(r.h_out.squares);
  j["q"] = r.h_out.squares.size();
  j["partial_h_edges"] = r.d_fin.size();
  j["merge_order"] = r.merge_order;
  j["checks"] = checks_json(checks);
  j["failures"] = failures_json(checks);
  if (timing_ms) j["timing"] = {{"dual_fence_ms", *timing_ms}};
  return j.dump(2) + "\n";
}

std::string analysis_json(const GridConfig& grid) {
  json j;
  j["schema"] = kReportSchema;
  j["kind"] = "analysis";
  const Window& w = grid.window();
  j["window"] = {w.xmin, w.ymin, w.xmax, w.ymax};
  for (const auto kind : {Adjacency::plus, Adjacency::star}) {
    const Component comp = component_of(grid, grid.origin(), kind);
    json c;
    c["squares"] = squares_json(comp.squares);
    c["finite"] = is_finite(grid, comp);
    c["margin"] = window_margin(grid, comp);
    const OutermostBoundary b = outermost_boundary(comp);
    c["boundary"] = boundary_json(b);
    c["acyclic"] = is_acyclic(cycle_graph(b));
    if (kind == Adjacency::plus) {
      if (b.cycles.size() == 1) {
        const LambdaSets l = lambda_sets(grid, comp, b.cycles.front());
        c["lambda_all"] = squares_json(l.lambda_all);
        c["lambda_exterior"] = squares_json(l.lambda_exterior);
      }
    }
    j[kind == Adjacency::plus ? "plus" : "star"] = std::move(c);
  }
  return j.dump(2) + "\n";
}

std::string enumeration_json(const EnumSpec& spec, const EnumResult& r) {
  json j;
  j["schema"] = kReportSchema;
  j["kind"] = "enumeration";
  j["width"] = spec.width;
  j["height"] = spec.height;
  j["margin"] = spec.margin;
  j["configs"] = r.configs;
  j["applicable"] = r.applicable;
  j["preconditions"] = r.preconditions;
  j["failures"] = failure_list(r.failures);
  return j.dump(2) + "\n";
}

std::string mc_json(const McSpec& spec, const McStats& s) {
  json j;
  j["schema"] = kReportSchema;
  j["kind"] = "monte_carlo";
  j["p"] = spec.p;
  j["size"] = spec.size;
  j["seed"] = spec.seed;
  j["trials"] = s.trials;
  j["finite"] = s.finite;
  j["applicable"] = s.applicable;
  j["passed"] = s.passed;
  j["finite_fraction"] = s.finite_fraction();
  j["failures"] = failure_list(s.failures);
  return j.dump(2) + "\n";
}

std::string verdicts_json(const GridOutcome& o) {
  json j;
  j["schema"] = kReportSchema;
  j["kind"] = "verification";
  if (o.precondition) j["precondition"] = *o.precondition;
  j["passed"] = o.passed();
  j["checks"] = checks_json(o.checks);
  j["failures"] = failures_json(o.checks);
  return j.dump(2) + "\n";
}

namespace {

constexpr int kUnit = 20;

struct Frame {
  Window w;
  int x(SquareCoord s) const { return (s.x - w.xmin) * kUnit; }
  int y(SquareCoord s) const { return (w.ymax - s.y) * kUnit; }
  int u(CornerCoord c) const { return (c.u - 2 * w.xmin + 1) * kUnit / 2; }
  int v(CornerCoord c) const { return (2 * w.ymax + 1 - c.v) * kUnit / 2; }
};

std::string rect(const Frame& f, SquareCoord s, const std::string& style) {
  return "  <rect x=\"" + std::to_string(f.x(s)) + "\" y=\"" + std::to_string(f.y(s)) + "\" width=\"" +
         std::to_string(kUnit) + "\" height=\"" + std::to_string(kUnit) + "\" " + style + "/>\n";
}

std::string polygon(const Frame& f, const Cycle& c, const std::string& style) {
  std::string pts;
  for (const auto& p : c.vertices()) {
    if (!pts.empty()) pts += ' ';
    pts += std::to_string(f.u(p)) + "," + std::to_string(f.v(p));
  }
  return "  <polygon points=\"" + pts + "\" " + style + "/>\n";
}

}  // namespace

std::string render_svg(const GridConfig& grid, const DualityReport* report) {
  const Frame f{grid.window()};
  const int width = f.w.width() * kUnit;
  const int height = f.w.height() * kUnit;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" fill=\"white\"/>\n";
  for (int y = f.w.ymax; y >= f.w.ymin; --y) {
    for (int x = f.w.xmin; x <= f.w.xmax; ++x) {
      const SquareCoord s{x, y};
      out += rect(f, s,
                  grid.occupied(s) ? "fill=\"#404040\" stroke=\"#c0c0c0\" stroke-width=\"0.5\""
                                   : "fill=\"none\" stroke=\"#e0e0e0\" stroke-width=\"0.5\"");
    }
  }
  if (report) {
    for (const auto& s : report->lambdas.lambda_all) {
      out += rect(f, s, "fill=\"none\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"2,2\"");
    }
    out += polygon(f, report->outer, "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");
    out += polygon(f, report->d_fin, "fill=\"none\" stroke=\"black\" stroke-width=\"4\"");
  }
  out += "</svg>\n";
  return out;
}

}  // namespace lattice
