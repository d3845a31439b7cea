#include "lattice/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "lattice/grid_text.hpp"
#include "lattice/oracle.hpp"
#include "lattice/report.hpp"

namespace lattice {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string input = "-";
  double p = 0.5;
  int size = 24;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  unsigned jobs = 1;
  int margin = 3;
  int width = 4;
  int height = 4;
  std::string format = "text";
  bool timing = false;
};

GridConfig read_grid(const std::string& path, std::istream& in) {
  std::stringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open " + path);
    buf << file.rdbuf();
  }
  return parse_grid(buf.str());
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

void print_checks(std::ostream& out, const Verdicts& checks) {
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
}

void print_failures(std::ostream& out, const std::vector<Failure>& failures) {
  for (const auto& f : failures) {
    out << "failure " << f.index << '\n';
    for (const auto& line : f.failed) out << "  " << line << '\n';
    out << f.grid;
  }
}

bool out_of_scope(const std::string& what) { return what == "component not finite" || what == "window too tight"; }

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.p < 0.0 || o.p > 1.0) throw UsageError("--p must lie in [0, 1]");
  if (o.size < 1) throw UsageError("--size must be positive");
  out << emit_grid(sample_grid(o.p, o.size, o.seed, 0));
  return kExitPass;
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  out << analysis_json(read_grid(o.input, in));
  return kExitPass;
}

int cmd_dual(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const GridConfig grid = read_grid(o.input, in);
  DualityReport r;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r = dual_fence(grid);
  } catch (const Error& e) {
    if (out_of_scope(e.what())) throw UsageError(e.what());
    err << "dual: " << e.what() << '\n';
    out << emit_grid(grid);
    return kExitFailure;
  }
  const auto t1 = std::chrono::steady_clock::now();
  Verdicts checks = r.checks;
  append(checks, verify_order_independence(r));
  checks.push_back(verify_scycle_boundary(r.h_out));
  std::optional<double> ms;
  if (o.timing) ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  out << duality_json(r, checks, ms);
  if (!all_passed(checks)) {
    out << emit_grid(grid);
    return kExitFailure;
  }
  return kExitPass;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const GridConfig grid = read_grid(o.input, in);
  const GridOutcome outcome = check_grid(grid);
  if (!outcome.applicable()) throw UsageError(*outcome.precondition);
  if (o.format == "json") {
    out << verdicts_json(outcome);
  } else {
    print_checks(out, outcome.checks);
  }
  if (!outcome.passed()) {
    out << emit_grid(grid);
    return kExitFailure;
  }
  return kExitPass;
}

int cmd_enum(const Options& o, std::ostream& out) {
  EnumSpec spec;
  spec.width = o.width;
  spec.height = o.height;
  spec.margin = o.margin;
  spec.origin_col = (o.width - 1) / 2;
  spec.origin_row = (o.height - 1) / 2;
  EnumResult r;
  try {
    r = enumerate_window(spec, {}, resolve_jobs(o.jobs));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (o.format == "json") {
    out << enumeration_json(spec, r);
  } else {
    out << "configs " << r.configs << " applicable " << r.applicable << " failures " << r.failures.size() << '\n';
    for (const auto& [what, n] : r.preconditions) out << "out of scope (" << what << ") " << n << '\n';
    print_failures(out, r.failures);
  }
  return r.failures.empty() ? kExitPass : kExitFailure;
}

int cmd_mc(const Options& o, std::ostream& out) {
  if (o.p < 0.0 || o.p > 1.0) throw UsageError("--p must lie in [0, 1]");
  if (o.size < 1) throw UsageError("--size must be positive");
  if (o.trials < 1) throw UsageError("--trials must be positive");
  const McSpec spec{o.p, o.size, o.trials, o.seed};
  const McStats s = mc_duality(spec, {}, resolve_jobs(o.jobs));
  if (o.format == "json") {
    out << mc_json(spec, s);
  } else {
    out << "trials " << s.trials << " finite " << s.finite << " applicable " << s.applicable << " passed "
        << s.passed << " failures " << s.failures.size() << '\n';
    out << "finite_fraction " << s.finite_fraction() << '\n';
    print_failures(out, s.failures);
  }
  return s.failures.empty() ? kExitPass : kExitFailure;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
  const GridConfig grid = read_grid(o.input, in);
  std::optional<DualityReport> r;
  try {
    r = dual_fence(grid);
  } catch (const Error&) {
  }
  out << render_svg(grid, r ? &*r : nullptr);
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice duality engine: boundaries, cycle merging and vacant rings on the square lattice"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Sample a random grid");
  auto* analyze = app.add_subcommand("analyze", "Components of the origin and their outermost boundaries (JSON)");
  auto* dual = app.add_subcommand("dual", "Build the vacant ring around the origin's component (JSON)");
  auto* verify = app.add_subcommand("verify", "Run every check on one grid");
  auto* enumerate = app.add_subcommand("enum", "Check every configuration of a small block");
  auto* mc = app.add_subcommand("mc", "Check random grids");
  auto* render = app.add_subcommand("render", "Draw a grid and its boundaries as SVG");

  for (auto* sub : {analyze, dual, verify, render}) {
    sub->add_option("grid", o.input, "Grid file ('-' for standard input)");
  }
  for (auto* sub : {gen, mc}) {
    sub->add_option("--p", o.p, "Occupation probability");
    sub->add_option("--size", o.size, "Window side");
    sub->add_option("--seed", o.seed, "Random seed (LATTICE_SEED overrides)");
  }
  mc->add_option("--trials", o.trials, "Number of grids");
  for (auto* sub : {enumerate, mc}) {
    sub->add_option("--jobs", o.jobs, "Worker threads (0: all cores)");
  }
  enumerate->add_option("--width", o.width, "Block width");
  enumerate->add_option("--height", o.height, "Block height");
  enumerate->add_option("--margin", o.margin, "Vacant rings around the block");
  for (auto* sub : {verify, enumerate, mc}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  }
  dual->add_flag("--timing", o.timing, "Include wall-clock timing in the report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (const char* env = std::getenv("LATTICE_SEED"); env && *env) {
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), o.seed);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      err << "invalid LATTICE_SEED: " << s << '\n';
      return kExitUsage;
    }
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*analyze) return cmd_analyze(o, in, out);
    if (*dual) return cmd_dual(o, in, out, err);
    if (*verify) return cmd_verify(o, in, out);
    if (*enumerate) return cmd_enum(o, out);
    if (*mc) return cmd_mc(o, out);
    if (*render) return cmd_render(o, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lattice
