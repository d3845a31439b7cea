#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "fixtures.hpp"
#include "lattice/cli.hpp"
#include "lattice/grid_text.hpp"
#include "lattice/oracle.hpp"
#include "lattice/report.hpp"

using namespace lattice;

namespace {

const char* kLoneOriginText =
    "lattice-grid v1 5 5 2 2\n"
    ".....\n"
    ".....\n"
    "..#..\n"
    ".....\n"
    ".....\n";

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

void check_parse_error(const std::string& text, const std::string& what, std::size_t line) {
  try {
    parse_grid(text);
    FAIL("expected a parse error for: " << text);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(what) == 0);
    CHECK(e.line() == line);
  }
}

}  // namespace

TEST_CASE("parse a single occupied origin") {
  const GridConfig g = parse_grid("lattice-grid v1 1 1 0 0\n#\n");
  CHECK(g.window() == Window{0, 0, 0, 0});
  CHECK(g.occupied({0, 0}));
}

TEST_CASE("parse the lone origin grid") {
  const GridConfig g = parse_grid(kLoneOriginText);
  CHECK(g.window() == Window{-2, -2, 2, 2});
  CHECK(g.occupied_count() == 1);
  const DualityReport r = dual_fence(g);
  CHECK(r.h_out.squares.size() == 4);
}

TEST_CASE("row 0 is the top row") {
  const GridConfig g = parse_grid(
      "lattice-grid v1 3 2 0 0\n"
      "..#\n"
      "#..\n");
  CHECK(g.occupied({2, 1}));
  CHECK(g.occupied({0, 0}));
  CHECK(g.occupied_count() == 2);
}

TEST_CASE("parse errors are distinct and located") {
  check_parse_error("lattice-grid v2 1 1 0 0\n#\n", "bad header", 1);
  check_parse_error("lattice-grid v1 1 1 0\n#\n", "bad header", 1);
  check_parse_error("lattice-grid v1 2 2 0 0\n#.\n#\n", "ragged row", 3);
  check_parse_error("lattice-grid v1 2 1 0 0\n#x\n", "illegal character", 2);
  check_parse_error("lattice-grid v1 2 1 0 0\n.#\n", "origin must be occupied", 2);
  check_parse_error("lattice-grid v1 2 2 0 0\n#.\n", "expected 2 rows", 3);
  try {
    parse_grid("lattice-grid v1 2 1 0 0\n#x\n");
  } catch (const ParseError& e) {
    CHECK(e.column() == 2);
  }
}

TEST_CASE("grid text round trip") {
  for (std::uint64_t t = 0; t < 20; ++t) {
    const GridConfig g = sample_grid(0.45, 7 + static_cast<int>(t % 4), 11, t);
    CHECK(parse_grid(emit_grid(g)) == g);
  }
  CHECK(emit_grid(parse_grid(kLoneOriginText)) == kLoneOriginText);
  CHECK_THROWS_AS(emit_grid(GridConfig(Window{0, 0, 2, 2}, {1, 1})), Error);
}

TEST_CASE("duality report JSON") {
  const DualityReport r = dual_fence(parse_grid(kLoneOriginText));
  const auto j = nlohmann::json::parse(duality_json(r, verify_order_independence(r)));
  CHECK(j["schema"] == "report v1");
  CHECK(j["q"] == 4);
  CHECK(j["partial_h_edges"] == 12);
  CHECK(j["d_fin"].size() == 13);
  CHECK(j["d_fin"].front() == j["d_fin"].back());
  CHECK(j["outer"].size() == 5);
  CHECK(j["outer"].front() == nlohmann::json::array({-1, -1}));
  CHECK_FALSE(j.contains("timing"));
  CHECK(j["checks"]["fence.order_independent"] == true);
  CHECK(nlohmann::json::parse(duality_json(r, {}, 1.5))["timing"]["dual_fence_ms"] == 1.5);
}

TEST_CASE("SVG rendering is deterministic") {
  const GridConfig g = parse_grid(kLoneOriginText);
  const DualityReport r = dual_fence(g);
  const std::string a = render_svg(g, &r);
  CHECK(a == render_svg(g, &r));
  CHECK(a.find("width=\"100\" height=\"100\"") != std::string::npos);
  CHECK(a.find("stroke-dasharray") != std::string::npos);
  CHECK(a.find("stroke-width=\"4\"") != std::string::npos);
  // Origin square at (40,40) in a y-down frame.
  CHECK(a.find("<rect x=\"40\" y=\"40\" width=\"20\" height=\"20\" fill=\"#404040\"") != std::string::npos);
  const std::string bare = render_svg(g, nullptr);
  CHECK(bare.find("polygon") == std::string::npos);
}

TEST_CASE("cli gen") {
  const Run r = cli({"gen", "--p", "0", "--size", "9", "--seed", "7"});
  CHECK(r.status == 0);
  const GridConfig g = parse_grid(r.out);
  CHECK(g.occupied_count() == 1);
  CHECK(g.window().width() == 9);
  const std::string expected_origin_row = "....#....\n";
  CHECK(r.out.find(expected_origin_row) != std::string::npos);
}

TEST_CASE("cli seed override from the environment") {
  const Run a = cli({"gen", "--p", "0.5", "--size", "8", "--seed", "3"});
  ::setenv("LATTICE_SEED", "3", 1);
  const Run b = cli({"gen", "--p", "0.5", "--size", "8", "--seed", "4"});
  ::setenv("LATTICE_SEED", "x", 1);
  const Run bad = cli({"gen"});
  ::unsetenv("LATTICE_SEED");
  CHECK(a.out == b.out);
  CHECK(bad.status == 2);
}

TEST_CASE("cli dual on the lone origin") {
  const Run r = cli({"dual", "-"}, kLoneOriginText);
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["q"] == 4);
  CHECK(j["partial_h_edges"] == 12);
  CHECK(cli({"dual"}, kLoneOriginText).out == r.out);
  CHECK(nlohmann::json::parse(cli({"dual", "--timing"}, kLoneOriginText).out).contains("timing"));
}

TEST_CASE("cli verify") {
  const Run ok = cli({"verify"}, kLoneOriginText);
  CHECK(ok.status == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS ring.is_scycle") != std::string::npos);
  const Run js = cli({"verify", "--format", "json"}, kLoneOriginText);
  CHECK(nlohmann::json::parse(js.out)["passed"] == true);
  const Run out_of_scope = cli({"verify"}, "lattice-grid v1 3 1 0 0\n###\n");
  CHECK(out_of_scope.status == 2);
  const Run bad = cli({"verify"}, "lattice-grid v1 1 1 0 0\n.\n");
  CHECK(bad.status == 2);
  CHECK(bad.err.find("origin must be occupied") != std::string::npos);
}

TEST_CASE("cli verify on enumerable grids") {
  EnumSpec spec;
  for (std::uint64_t i : {0ull, 1ull, 77ull, 4095ull, 32767ull}) {
    const Run r = cli({"verify"}, emit_grid(enumeration_grid(spec, i)));
    CHECK(r.status == 0);
  }
}

TEST_CASE("cli analyze, render, enum and mc") {
  const Run a = cli({"analyze"}, kLoneOriginText);
  CHECK(a.status == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["plus"]["boundary"]["edge_count"] == 4);
  CHECK(j["plus"]["lambda_all"].size() == 4);

  const Run svg = cli({"render"}, kLoneOriginText);
  CHECK(svg.status == 0);
  CHECK(svg.out.rfind("<?xml", 0) == 0);

  const Run e = cli({"enum", "--width", "2", "--height", "2", "--margin", "2"});
  CHECK(e.status == 0);
  CHECK(e.out.rfind("configs 8 applicable 8 failures 0", 0) == 0);
  const Run tight = cli({"enum", "--width", "2", "--height", "1", "--margin", "0", "--format", "json"});
  CHECK(nlohmann::json::parse(tight.out)["preconditions"]["window too tight"] == 2);

  const Run m = cli({"mc", "--p", "0.3", "--size", "10", "--trials", "20", "--seed", "5", "--jobs", "2"});
  CHECK(m.status == 0);
  CHECK(m.out.rfind("trials 20", 0) == 0);
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).status == 2);
  CHECK(cli({"frobnicate"}).status == 2);
  CHECK(cli({"gen", "--p", "abc"}).status == 2);
  CHECK(cli({"gen", "--p", "2"}).status == 2);
  CHECK(cli({"verify", "--format", "xml"}, kLoneOriginText).status == 2);
  CHECK(cli({"verify", "/nonexistent/grid.txt"}).status == 2);
  CHECK(cli({"enum", "--width", "6", "--height", "6"}).status == 2);
  const Run help = cli({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("verify") != std::string::npos);
}
