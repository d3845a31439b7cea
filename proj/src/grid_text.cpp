#include "lattice/grid_text.hpp"

#include <charconv>
#include <vector>

namespace lattice {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

}  // namespace

GridConfig parse_grid(std::string_view text) {
  auto lines = split_lines(text);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("bad header", 1, 1);

  // Header: "lattice-grid v1 W H OX OY"
  const std::string_view header = lines.front();
  constexpr std::string_view magic = "lattice-grid v1 ";
  if (header.substr(0, magic.size()) != magic) throw ParseError("bad header", 1, 1);
  int fields[4] = {0, 0, 0, 0};
  const char* p = header.data() + magic.size();
  const char* end = header.data() + header.size();
  for (int i = 0; i < 4; ++i) {
    if (i > 0) {
      if (p == end || *p != ' ') throw ParseError("bad header", 1, static_cast<std::size_t>(p - header.data()) + 1);
      ++p;
    }
    const auto [next, ec] = std::from_chars(p, end, fields[i]);
    if (ec != std::errc{} || next == p) throw ParseError("bad header", 1, static_cast<std::size_t>(p - header.data()) + 1);
    p = next;
  }
  if (p != end) throw ParseError("bad header", 1, static_cast<std::size_t>(p - header.data()) + 1);
  const int w = fields[0], h = fields[1], ox = fields[2], oy = fields[3];
  if (w <= 0 || h <= 0) throw ParseError("bad header: empty grid", 1, 1);
  if (ox < 0 || ox >= w || oy < 0 || oy >= h) throw ParseError("bad header: origin outside grid", 1, 1);

  if (lines.size() - 1 != static_cast<std::size_t>(h)) {
    throw ParseError("expected " + std::to_string(h) + " rows, found " + std::to_string(lines.size() - 1),
                     lines.size() < static_cast<std::size_t>(h) + 1 ? lines.size() + 1 : static_cast<std::size_t>(h) + 2, 1);
  }

  GridConfig grid(Window{-ox, -oy, w - 1 - ox, h - 1 - oy}, SquareCoord{0, 0});
  for (int r = 0; r < h; ++r) {
    const std::string_view row = lines[static_cast<std::size_t>(r) + 1];
    const std::size_t line_no = static_cast<std::size_t>(r) + 2;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != '#' && row[c] != '.') throw ParseError("illegal character", line_no, c + 1);
    }
    if (row.size() != static_cast<std::size_t>(w)) {
      throw ParseError("ragged row: expected " + std::to_string(w) + " characters", line_no, row.size() + 1);
    }
    for (int c = 0; c < w; ++c) {
      const SquareCoord s{c - ox, (h - 1 - r) - oy};
      const bool occ = row[static_cast<std::size_t>(c)] == '#';
      if (s == SquareCoord{0, 0}) {
        if (!occ) throw ParseError("origin must be occupied", line_no, static_cast<std::size_t>(c) + 1);
        continue;
      }
      grid.set(s, occ);
    }
  }
  return grid;
}

std::string emit_grid(const GridConfig& grid) {
  if (grid.origin() != SquareCoord{0, 0}) throw Error("grid text requires the origin at (0,0)");
  const Window& win = grid.window();
  const int w = win.width();
  const int h = win.height();
  const int ox = -win.xmin;
  const int oy = -win.ymin;
  std::string out = "lattice-grid v1 " + std::to_string(w) + " " + std::to_string(h) + " " + std::to_string(ox) +
                    " " + std::to_string(oy) + "\n";
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) out += grid.occupied({c - ox, (h - 1 - r) - oy}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace lattice
