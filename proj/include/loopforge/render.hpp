#pragma once

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "loopforge/code.hpp"
#include "loopforge/error.hpp"

// Class diagrams: a three-region Venn layout at rank 3 and a 4x4 grid at
// rank 4 in which v1 covers the middle two rows, v3 the bottom two, v2 the
// middle two columns and v4 the right two.

namespace loopforge {

enum class RenderStyle { Ascii, Svg };

inline constexpr int kLabelDegreeLimit = 20;

namespace detail {

inline Subset mask_of(std::initializer_list<int> gens) {
  Subset s = 0;
  for (int g : gens) s |= singleton(g);
  return s;
}

inline const std::array<std::array<Subset, 4>, 4>& rank4_grid() {
  static const std::array<std::array<Subset, 4>, 4> grid{{
      {0, mask_of({2}), mask_of({2, 4}), mask_of({4})},
      {mask_of({1}), mask_of({1, 2}), mask_of({1, 2, 4}), mask_of({1, 4})},
      {mask_of({1, 3}), mask_of({1, 2, 3}), mask_of({1, 2, 3, 4}), mask_of({1, 3, 4})},
      {mask_of({3}), mask_of({2, 3}), mask_of({2, 3, 4}), mask_of({3, 4})},
  }};
  return grid;
}

inline std::string cell_title(Subset sigma, const ClassPartition& p) {
  if (sigma == 0) return "-";
  return "X" + subset_label(sigma) + ":" + std::to_string(p.size_of(sigma));
}

inline std::string cell_points(Subset sigma, const ClassPartition& p) {
  if (sigma == 0 || p.length() > kLabelDegreeLimit) return "";
  return format_positions_compact(p.class_of(sigma));
}

inline std::string footer(const ClassPartition& p) {
  return std::to_string(p.classes().size()) + " nonempty classes, degree " + std::to_string(p.length());
}

inline std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

inline std::string rtrim(std::string s) {
  s.erase(s.find_last_not_of(' ') + 1);
  return s;
}

inline std::string ascii_rank4(const ClassPartition& p) {
  const auto& grid = rank4_grid();
  std::size_t w = 8;
  for (const auto& row : grid)
    for (Subset s : row) w = std::max({w, cell_title(s, p).size() + 2, cell_points(s, p).size() + 2});
  const std::array<std::string, 4> col_heads{"", "v2", "v2 v4", "v4"};
  const std::array<std::string, 4> row_heads{"", "v1", "v1 v3", "v3"};
  const std::string margin(7, ' ');
  std::string rule = margin + "+";
  for (int c = 0; c < 4; ++c) rule += std::string(w, '-') + "+";

  std::ostringstream out;
  std::string head = margin + ' ';
  for (const auto& h : col_heads) head += pad(" " + h, w + 1);
  out << rtrim(head) << '\n' << rule << '\n';
  for (int r = 0; r < 4; ++r) {
    out << pad(row_heads[static_cast<std::size_t>(r)], 7) << '|';
    for (Subset s : grid[static_cast<std::size_t>(r)]) out << pad(" " + cell_title(s, p), w) << '|';
    out << '\n' << margin << '|';
    for (Subset s : grid[static_cast<std::size_t>(r)]) out << pad(" " + cell_points(s, p), w) << '|';
    out << '\n' << rule << '\n';
  }
  out << footer(p) << '\n';
  return out.str();
}

inline std::string ascii_rank3(const ClassPartition& p) {
  auto entry = [&](Subset s) {
    std::string t = cell_title(s, p);
    std::string pts = cell_points(s, p);
    return std::pair(t, pts.empty() ? "" : "[" + pts + "]");
  };
  // Region anchors of three overlapping circles centred on v1 (top), v2
  // (lower left) and v3 (lower right).
  struct Slot {
    Subset sigma;
    std::size_t column;
  };
  const std::vector<std::vector<Slot>> rows{
      {{mask_of({1}), 22}},
      {{mask_of({1, 2}), 10}, {mask_of({1, 3}), 34}},
      {{mask_of({1, 2, 3}), 22}},
      {{mask_of({2}), 0}, {mask_of({2, 3}), 22}, {mask_of({3}), 44}},
  };
  std::ostringstream out;
  out << pad("", 22) << "(v1)\n";
  for (const auto& row : rows) {
    std::string a, b;
    for (const auto& slot : row) {
      auto [t, pts] = entry(slot.sigma);
      a = pad(a, slot.column) + t + "  ";
      b = pad(b, slot.column) + pts + "  ";
    }
    out << rtrim(a) << '\n';
    if (b.find_first_not_of(' ') != std::string::npos) out << rtrim(b) << '\n';
    out << '\n';
  }
  out << "(v2)" << pad("", 40) << "(v3)\n";
  out << footer(p) << '\n';
  return out.str();
}

inline std::string svg_text(double x, double y, const std::string& s, int size = 13) {
  std::ostringstream o;
  o << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
    << "\" text-anchor=\"middle\" font-family=\"monospace\">" << s << "</text>\n";
  return o.str();
}

inline std::string svg_rank4(const ClassPartition& p) {
  const int cw = 130, ch = 64, ox = 60, oy = 40;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << ox + 4 * cw + 20 << "\" height=\""
      << oy + 4 * ch + 50 << "\">\n";
  // bands: v1 rows 1-2, v3 rows 2-3, v2 columns 1-2, v4 columns 2-3
  struct Band {
    const char* name;
    bool horizontal;
    int first;
    const char* color;
  };
  const Band bands[] = {{"v1", true, 1, "#d62728"}, {"v3", true, 2, "#1f77b4"},
                        {"v2", false, 1, "#2ca02c"}, {"v4", false, 2, "#ff7f0e"}};
  for (const auto& b : bands) {
    const int x = b.horizontal ? ox : ox + b.first * cw;
    const int y = b.horizontal ? oy + b.first * ch : oy;
    const int w = b.horizontal ? 4 * cw : 2 * cw;
    const int h = b.horizontal ? 2 * ch : 4 * ch;
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h << "\" fill=\"" << b.color
        << "\" fill-opacity=\"0.08\" stroke=\"" << b.color << "\" stroke-width=\"3\"/>\n";
    if (b.horizontal) {
      out << svg_text(ox - 25, y + ch, b.name);
    } else {
      out << svg_text(x + cw, oy - 12, b.name);
    }
  }
  const auto& grid = rank4_grid();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const Subset s = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      const int x = ox + c * cw, y = oy + r * ch;
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw << "\" height=\"" << ch
          << "\" fill=\"none\" stroke=\"#444\"/>\n";
      out << svg_text(x + cw / 2.0, y + 26, cell_title(s, p));
      const auto pts = cell_points(s, p);
      if (!pts.empty()) out << svg_text(x + cw / 2.0, y + 46, pts, 11);
    }
  out << svg_text(ox + 2 * cw, oy + 4 * ch + 32, footer(p));
  out << "</svg>\n";
  return out.str();
}

inline std::string svg_rank3(const ClassPartition& p) {
  struct Circle {
    const char* name;
    int x, y;
    const char* color;
  };
  const Circle circles[] = {{"v1", 200, 130, "#d62728"}, {"v2", 145, 225, "#2ca02c"}, {"v3", 255, 225, "#1f77b4"}};
  struct Anchor {
    Subset sigma;
    double x, y;
  };
  const Anchor anchors[] = {{mask_of({1}), 200, 85},          {mask_of({2}), 100, 255},
                            {mask_of({3}), 300, 255},         {mask_of({1, 2}), 150, 165},
                            {mask_of({1, 3}), 250, 165},      {mask_of({2, 3}), 200, 260},
                            {mask_of({1, 2, 3}), 200, 195}};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"360\">\n";
  for (const auto& c : circles) {
    out << "<circle cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"95\" fill=\"" << c.color
        << "\" fill-opacity=\"0.08\" stroke=\"" << c.color << "\" stroke-width=\"3\"/>\n";
  }
  out << svg_text(200, 25, "v1") << svg_text(45, 310, "v2") << svg_text(355, 310, "v3");
  for (const auto& a : anchors) {
    out << svg_text(a.x, a.y, cell_title(a.sigma, p), 12);
    const auto pts = cell_points(a.sigma, p);
    if (!pts.empty()) out << svg_text(a.x, a.y + 14, pts, 10);
  }
  out << svg_text(200, 345, footer(p));
  out << "</svg>\n";
  return out.str();
}

}  // namespace detail

inline std::string render_classes(const BinaryCodeBasis& basis, RenderStyle style) {
  if (basis.rank() != 3 && basis.rank() != 4)
    throw Error(ErrorKind::UnsupportedRank, "diagrams exist for ranks 3 and 4");
  const auto p = class_partition(basis);
  if (basis.rank() == 3) return style == RenderStyle::Ascii ? detail::ascii_rank3(p) : detail::svg_rank3(p);
  return style == RenderStyle::Ascii ? detail::ascii_rank4(p) : detail::svg_rank4(p);
}

}  // namespace loopforge
