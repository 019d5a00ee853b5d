#pragma once

#include "line_patterns.hpp"
#include "plane_equilateral.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace patcount {

/// Line mode: one rational "p" or "p/q" per line. '#' starts a comment and
/// blank lines are skipped. Errors name `source` and the line number.
LinePointSet parse_line_points(std::string_view text, std::string const& source = "<input>");
/// Plane mode: "xr xs yr ys" per line, x = xr + xs√3 and y = yr + ys√3.
PlanePointSet parse_plane_points(std::string_view text, std::string const& source = "<input>");

std::string render_line_points(LinePointSet const& v);
std::string render_plane_points(PlanePointSet const& v);

/// Either an inline list "{0,1,3}" or line-mode text; entries may use √3.
std::vector<QSqrt3> parse_pattern_values(std::string_view text, std::string const& source = "<input>");

/// Whole file contents. Throws Error(Io).
std::string read_text_file(std::string const& path);
void write_text_file(std::string const& path, std::string_view text);

}  // namespace patcount
