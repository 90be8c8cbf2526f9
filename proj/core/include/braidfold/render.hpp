#pragma once

// SVG and ASCII drawings of charts and movies. Levels run left to right,
// strand positions bottom to top. Output is byte-for-byte deterministic.

#include <string>

#include "braidfold/chart.hpp"
#include "braidfold/movie.hpp"

namespace braidfold {

struct RenderStyle {
  int level_spacing = 40;
  int strand_spacing = 24;
  int margin = 24;
  /// Write the boundary letters next to the first and last slice.
  bool boundary_labels = true;
};

/// Stroke color of a letter; generators 1, 2, ... (or r, x) take the palette
/// in order, and a letter shares the color of its inverse.
std::string letter_color(Alphabet a, Letter l);

/// Throws ChartError for an invalid chart.
std::string render_chart_svg(const Chart& c, const RenderStyle& style = {});
/// One text row per strand position, highest position first.
std::string render_chart_ascii(const Chart& c);
/// Frames side by side with their transition notes underneath.
std::string render_movie_svg(const ChartMovie& m, const RenderStyle& style = {});

}  // namespace braidfold
