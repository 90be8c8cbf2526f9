#include "braidfold/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "braidfold/dihedral.hpp"

namespace braidfold {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string letter_text(Alphabet a, Letter l) {
  if (a == Alphabet::dihedral) return format_dihedral_word(std::vector<Letter>{l});
  return std::to_string(l);
}

struct Geometry {
  const RenderStyle& s;
  int columns;
  int rows;
  int width() const { return 2 * s.margin + columns * s.level_spacing; }
  int height() const { return 2 * s.margin + std::max(rows, 1) * s.strand_spacing; }
  int slice_x(int k) const { return s.margin + k * s.level_spacing; }
  int event_x(int k) const { return slice_x(k) + s.level_spacing / 2; }
  // Twice the position, so half-integer vertex heights stay integral.
  int y2(int twice_pos) const { return height() - s.margin - (twice_pos + 1) * s.strand_spacing / 2; }
  int y(int pos) const { return y2(2 * pos); }
};

void line(std::ostringstream& os, int x1, int y1, int x2, int y2, const std::string& color) {
  os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\"" << color
     << "\" stroke-width=\"2\"/>\n";
}

void draw_chart(std::ostringstream& os, const Chart& c, const Geometry& g) {
  const auto sl = slices(c);
  const int p = c.levels();
  for (int k = 0; k < p; ++k) {
    const auto& e = c.events[static_cast<std::size_t>(k)];
    const Word& before = sl[static_cast<std::size_t>(k)];
    const Word& after = sl[static_cast<std::size_t>(k) + 1];
    const int nc = static_cast<int>(consumed(c.alphabet, e).size());
    const int np = static_cast<int>(produced(c.alphabet, e).size());
    const int x0 = g.slice_x(k), x1 = g.slice_x(k + 1), xm = g.event_x(k);
    const int span = std::max({nc, np, 1});
    const int vy = g.y2(2 * e.pos + span - 1);

    for (int j = 0; j < static_cast<int>(before.size()); ++j) {
      const std::string color = letter_color(c.alphabet, before[static_cast<std::size_t>(j)]);
      if (j < e.pos) {
        line(os, x0, g.y(j), x1, g.y(j), color);
      } else if (j >= e.pos + nc) {
        line(os, x0, g.y(j), x1, g.y(j - nc + np), color);
      } else {
        line(os, x0, g.y(j), xm, vy, color);
      }
    }
    for (int j = e.pos; j < e.pos + np; ++j) {
      line(os, xm, vy, x1, g.y(j), letter_color(c.alphabet, after[static_cast<std::size_t>(j)]));
    }

    switch (e.kind) {
      case EventKind::black:
        os << "  <circle cx=\"" << xm << "\" cy=\"" << vy << "\" r=\"4\" fill=\"black\"/>\n";
        break;
      case EventKind::branch:
        os << "  <circle cx=\"" << xm << "\" cy=\"" << vy << "\" r=\"7\" fill=\"black\"><title>"
           << (c.alphabet == Alphabet::dihedral ? format_dihedral_word(e.labels) : format_word(e.labels))
           << "</title></circle>\n";
        break;
      case EventKind::white:
        os << "  <circle cx=\"" << xm << "\" cy=\"" << vy
           << "\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        break;
      case EventKind::relator:
        os << "  <rect x=\"" << xm - 5 << "\" y=\"" << vy - 5
           << "\" width=\"10\" height=\"10\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        break;
      default:
        break;
    }
  }
  if (!g.s.boundary_labels) return;
  auto label = [&](const Word& w, int x, const char* anchor) {
    for (int j = 0; j < static_cast<int>(w.size()); ++j) {
      os << "  <text x=\"" << x << "\" y=\"" << g.y(j) + 4 << "\" font-size=\"10\" text-anchor=\"" << anchor << "\">"
         << letter_text(c.alphabet, w[static_cast<std::size_t>(j)]) << "</text>\n";
    }
  };
  label(sl.front(), g.slice_x(0) - 4, "end");
  label(sl.back(), g.slice_x(p) + 4, "start");
}

Geometry geometry_of(const Chart& c, const RenderStyle& s) { return {s, std::max(c.levels(), 1), width(c)}; }

}  // namespace

std::string letter_color(Alphabet a, Letter l) {
  int index = 0;
  if (a == Alphabet::dihedral) {
    index = std::abs(l) == 1 ? 0 : 1;
  } else {
    index = std::abs(l) - 1;
  }
  return kPalette[static_cast<std::size_t>(index) % kPalette.size()];
}

std::string render_chart_svg(const Chart& c, const RenderStyle& style) {
  require_valid(c);
  const Geometry g = geometry_of(c, style);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << g.width() << "\" height=\"" << g.height()
     << "\" viewBox=\"0 0 " << g.width() << " " << g.height() << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << g.width() << "\" height=\"" << g.height()
     << "\" fill=\"white\" stroke=\"#888888\"/>\n";
  draw_chart(os, c, g);
  os << "</svg>\n";
  return os.str();
}

std::string render_movie_svg(const ChartMovie& m, const RenderStyle& style) {
  for (const auto& f : m.frames) require_valid(f);
  constexpr int kCaption = 36;
  int total = 0, tallest = 0;
  std::vector<Geometry> gs;
  for (const auto& f : m.frames) {
    gs.push_back(geometry_of(f, style));
    total += gs.back().width();
    tallest = std::max(tallest, gs.back().height());
  }
  total = std::max(total, 1);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << tallest + kCaption
     << "\" viewBox=\"0 0 " << total << " " << tallest + kCaption << "\">\n";
  int dx = 0;
  for (std::size_t i = 0; i < m.frames.size(); ++i) {
    const Geometry& g = gs[i];
    os << "<g transform=\"translate(" << dx << "," << tallest - g.height() << ")\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << g.width() << "\" height=\"" << g.height()
       << "\" fill=\"white\" stroke=\"#888888\"/>\n";
    draw_chart(os, m.frames[i], g);
    os << "</g>\n";
    os << "<text x=\"" << dx + g.width() / 2 << "\" y=\"" << tallest + 14
       << "\" font-size=\"11\" text-anchor=\"middle\">frame " << i << "</text>\n";
    if (i < m.transitions.size() && !m.transitions[i].note.empty()) {
      std::string escaped;
      for (char ch : m.transitions[i].note) {
        if (ch == '<') escaped += "&lt;";
        else if (ch == '>') escaped += "&gt;";
        else if (ch == '&') escaped += "&amp;";
        else escaped += ch;
      }
      os << "<text x=\"" << dx + g.width() << "\" y=\"" << tallest + 28
         << "\" font-size=\"9\" text-anchor=\"middle\">" << escaped << "</text>\n";
    }
    dx += g.width();
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_chart_ascii(const Chart& c) {
  require_valid(c);
  const auto sl = slices(c);
  const int rows = std::max(width(c), 1);
  const int p = c.levels();
  // Columns: slice 0, event 1, slice 1, ..., each three characters wide.
  std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(3 * (2 * p + 1)), ' '));
  auto put = [&](int row, int col, const std::string& text) {
    auto& line = grid[static_cast<std::size_t>(rows - 1 - row)];
    for (std::size_t i = 0; i < text.size(); ++i) line[static_cast<std::size_t>(3 * col) + i] = text[i];
  };
  for (int k = 0; k <= p; ++k) {
    const Word& w = sl[static_cast<std::size_t>(k)];
    for (int j = 0; j < static_cast<int>(w.size()); ++j) put(j, 2 * k, letter_text(c.alphabet, w[static_cast<std::size_t>(j)]));
  }
  for (int k = 0; k < p; ++k) {
    const auto& e = c.events[static_cast<std::size_t>(k)];
    const Word& before = sl[static_cast<std::size_t>(k)];
    const int nc = static_cast<int>(consumed(c.alphabet, e).size());
    const int np = static_cast<int>(produced(c.alphabet, e).size());
    for (int j = 0; j < static_cast<int>(before.size()); ++j) {
      if (j < e.pos || j >= e.pos + nc) {
        const int to = j < e.pos ? j : j - nc + np;
        put(std::min(j, to), 2 * k + 1, to == j ? "---" : (to > j ? "-/-" : "-\\-"));
      }
    }
    static const char* const marks[] = {" ( ", " ) ", " X ", " W ", " * ", " @ ", " # "};
    put(e.pos + (std::max({nc, np, 1}) - 1) / 2, 2 * k + 1, marks[static_cast<int>(e.kind)]);
  }
  std::string out;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace braidfold
