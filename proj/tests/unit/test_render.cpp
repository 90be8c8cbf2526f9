#include <filesystem>
#include <random>

#include "braidfold/chart_io.hpp"
#include "braidfold/render.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace braidfold;

namespace {

std::filesystem::path fixture(const std::string& rel) { return std::filesystem::path(BRAIDFOLD_FIXTURE_DIR) / rel; }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("empty chart renders its frame only") {
  const auto svg = render_chart_svg(empty_chart(4));
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(count(svg, "<rect") == 1);
  CHECK(count(svg, "<line") == 0);
  CHECK(count(svg, "<circle") == 0);
}

TEST_CASE("submarine golden files") {
  const Chart c = load_chart(fixture("charts/submarine.chart.json"));
  const auto svg = render_chart_svg(c);
  CHECK(svg == read_text_file(fixture("render/submarine.svg")));
  CHECK(render_chart_ascii(c) == read_text_file(fixture("render/submarine.txt")));
  // Two branch vertices, each a filled disk.
  CHECK(count(svg, "r=\"7\" fill=\"black\"") == 2);
}

TEST_CASE("property: rendering is deterministic and draws every vertex") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Chart c = testgen::random_chart(rng, 5, 10);
    const auto svg = render_chart_svg(c);
    CHECK(svg == render_chart_svg(Chart(c)));
    CHECK(render_chart_ascii(c) == render_chart_ascii(c));
    int marked = 0;
    for (const auto& e : c.events) {
      if (e.kind == EventKind::black || e.kind == EventKind::branch || e.kind == EventKind::white ||
          e.kind == EventKind::relator) {
        ++marked;
      }
    }
    CHECK(static_cast<int>(count(svg, "<circle") + count(svg, "<rect")) == marked + 1);
  }
}

TEST_CASE("letters share a color with their inverses") {
  CHECK(letter_color(Alphabet::dihedral, 1) == letter_color(Alphabet::dihedral, -1));
  CHECK(letter_color(Alphabet::dihedral, 2) == letter_color(Alphabet::dihedral, -2));
  CHECK(letter_color(Alphabet::dihedral, 1) != letter_color(Alphabet::dihedral, 2));
  CHECK(letter_color(Alphabet::permutation, 1) != letter_color(Alphabet::permutation, 2));
}

TEST_CASE("invalid charts are refused") {
  Chart c = empty_chart(3);
  c.events = {ChartEvent::cap(0, 1)};
  CHECK_THROWS_AS(render_chart_svg(c), ChartError);
  CHECK_THROWS_AS(render_chart_ascii(c), ChartError);
}

TEST_CASE("movie strip has one panel per frame") {
  const auto svg = render_movie_svg(replay_t25_fixture());
  CHECK(count(svg, "<g transform") == 23);
  CHECK(count(svg, ">frame ") == 23);
}
