#include <random>
#include <set>

#include "braidfold/knot.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace braidfold;

namespace {

std::vector<std::vector<int>> colors_of(const std::vector<DihedralColoring>& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs) out.push_back(c.arc_colors);
  return out;
}

const char* const kTrefoilPd = "pd: [[1,5,2,4],[3,1,4,6],[5,3,6,2]]";
const char* const kFigureEightPd = "pd: [[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";

}  // namespace

TEST_CASE("T(2,5) has 25 colorings mod 5, 5 of them trivial") {
  const auto d = parse_diagram("braid s=2: 1 1 1 1 1");
  CHECK(d.arc_count == 5);
  CHECK(d.components == 1);
  CHECK(d.crossings.size() == 5);
  const auto cs = fox_colorings(d, 5);
  REQUIRE(cs.size() == 25);
  CHECK(std::count_if(cs.begin(), cs.end(), [](const auto& c) { return c.trivial; }) == 5);
  CHECK(colors_of(cs) == testgen::brute_force_colorings(d, 5));
  CHECK(std::is_sorted(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.arc_colors < b.arc_colors; }));

  // Following the knot, the colors step by a constant; starting from 2, 3 every
  // reflection shows up once.
  bool found = false;
  for (const auto& c : cs) {
    const std::set<int> distinct(c.arc_colors.begin(), c.arc_colors.end());
    if (distinct.size() != 5) continue;
    for (const auto& x : d.crossings) {
      if (c.arc_colors[static_cast<std::size_t>(x.under_in)] == 2 && c.arc_colors[static_cast<std::size_t>(x.over)] == 3) {
        CHECK(c.arc_colors[static_cast<std::size_t>(x.under_out)] == 4);
        found = true;
      }
    }
    std::set<DihedralElement> refl;
    for (const auto& g : coloring_to_representation(c)) refl.insert(g);
    CHECK(refl.size() == 5);
  }
  CHECK(found);
}

TEST_CASE("colors map to conjugates of r") {
  DihedralColoring c{5, {0, 1}, false};
  const auto g = coloring_to_representation(c);
  CHECK(g[0] == DihedralElement::r(5));
  CHECK(g[1] == DihedralElement(5, true, 2));
  CHECK(g[1] == reflection_fixing_vertex(5, 3));
  CHECK(g[1] == conjugate_reflection(5, 1));
}

TEST_CASE("unknot, unlink and trefoil counts") {
  for (int n : {3, 5, 7}) {
    const auto u = parse_diagram("braid s=1:");
    CHECK(u.arc_count == 1);
    CHECK(fox_colorings(u, n).size() == static_cast<std::size_t>(n));
    CHECK(cyclic_labelings(u, n).size() == static_cast<std::size_t>(n));
  }
  const auto unlink = parse_diagram("braid s=2: ");
  CHECK(unlink.components == 2);
  CHECK(unlink.crossings.empty());
  CHECK(fox_colorings(unlink, 3).size() == 9);
  CHECK(cyclic_labelings(unlink, 3).size() == 9);

  const auto t = parse_diagram(kTrefoilPd);
  CHECK(t.arc_count == 3);
  CHECK(fox_colorings(t, 3).size() == 9);
  CHECK(fox_colorings(t, 5).size() == 5);
  CHECK(colors_of(fox_colorings(t, 3)) == testgen::brute_force_colorings(t, 3));
}

TEST_CASE("figure eight PD") {
  const auto d = parse_diagram(kFigureEightPd);
  CHECK(d.crossings.size() == 4);
  CHECK(d.arc_count == 4);
  CHECK(d.components == 1);
  // Determinant 5: nontrivial colorings mod 5 only.
  CHECK(fox_colorings(d, 3).size() == 3);
  CHECK(fox_colorings(d, 5).size() == 25);
  CHECK(colors_of(fox_colorings(d, 5)) == testgen::brute_force_colorings(d, 5));
  int pos = 0;
  for (const auto& x : d.crossings) pos += x.sign > 0;
  CHECK(pos == 2);
}

TEST_CASE("torus knots T(2,n) have n^2 colorings mod n") {
  for (int n : {3, 5, 7}) {
    std::string text = "braid s=2:";
    for (int i = 0; i < n; ++i) text += " 1";
    const auto d = parse_diagram(text);
    CHECK(d.arc_count == n);
    CHECK(fox_colorings(d, n).size() == static_cast<std::size_t>(n * n));
  }
}

TEST_CASE("malformed diagrams are rejected") {
  CHECK_THROWS_AS(parse_diagram("braid s=2: 2"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("braid 2: 1"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("braid s=2: 1 a"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("pd: [[1,2,3,4]]"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("pd: [[1,5,2,4],[3,1,4,6],[5,3,6"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("knot"), DiagramError);
  CHECK_THROWS_AS(fox_colorings(parse_diagram("braid s=1:"), 4), std::invalid_argument);
}

TEST_CASE("property: random braid closures") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 150; ++trial) {
    const int s = std::uniform_int_distribution<int>(1, 4)(rng);
    const int len = std::uniform_int_distribution<int>(0, 6)(rng);
    Word w;
    for (int i = 0; i < len && s > 1; ++i) {
      const int g = std::uniform_int_distribution<int>(1, s - 1)(rng);
      w.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? g : -g);
    }
    const auto d = braid_closure(s, w);
    CAPTURE(serialize_diagram(d));
    CHECK(parse_diagram(serialize_diagram(d)) == d);
    for (int n : {3, 5}) {
      const auto cs = fox_colorings(d, n);
      CHECK(colors_of(cs) == testgen::brute_force_colorings(d, n));
      CHECK(cs.size() % static_cast<std::size_t>(n) == 0);
      for (const auto& c : cs) CHECK(wirtinger_holds(d, coloring_to_representation(c)));
      const auto cyc = cyclic_labelings(d, n);
      std::size_t expect = 1;
      for (int k = 0; k < d.components; ++k) expect *= static_cast<std::size_t>(n);
      CHECK(cyc.size() == expect);
      for (const auto& l : cyc) {
        std::vector<DihedralElement> g;
        for (int f : l.arc_rotations) g.push_back(DihedralElement(n, false, f));
        CHECK(wirtinger_holds(d, g));
      }
    }
  }
}

TEST_CASE("PD round trip") {
  for (const char* text : {kTrefoilPd, kFigureEightPd}) {
    const auto d = parse_diagram(text);
    CHECK(parse_diagram(serialize_diagram(d)) == d);
  }
}
