#include <algorithm>
#include <random>

#include "braidfold/compile.hpp"
#include "braidfold/cover.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace braidfold;
using namespace braidfold::dletter;

namespace {

Chart r_arc(int n) {
  Chart d = empty_chart(n, Alphabet::dihedral);
  d.events = {ChartEvent::black(0, r, Mode::insert, 1), ChartEvent::black(0, r, Mode::erase, 2)};
  return d;
}

std::vector<std::vector<int>> cycle_types(std::vector<Permutation> ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) {
    std::vector<int> t;
    for (const auto& c : p.cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end());
    out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("empty dihedral chart compiles to the empty chart") {
  CHECK(compile_chart(empty_chart(5, Alphabet::dihedral)) == empty_chart(5));
}

TEST_CASE("an r-arc compiles to a pair of branch vertices carrying (13)(45)") {
  Chart c = compile_chart(r_arc(5));
  auto bp = branch_points(c);
  REQUIRE(bp.size() == 2);
  CHECK(evaluate_word(5, bp[0].word) == parse_permutation(5, "(1 3)(4 5)"));
  CHECK(bp[0].vertex == 1);
  CHECK(summary(cover_invariants(c)) == "components=3, euler=6");
}

TEST_CASE("r_3 in D_7 splits seven sheets into four spheres") {
  Chart c = compile_chart(r_arc(7));
  auto inv = cover_invariants(c);
  CHECK(inv.component_orbits == std::vector<std::vector<int>>{{1, 5}, {2, 4}, {3}, {6, 7}});
  CHECK(sheet_trace_oracle(c) == inv);
}

TEST_CASE("resolving psi(r) in D_5 gives two simple branch points") {
  Chart c = compile_chart(r_arc(5));
  Chart r1 = resolve_branch(c, 1);
  int blacks = 0;
  for (const auto& e : r1.events) blacks += e.kind == EventKind::black;
  CHECK(blacks == 2);
  const auto inv = cover_invariants(c);
  CHECK(cover_invariants(r1).per_component == inv.per_component);
  Chart all = resolve_all(c);
  CHECK(branch_points(all).size() == 4);
  CHECK(cover_invariants(all).per_component == inv.per_component);
  CHECK(sheet_trace_oracle(all) == cover_invariants(all));
  CHECK(resolve_branch(all, all.events[1].vertex) == all);
  CHECK_THROWS_AS(resolve_branch(c, 99), ChartError);
}

TEST_CASE("property: compilation keeps the cover") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + 2 * testgen::uniform(rng, 0, 3);
    Chart d = testgen::random_dihedral_chart(rng, n, testgen::uniform(rng, 1, 10));
    Chart c = compile_chart(d);
    CHECK(is_valid(c));
    const auto inv = cover_invariants(d);
    CHECK(cover_invariants(c) == inv);
    CHECK(global_monodromies(c) == global_monodromies(d));
    Chart flat = resolve_all(c);
    CHECK(cover_invariants(flat).euler_total == inv.euler_total);
    CHECK(cover_invariants(flat).component_orbits == inv.component_orbits);
  }
}

TEST_CASE("planar cover charts from meridian colors") {
  const int n = 5;
  auto check_colors = [&](const std::vector<DihedralElement>& colors) {
    Chart d = build_planar_cover_chart(n, colors);
    CHECK(is_valid(d));
    CHECK(d.closed());
    std::vector<Permutation> images;
    for (const auto& a : colors) {
      if (!a.is_identity()) images.push_back(psi(a));
    }
    std::vector<Permutation> mono;
    for (const auto& g : global_monodromies(d)) mono.push_back(g);
    std::reverse(mono.begin(), mono.end());
    CHECK(mono.size() == images.size());
    CHECK(cycle_types(mono) == cycle_types(images));
    auto expected = invariants_from_monodromies(n, images);
    auto got = cover_invariants(compile_chart(d));
    CHECK(got.euler_total == expected.euler_total);
    CHECK(got.components() == expected.components());
    return got;
  };
  const auto R = DihedralElement::r(n), X = DihedralElement::x(n);
  CHECK(summary(check_colors({R, R})) == "components=3, euler=6");
  check_colors({R, X * R * X.inverse(), X * X});
  auto cyc = check_colors({X, X, X, X, X});
  CHECK(cyc.components() == 1);
  CHECK(conjugation_exponent(conjugate_reflection(n, 2)) == 2);
  CHECK(conjugation_exponent(conjugate_reflection(n, -2)) == -2);
  CHECK_THROWS_AS(build_planar_cover_chart(n, {R, X}), std::invalid_argument);
  CHECK_THROWS_AS(build_planar_cover_chart(n, {R * R}), std::invalid_argument);
}
