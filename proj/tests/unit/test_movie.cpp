#include <algorithm>
#include <filesystem>

#include "braidfold/chart_io.hpp"
#include "braidfold/compile.hpp"
#include "braidfold/cover.hpp"
#include "braidfold/knot.hpp"
#include "braidfold/movie.hpp"
#include "doctest.h"

using namespace braidfold;

namespace {

int simple_black_count(const Chart& c) {
  return static_cast<int>(std::count_if(c.events.begin(), c.events.end(),
                                        [](const ChartEvent& e) { return e.kind == EventKind::black; }));
}

DihedralColoring first_nontrivial(const KnotDiagram& d, int n) {
  for (const auto& c : fox_colorings(d, n)) {
    if (!c.trivial) return c;
  }
  FAIL("no nontrivial coloring");
  return {};
}

}  // namespace

TEST_CASE("the committed T(2,5) movie matches the authored one and verifies") {
  const ChartMovie m = replay_t25_fixture();
  CHECK(m == author_t25_movie());
  const auto committed = read_text_file(std::filesystem::path(BRAIDFOLD_FIXTURE_DIR) / "movies" / "t25.movie.json");
  CHECK(committed == serialize_movie(m));

  REQUIRE(m.frames.size() == 23);
  CHECK(m.status == kMovieComplete);
  const auto rep = verify_movie(m);
  INFO(report_summary(rep));
  CHECK(rep.ok);
  CHECK(rep.flanks_empty);
  CHECK(rep.failures.empty());
  CHECK(rep.frames[1].branch_vertices == 2);
  for (std::size_t i = 2; i <= 19; ++i) CHECK(rep.frames[i].branch_vertices == 4);
  CHECK(rep.frames[20].branch_vertices == 2);
  CHECK(rep.frames[21].branch_vertices == 2);
  CHECK(rep.frames[22].branch_vertices == 0);
  CHECK(rep.frames[2].invariants->components() == 1);
  CHECK(rep.transitions[0].delta_euler == -4);
  CHECK(rep.transitions[1].delta_euler == -4);
  CHECK(rep.transitions[19].delta_euler == 4);
  CHECK(rep.transitions[21].delta_euler == 4);
}

TEST_CASE("a mid-movie T(2,5) frame resolves to eight simple branch points over a sphere") {
  const ChartMovie m = replay_t25_fixture();
  const Chart resolved = resolve_all(compile_chart(m.frames[10]));
  CHECK(simple_black_count(resolved) == 8);
  const auto inv = cover_invariants(resolved);
  CHECK(inv.components() == 1);
  CHECK(inv.euler_total == 2);
  CHECK(sheet_trace_oracle(resolved) == inv);
}

TEST_CASE("dihedral movie of the unknot") {
  const auto d = parse_diagram("braid s=1:");
  const auto col = fox_colorings(d, 5).front();
  const ChartMovie m = build_dihedral_movie(d, col);
  CHECK(m.frames.size() == 4);
  CHECK(verify_movie(m).ok);
}

TEST_CASE("dihedral movies of torus knots close up") {
  for (const char* text : {"braid s=2: 1 1 1", "braid s=2: 1 1 1 1 1"}) {
    for (int n : {3, 5}) {
      const auto d = parse_diagram(text);
      for (const auto& col : fox_colorings(d, n)) {
        const ChartMovie m = build_dihedral_movie(d, col);
        CAPTURE(text);
        CAPTURE(serialize_coloring(col));
        CHECK(m.status == kMovieComplete);
        const auto rep = verify_movie(m);
        CHECK(rep.ok);
        CHECK(rep.flanks_empty);
      }
    }
  }
}

TEST_CASE("C(K)_1 carries two branch vertices per strand") {
  const auto check = [](const char* text, int expected) {
    const auto d = parse_diagram(text);
    const ChartMovie m = build_dihedral_movie(d, first_nontrivial(d, 5));
    const auto rep = verify_movie(m);
    CHECK(rep.ok);
    // Frames: empty, aura loops, arcs.
    REQUIRE(rep.frames.size() > 2);
    CHECK(rep.frames[2].branch_vertices == expected);
  };
  check("braid s=2: 1 1 1 1 1", 4);
  check("braid s=3: 1 -2 1 -2", 6);
  check("braid s=4: 1 -2 1 -2 3", 8);
}

TEST_CASE("figure eight over D_5 stops with leftover scaffolding") {
  const auto d = parse_diagram("braid s=3: 1 -2 1 -2");
  const ChartMovie m = build_dihedral_movie(d, first_nontrivial(d, 5));
  CHECK(m.status == kMovieIncomplete);
  const auto rep = verify_movie(m);
  CHECK(rep.ok);
  CHECK_FALSE(rep.flanks_empty);
}

TEST_CASE("PD diagrams are refused for movies") {
  const auto d = parse_diagram("pd: [[1,5,2,4],[3,1,4,6],[5,3,6,2]]");
  CHECK_THROWS_AS(build_dihedral_movie(d, first_nontrivial(d, 3)), std::invalid_argument);
  CHECK_THROWS_AS(build_cyclic_movie(d, 2), std::invalid_argument);
}

TEST_CASE("cyclic trefoil movies: one band per crossing, orientable frames") {
  const auto d = parse_diagram("braid s=2: 1 1 1");
  for (int n : {2, 5}) {
    CAPTURE(n);
    const ChartMovie m = build_cyclic_movie(d, n);
    const auto bands = std::count_if(m.transitions.begin(), m.transitions.end(),
                                     [](const MovieTransition& t) { return t.note.rfind("band at", 0) == 0; });
    CHECK(bands == 3);
    const auto rep = verify_movie(m, {.orient = true});
    CHECK(rep.ok);
    for (std::size_t i = 0; i < m.frames.size(); ++i) {
      CHECK(rep.frames[i].orientation_nodes == 0);
      REQUIRE(rep.frames[i].invariants.has_value());
      CHECK(*rep.frames[i].invariants == sheet_trace_oracle(m.frames[i]));
    }
  }
}

TEST_CASE("a corrupted move is pinned to its transition and index") {
  ChartMovie m = replay_t25_fixture();
  REQUIRE(m.transitions[5].moves.size() > 1);
  m.transitions[5].moves[1].kind = MoveKind::bubble_cancel;
  const auto rep = verify_movie(m);
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures.front().rfind("transition 5 (frame 5 -> 6), move 1:", 0) == 0);
  CHECK_FALSE(rep.transitions[5].certified);
  CHECK(rep.transitions[5].failed_move == 1);
}

TEST_CASE("a wrong handle annotation is reported") {
  ChartMovie m = replay_t25_fixture();
  m.transitions[0].one_handles += 1;
  const auto rep = verify_movie(m);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.transitions[0].handles_match);
}

TEST_CASE("movie JSON round trip") {
  const auto d = parse_diagram("braid s=2: 1 1 1");
  for (const ChartMovie& m : {build_cyclic_movie(d, 3), build_dihedral_movie(d, first_nontrivial(d, 3)), ChartMovie{}}) {
    const auto text = serialize_movie(m);
    CHECK(parse_movie(text) == m);
    CHECK(serialize_movie(parse_movie(text)) == text);
  }
  CHECK_THROWS_AS(parse_movie("{\"frames\": 3}"), ChartError);
  CHECK_THROWS_AS(parse_movie("not json"), ChartError);
}

TEST_CASE("report JSON names every frame") {
  const auto rep = verify_movie(build_cyclic_movie(parse_diagram("braid s=2: 1 1 1"), 2));
  const auto js = report_to_json(rep);
  CHECK(js.find("\"ok\"") != std::string::npos);
  CHECK(report_summary(rep).find("ok") != std::string::npos);
}
