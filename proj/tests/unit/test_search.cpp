#include <random>

#include "braidfold/cover.hpp"
#include "braidfold/dihedral.hpp"
#include "braidfold/search.hpp"
#include "braidfold/word_rewrite.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace braidfold;

TEST_CASE("identical charts need no moves") {
  std::mt19937 rng(3);
  Chart c = testgen::random_chart(rng, 4, 6);
  auto r = search_equivalence(c, c);
  CHECK(r.found);
  CHECK(r.moves.empty());
}

TEST_CASE("a bubble is one move away from the empty chart") {
  Chart c = empty_chart(3);
  c.events = {ChartEvent::cup(0, 2), ChartEvent::cap(0, 2)};
  auto r = search_equivalence(c, empty_chart(3));
  REQUIRE(r.found);
  REQUIRE(r.moves.size() == 1);
  CHECK(r.moves[0].kind == MoveKind::bubble_cancel);
  CHECK(verify_sequence(c, r.moves).final_chart == empty_chart(3));
}

TEST_CASE("search certificates replay to the target") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    Chart a = testgen::random_chart(rng, 4, 6);
    Chart b = a;
    for (int k = 0; k < 3; ++k) {
      auto cands = candidate_moves(b, SearchOptions{}.moves);
      if (cands.empty()) break;
      b = apply_move(b, cands[static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<int>(cands.size()) - 1))]);
    }
    auto r = search_equivalence(a, b, {.budget = 20000});
    REQUIRE(r.found);
    CHECK(r.moves.size() <= 3);
    auto v = verify_sequence(a, r.moves);
    REQUIRE(v.ok);
    CHECK(same_up_to_ids(v.final_chart, b));
    // Deterministic for a fixed budget.
    CHECK(search_equivalence(a, b, {.budget = 20000}).moves == r.moves);
  }
}

TEST_CASE("psi(rxrx) rewrites to the empty word within budget") {
  using namespace dletter;
  Word src;
  for (Letter l : {r, x, r, x}) {
    Word part = psi_word_letter(5, l, true);
    src.insert(src.end(), part.begin(), part.end());
  }
  REQUIRE(src.size() == 16);
  auto res = search_word_path(5, src, {}, 100000);
  REQUIRE(res.found);
  CHECK(res.states <= 100000);
  CHECK(replay(5, Alphabet::permutation, src, res.events).empty());
  Chart c = empty_chart(5);
  c.source = src;
  c.events = res.events;
  CHECK(is_valid(c));
}

TEST_CASE("word search refuses words of different value") {
  auto r = search_word_path(4, {1, 2}, {2, 1});
  CHECK_FALSE(r.found);
  CHECK(r.states == 0);
}
