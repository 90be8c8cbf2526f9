#include <random>

#include "braidfold/dihedral.hpp"
#include "braidfold/word_rewrite.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace braidfold;

namespace {

bool only_braid_events(const std::vector<ChartEvent>& ev, bool allow_caps) {
  for (const auto& e : ev) {
    if (e.kind == EventKind::crossing || e.kind == EventKind::white) continue;
    if (allow_caps && e.kind == EventKind::cap) continue;
    return false;
  }
  return true;
}

}  // namespace

TEST_CASE("the 16-letter example reduces to its canonical 6-letter word") {
  Word w{4, 3, 2, 1, 1, 2, 1, 4, 1, 2, 3, 4, 1, 2, 1, 4};
  Word copy = w;
  auto ev = reduce_to_canonical(5, copy);
  CHECK(copy == canonical_word(parse_permutation(5, "(13524)")));
  CHECK(copy.size() == 6);
  CHECK(replay(5, Alphabet::permutation, w, ev) == copy);
  CHECK(only_braid_events(ev, true));
  auto to_paper = transform_word(5, w, Word{3, 4, 2, 3, 1, 2});
  CHECK(replay(5, Alphabet::permutation, w, to_paper) == Word{3, 4, 2, 3, 1, 2});
}

TEST_CASE("make_end_with") {
  Word w{1, 2, 1};
  auto ev = make_end_with(3, w, 2);
  CHECK(w == Word{2, 1, 2});
  CHECK(ev.size() == 1);
  Word u{1, 3};
  make_end_with(4, u, 1);
  CHECK(u == Word{3, 1});
  Word bad{1, 2};
  CHECK_THROWS(make_end_with(3, bad, 1));
  Word unreduced{1, 1};
  CHECK_THROWS(make_end_with(3, unreduced, 1));
}

TEST_CASE("property: transform_word between random words of equal value") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 5;
    Word u = testgen::random_word(rng, n, 10);
    Word extra = testgen::random_word(rng, n, 4);
    // v = u followed by extra and its reverse: same value.
    Word v = u;
    v.insert(v.end(), extra.begin(), extra.end());
    v.insert(v.end(), extra.rbegin(), extra.rend());
    auto ev = transform_word(n, u, v, 2);
    Word padded{1, 1};
    padded.insert(padded.end(), u.begin(), u.end());
    Word expect{1, 1};
    expect.insert(expect.end(), v.begin(), v.end());
    CHECK(replay(n, Alphabet::permutation, padded, ev) == expect);
    Word c = u;
    auto red = reduce_to_canonical(n, c);
    CHECK(static_cast<int>(c.size()) == evaluate_word(n, u).length());
  }
}

TEST_CASE("dihedral trivialization") {
  for (int n : {3, 5, 7}) {
    for (const char* s : {"", "rr", "rR", "rxrx", "xrxr", "XrXr", "rXXrXX", "RxRx", "xXrr"}) {
      Word w = parse_dihedral_word(s);
      auto ev = trivialize_dihedral(n, w, 1);
      Word padded{dletter::x};
      padded.insert(padded.end(), w.begin(), w.end());
      CHECK(replay(n, Alphabet::dihedral, padded, ev) == Word{dletter::x});
    }
    Word xs(static_cast<std::size_t>(n), dletter::x);
    CHECK(replay(n, Alphabet::dihedral, xs, trivialize_dihedral(n, xs)).empty());
    Word Xs(static_cast<std::size_t>(n), dletter::x_inv);
    CHECK(replay(n, Alphabet::dihedral, Xs, trivialize_dihedral(n, Xs)).empty());
  }
  CHECK_THROWS(trivialize_dihedral(5, parse_dihedral_word("rx")));
}

TEST_CASE("property: random trivial dihedral words") {
  std::mt19937 rng(5);
  const Letter letters[] = {1, -1, 2, -2};
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + 2 * (trial % 4);
    Word w;
    int len = testgen::uniform(rng, 0, 10);
    for (int i = 0; i < len; ++i) w.push_back(letters[testgen::uniform(rng, 0, 3)]);
    // Close the word off with a normal-form inverse.
    DihedralElement g = evaluate_dihedral_word(n, w).inverse();
    for (int i = 0; i < g.rotation(); ++i) w.push_back(dletter::x);
    if (g.is_reflection()) w.push_back(dletter::r);
    REQUIRE(evaluate_dihedral_word(n, w).is_identity());
    CHECK(replay(n, Alphabet::dihedral, w, trivialize_dihedral(n, w)).empty());
  }
}

TEST_CASE("undo and nested cups") {
  Word w{1, 2};
  auto cups = nested_cups(w, 0);
  Word s = replay(3, Alphabet::permutation, {}, cups);
  CHECK(s == Word{1, 2, 2, 1});
  CHECK(replay(3, Alphabet::permutation, s, undo_events(Alphabet::permutation, cups)).empty());
  auto dcups = nested_cups(parse_dihedral_word("xr"), 0);
  CHECK(format_dihedral_word(replay(5, Alphabet::dihedral, {}, dcups)) == "xrRX");
}
