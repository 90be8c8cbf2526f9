#include <map>
#include <queue>
#include <random>

#include "braidfold/perm.hpp"
#include "doctest.h"

using namespace braidfold;

namespace {

Permutation P(int n, const char* s) { return parse_permutation(n, s); }

// Written products like "(45)(34)(23)(12)" become words read right to left.
Word word_from_written(const std::string& text) {
  Word w;
  for (std::size_t i = 0; i + 3 < text.size() + 1; ++i) {
    if (text[i] == '(') w.push_back(std::min(text[i + 1], text[i + 2]) - '0');
  }
  return reversed(w);
}

// Shortest word length of every element of S_n, by BFS on the Cayley graph.
std::map<std::vector<int>, int> bfs_lengths(int n) {
  std::map<std::vector<int>, int> dist;
  std::queue<Permutation> q;
  Permutation id(n);
  dist[id.images()] = 0;
  q.push(id);
  while (!q.empty()) {
    Permutation p = q.front();
    q.pop();
    for (int j = 1; j < n; ++j) {
      Permutation s = compose(Permutation::adjacent(n, j), p);
      if (!dist.count(s.images())) {
        dist[s.images()] = dist[p.images()] + 1;
        q.push(s);
      }
    }
  }
  return dist;
}

Word random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(1, n - 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& l : w) l = letter(rng);
  return w;
}

}  // namespace

TEST_CASE("compose follows rightmost-first convention") {
  CHECK(compose(P(5, "(13)(45)"), P(5, "(15432)")) == P(5, "(14)(23)"));
  Permutation x = P(5, "(15432)");
  CHECK(compose(Permutation(5), x) == x);
  CHECK(compose(x, compose(x, x)) == P(5, "(13524)"));
  CHECK(P(5, "(13524)") == power(P(5, "(12345)"), 2));
  CHECK_THROWS_AS(compose(Permutation(4), Permutation(5)), std::invalid_argument);
}

TEST_CASE("evaluate_word applies the first letter first") {
  CHECK(evaluate_word(5, Word{1, 2, 3, 4}) == P(5, "(15432)"));
  CHECK(evaluate_word(5, Word{}).is_identity());
  CHECK(evaluate_word(5, Word{2, 1, 2}) == P(5, "(13)"));
  CHECK_THROWS(evaluate_word(5, Word{5}));
  CHECK_THROWS(TranspositionWord(5, Word{0}));
}

TEST_CASE("reduce_word examples") {
  CHECK(reduce_word(TranspositionWord(3, {1, 1})).letters.empty());
  CHECK(reduce_word(TranspositionWord(5, {3, 1})).letters == Word{1, 3});
  Word sixteen{4, 3, 2, 1, 1, 2, 1, 4, 1, 2, 3, 4, 1, 2, 1, 4};
  auto r = reduce_word(TranspositionWord(5, sixteen));
  CHECK(r.letters.size() == 6);
  CHECK(evaluate_word(r) == P(5, "(13524)"));
}

TEST_CASE("every displayed line of the 16-letter example evaluates to (13524)") {
  const char* lines[] = {
      "(45)(12)(23)(12)(45)(34)(23)(12)(45)(12)(23)(12)(12)(23)(34)(45)",
      "(12)(23)(12)(45)(45)(34)(23)(45)(12)(12)(34)(45)",
      "(12)(23)(12)(34)(23)(45)(34)(45)",
      "(23)(12)(34)(23)(34)(34)(45)(34)",
      "(23)(12)(34)(23)(45)(34)",
  };
  for (const char* l : lines) CHECK(evaluate_word(5, word_from_written(l)) == P(5, "(13524)"));
  CHECK(word_from_written(lines[0]) == Word{4, 3, 2, 1, 1, 2, 1, 4, 1, 2, 3, 4, 1, 2, 1, 4});
  CHECK(word_from_written("(23)(12)(34)(23)(45)(34)") == Word{3, 4, 2, 3, 1, 2});
}

TEST_CASE("canonical words have Coxeter length and match BFS distance") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [img, d] : bfs_lengths(n)) {
      Permutation p = Permutation::from_images(img);
      Word w = canonical_word(p);
      CHECK(static_cast<int>(w.size()) == d);
      CHECK(p.length() == d);
      CHECK(evaluate_word(n, w) == p);
    }
  }
}

TEST_CASE("cycle_count, inverse and orbits") {
  CHECK(P(5, "(13)(45)").cycle_count() == 3);
  Permutation g = P(5, "(13)(45)");
  std::vector<Permutation> gens{g};
  CHECK(orbits(5, gens) == std::vector<std::vector<int>>{{1, 3}, {2}, {4, 5}});
  CHECK(orbits(5, std::vector<Permutation>{}).size() == 5);
  CHECK(compose(g.inverse(), g).is_identity());
}

TEST_CASE("text forms") {
  CHECK(P(5, "(1 3)(4 5)").to_string() == "(1 3)(4 5)");
  CHECK(P(5, "(1,3)") == P(5, "(13)"));
  CHECK(Permutation(4).to_string() == "()");
  CHECK(format_word(Word{2, 1, 2}) == "[2,1,2]");
  CHECK(parse_word("[ 2, 1,2 ]") == Word{2, 1, 2});
  CHECK(parse_word("[]").empty());
  CHECK_THROWS(parse_permutation(5, "(16)"));
  CHECK_THROWS(parse_permutation(5, "(12)(23)"));
  CHECK_THROWS(parse_word("2,1"));
}

TEST_CASE("property: random words") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + trial % 7;
    Word u = random_word(rng, n, 12), v = random_word(rng, n, 12);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(evaluate_word(n, uv) == compose(evaluate_word(n, v), evaluate_word(n, u)));
    auto r = reduce_word(TranspositionWord(n, uv));
    CHECK(evaluate_word(r) == evaluate_word(n, uv));
    CHECK(r.letters.size() <= uv.size());
    CHECK(reduce_word(r) == r);
    CHECK(evaluate_word(n, uv).cycle_count() >= n - static_cast<int>(uv.size()));
    Permutation a = evaluate_word(n, u), b = evaluate_word(n, v), c = evaluate_word(n, uv);
    CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
    CHECK(compose(a.inverse(), a).is_identity());
    CHECK(parse_permutation(n, a.to_string()) == a);
  }
}
