#pragma once

// Hand-rolled random generators for property tests.

#include <random>

#include "braidfold/chart.hpp"
#include "braidfold/dihedral.hpp"
#include "braidfold/word_rewrite.hpp"

namespace braidfold::testgen {

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Word random_word(std::mt19937& rng, int n, int max_len) {
  Word w(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& l : w) l = uniform(rng, 1, n - 1);
  return w;
}

/// Random closed permutation chart: a random walk of legal events, closed
/// off by reducing the last slice and deleting its letters at black vertices.
inline Chart random_chart(std::mt19937& rng, int n, int steps, int max_width = 7) {
  Chart c = empty_chart(n);
  Word s;
  int next_id = 1;
  for (int t = 0; t < steps; ++t) {
    const int len = static_cast<int>(s.size());
    std::vector<ChartEvent> options;
    if (len + 2 <= max_width) {
      int pos = uniform(rng, 0, len);
      options.push_back(ChartEvent::cup(pos, uniform(rng, 1, n - 1)));
    }
    if (len + 1 <= max_width) {
      options.push_back(ChartEvent::black(uniform(rng, 0, len), uniform(rng, 1, n - 1), Mode::insert, 0));
    }
    if (len + 2 <= max_width && n >= 3) {
      Word w = random_word(rng, n, 3);
      if (!w.empty()) options.push_back(ChartEvent::branch(uniform(rng, 0, len), w, Mode::insert, 0));
    }
    for (int i = 0; i + 1 < len; ++i) {
      Letter a = s[static_cast<std::size_t>(i)], b = s[static_cast<std::size_t>(i) + 1];
      if (a == b) options.push_back(ChartEvent::cap(i, a));
      if (std::abs(a - b) > 1) options.push_back(ChartEvent::crossing(i, a, b));
      if (i + 2 < len && s[static_cast<std::size_t>(i) + 2] == a && std::abs(a - b) == 1) {
        options.push_back(ChartEvent::white(i, a, b));
      }
    }
    for (int i = 0; i < len; ++i) {
      options.push_back(ChartEvent::black(i, s[static_cast<std::size_t>(i)], Mode::erase, 0));
    }
    if (options.empty()) break;
    ChartEvent e = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
    if (e.is_branching()) e.vertex = next_id++;
    apply_event(c, s, e);
    c.events.push_back(e);
  }
  auto tail = reduce_to_canonical(n, s, 0);
  c.events.insert(c.events.end(), tail.begin(), tail.end());
  while (!s.empty()) {
    c.events.push_back(ChartEvent::black(static_cast<int>(s.size()) - 1, s.back(), Mode::erase, next_id++));
    s.pop_back();
  }
  return c;
}

/// Random closed dihedral chart built from cups, black vertices, relator
/// vertices and caps, closed off by deleting the last slice letter by letter.
inline Chart random_dihedral_chart(std::mt19937& rng, int n, int steps, int max_width = 6) {
  using namespace dletter;
  Chart c = empty_chart(n, Alphabet::dihedral);
  Word s;
  int next_id = 1;
  const Letter letters[] = {r, r_inv, x, x_inv};
  for (int t = 0; t < steps; ++t) {
    const int len = static_cast<int>(s.size());
    std::vector<ChartEvent> options;
    if (len + 2 <= max_width) options.push_back(ChartEvent::cup(uniform(rng, 0, len), letters[uniform(rng, 0, 3)]));
    if (len + 1 <= max_width) {
      options.push_back(ChartEvent::black(uniform(rng, 0, len), letters[uniform(rng, 0, 3)], Mode::insert, 0));
    }
    for (int i = 0; i < len; ++i) {
      Letter a = s[static_cast<std::size_t>(i)];
      if (i + 1 < len && s[static_cast<std::size_t>(i) + 1] == -a) options.push_back(ChartEvent::cap(i, a));
      if (a == r || a == r_inv) options.push_back(ChartEvent::relator(i, {a}, {-a}));
      if (i + 1 < len && (a == r) && std::abs(s[static_cast<std::size_t>(i) + 1]) == x) {
        Letter b = s[static_cast<std::size_t>(i) + 1];
        options.push_back(ChartEvent::relator(i, {r, b}, {-b, r}));
      }
      options.push_back(ChartEvent::black(i, a, Mode::erase, 0));
    }
    ChartEvent e = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
    if (e.is_branching()) e.vertex = next_id++;
    apply_event(c, s, e);
    c.events.push_back(e);
  }
  while (!s.empty()) {
    c.events.push_back(ChartEvent::black(static_cast<int>(s.size()) - 1, s.back(), Mode::erase, next_id++));
    s.pop_back();
  }
  return c;
}

/// Random open permutation chart over a random source word, built from cups,
/// caps, crossings and (weighted up) white vertices.
inline Chart random_open_chart(std::mt19937& rng, int n, int steps, int max_width = 5) {
  Chart c = empty_chart(n);
  c.source = random_word(rng, n, max_width);
  Word s = c.source;
  for (int t = 0; t < steps; ++t) {
    const int len = static_cast<int>(s.size());
    std::vector<ChartEvent> options;
    for (int i = 0; i + 1 < len; ++i) {
      Letter a = s[static_cast<std::size_t>(i)], b = s[static_cast<std::size_t>(i) + 1];
      if (a == b) options.push_back(ChartEvent::cap(i, a));
      if (std::abs(a - b) > 1) options.push_back(ChartEvent::crossing(i, a, b));
      if (i + 2 < len && s[static_cast<std::size_t>(i) + 2] == a && std::abs(a - b) == 1) {
        for (int w = 0; w < 3; ++w) options.push_back(ChartEvent::white(i, a, b));
      }
    }
    if (len + 2 <= max_width) options.push_back(ChartEvent::cup(uniform(rng, 0, len), uniform(rng, 1, n - 1)));
    if (options.empty()) break;
    ChartEvent e = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
    apply_event(c, s, e);
    c.events.push_back(e);
  }
  c.target = s;
  return c;
}

}  // namespace braidfold::testgen
