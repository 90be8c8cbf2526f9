#pragma once

// Slow reference computations shared by the unit tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "braidfold/chart.hpp"
#include "braidfold/knot.hpp"

namespace braidfold::testgen {

// Brute force over the direction of every strip segment. Costs: one node for
// each place an edge reverses (pass-through, cup, cap) and, at each crossing
// and white vertex, the fewest flips reaching an allowed local pattern.
inline int brute_force_nodes(const Chart& c) {
  const auto S = slices(c);
  std::vector<std::pair<int, int>> segs;
  for (int i = 0; i < static_cast<int>(S.size()); ++i) {
    for (int k = 0; k < static_cast<int>(S[static_cast<std::size_t>(i)].size()); ++k) segs.push_back({i, k});
  }
  auto id = [&](int i, int k) {
    for (std::size_t t = 0; t < segs.size(); ++t) {
      if (segs[t] == std::pair{i, k}) return static_cast<int>(t);
    }
    return -1;
  };
  const int n = static_cast<int>(segs.size());
  int best = 1 << 30;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto d = [&](int i, int k) { return (mask >> id(i, k)) & 1 ? -1 : 1; };
    int cost = 0;
    for (int t = 0; t < c.levels(); ++t) {
      const auto& e = c.events[static_cast<std::size_t>(t)];
      const int ls = static_cast<int>(S[static_cast<std::size_t>(t)].size());
      const int rs = static_cast<int>(S[static_cast<std::size_t>(t) + 1].size());
      const int shift = rs - ls;
      const int m = static_cast<int>(consumed(c.alphabet, e).size());
      for (int j = 0; j < ls; ++j) {
        if (j < e.pos) cost += d(t, j) != d(t + 1, j);
        if (j >= e.pos + m) cost += d(t, j) != d(t + 1, j + shift);
      }
      if (e.kind == EventKind::cup) cost += d(t + 1, e.pos) == d(t + 1, e.pos + 1);
      if (e.kind == EventKind::cap) cost += d(t, e.pos) == d(t, e.pos + 1);
      if (e.kind == EventKind::crossing) {
        cost += (d(t, e.pos) != d(t + 1, e.pos + 1)) + (d(t, e.pos + 1) != d(t + 1, e.pos));
      }
      if (e.kind == EventKind::white) {
        // Incoming flags around the vertex: L0 L1 L2 R2 R1 R0.
        int in[6] = {d(t, e.pos) == 1,          d(t, e.pos + 1) == 1,     d(t, e.pos + 2) == 1,
                     d(t + 1, e.pos + 2) == -1, d(t + 1, e.pos + 1) == -1, d(t + 1, e.pos) == -1};
        int local = 6;
        for (int s = 0; s < 6; ++s) {
          int flips = 0;
          for (int q = 0; q < 6; ++q) flips += in[(s + q) % 6] != (q < 3);
          local = std::min(local, flips);
        }
        cost += local;
      }
    }
    best = std::min(best, cost);
  }
  return best;
}

// Every assignment of n colors to the arcs, checked crossing by crossing.
inline std::vector<std::vector<int>> brute_force_colorings(const KnotDiagram& d, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(d.arc_count), 0);
  while (true) {
    bool ok = true;
    for (const auto& x : d.crossings) {
      const int v = 2 * c[static_cast<std::size_t>(x.over)] - c[static_cast<std::size_t>(x.under_in)] -
                    c[static_cast<std::size_t>(x.under_out)];
      if (((v % n) + n) % n != 0) ok = false;
    }
    if (ok) out.push_back(c);
    int i = d.arc_count - 1;
    while (i >= 0 && ++c[static_cast<std::size_t>(i)] == n) c[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace braidfold::testgen
