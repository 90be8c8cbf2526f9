#pragma once

// Bounded searches producing move or event certificates. Both are
// best-first over canonical serializations with a transposition table; ties
// are broken lexicographically on the serialized path, so a fixed budget gives
// a fixed answer. Not finding a path proves nothing.

#include <cstddef>
#include <vector>

#include "braidfold/chart.hpp"
#include "braidfold/moves.hpp"

namespace braidfold {

struct SearchOptions {
  std::size_t budget = 100000;  ///< states expanded before giving up
  int max_depth = 64;
  CandidateOptions moves{.creations = false, .resolutions = false, .max_width = 12};
};

struct SearchResult {
  bool found = false;
  std::vector<MoveInstance> moves;
  std::size_t states = 0;
};

/// A move sequence turning a into b (compared up to vertex ids).
SearchResult search_equivalence(const Chart& a, const Chart& b, const SearchOptions& o = {});

struct WordPathResult {
  bool found = false;
  std::vector<ChartEvent> events;
  std::size_t states = 0;
};

/// Events (caps, crossings, white vertices) rewriting the permutation word u
/// into v; never lengthens the word.
WordPathResult search_word_path(int n, const Word& u, const Word& v, std::size_t budget = 100000);

}  // namespace braidfold
