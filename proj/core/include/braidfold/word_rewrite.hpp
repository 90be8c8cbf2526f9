#pragma once

// Constructive rewriting of slice words through chart events. Every routine
// acts on a word sitting at slice position `base` and returns the events that
// perform the rewrite, in level order, so the events can be spliced into a
// chart whose slice carries the word at that position.

#include <vector>

#include "braidfold/chart.hpp"

namespace braidfold {

/// Rewrites the permutation word w into the canonical reduced word of its
/// value using caps, crossings and white vertices only. w is updated.
std::vector<ChartEvent> reduce_to_canonical(int n, Word& w, int base = 0);

/// Events turning the word u into v (same value) through the canonical word:
/// reduce u, then the inverse of the reduction of v.
std::vector<ChartEvent> transform_word(int n, const Word& u, const Word& v, int base = 0);

/// Reduces a reduced word w so that it ends with letter b, which must be a
/// left descent of its value; crossings and white vertices only.
std::vector<ChartEvent> make_end_with(int n, Word& w, Letter b, int base = 0);

/// The inverse events in reverse order: a sequence undoing `events`.
std::vector<ChartEvent> undo_events(Alphabet a, const std::vector<ChartEvent>& events);

/// Applies events to a word; throws ChartError if one does not match.
Word replay(int degree, Alphabet a, Word w, const std::vector<ChartEvent>& events);

/// Shifts every event position by `offset`.
std::vector<ChartEvent> shifted(std::vector<ChartEvent> events, int offset);

/// Rewrites a dihedral word with trivial value to the empty word using caps
/// and relator vertices. Throws std::invalid_argument if the value is not 1.
std::vector<ChartEvent> trivialize_dihedral(int n, const Word& w, int base = 0);

/// Events turning the dihedral word u into v (same value): cups append
/// v^-1 v, then u v^-1 is trivialized. Empty when u == v.
std::vector<ChartEvent> transform_dihedral(int n, const Word& u, const Word& v, int base = 0);

/// Nested cups producing [w_1, ..., w_k, w_k^-1, ..., w_1^-1] at base.
std::vector<ChartEvent> nested_cups(const Word& w, int base = 0);

}  // namespace braidfold
