#pragma once

// Charts as Morse-style event movies.
//
// A chart over a disk is stored as the ordered list of its critical events
// (one per level 1..p). Between events, a vertical slice meets the chart's
// edges in a word, read bottom to top. The region below position 0 is always
// edge-free and serves as the common basepoint for monodromy loops.
//
// Every event replaces a consumed subword of the current slice at `pos` with
// a produced subword:
//
//   kind      consumed         produced       vertex
//   cup       []               [a, a^-1]      minimum of an edge
//   cap       [a, a^-1]        []             maximum of an edge
//   crossing  [j, k]           [k, j]         4-valent, |j - k| > 1
//   white     [j, k, j]        [k, j, k]      6-valent, |j - k| = 1
//   black     []  or [a]       [a] or []      simple branch point (insert/delete)
//   branch    [] or w          w or []        radial branch point carrying w
//   relator   u                v              dihedral relator vertex, u v^-1 a relator
//
// For permutation charts letters are 1..n-1 and every letter is its own
// inverse; dihedral charts use the letters r, R, x, X (see dihedral.hpp).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidfold/perm.hpp"

namespace braidfold {

enum class Alphabet { permutation, dihedral };

enum class EventKind { cup, cap, crossing, white, black, branch, relator };

enum class Mode { insert, erase };

struct ChartEvent {
  EventKind kind = EventKind::cup;
  int pos = 0;
  Word labels;
  /// Replacement word of a relator vertex.
  Word to;
  Mode mode = Mode::insert;
  /// Identity of a black/branch vertex, unique within a chart; 0 means
  /// anonymous. Movies use it to follow a branch point across frames.
  int vertex = 0;

  static ChartEvent cup(int pos, Letter a) { return {EventKind::cup, pos, {a}, {}, Mode::insert, 0}; }
  static ChartEvent cap(int pos, Letter a) { return {EventKind::cap, pos, {a}, {}, Mode::insert, 0}; }
  static ChartEvent crossing(int pos, Letter j, Letter k) {
    return {EventKind::crossing, pos, {j, k}, {}, Mode::insert, 0};
  }
  static ChartEvent white(int pos, Letter j, Letter k) {
    return {EventKind::white, pos, {j, k}, {}, Mode::insert, 0};
  }
  static ChartEvent black(int pos, Letter a, Mode m, int vertex = 0) {
    return {EventKind::black, pos, {a}, {}, m, vertex};
  }
  static ChartEvent branch(int pos, Word w, Mode m, int vertex = 0) {
    return {EventKind::branch, pos, std::move(w), {}, m, vertex};
  }
  static ChartEvent relator(int pos, Word from, Word to) {
    return {EventKind::relator, pos, std::move(from), std::move(to), Mode::insert, 0};
  }

  bool is_branching() const { return kind == EventKind::black || kind == EventKind::branch; }

  friend bool operator==(const ChartEvent&, const ChartEvent&) = default;
};

std::string to_string(EventKind k);
EventKind parse_event_kind(const std::string& s);
std::string to_string(Alphabet a);
Alphabet parse_alphabet(const std::string& s);

/// Letter algebra of an alphabet: inverse letters and letter validity.
Letter inverse_letter(Alphabet a, Letter l);
bool letter_in_range(Alphabet a, int degree, Letter l);
Word inverse_word(Alphabet a, std::span<const Letter> w);

/// Subword an event removes from the slice (relative to pos).
Word consumed(Alphabet a, const ChartEvent& e);
/// Subword an event leaves in its place.
Word produced(Alphabet a, const ChartEvent& e);
/// The event undoing e at the same position.
ChartEvent inverse_event(Alphabet a, const ChartEvent& e);

/// Cyclic words equal to r^2, x^n or (r x)^2 up to letter signs on r,
/// matching signs on x, rotation and reversal.
bool is_dihedral_relator(int n, std::span<const Letter> w);

struct Violation {
  int level = 0;
  std::string reason;
  friend bool operator==(const Violation&, const Violation&) = default;
};

class ChartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Chart {
  int degree = 1;
  Alphabet alphabet = Alphabet::permutation;
  /// Boundary words; both empty for a chart on a closed disk.
  Word source;
  Word target;
  std::vector<ChartEvent> events;

  int levels() const { return static_cast<int>(events.size()); }
  bool closed() const { return source.empty() && target.empty(); }

  friend bool operator==(const Chart&, const Chart&) = default;
};

Chart empty_chart(int degree, Alphabet alphabet = Alphabet::permutation);

/// Checks one event against the slice it acts on; empty string when legal.
std::string event_violation(const Chart& c, const Word& slice, const ChartEvent& e);

/// Applies e to slice in place; throws ChartError if illegal.
void apply_event(const Chart& c, Word& slice, const ChartEvent& e);

/// All violations, in level order. A chart is valid iff the list is empty.
std::vector<Violation> validate(const Chart& c);
inline bool is_valid(const Chart& c) { return validate(c).empty(); }
/// Throws ChartError carrying the first violation.
void require_valid(const Chart& c);

/// Slice after replaying events 1..level (level 0 is the source word).
Word slice_at(const Chart& c, int level);
/// All slices 0..p.
std::vector<Word> slices(const Chart& c);
/// Maximal slice length (recomputed from the events).
int width(const Chart& c);

/// Permutation of a slice word; dihedral letters act through psi.
Permutation letter_permutation(const Chart& c, Letter l);
Permutation slice_permutation(const Chart& c, std::span<const Letter> slice);

struct BranchPoint {
  int level = 0;  ///< 1-based level of the event
  int pos = 0;
  Word word;      ///< local monodromy word, in slice order
  Mode mode = Mode::insert;
  int vertex = 0;
};

/// One entry per black/branch event, in level order.
std::vector<BranchPoint> branch_points(const Chart& c);

}  // namespace braidfold
