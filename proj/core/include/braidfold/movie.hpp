#pragma once

// Chart movies: a sequence of closed charts, consecutive frames joined by a
// certified move sequence. A movie describes a folded branched cover of the
// 3-sphere slice by slice; births of branch points are recorded as 1-handles,
// deaths as 2-handles.
//
// File format (canonical JSON, frames written as chart documents):
//   {
//     "status": "complete",
//     "frames": [ <chart>, ... ],
//     "transitions": [
//       {"note": "...", "one_handles": 2, "two_handles": 0, "moves": [ ... ]},
//       ...
//     ]
//   }

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidfold/chart.hpp"
#include "braidfold/cover.hpp"
#include "braidfold/knot.hpp"
#include "braidfold/moves.hpp"

namespace braidfold {

struct MovieTransition {
  std::vector<MoveInstance> moves;
  int one_handles = 0;
  int two_handles = 0;
  std::string note;
  friend bool operator==(const MovieTransition&, const MovieTransition&) = default;
};

inline constexpr const char* kMovieComplete = "complete";
inline constexpr const char* kMovieIncomplete = "simplification incomplete";

struct ChartMovie {
  std::vector<Chart> frames;
  std::vector<MovieTransition> transitions;
  std::string status = kMovieComplete;
  friend bool operator==(const ChartMovie&, const ChartMovie&) = default;
};

std::string serialize_movie(const ChartMovie& m);
/// Throws ChartError on malformed text; nothing is verified.
ChartMovie parse_movie(std::string_view text);

struct FrameReport {
  bool valid = true;
  std::string violation;
  std::optional<CoverInvariants> invariants;
  int branch_vertices = 0;
  /// -1 when orientation was not attempted.
  int orientation_nodes = -1;
};

struct TransitionReport {
  bool certified = true;
  int failed_move = -1;
  std::string reason;
  HandleCount handles;
  bool handles_match = true;
  int delta_euler = 0;
  bool euler_matches = true;
  /// True when every move preserves branch points. Dihedral movies then
  /// compare the anchors of both frames.
  bool preserving = false;
  bool anchors_fixed = true;
};

struct MovieReport {
  bool ok = true;
  bool flanks_empty = true;
  std::vector<FrameReport> frames;
  std::vector<TransitionReport> transitions;
  /// One line per failure, naming the frame or transition and move index.
  std::vector<std::string> failures;
};

struct MovieVerifyOptions {
  /// Orient every frame (dihedral frames are compiled first).
  bool orient = false;
  std::int64_t orient_budget = 200'000;
};

MovieReport verify_movie(const ChartMovie& m, const MovieVerifyOptions& o = {});
std::string report_to_json(const MovieReport& r);
std::string report_summary(const MovieReport& r);

/// (vertex id, level, pos) of every black/branch event.
struct Anchor {
  int vertex = 0;
  int level = 0;
  int pos = 0;
  friend bool operator==(const Anchor&, const Anchor&) = default;
  friend auto operator<=>(const Anchor&, const Anchor&) = default;
};
std::vector<Anchor> anchors(const Chart& c);

/// Records moves on a current chart and cuts frames. Every move is applied
/// immediately, so a bad script fails where it goes wrong.
class MovieBuilder {
 public:
  explicit MovieBuilder(Chart start);

  const Chart& current() const { return current_; }
  void apply(const MoveInstance& m);
  void apply_all(const std::vector<MoveInstance>& ms);
  /// Moves the event at level `from` to level `to` by commutations; see
  /// MoveKind::commute for prefer_above.
  void shift_event(int from, int to, bool prefer_above = false);
  /// Creates events at `level` as nested cancelling pairs e_1 .. e_k, e_k^-1 .. e_1^-1.
  void create_pairs(int level, const std::vector<ChartEvent>& events);
  /// Cancels 2k events starting at `level` that form nested cancelling pairs.
  void cancel_pairs(int level, int k);
  /// Closes the pending moves into a transition and appends the frame.
  void cut(std::string note);
  bool pending() const { return !moves_.empty(); }

  ChartMovie finish(std::string status = kMovieComplete);

 private:
  Chart current_;
  std::vector<MoveInstance> moves_;
  ChartMovie movie_;
};

/// Move creating the pair (e, e^-1) at `level`, by the kind of e.
MoveInstance pair_create_move(Alphabet a, int level, const ChartEvent& e);

/// Movie of the cyclic n-fold cover branched along the closure of a braid.
/// Every strand contributes a nested pair of n-cycle branch vertices; every
/// crossing a band block that is created and later removed.
ChartMovie build_cyclic_movie(const KnotDiagram& d, int n);

/// Movie of the dihedral cover of a braid closure with the given Fox coloring.
/// Frames: empty, aura loops, arcs (twice as many branch vertices as
/// strands), one twist per crossing, deaths. When the leftover scaffolding of
/// the twists cannot be cleared greedily the movie stops there with status
/// kMovieIncomplete.
ChartMovie build_dihedral_movie(const KnotDiagram& d, const DihedralColoring& col);

/// The twenty-one step dihedral movie of the (2,5) torus knot over D_5.
ChartMovie author_t25_movie();
/// The committed copy of author_t25_movie, embedded at build time.
ChartMovie replay_t25_fixture();
std::string_view t25_fixture_text();

}  // namespace braidfold
