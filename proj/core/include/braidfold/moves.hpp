#pragma once

// Chart moves. Each move rewrites a window of consecutive events; `level` is
// the number of events below the window, so slice_at(c, level) is the slice
// the window starts from. Create moves insert their events at `level`.
//
//   commute                 swap events level, level+1 when their sites are disjoint;
//                           when either side would do, pos 1 puts the lowered
//                           event to the right of the raised one
//   bubble_create/cancel    [] <-> [cup(pos,a), cap(pos,a)]          type II bubble
//   saddle_create/cancel    [] <-> [cap(pos,a), cup(pos,a)]          type II saddle (turn-arounds)
//   white_pair_*            [] <-> [white(pos,j,k), white(pos,k,j)]
//   crossing_pair_*         [] <-> [crossing(pos,j,k), crossing(pos,k,j)]
//   relator_pair_*          [] <-> [relator(pos,u,v), relator(pos,v,u)]
//   black_pair_*            [] <-> [insert w at pos, delete w at pos]  2B+/2B-
//   loop_birth/death        aliases of bubble_create/cancel
//   arc_birth/death         aliases of black_pair_create/cancel
//   slide_crossing          a strand passes a crossing: two 3-crossing paths from
//                           [a,b,c] to [c,b,a]
//   slide_white             a distant strand passes a white vertex: two 4-event paths
//   tetrahedral             two 7-event paths between antipodal reduced words of the
//                           longest element on letters a, a+1, a+2
//   branch_resolve/merge    a branch event <-> simple black vertices plus scaffolding

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidfold/chart.hpp"

namespace braidfold {

enum class MoveKind {
  commute,
  bubble_create,
  bubble_cancel,
  saddle_create,
  saddle_cancel,
  white_pair_create,
  white_pair_cancel,
  crossing_pair_create,
  crossing_pair_cancel,
  relator_pair_create,
  relator_pair_cancel,
  black_pair_create,
  black_pair_cancel,
  loop_birth,
  loop_death,
  arc_birth,
  arc_death,
  slide_crossing,
  slide_white,
  tetrahedral,
  branch_resolve,
  branch_merge,
};

std::string to_string(MoveKind k);
MoveKind parse_move_kind(const std::string& s);
const std::vector<MoveKind>& all_move_kinds();

struct MoveInstance {
  MoveKind kind = MoveKind::commute;
  int level = 0;
  int pos = 0;
  Word labels;
  /// Second word of a relator pair.
  Word to;
  /// Vertex ids for the black/branch events a move creates; fresh ids are
  /// chosen when empty.
  std::vector<int> ids;
  /// Dihedral resolve/merge: conjugation exponents j of the reflections
  /// x^-j r x^j the vertex splits into, left to right.
  std::vector<int> colors;

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

enum class MoveEffect {
  preserving,      ///< cover invariants and branch points unchanged
  branch_changing, ///< cover invariants unchanged, branch points regrouped
  cover_changing,  ///< adds or removes branch points
};

MoveEffect classify(MoveKind k);

class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies m; throws MoveError when the pattern does not match at the site.
Chart apply_move(const Chart& c, const MoveInstance& m);

/// A move undoing m on the chart it was applied to.
MoveInstance inverse_move(const Chart& before, const MoveInstance& m);

struct HandleCount {
  int one_handles = 0;
  int two_handles = 0;
};

/// Handle bookkeeping of a move: births of branch points count as 1-handles
/// and deaths as 2-handles, n - cycles(g) each for a branch point with
/// monodromy g. Preserving moves count zero.
HandleCount handle_count(const Chart& before, const MoveInstance& m);

struct VerifyResult {
  bool ok = true;
  Chart final_chart;
  int failed_index = -1;
  std::string reason;
};

/// Applies the moves in order and stops at the first illegal one.
VerifyResult verify_sequence(const Chart& c0, const std::vector<MoveInstance>& moves);

/// Moves undoing a verified sequence, in application order.
std::vector<MoveInstance> inverse_sequence(const Chart& c0, const std::vector<MoveInstance>& moves);

struct CandidateOptions {
  bool creations = false;   ///< also offer bubble and saddle creations
  bool resolutions = true;  ///< offer branch_resolve on branch vertices
  int max_width = 12;       ///< slice bound for creations
};

/// Moves that apply to c, in level order. Merges and cover-changing
/// creations are never offered.
std::vector<MoveInstance> candidate_moves(const Chart& c, const CandidateOptions& o = {});

/// Event templates used by the moves (exposed for scripting and tests).
std::vector<ChartEvent> resolution_events(int n, int pos, const Word& w, Mode mode, std::vector<int> ids);

/// Dihedral vertex carrying w at pos, split into reflection blacks. Insert
/// mode stacks the colored blocks x^j r x^-j at pos and rewrites them into w;
/// erase mode stacks them after w and trivializes the lot. A reflection takes
/// one color, a rotation x^k with gcd(k, n) = 1 two; the product has to match.
std::vector<ChartEvent> dihedral_resolution_events(int n, int pos, const Word& w, const std::vector<int>& colors,
                                                   Mode mode, std::vector<int> ids);
/// The colors used when a dihedral resolve names none.
std::vector<int> default_resolution_colors(int n, const Word& w, Mode mode);
std::pair<std::vector<ChartEvent>, std::vector<ChartEvent>> tetrahedral_paths(int pos, Letter a);

/// Chart equality up to vertex ids.
bool same_up_to_ids(const Chart& a, const Chart& b);
/// Largest vertex id in use (0 if none).
int max_vertex_id(const Chart& c);

std::string serialize_move(Alphabet a, const MoveInstance& m);
/// JSON array, one move per line.
std::string serialize_moves(Alphabet a, const std::vector<MoveInstance>& moves);
std::vector<MoveInstance> parse_moves(Alphabet a, std::string_view text);

/// A group presentation <X : R>; letter i (1-based) is generator X[i-1] and
/// -i its inverse.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

/// <r, x : r^2, x^n, (rx)^2> with r = 1, x = 2, matching the dihedral letters.
Presentation dihedral_presentation(int n);

using PsiMap = std::function<Word(Letter)>;

/// The reduced psi-words of the dihedral letters.
PsiMap dihedral_psi_map(int n);

/// A fragment with source psi(relator) and empty target built from caps,
/// crossings and white vertices. Throws std::invalid_argument if psi of the
/// relator is not the identity.
Chart relator_block(int degree, const Presentation& p, const PsiMap& psi, const Word& relator);

}  // namespace braidfold
