#include <cstdlib>
#include <stdexcept>

#include "braidfold/dihedral.hpp"
#include "braidfold/movie.hpp"
#include "braidfold/word_rewrite.hpp"

namespace braidfold {

namespace {

using dletter::r;
using dletter::x;
using dletter::x_inv;

int reduce_color(int j, int n) {
  const int h = (n - 1) / 2;
  j = ((j % n) + n) % n;
  return j > h ? j - n : j;
}

Word bowl(int j) { return Word(static_cast<std::size_t>(std::abs(j)), j > 0 ? x : x_inv); }

Word block_word(int j) {
  Word w = bowl(j);
  w.push_back(r);
  w.insert(w.end(), static_cast<std::size_t>(std::abs(j)), j > 0 ? x_inv : x);
  return w;
}

int level_of(const Chart& c, int id) {
  for (std::size_t i = 0; i < c.events.size(); ++i) {
    if (c.events[i].is_branching() && c.events[i].vertex == id) return static_cast<int>(i);
  }
  throw std::logic_error("no branch vertex with id " + std::to_string(id));
}

// Colors after a crossing: sigma_i carries the left strand over to the right.
std::pair<int, int> fox_step(int u, int v, int sign, int n) {
  if (sign > 0) return {reduce_color(2 * u - v, n), u};
  return {v, reduce_color(2 * v - u, n)};
}

// Reflection blocks x^j r x^-j sitting at the bottom of a chart, twisted in
// pairs by merging them into one rotation vertex and splitting it again with
// the new colors. A pair twisted twice in a row is merged together with the
// scaffolding of the previous twist, so repeated twists leave no residue.
class Twister {
 public:
  Twister(MovieBuilder& b, int n, std::vector<int> colors, std::vector<int> ids)
      : b_(b), n_(n), colors_(std::move(colors)), ids_(std::move(ids)), pending_(colors_.size()) {}

  const std::vector<int>& colors() const { return colors_; }

  /// False when both colors agree: the two branch points then commute and
  /// the chart stays as it is.
  bool twist(std::size_t i, int sign) {
    if (colors_[i] == colors_[i + 1]) return false;
    const int want = end(i) + 1;
    const int from = start(i + 1);
    if (from != want) {
      const int len = std::abs(colors_[i + 1]) + 1;
      for (int e = 0; e < len; ++e) b_.shift_event(from + e, want + e, true);
    }
    for (std::size_t k = 0; k < pending_.size(); ++k) {
      if (k != i) pending_[k].reset();
    }
    const Word labels = pending_[i] ? *pending_[i] : pair_word(i);
    const int level = start(i);
    const int pos = b_.current().events[static_cast<std::size_t>(level)].pos;
    const auto [u, v] = fox_step(colors_[i], colors_[i + 1], sign, n_);

    MoveInstance merge;
    merge.kind = MoveKind::branch_merge;
    merge.level = level;
    merge.pos = pos;
    merge.labels = labels;
    merge.ids = {ids_[i]};
    merge.colors = {colors_[i], colors_[i + 1]};
    b_.apply(merge);

    MoveInstance split;
    split.kind = MoveKind::branch_resolve;
    split.level = level;
    split.ids = {ids_[i], ids_[i + 1]};
    split.colors = {u, v};
    b_.apply(split);

    colors_[i] = u;
    colors_[i + 1] = v;
    pending_[i] = labels;
    return true;
  }

 private:
  int end(std::size_t k) const { return level_of(b_.current(), ids_[k]); }
  int start(std::size_t k) const { return end(k) - std::abs(colors_[k]); }
  Word pair_word(std::size_t i) const {
    Word w = block_word(colors_[i]);
    const Word second = block_word(colors_[i + 1]);
    w.insert(w.end(), second.begin(), second.end());
    return w;
  }

  MovieBuilder& b_;
  int n_;
  std::vector<int> colors_;
  std::vector<int> ids_;
  std::vector<std::optional<Word>> pending_;
};

MoveInstance simple_move(MoveKind k, int level, int pos, Word labels = {}, Word to = {}, std::vector<int> ids = {}) {
  MoveInstance m;
  m.kind = k;
  m.level = level;
  m.pos = pos;
  m.labels = std::move(labels);
  m.to = std::move(to);
  m.ids = std::move(ids);
  return m;
}

// Greedy removal of cancelling pairs; true when something was removed.
bool cancel_greedily(MovieBuilder& b) {
  bool any = false;
  for (int round = 0; round < 10000; ++round) {
    bool found = false;
    for (const auto& m : candidate_moves(b.current(), {.creations = false, .resolutions = false})) {
      if (m.kind == MoveKind::bubble_cancel || m.kind == MoveKind::saddle_cancel ||
          m.kind == MoveKind::relator_pair_cancel || m.kind == MoveKind::white_pair_cancel ||
          m.kind == MoveKind::crossing_pair_cancel) {
        b.apply(m);
        found = any = true;
        break;
      }
    }
    if (!found) break;
  }
  return any;
}

}  // namespace

ChartMovie build_dihedral_movie(const KnotDiagram& d, const DihedralColoring& col) {
  if (d.kind != KnotDiagram::Kind::braid) throw std::invalid_argument("dihedral movies need a braid closure");
  const int n = col.n;
  check_dihedral_degree(n);
  if (!is_fox_coloring(d, n, col.arc_colors)) throw std::invalid_argument("not a Fox coloring of the diagram");
  const int s = d.strands;
  std::vector<int> colors;
  for (int p = 0; p < s; ++p) {
    colors.push_back(reduce_color(col.arc_colors[static_cast<std::size_t>(d.bottom_arcs[static_cast<std::size_t>(p)])], n));
  }
  auto aura_cups = [&](int k) { return colors[static_cast<std::size_t>(k)] == 0 ? 1 : std::abs(colors[static_cast<std::size_t>(k)]); };

  MovieBuilder b(empty_chart(n, Alphabet::dihedral));
  // Aura loops: a bowl of x^j around the future arc of color j, an r-loop for j = 0.
  int level = 0, pos = 0;
  std::vector<int> aura_pos;
  for (int k = 0; k < s; ++k) {
    const int j = colors[static_cast<std::size_t>(k)];
    aura_pos.push_back(pos);
    b.create_pairs(level, j == 0 ? std::vector<ChartEvent>{ChartEvent::cup(pos, r)} : nested_cups(bowl(j), pos));
    level += aura_cups(k);
    pos += 2 * aura_cups(k);
  }
  b.cut("aura loops");

  // Arcs, innermost first.
  int inner = 0;
  std::vector<int> ids;
  for (int k = s - 1; k >= 0; --k) {
    const int j = colors[static_cast<std::size_t>(k)];
    int a = 0;
    for (int q = 0; q < k; ++q) a += aura_cups(q);
    const std::vector<int> pair_ids = {2 * k + 1, 2 * k + 2};
    if (j == 0) {
      b.shift_event(a + 1 + inner, a + 1, false);
      b.apply(simple_move(MoveKind::bubble_cancel, a, aura_pos[static_cast<std::size_t>(k)]));
      b.apply(simple_move(MoveKind::arc_birth, a, aura_pos[static_cast<std::size_t>(k)], {r}, {}, pair_ids));
      b.shift_event(a + 1, a + 1 + inner, true);
    } else {
      const int at = a + std::abs(j);
      b.apply(simple_move(MoveKind::arc_birth, at, aura_pos[static_cast<std::size_t>(k)] + std::abs(j), {r}, {}, pair_ids));
      b.shift_event(at + 1, at + 1 + inner, true);
    }
    inner += 2 * (std::abs(j) + 1);
  }
  for (int k = 0; k < s; ++k) ids.push_back(2 * k + 1);
  b.cut("arcs: " + std::to_string(2 * s) + " branch vertices");
  const Chart arcs = b.current();

  Twister tw(b, n, colors, ids);
  for (std::size_t c = 0; c < d.braid.size(); ++c) {
    const Letter l = d.braid[c];
    const bool moved = tw.twist(static_cast<std::size_t>(std::abs(l) - 1), l > 0 ? 1 : -1);
    b.cut("crossing " + std::to_string(c + 1) + ": sigma_" + std::to_string(std::abs(l)) + (l > 0 ? "" : "^-1") +
          (moved ? "" : ", equal colors"));
  }

  if (!(b.current() == arcs)) {
    cancel_greedily(b);
    if (b.pending()) b.cut("cleanup");
    if (!(b.current() == arcs)) return b.finish(kMovieIncomplete);
  }

  for (int k = s - 1; k >= 0; --k) {
    const int j = colors[static_cast<std::size_t>(k)];
    const int at = level_of(b.current(), 2 * k + 1);
    b.apply(simple_move(MoveKind::arc_death, at, b.current().events[static_cast<std::size_t>(at)].pos));
    if (j != 0) b.cancel_pairs(at - std::abs(j), std::abs(j));
  }
  b.cut("deaths");
  return b.finish();
}

ChartMovie author_t25_movie() {
  const int n = 5;
  MovieBuilder b(empty_chart(n, Alphabet::dihedral));
  b.apply(simple_move(MoveKind::arc_birth, 0, 0, {r}, {}, {1, 2}));
  b.cut("the arc of the reflection [2] = r is born");
  b.apply(simple_move(MoveKind::bubble_create, 1, 1, {x}));
  b.apply(simple_move(MoveKind::arc_birth, 2, 2, {r}, {}, {3, 4}));
  b.cut("an arc inside an x-bowl, colored by [3] = x^-1 r x");

  Twister tw(b, n, {0, 1}, {1, 3});
  // Decorations live above every branch vertex, so anchors stay put.
  auto top = [&] {
    const auto& ev = b.current().events;
    int t = 0;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      if (ev[i].is_branching()) t = static_cast<int>(i) + 1;
    }
    return t;
  };
  const Word rxrx = {r, x, r, x};
  const Word x5(5, x), X5(5, x_inv);
  int twists = 0;
  auto twist = [&] {
    tw.twist(0, 1);
    b.cut("half twist " + std::to_string(++twists) + " of the middle branch points");
  };

  b.apply(simple_move(MoveKind::bubble_create, top(), 0, {x}));
  b.cut("a turn-around bowl above the branch points");
  twist();
  b.apply(simple_move(MoveKind::relator_pair_create, top() + 1, 1, {}, rxrx));
  b.cut("a pair of valence four vertices (rx)^2");
  twist();
  b.apply(simple_move(MoveKind::saddle_create, top() + 2, 4, {x}));
  b.cut("turn-arounds");
  twist();
  b.apply(simple_move(MoveKind::relator_pair_create, top() + 3, 0, {}, x5));
  b.cut("a pair of valence five vertices x^5");
  twist();
  b.apply(simple_move(MoveKind::relator_pair_create, top() + 4, 0, {}, X5));
  b.cut("a second pair of valence five vertices");
  twist();
  b.apply(simple_move(MoveKind::relator_pair_cancel, top() + 4, 0));
  b.cut("the second valence five pair cancels");
  b.apply(simple_move(MoveKind::relator_pair_cancel, top() + 3, 0));
  b.cut("the first valence five pair cancels");
  b.apply(simple_move(MoveKind::saddle_cancel, top() + 2, 4));
  b.cut("turn-arounds undone");
  b.apply(simple_move(MoveKind::relator_pair_cancel, top() + 1, 1));
  b.cut("the valence four pair cancels");
  b.apply(simple_move(MoveKind::bubble_cancel, top(), 0));
  b.cut("the bowl closes");
  b.apply(simple_move(MoveKind::relator_pair_create, top(), 0, {}, {r, r}));
  b.cut("a pair of r^2 vertices");
  b.apply(simple_move(MoveKind::relator_pair_cancel, top(), 0));
  b.cut("the r^2 pair cancels");

  b.apply(simple_move(MoveKind::arc_death, 2, 2));
  b.apply(simple_move(MoveKind::bubble_cancel, 1, 1));
  b.cut("the inner arc dies");
  b.apply(simple_move(MoveKind::bubble_create, 2, 0, {r}));
  b.cut("an r-loop beside the remaining arc");
  b.apply(simple_move(MoveKind::bubble_cancel, 2, 0));
  b.apply(simple_move(MoveKind::arc_death, 0, 0));
  b.cut("the last arc dies");
  return b.finish();
}

ChartMovie replay_t25_fixture() {
  const auto text = t25_fixture_text();
  if (text.empty()) throw ChartError("the T(2,5) movie fixture was not embedded at build time");
  return parse_movie(text);
}

ChartMovie build_cyclic_movie(const KnotDiagram& d, int n) {
  if (d.kind != KnotDiagram::Kind::braid) throw std::invalid_argument("cyclic movies need a braid closure");
  if (n < 2) throw std::invalid_argument("cyclic covers need degree at least 2");
  const int s = d.strands;
  Word cycle;
  for (int i = 1; i < n; ++i) cycle.push_back(i);
  const int w = n - 1;

  MovieBuilder b(empty_chart(n));
  for (int k = 0; k < s; ++k) {
    b.apply(simple_move(MoveKind::black_pair_create, k, k * w, cycle, {}, {2 * k + 1, 2 * k + 2}));
    b.cut("Seifert circle " + std::to_string(k + 1) + " born");
  }
  Word twice = cycle;
  twice.insert(twice.end(), cycle.begin(), cycle.end());
  const auto band = transform_word(n, twice, canonical_word(evaluate_word(n, twice)), 0);
  for (std::size_t c = 0; c < d.braid.size(); ++c) {
    const int i = std::abs(d.braid[c]) - 1;
    b.create_pairs(s, shifted(band, i * w));
    b.cut("band at crossing " + std::to_string(c + 1));
  }
  for (std::size_t c = d.braid.size(); c-- > 0;) {
    b.cancel_pairs(s, static_cast<int>(band.size()));
    b.cut("band of crossing " + std::to_string(c + 1) + " removed");
  }
  for (int k = s - 1; k >= 0; --k) {
    b.apply(simple_move(MoveKind::black_pair_cancel, k, k * w));
    b.cut("Seifert circle " + std::to_string(k + 1) + " dies");
  }
  return b.finish();
}

}  // namespace braidfold
