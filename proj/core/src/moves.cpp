#include "braidfold/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

#include "braidfold/dihedral.hpp"
#include "braidfold/word_rewrite.hpp"

namespace braidfold {

namespace {

using Events = std::vector<ChartEvent>;

const std::vector<std::pair<MoveKind, const char*>>& kind_names() {
  static const std::vector<std::pair<MoveKind, const char*>> names = {
      {MoveKind::commute, "commute"},
      {MoveKind::bubble_create, "bubble_create"},
      {MoveKind::bubble_cancel, "bubble_cancel"},
      {MoveKind::saddle_create, "saddle_create"},
      {MoveKind::saddle_cancel, "saddle_cancel"},
      {MoveKind::white_pair_create, "white_pair_create"},
      {MoveKind::white_pair_cancel, "white_pair_cancel"},
      {MoveKind::crossing_pair_create, "crossing_pair_create"},
      {MoveKind::crossing_pair_cancel, "crossing_pair_cancel"},
      {MoveKind::relator_pair_create, "relator_pair_create"},
      {MoveKind::relator_pair_cancel, "relator_pair_cancel"},
      {MoveKind::black_pair_create, "black_pair_create"},
      {MoveKind::black_pair_cancel, "black_pair_cancel"},
      {MoveKind::loop_birth, "loop_birth"},
      {MoveKind::loop_death, "loop_death"},
      {MoveKind::arc_birth, "arc_birth"},
      {MoveKind::arc_death, "arc_death"},
      {MoveKind::slide_crossing, "slide_crossing"},
      {MoveKind::slide_white, "slide_white"},
      {MoveKind::tetrahedral, "tetrahedral"},
      {MoveKind::branch_resolve, "branch_resolve"},
      {MoveKind::branch_merge, "branch_merge"},
  };
  return names;
}

ChartEvent strip_id(ChartEvent e) {
  e.vertex = 0;
  return e;
}

bool same_shape(const Events& a, std::span<const ChartEvent> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (strip_id(a[i]) != strip_id(b[i])) return false;
  }
  return true;
}

// Pair moves: the event kind of the lower event and whether the pair is created.
struct PairInfo {
  EventKind lower;
  bool create;
};

std::optional<PairInfo> pair_info(MoveKind k) {
  switch (k) {
    case MoveKind::bubble_create:
    case MoveKind::loop_birth: return PairInfo{EventKind::cup, true};
    case MoveKind::bubble_cancel:
    case MoveKind::loop_death: return PairInfo{EventKind::cup, false};
    case MoveKind::saddle_create: return PairInfo{EventKind::cap, true};
    case MoveKind::saddle_cancel: return PairInfo{EventKind::cap, false};
    case MoveKind::white_pair_create: return PairInfo{EventKind::white, true};
    case MoveKind::white_pair_cancel: return PairInfo{EventKind::white, false};
    case MoveKind::crossing_pair_create: return PairInfo{EventKind::crossing, true};
    case MoveKind::crossing_pair_cancel: return PairInfo{EventKind::crossing, false};
    case MoveKind::relator_pair_create: return PairInfo{EventKind::relator, true};
    case MoveKind::relator_pair_cancel: return PairInfo{EventKind::relator, false};
    case MoveKind::black_pair_create:
    case MoveKind::arc_birth: return PairInfo{EventKind::black, true};
    case MoveKind::black_pair_cancel:
    case MoveKind::arc_death: return PairInfo{EventKind::black, false};
    default: return std::nullopt;
  }
}

MoveKind paired_kind(MoveKind k) {
  switch (k) {
    case MoveKind::bubble_create: return MoveKind::bubble_cancel;
    case MoveKind::bubble_cancel: return MoveKind::bubble_create;
    case MoveKind::loop_birth: return MoveKind::loop_death;
    case MoveKind::loop_death: return MoveKind::loop_birth;
    case MoveKind::saddle_create: return MoveKind::saddle_cancel;
    case MoveKind::saddle_cancel: return MoveKind::saddle_create;
    case MoveKind::white_pair_create: return MoveKind::white_pair_cancel;
    case MoveKind::white_pair_cancel: return MoveKind::white_pair_create;
    case MoveKind::crossing_pair_create: return MoveKind::crossing_pair_cancel;
    case MoveKind::crossing_pair_cancel: return MoveKind::crossing_pair_create;
    case MoveKind::relator_pair_create: return MoveKind::relator_pair_cancel;
    case MoveKind::relator_pair_cancel: return MoveKind::relator_pair_create;
    case MoveKind::black_pair_create: return MoveKind::black_pair_cancel;
    case MoveKind::black_pair_cancel: return MoveKind::black_pair_create;
    case MoveKind::arc_birth: return MoveKind::arc_death;
    case MoveKind::arc_death: return MoveKind::arc_birth;
    case MoveKind::branch_resolve: return MoveKind::branch_merge;
    case MoveKind::branch_merge: return MoveKind::branch_resolve;
    default: return k;
  }
}

std::set<int> used_ids(const Chart& c) {
  std::set<int> s;
  for (const auto& e : c.events) {
    if (e.vertex != 0) s.insert(e.vertex);
  }
  return s;
}

// Ids for k new vertices: the requested ones (checked against the chart) or
// fresh ones above the current maximum.
std::vector<int> take_ids(const Chart& c, const std::vector<int>& requested, std::size_t k,
                          const std::set<int>& released = {}) {
  if (requested.empty()) {
    std::vector<int> out;
    int next = max_vertex_id(c);
    for (std::size_t i = 0; i < k; ++i) out.push_back(++next);
    return out;
  }
  if (requested.size() != k) throw MoveError("expected " + std::to_string(k) + " vertex ids");
  auto used = used_ids(c);
  for (int id : released) used.erase(id);
  std::set<int> seen;
  for (int id : requested) {
    if (id == 0) continue;
    if (used.contains(id) || !seen.insert(id).second) throw MoveError("vertex id " + std::to_string(id) + " already in use");
  }
  return requested;
}

Events pair_events(const Chart& c, const MoveInstance& m, EventKind lower) {
  const Alphabet a = c.alphabet;
  auto one_letter = [&] {
    if (m.labels.size() != 1) throw MoveError(to_string(m.kind) + " needs one label");
    return m.labels[0];
  };
  auto two_letters = [&] {
    if (m.labels.size() != 2) throw MoveError(to_string(m.kind) + " needs two labels");
  };
  switch (lower) {
    case EventKind::cup: {
      auto e = ChartEvent::cup(m.pos, one_letter());
      return {e, inverse_event(a, e)};
    }
    case EventKind::cap: {
      auto e = ChartEvent::cap(m.pos, one_letter());
      return {e, inverse_event(a, e)};
    }
    case EventKind::white:
      two_letters();
      return {ChartEvent::white(m.pos, m.labels[0], m.labels[1]), ChartEvent::white(m.pos, m.labels[1], m.labels[0])};
    case EventKind::crossing:
      two_letters();
      return {ChartEvent::crossing(m.pos, m.labels[0], m.labels[1]),
              ChartEvent::crossing(m.pos, m.labels[1], m.labels[0])};
    case EventKind::relator:
      return {ChartEvent::relator(m.pos, m.labels, m.to), ChartEvent::relator(m.pos, m.to, m.labels)};
    default: {
      if (m.labels.empty()) throw MoveError(to_string(m.kind) + " needs a nonempty word");
      auto ids = take_ids(c, m.ids, 2);
      if (m.labels.size() == 1) {
        return {ChartEvent::black(m.pos, m.labels[0], Mode::insert, ids[0]),
                ChartEvent::black(m.pos, m.labels[0], Mode::erase, ids[1])};
      }
      return {ChartEvent::branch(m.pos, m.labels, Mode::insert, ids[0]),
              ChartEvent::branch(m.pos, m.labels, Mode::erase, ids[1])};
    }
  }
}

bool is_cancelling_pair(Alphabet a, const ChartEvent& e1, const ChartEvent& e2, EventKind lower) {
  if (lower == EventKind::black) {
    if (!e1.is_branching() || e1.mode != Mode::insert) return false;
  } else if (e1.kind != lower) {
    return false;
  }
  return strip_id(inverse_event(a, e1)) == strip_id(e2);
}

// Replaces events [level, level + old_len) by repl after checking that the
// window turns the same slice into the same slice.
Chart splice(const Chart& c, int level, std::size_t old_len, const Events& repl) {
  Word s = slice_at(c, level);
  Word a = s, b = s;
  try {
    for (std::size_t i = 0; i < old_len; ++i) apply_event(c, a, c.events[static_cast<std::size_t>(level) + i]);
    for (const auto& e : repl) apply_event(c, b, e);
  } catch (const ChartError& err) {
    throw MoveError(std::string("pattern does not fit the slice: ") + err.what());
  }
  if (a != b) throw MoveError("replacement ends in a different slice");
  Chart out = c;
  auto first = out.events.begin() + level;
  out.events.erase(first, first + static_cast<std::ptrdiff_t>(old_len));
  out.events.insert(out.events.begin() + level, repl.begin(), repl.end());
  return out;
}

std::span<const ChartEvent> window(const Chart& c, int level, std::size_t len) {
  if (level < 0 || static_cast<std::size_t>(level) + len > c.events.size()) {
    throw MoveError("window at level " + std::to_string(level) + " runs past the chart");
  }
  return {c.events.data() + level, len};
}

// Swaps two adjacent events with disjoint sites; `prefer_above` breaks the tie
// when both readings fit (a cup or cap touching the other event's site).
std::optional<Events> commuted(Alphabet a, const ChartEvent& e1, const ChartEvent& e2, bool prefer_above) {
  const int m1 = static_cast<int>(consumed(a, e1).size()), k1 = static_cast<int>(produced(a, e1).size());
  const int m2 = static_cast<int>(consumed(a, e2).size()), k2 = static_cast<int>(produced(a, e2).size());
  const bool below = e2.pos + m2 <= e1.pos;
  const bool above = e2.pos >= e1.pos + k1;
  if (!below && !above) return std::nullopt;
  ChartEvent f1 = e2, f2 = e1;
  if (above && (prefer_above || !below)) {
    f1.pos = e2.pos - (k1 - m1);
  } else {
    f2.pos = e1.pos + (k2 - m2);
  }
  return Events{f1, f2};
}

using Key = std::tuple<int, int, Word>;

Key event_key(const ChartEvent& e) { return {static_cast<int>(e.kind), e.pos, e.labels}; }

std::vector<Key> path_key(const Events& p) {
  std::vector<Key> k;
  for (const auto& e : p) k.push_back(event_key(e));
  return k;
}

// Moves of a word graph: distant commutations and braid relations.
std::vector<std::pair<ChartEvent, Word>> word_neighbours(const Word& w) {
  std::vector<std::pair<ChartEvent, Word>> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (std::abs(w[i] - w[i + 1]) > 1) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back({ChartEvent::crossing(static_cast<int>(i), w[i], w[i + 1]), v});
    }
    if (i + 2 < w.size() && w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      v[i + 2] = v[i];
      out.push_back({ChartEvent::white(static_cast<int>(i), w[i], w[i + 1]), v});
    }
  }
  return out;
}

// All shortest paths between antipodal reduced words of the longest element of
// S_4: the lexicographically first one and the first one avoiding its
// intermediate words.
std::pair<Events, Events> base_tetrahedral_paths() {
  const Word u = {1, 2, 1, 3, 2, 1};
  std::map<Word, int> dist;
  std::vector<Word> queue = {u};
  dist[u] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (auto& [e, v] : word_neighbours(queue[h])) {
      if (!dist.contains(v)) {
        dist[v] = dist[queue[h]] + 1;
        queue.push_back(v);
      }
    }
  }
  Word t = queue.front();
  for (const auto& [w, d] : dist) {
    if (d > dist[t]) t = w;
  }
  std::vector<std::pair<Events, std::vector<Word>>> paths;
  Events cur;
  std::vector<Word> visited;
  auto dfs = [&](auto&& self, const Word& w) -> void {
    if (w == u) {
      Events p(cur.rbegin(), cur.rend());
      paths.push_back({p, visited});
      return;
    }
    for (auto& [e, v] : word_neighbours(w)) {
      if (dist.at(v) != dist.at(w) - 1) continue;
      // The edge v -> w, walked backwards from t.
      for (auto& [f, x] : word_neighbours(v)) {
        if (x != w) continue;
        cur.push_back(f);
        visited.push_back(v);
        self(self, v);
        visited.pop_back();
        cur.pop_back();
      }
    }
  };
  dfs(dfs, t);
  std::sort(paths.begin(), paths.end(),
            [](const auto& a, const auto& b) { return path_key(a.first) < path_key(b.first); });
  const auto& first = paths.front();
  std::set<Word> inner(first.second.begin(), first.second.end());
  inner.erase(u);
  for (const auto& p : paths) {
    bool disjoint = std::none_of(p.second.begin(), p.second.end(), [&](const Word& w) { return inner.contains(w); });
    if (disjoint) return {first.first, p.first};
  }
  throw std::logic_error("no second tetrahedral path");
}

Events shift_path(Events p, int pos, Letter a) {
  for (auto& e : p) {
    e.pos += pos;
    for (auto& l : e.labels) l += a - 1;
  }
  return p;
}

// The alternatives a template move may replace: each window shape maps to its
// partner.
std::vector<std::pair<Events, Events>> template_pairs(const Chart& c, const MoveInstance& m) {
  std::vector<std::pair<Events, Events>> out;
  const int p = m.pos;
  auto X = [](int pos, Letter j, Letter k) { return ChartEvent::crossing(pos, j, k); };
  auto W = [](int pos, Letter j, Letter k) { return ChartEvent::white(pos, j, k); };
  if (m.kind == MoveKind::slide_crossing) {
    if (m.labels.size() != 3) throw MoveError("slide_crossing needs labels [a, b, c]");
    const Letter a = m.labels[0], b = m.labels[1], cc = m.labels[2];
    Events p1 = {X(p, a, b), X(p + 1, a, cc), X(p, b, cc)};
    Events p2 = {X(p + 1, b, cc), X(p, a, cc), X(p + 1, a, b)};
    out.push_back({p1, p2});
  } else if (m.kind == MoveKind::slide_white) {
    if (m.labels.size() != 3) throw MoveError("slide_white needs labels [j, k, l]");
    const Letter j = m.labels[0], k = m.labels[1], l = m.labels[2];
    out.push_back({{W(p, j, k), X(p + 2, k, l), X(p + 1, j, l), X(p, k, l)},
                   {X(p + 2, j, l), X(p + 1, k, l), X(p, j, l), W(p + 1, j, k)}});
    out.push_back({{W(p + 1, j, k), X(p, l, k), X(p + 1, l, j), X(p + 2, l, k)},
                   {X(p, l, j), X(p + 1, l, k), X(p + 2, l, j), W(p, j, k)}});
  } else if (m.kind == MoveKind::tetrahedral) {
    if (m.labels.size() != 1) throw MoveError("tetrahedral needs one label a");
    auto [p1, p2] = tetrahedral_paths(p, m.labels[0]);
    out.push_back({p1, p2});
    out.push_back({undo_events(c.alphabet, p1), undo_events(c.alphabet, p2)});
  }
  return out;
}

Chart apply_template(const Chart& c, const MoveInstance& m) {
  for (const auto& [a, b] : template_pairs(c, m)) {
    for (const auto* from : {&a, &b}) {
      const Events& to = from == &a ? b : a;
      if (static_cast<std::size_t>(m.level) + from->size() > c.events.size()) continue;
      if (same_shape(*from, window(c, m.level, from->size()))) return splice(c, m.level, from->size(), to);
    }
  }
  throw MoveError(to_string(m.kind) + " pattern not found at level " + std::to_string(m.level));
}

const ChartEvent& event_at(const Chart& c, int level) {
  if (level < 0 || level >= c.levels()) throw MoveError("no event at level index " + std::to_string(level));
  return c.events[static_cast<std::size_t>(level)];
}

std::vector<int> black_ids(std::span<const ChartEvent> events) {
  std::vector<int> ids;
  for (const auto& e : events) {
    if (e.kind == EventKind::black) ids.push_back(e.vertex);
  }
  return ids;
}

// A merge window: the resolution of `labels` in either mode.
std::optional<std::pair<Mode, std::size_t>> find_resolution(const Chart& c, const MoveInstance& m) {
  for (Mode mode : {Mode::insert, Mode::erase}) {
    Events r;
    if (c.alphabet == Alphabet::dihedral) {
      try {
        r = dihedral_resolution_events(c.degree, m.pos, m.labels, m.colors, mode, {});
      } catch (const std::invalid_argument&) {
        continue;
      }
    } else {
      r = resolution_events(c.degree, m.pos, m.labels, mode, {});
    }
    if (static_cast<std::size_t>(m.level) + r.size() > c.events.size()) continue;
    if (same_shape(r, window(c, m.level, r.size()))) return std::pair{mode, r.size()};
  }
  return std::nullopt;
}

std::vector<int> resolve_colors(const Chart& c, const ChartEvent& e, const MoveInstance& m) {
  try {
    return m.colors.empty() ? default_resolution_colors(c.degree, e.labels, e.mode) : m.colors;
  } catch (const std::invalid_argument& ex) {
    throw MoveError(std::string("branch_resolve: ") + ex.what());
  }
}

Chart apply_resolve(const Chart& c, const MoveInstance& m) {
  const auto& e = event_at(c, m.level);
  if (!e.is_branching()) throw MoveError("branch_resolve: no branch vertex at this level");
  Chart without = c;
  without.events[static_cast<std::size_t>(m.level)].vertex = 0;
  if (c.alphabet == Alphabet::dihedral) {
    const auto colors = resolve_colors(c, e, m);
    auto ids = take_ids(without, m.ids, colors.size());
    try {
      return splice(c, m.level, 1, dihedral_resolution_events(c.degree, e.pos, e.labels, colors, e.mode, ids));
    } catch (const std::invalid_argument& ex) {
      throw MoveError(std::string("branch_resolve: ") + ex.what());
    }
  }
  if (e.kind != EventKind::branch) throw MoveError("branch_resolve: no branch vertex at this level");
  if (e.labels.size() < 2) throw MoveError("branch_resolve: the vertex is already simple");
  const int blacks = c.degree - evaluate_word(c.degree, e.labels).cycle_count();
  auto ids = take_ids(without, m.ids, static_cast<std::size_t>(blacks));
  return splice(c, m.level, 1, resolution_events(c.degree, e.pos, e.labels, e.mode, ids));
}

Chart apply_merge(const Chart& c, const MoveInstance& m) {
  const bool dihedral = c.alphabet == Alphabet::dihedral;
  if (dihedral && (m.labels.empty() || m.colors.empty())) throw MoveError("branch_merge needs a word and its colors");
  if (!dihedral && m.labels.size() < 2) throw MoveError("branch_merge needs a word of length at least 2");
  auto found = find_resolution(c, m);
  if (!found) throw MoveError("branch_merge: no resolution of the word at this level");
  auto [mode, len] = *found;
  Chart without = c;
  for (std::size_t i = 0; i < len; ++i) without.events[static_cast<std::size_t>(m.level) + i].vertex = 0;
  auto ids = take_ids(without, m.ids, 1);
  if (m.labels.size() == 1) return splice(c, m.level, len, {ChartEvent::black(m.pos, m.labels[0], mode, ids[0])});
  return splice(c, m.level, len, {ChartEvent::branch(m.pos, m.labels, mode, ids[0])});
}

Chart apply_commute(const Chart& c, const MoveInstance& m) {
  auto w = window(c, m.level, 2);
  auto swapped = commuted(c.alphabet, w[0], w[1], m.pos == 1);
  if (!swapped) throw MoveError("commute: the two events share a site");
  return splice(c, m.level, 2, *swapped);
}

}  // namespace

std::string to_string(MoveKind k) {
  for (const auto& [kind, name] : kind_names()) {
    if (kind == k) return name;
  }
  throw std::invalid_argument("unknown move kind");
}

MoveKind parse_move_kind(const std::string& s) {
  for (const auto& [kind, name] : kind_names()) {
    if (s == name) return kind;
  }
  throw std::invalid_argument("unknown move kind '" + s + "'");
}

const std::vector<MoveKind>& all_move_kinds() {
  static const std::vector<MoveKind> kinds = [] {
    std::vector<MoveKind> v;
    for (const auto& [kind, name] : kind_names()) v.push_back(kind);
    return v;
  }();
  return kinds;
}

MoveEffect classify(MoveKind k) {
  switch (k) {
    case MoveKind::black_pair_create:
    case MoveKind::black_pair_cancel:
    case MoveKind::arc_birth:
    case MoveKind::arc_death: return MoveEffect::cover_changing;
    case MoveKind::branch_resolve:
    case MoveKind::branch_merge: return MoveEffect::branch_changing;
    default: return MoveEffect::preserving;
  }
}

int max_vertex_id(const Chart& c) {
  int m = 0;
  for (const auto& e : c.events) m = std::max(m, e.vertex);
  return m;
}

bool same_up_to_ids(const Chart& a, const Chart& b) {
  if (a.degree != b.degree || a.alphabet != b.alphabet || a.source != b.source || a.target != b.target) return false;
  return same_shape(a.events, b.events);
}

std::vector<ChartEvent> resolution_events(int n, int pos, const Word& w, Mode mode, std::vector<int> ids) {
  const Permutation g = evaluate_word(n, w);
  Word w2;
  Events ev;
  int q = pos;
  std::size_t next_id = 0;
  for (const auto& cyc : g.cycles()) {
    for (std::size_t i = 1; i < cyc.size(); ++i) {
      const int a = std::min(cyc[0], cyc[i]), b = std::max(cyc[0], cyc[i]);
      Word up;
      for (int l = a; l <= b - 2; ++l) up.push_back(l);
      auto cups = nested_cups(up, q);
      ev.insert(ev.end(), cups.begin(), cups.end());
      const int id = next_id < ids.size() ? ids[next_id] : 0;
      ++next_id;
      ev.push_back(ChartEvent::black(q + (b - 1 - a), b - 1, Mode::insert, id));
      w2.insert(w2.end(), up.begin(), up.end());
      w2.push_back(b - 1);
      w2.insert(w2.end(), up.rbegin(), up.rend());
      q += 2 * (b - 1 - a) + 1;
    }
  }
  auto t = transform_word(n, w2, w, pos);
  ev.insert(ev.end(), t.begin(), t.end());
  if (mode == Mode::erase) return undo_events(Alphabet::permutation, ev);
  return ev;
}

namespace {

Word color_word(int j) {
  using namespace dletter;
  const std::size_t k = static_cast<std::size_t>(std::abs(j));
  Word w(k, j > 0 ? x : x_inv);
  w.push_back(r);
  w.insert(w.end(), k, j > 0 ? x_inv : x);
  return w;
}

Word colors_word(const std::vector<int>& colors) {
  Word w;
  for (int j : colors) {
    Word part = color_word(j);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

// Value the colored blocks must multiply to.
DihedralElement resolution_target(int n, const Word& w, Mode mode) {
  const auto g = evaluate_dihedral_word(n, w);
  return mode == Mode::insert ? g : g.inverse();
}

int gcd(int a, int b) { return b == 0 ? a : gcd(b, a % b); }

}  // namespace

std::vector<ChartEvent> dihedral_resolution_events(int n, int pos, const Word& w, const std::vector<int>& colors,
                                                   Mode mode, std::vector<int> ids) {
  using namespace dletter;
  const auto target = resolution_target(n, w, mode);
  if (target.is_identity()) throw std::invalid_argument("a vertex with trivial monodromy has no resolution");
  const std::size_t want = target.is_reflection() ? 1 : 2;
  if (!target.is_reflection() && gcd(target.rotation(), n) != 1) {
    throw std::invalid_argument("rotation " + target.to_string() + " is not a product of two reflections of the same weight");
  }
  if (colors.size() != want) throw std::invalid_argument("expected " + std::to_string(want) + " colors");
  const Word blocks = colors_word(colors);
  if (evaluate_dihedral_word(n, blocks) != target) throw std::invalid_argument("the colors do not multiply to the vertex label");
  Events ev;
  int q = mode == Mode::insert ? pos : pos + static_cast<int>(w.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const int j = colors[i];
    const Word bowl(static_cast<std::size_t>(std::abs(j)), j > 0 ? x : x_inv);
    auto cups = nested_cups(bowl, q);
    ev.insert(ev.end(), cups.begin(), cups.end());
    ev.push_back(ChartEvent::black(q + std::abs(j), r, Mode::insert, i < ids.size() ? ids[i] : 0));
    q += 2 * std::abs(j) + 1;
  }
  Events t;
  if (mode == Mode::insert) {
    t = transform_dihedral(n, blocks, w, pos);
  } else {
    Word both = w;
    both.insert(both.end(), blocks.begin(), blocks.end());
    t = trivialize_dihedral(n, both, pos);
  }
  ev.insert(ev.end(), t.begin(), t.end());
  return ev;
}

std::vector<int> default_resolution_colors(int n, const Word& w, Mode mode) {
  const auto target = resolution_target(n, w, mode);
  if (target.is_identity()) throw std::invalid_argument("a vertex with trivial monodromy has no resolution");
  const int h = (n - 1) / 2;
  for (int u = -h; u <= h; ++u) {
    if (target.is_reflection()) {
      if (evaluate_dihedral_word(n, color_word(u)) == target) return {u};
    } else if (evaluate_dihedral_word(n, colors_word({u, 0})) == target) {
      return {u, 0};
    }
  }
  throw std::invalid_argument("no resolution colors for " + target.to_string());
}

std::pair<std::vector<ChartEvent>, std::vector<ChartEvent>> tetrahedral_paths(int pos, Letter a) {
  static const auto base = base_tetrahedral_paths();
  return {shift_path(base.first, pos, a), shift_path(base.second, pos, a)};
}

Chart apply_move(const Chart& c, const MoveInstance& m) {
  if (auto info = pair_info(m.kind)) {
    if (info->create) {
      if (m.level < 0 || m.level > c.levels()) throw MoveError("create level out of range");
      return splice(c, m.level, 0, pair_events(c, m, info->lower));
    }
    auto w = window(c, m.level, 2);
    if (!is_cancelling_pair(c.alphabet, w[0], w[1], info->lower)) {
      throw MoveError(to_string(m.kind) + ": events at level " + std::to_string(m.level) + " are not a cancelling pair");
    }
    return splice(c, m.level, 2, {});
  }
  switch (m.kind) {
    case MoveKind::commute: return apply_commute(c, m);
    case MoveKind::branch_resolve: return apply_resolve(c, m);
    case MoveKind::branch_merge: return apply_merge(c, m);
    default: return apply_template(c, m);
  }
}

MoveInstance inverse_move(const Chart& before, const MoveInstance& m) {
  MoveInstance inv = m;
  inv.kind = paired_kind(m.kind);
  inv.ids.clear();
  if (auto info = pair_info(m.kind)) {
    if (!info->create) {
      const auto& e1 = event_at(before, m.level);
      const auto& e2 = event_at(before, m.level + 1);
      inv.pos = e1.pos;
      inv.labels = e1.labels;
      inv.to = e1.kind == EventKind::relator ? e1.to : Word{};
      if (e1.is_branching()) inv.ids = {e1.vertex, e2.vertex};
    }
    return inv;
  }
  switch (m.kind) {
    case MoveKind::commute: {
      Chart after = apply_move(before, m);
      for (int choice : {0, 1}) {
        inv.pos = choice;
        Chart back = apply_move(after, inv);
        if (back == before) return inv;
      }
      throw std::logic_error("commute has no inverse");
    }
    case MoveKind::branch_resolve: {
      const auto& e = event_at(before, m.level);
      inv.pos = e.pos;
      inv.labels = e.labels;
      inv.ids = {e.vertex};
      if (before.alphabet == Alphabet::dihedral) inv.colors = resolve_colors(before, e, m);
      return inv;
    }
    case MoveKind::branch_merge: {
      auto found = find_resolution(before, m);
      if (!found) throw MoveError("branch_merge: no resolution at this level");
      inv.labels.clear();
      inv.pos = 0;
      inv.ids = black_ids(window(before, m.level, found->second));
      return inv;
    }
    default: return inv;
  }
}

HandleCount handle_count(const Chart& before, const MoveInstance& m) {
  HandleCount h;
  if (classify(m.kind) != MoveEffect::cover_changing) return h;
  const auto info = pair_info(m.kind);
  Word w = info->create ? m.labels : event_at(before, m.level).labels;
  const int k = before.degree - slice_permutation(before, w).cycle_count();
  (info->create ? h.one_handles : h.two_handles) = k;
  return h;
}

VerifyResult verify_sequence(const Chart& c0, const std::vector<MoveInstance>& moves) {
  VerifyResult r;
  r.final_chart = c0;
  auto bad = validate(c0);
  if (!bad.empty()) {
    r.ok = false;
    r.reason = "initial chart invalid at level " + std::to_string(bad.front().level) + ": " + bad.front().reason;
    return r;
  }
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      r.final_chart = apply_move(r.final_chart, moves[i]);
    } catch (const std::exception& e) {
      r.ok = false;
      r.failed_index = static_cast<int>(i);
      r.reason = e.what();
      return r;
    }
  }
  return r;
}

std::vector<MoveInstance> inverse_sequence(const Chart& c0, const std::vector<MoveInstance>& moves) {
  std::vector<MoveInstance> inv;
  Chart c = c0;
  for (const auto& m : moves) {
    inv.push_back(inverse_move(c, m));
    c = apply_move(c, m);
  }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

}  // namespace braidfold
