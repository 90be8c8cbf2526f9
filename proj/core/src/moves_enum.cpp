#include <algorithm>

#include "braidfold/dihedral.hpp"
#include "braidfold/moves.hpp"

namespace braidfold {

namespace {

std::vector<Letter> alphabet_letters(const Chart& c) {
  if (c.alphabet == Alphabet::dihedral) return {dletter::r, dletter::r_inv, dletter::x, dletter::x_inv};
  std::vector<Letter> out;
  for (int l = 1; l < c.degree; ++l) out.push_back(l);
  return out;
}

std::optional<MoveKind> cancel_kind(const ChartEvent& e) {
  switch (e.kind) {
    case EventKind::cup: return MoveKind::bubble_cancel;
    case EventKind::cap: return MoveKind::saddle_cancel;
    case EventKind::white: return MoveKind::white_pair_cancel;
    case EventKind::crossing: return MoveKind::crossing_pair_cancel;
    case EventKind::relator: return MoveKind::relator_pair_cancel;
    default: return e.mode == Mode::insert ? std::optional(MoveKind::black_pair_cancel) : std::nullopt;
  }
}

Word sub(const Word& s, int p, int len) {
  if (p < 0 || p + len > static_cast<int>(s.size())) return {};
  return Word(s.begin() + p, s.begin() + p + len);
}

}  // namespace

std::vector<MoveInstance> candidate_moves(const Chart& c, const CandidateOptions& o) {
  std::vector<MoveInstance> out;
  std::vector<Chart> results;
  auto offer = [&](const MoveInstance& m) {
    try {
      Chart r = apply_move(c, m);
      if (r == c) return;
      if (std::find(results.begin(), results.end(), r) != results.end()) return;
      results.push_back(std::move(r));
      out.push_back(m);
    } catch (const MoveError&) {
    } catch (const std::invalid_argument&) {
    }
  };
  const auto S = slices(c);
  const auto letters = alphabet_letters(c);
  for (int L = 0; L <= c.levels(); ++L) {
    const Word& s = S[static_cast<std::size_t>(L)];
    const int len = static_cast<int>(s.size());
    if (o.creations && len + 2 <= o.max_width) {
      for (int p = 0; p <= len; ++p) {
        for (Letter a : letters) offer({MoveKind::bubble_create, L, p, {a}, {}, {}, {}});
      }
      for (int p = 0; p + 1 < len; ++p) offer({MoveKind::saddle_create, L, p, {s[static_cast<std::size_t>(p)]}, {}, {}, {}});
    }
    if (L == c.levels()) break;
    const auto& e = c.events[static_cast<std::size_t>(L)];
    if (L + 1 < c.levels()) {
      offer({MoveKind::commute, L, 0, {}, {}, {}, {}});
      offer({MoveKind::commute, L, 1, {}, {}, {}, {}});
      if (auto k = cancel_kind(e)) offer({*k, L, 0, {}, {}, {}, {}});
    }
    const bool resolvable = c.alphabet == Alphabet::dihedral ? e.is_branching() : e.kind == EventKind::branch && e.labels.size() > 1;
    if (o.resolutions && resolvable) offer({MoveKind::branch_resolve, L, 0, {}, {}, {}, {}});
    if (c.alphabet != Alphabet::permutation) continue;
    const int q = e.pos;
    if (e.kind == EventKind::crossing) {
      for (int p : {q, q - 1}) {
        Word w = sub(s, p, 3);
        if (!w.empty()) offer({MoveKind::slide_crossing, L, p, w, {}, {}, {}});
      }
    }
    if (e.kind == EventKind::crossing || e.kind == EventKind::white) {
      for (int p = q - 2; p <= q; ++p) {
        Word w = sub(s, p, 4);
        if (w.empty()) continue;
        offer({MoveKind::slide_white, L, p, {w[0], w[1], w[3]}, {}, {}, {}});
        offer({MoveKind::slide_white, L, p, {w[1], w[2], w[0]}, {}, {}, {}});
      }
      for (int p = q - 4; p <= q; ++p) {
        Word w = sub(s, p, 6);
        if (!w.empty()) offer({MoveKind::tetrahedral, L, p, {*std::min_element(w.begin(), w.end())}, {}, {}, {}});
      }
    }
  }
  return out;
}

}  // namespace braidfold
