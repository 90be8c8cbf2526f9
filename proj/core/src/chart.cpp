#include "braidfold/chart.hpp"

#include <algorithm>
#include <set>

#include "braidfold/dihedral.hpp"

namespace braidfold {

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::cup: return "cup";
    case EventKind::cap: return "cap";
    case EventKind::crossing: return "crossing";
    case EventKind::white: return "white";
    case EventKind::black: return "black";
    case EventKind::branch: return "branch";
    case EventKind::relator: return "relator";
  }
  return "?";
}

EventKind parse_event_kind(const std::string& s) {
  for (EventKind k : {EventKind::cup, EventKind::cap, EventKind::crossing, EventKind::white,
                      EventKind::black, EventKind::branch, EventKind::relator}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown event kind '" + s + "'");
}

std::string to_string(Alphabet a) { return a == Alphabet::permutation ? "permutation" : "dihedral"; }

Alphabet parse_alphabet(const std::string& s) {
  if (s == "permutation") return Alphabet::permutation;
  if (s == "dihedral") return Alphabet::dihedral;
  throw std::invalid_argument("unknown alphabet '" + s + "'");
}

Letter inverse_letter(Alphabet a, Letter l) { return a == Alphabet::permutation ? l : -l; }

bool letter_in_range(Alphabet a, int degree, Letter l) {
  return a == Alphabet::permutation ? (l >= 1 && l <= degree - 1) : is_dihedral_letter(l);
}

Word inverse_word(Alphabet a, std::span<const Letter> w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(a, *it));
  return out;
}

Word consumed(Alphabet a, const ChartEvent& e) {
  switch (e.kind) {
    case EventKind::cup: return {};
    case EventKind::cap: return {e.labels.at(0), inverse_letter(a, e.labels.at(0))};
    case EventKind::crossing: return {e.labels.at(0), e.labels.at(1)};
    case EventKind::white: return {e.labels.at(0), e.labels.at(1), e.labels.at(0)};
    case EventKind::black:
    case EventKind::branch: return e.mode == Mode::insert ? Word{} : e.labels;
    case EventKind::relator: return e.labels;
  }
  return {};
}

Word produced(Alphabet a, const ChartEvent& e) {
  switch (e.kind) {
    case EventKind::cup: return {e.labels.at(0), inverse_letter(a, e.labels.at(0))};
    case EventKind::cap: return {};
    case EventKind::crossing: return {e.labels.at(1), e.labels.at(0)};
    case EventKind::white: return {e.labels.at(1), e.labels.at(0), e.labels.at(1)};
    case EventKind::black:
    case EventKind::branch: return e.mode == Mode::insert ? e.labels : Word{};
    case EventKind::relator: return e.to;
  }
  return {};
}

ChartEvent inverse_event(Alphabet, const ChartEvent& e) {
  ChartEvent r = e;
  switch (e.kind) {
    case EventKind::cup: r.kind = EventKind::cap; break;
    case EventKind::cap: r.kind = EventKind::cup; break;
    case EventKind::crossing:
    case EventKind::white: std::swap(r.labels[0], r.labels[1]); break;
    case EventKind::black:
    case EventKind::branch: r.mode = e.mode == Mode::insert ? Mode::erase : Mode::insert; break;
    case EventKind::relator: std::swap(r.labels, r.to); break;
  }
  return r;
}

bool is_dihedral_relator(int n, std::span<const Letter> w) {
  auto is_r = [](Letter l) { return l == dletter::r || l == dletter::r_inv; };
  auto is_x = [](Letter l) { return l == dletter::x || l == dletter::x_inv; };
  const std::size_t len = w.size();
  if (len == 2 && is_r(w[0]) && is_r(w[1])) return true;
  if (len == static_cast<std::size_t>(n) &&
      std::all_of(w.begin(), w.end(), [&](Letter l) { return l == w[0] && is_x(l); })) {
    return true;
  }
  if (len == 4) {
    bool alt = (is_r(w[0]) && is_x(w[1]) && is_r(w[2]) && is_x(w[3])) ||
               (is_x(w[0]) && is_r(w[1]) && is_x(w[2]) && is_r(w[3]));
    if (!alt) return false;
    Letter x1 = is_x(w[0]) ? w[0] : w[1];
    Letter x2 = is_x(w[0]) ? w[2] : w[3];
    return x1 == x2;
  }
  return false;
}

Chart empty_chart(int degree, Alphabet alphabet) {
  if (alphabet == Alphabet::dihedral) {
    check_dihedral_degree(degree);
  } else if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("degree out of range");
  }
  Chart c;
  c.degree = degree;
  c.alphabet = alphabet;
  return c;
}

std::string event_violation(const Chart& c, const Word& slice, const ChartEvent& e) {
  const Alphabet a = c.alphabet;
  for (Letter l : e.labels) {
    if (!letter_in_range(a, c.degree, l)) return "label " + std::to_string(l) + " out of range";
  }
  for (Letter l : e.to) {
    if (!letter_in_range(a, c.degree, l)) return "label " + std::to_string(l) + " out of range";
  }
  switch (e.kind) {
    case EventKind::cup:
    case EventKind::cap:
      if (e.labels.size() != 1) return to_string(e.kind) + " needs one label";
      break;
    case EventKind::crossing:
    case EventKind::white: {
      if (a != Alphabet::permutation) return to_string(e.kind) + " only in permutation charts";
      if (e.labels.size() != 2) return to_string(e.kind) + " needs two labels";
      int d = std::abs(e.labels[0] - e.labels[1]);
      if (e.kind == EventKind::crossing && d <= 1) return "crossing labels must differ by more than 1";
      if (e.kind == EventKind::white && d != 1) return "white vertex labels must be adjacent";
      break;
    }
    case EventKind::black:
      if (e.labels.size() != 1) return "black vertex needs one label";
      break;
    case EventKind::branch:
      if (e.labels.empty()) return "branch vertex needs a nonempty word";
      break;
    case EventKind::relator: {
      if (a != Alphabet::dihedral) return "relator vertices only in dihedral charts";
      Word cyc = e.labels;
      Word inv = inverse_word(a, e.to);
      cyc.insert(cyc.end(), inv.begin(), inv.end());
      if (!is_dihedral_relator(c.degree, cyc)) {
        return "relator vertex " + format_dihedral_word(e.labels) + " -> " +
               format_dihedral_word(e.to) + " is not a relator";
      }
      break;
    }
  }
  Word need = consumed(a, e);
  if (e.pos < 0 || static_cast<std::size_t>(e.pos) + need.size() > slice.size()) {
    return to_string(e.kind) + " at position " + std::to_string(e.pos) + " outside slice of length " +
           std::to_string(slice.size());
  }
  if (!std::equal(need.begin(), need.end(), slice.begin() + e.pos)) {
    return to_string(e.kind) + " at position " + std::to_string(e.pos) +
           " does not match the slice letters";
  }
  return {};
}

void apply_event(const Chart& c, Word& slice, const ChartEvent& e) {
  std::string why = event_violation(c, slice, e);
  if (!why.empty()) throw ChartError(why);
  Word in = consumed(c.alphabet, e);
  Word out = produced(c.alphabet, e);
  auto it = slice.erase(slice.begin() + e.pos, slice.begin() + e.pos + static_cast<long>(in.size()));
  slice.insert(it, out.begin(), out.end());
}

std::vector<Violation> validate(const Chart& c) {
  std::vector<Violation> out;
  for (Letter l : c.source) {
    if (!letter_in_range(c.alphabet, c.degree, l)) out.push_back({0, "source letter out of range"});
  }
  if (!out.empty()) return out;
  Word slice = c.source;
  std::set<int> ids;
  for (int i = 0; i < c.levels(); ++i) {
    const ChartEvent& e = c.events[static_cast<std::size_t>(i)];
    if (e.vertex != 0 && !ids.insert(e.vertex).second) {
      out.push_back({i + 1, "vertex id " + std::to_string(e.vertex) + " used twice"});
      return out;
    }
    std::string why = event_violation(c, slice, e);
    if (!why.empty()) {
      out.push_back({i + 1, why});
      // Replay cannot continue meaningfully past a broken event.
      return out;
    }
    apply_event(c, slice, e);
  }
  if (slice != c.target) {
    out.push_back({c.levels(), "final slice " + format_word(slice) + " differs from target " +
                                   format_word(c.target)});
  }
  return out;
}

void require_valid(const Chart& c) {
  auto v = validate(c);
  if (!v.empty()) {
    throw ChartError("invalid chart at level " + std::to_string(v.front().level) + ": " +
                     v.front().reason);
  }
}

Word slice_at(const Chart& c, int level) {
  if (level < 0 || level > c.levels()) {
    throw std::out_of_range("level " + std::to_string(level) + " outside [0, " +
                            std::to_string(c.levels()) + "]");
  }
  Word slice = c.source;
  for (int i = 0; i < level; ++i) apply_event(c, slice, c.events[static_cast<std::size_t>(i)]);
  return slice;
}

std::vector<Word> slices(const Chart& c) {
  std::vector<Word> out{c.source};
  Word slice = c.source;
  for (const auto& e : c.events) {
    apply_event(c, slice, e);
    out.push_back(slice);
  }
  return out;
}

int width(const Chart& c) {
  std::size_t q = 0;
  for (const auto& s : slices(c)) q = std::max(q, s.size());
  return static_cast<int>(q);
}

Permutation letter_permutation(const Chart& c, Letter l) {
  if (c.alphabet == Alphabet::dihedral) return psi_letter(c.degree, l);
  return Permutation::adjacent(c.degree, l);
}

Permutation slice_permutation(const Chart& c, std::span<const Letter> slice) {
  if (c.alphabet == Alphabet::permutation) return evaluate_word(c.degree, slice);
  Permutation acc(c.degree);
  for (Letter l : slice) acc = compose(psi_letter(c.degree, l), acc);
  return acc;
}

std::vector<BranchPoint> branch_points(const Chart& c) {
  require_valid(c);
  std::vector<BranchPoint> out;
  for (int i = 0; i < c.levels(); ++i) {
    const auto& e = c.events[static_cast<std::size_t>(i)];
    if (!e.is_branching()) continue;
    out.push_back({i + 1, e.pos, e.labels, e.mode, e.vertex});
  }
  return out;
}

}  // namespace braidfold
