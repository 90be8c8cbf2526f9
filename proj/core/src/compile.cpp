#include "braidfold/compile.hpp"

#include "braidfold/moves.hpp"
#include "braidfold/word_rewrite.hpp"

namespace braidfold {

namespace {

Word letter_word(int n, Letter l) { return psi_word_letter(n, l, true); }

Word compiled_word(int n, std::span<const Letter> w) {
  Word out;
  for (Letter l : w) {
    Word part = letter_word(n, l);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<ChartEvent> compile_event(int n, const Word& slice, const ChartEvent& e) {
  const int P = compiled_position(n, slice, e.pos);
  switch (e.kind) {
    case EventKind::cup: return nested_cups(letter_word(n, e.labels[0]), P);
    case EventKind::cap: return undo_events(Alphabet::permutation, nested_cups(letter_word(n, e.labels[0]), P));
    case EventKind::black:
    case EventKind::branch: {
      Word w = compiled_word(n, e.labels);
      if (w.empty()) throw ChartError("branch vertex with trivial monodromy");
      if (w.size() == 1) return {ChartEvent::black(P, w[0], e.mode, e.vertex)};
      return {ChartEvent::branch(P, w, e.mode, e.vertex)};
    }
    case EventKind::relator: return transform_word(n, compiled_word(n, e.labels), compiled_word(n, e.to), P);
    default: throw ChartError("dihedral charts carry no " + to_string(e.kind) + " vertices");
  }
}

}  // namespace

int compiled_position(int n, const Word& dihedral_slice, int pos) {
  return static_cast<int>(compiled_word(n, std::span(dihedral_slice).first(static_cast<std::size_t>(pos))).size());
}

Chart compile_chart(const Chart& d) {
  if (d.alphabet != Alphabet::dihedral) throw ChartError("compile_chart needs a dihedral chart");
  require_valid(d);
  const int n = d.degree;
  Chart c = empty_chart(n);
  c.source = compiled_word(n, d.source);
  c.target = compiled_word(n, d.target);
  Word slice = d.source;
  for (const auto& e : d.events) {
    auto ev = compile_event(n, slice, e);
    c.events.insert(c.events.end(), ev.begin(), ev.end());
    apply_event(d, slice, e);
  }
  require_valid(c);
  return c;
}

Chart resolve_branch(const Chart& c, int vertex) {
  for (int L = 0; L < c.levels(); ++L) {
    const auto& e = c.events[static_cast<std::size_t>(L)];
    if (vertex == 0 || e.vertex != vertex || !e.is_branching()) continue;
    if (e.kind == EventKind::black || e.labels.size() == 1) return c;
    return apply_move(c, {MoveKind::branch_resolve, L, 0, {}, {}, {}, {}});
  }
  throw ChartError("no branch vertex with id " + std::to_string(vertex));
}

Chart resolve_all(const Chart& c) {
  Chart out = c;
  for (int L = 0; L < out.levels(); ++L) {
    const auto& e = out.events[static_cast<std::size_t>(L)];
    if (e.kind == EventKind::branch && e.labels.size() > 1) out = apply_move(out, {MoveKind::branch_resolve, L, 0, {}, {}, {}, {}});
  }
  return out;
}

int conjugation_exponent(const DihedralElement& e) {
  if (!e.is_reflection()) throw std::invalid_argument("not a reflection: " + e.to_string());
  const int n = e.n();
  for (int j = -(n - 1) / 2; j <= (n - 1) / 2; ++j) {
    if (conjugate_reflection(n, j) == e) return j;
  }
  throw std::logic_error("reflection without conjugation exponent");
}

Chart build_planar_cover_chart(int n, const std::vector<DihedralElement>& colors) {
  using namespace dletter;
  if (colors.size() < 2) throw std::invalid_argument("a planar cover chart needs at least two branch points");
  DihedralElement prod(n);
  for (const auto& a : colors) {
    if (a.n() != n) throw std::invalid_argument("color from a different dihedral group");
    prod = prod * a;
  }
  if (!prod.is_identity()) {
    throw std::invalid_argument("the product of the colors is " + prod.to_string() + ", not 1");
  }
  Chart c = empty_chart(n, Alphabet::dihedral);
  Word slice;
  for (std::size_t i = colors.size(); i-- > 0;) {
    const auto& a = colors[i];
    const int q = static_cast<int>(slice.size());
    const int id = static_cast<int>(i) + 1;
    if (a.is_identity()) continue;
    std::vector<ChartEvent> ev;
    if (a.is_reflection()) {
      const int j = conjugation_exponent(a);
      const Word bowl(static_cast<std::size_t>(std::abs(j)), j > 0 ? x : x_inv);
      ev = nested_cups(bowl, q);
      ev.push_back(ChartEvent::black(q + std::abs(j), r, Mode::insert, id));
    } else {
      const Word w(static_cast<std::size_t>(a.rotation()), x);
      ev.push_back(w.size() == 1 ? ChartEvent::black(q, x, Mode::insert, id) : ChartEvent::branch(q, w, Mode::insert, id));
    }
    for (const auto& e : ev) {
      apply_event(c, slice, e);
      c.events.push_back(e);
    }
  }
  auto tail = trivialize_dihedral(n, slice, 0);
  c.events.insert(c.events.end(), tail.begin(), tail.end());
  require_valid(c);
  return c;
}

}  // namespace braidfold
