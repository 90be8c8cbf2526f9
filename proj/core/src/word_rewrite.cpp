#include "braidfold/word_rewrite.hpp"

#include <cstdlib>

#include "braidfold/dihedral.hpp"

namespace braidfold {

namespace {

// b acts last in a reduced expression of the prefix iff value b+1 sits left of
// value b in the image array.
bool is_left_descent(int n, std::span<const Letter> prefix, Letter b) {
  Permutation p = evaluate_word(n, prefix);
  const auto& img = p.images();
  int at_b = -1, at_b1 = -1;
  for (int i = 0; i < n; ++i) {
    if (img[static_cast<std::size_t>(i)] == b) at_b = i;
    if (img[static_cast<std::size_t>(i)] == b + 1) at_b1 = i;
  }
  return at_b1 < at_b;
}

void end_with(int n, Word& w, int e, Letter b, int base, std::vector<ChartEvent>& ev) {
  if (e <= 0) throw std::logic_error("make_end_with: letter is not a descent");
  Letter a = w[static_cast<std::size_t>(e - 1)];
  if (a == b) return;
  if (std::abs(a - b) > 1) {
    end_with(n, w, e - 1, b, base, ev);
    ev.push_back(ChartEvent::crossing(base + e - 2, b, a));
    std::swap(w[static_cast<std::size_t>(e - 2)], w[static_cast<std::size_t>(e - 1)]);
    return;
  }
  end_with(n, w, e - 1, b, base, ev);
  end_with(n, w, e - 2, a, base, ev);
  ev.push_back(ChartEvent::white(base + e - 3, a, b));
  w[static_cast<std::size_t>(e - 3)] = b;
  w[static_cast<std::size_t>(e - 2)] = a;
  w[static_cast<std::size_t>(e - 1)] = b;
}

}  // namespace

std::vector<ChartEvent> make_end_with(int n, Word& w, Letter b, int base) {
  check_word(n, w);
  if (static_cast<int>(w.size()) != evaluate_word(n, w).length()) {
    throw std::invalid_argument("make_end_with needs a reduced word");
  }
  if (!is_left_descent(n, w, b)) throw std::invalid_argument("letter is not a left descent");
  std::vector<ChartEvent> ev;
  end_with(n, w, static_cast<int>(w.size()), b, base, ev);
  return ev;
}

std::vector<ChartEvent> reduce_to_canonical(int n, Word& w, int base) {
  check_word(n, w);
  std::vector<ChartEvent> ev;
  int k = 0;
  while (k < static_cast<int>(w.size())) {
    Letter c = w[static_cast<std::size_t>(k)];
    std::span<const Letter> prefix(w.data(), static_cast<std::size_t>(k));
    if (k > 0 && is_left_descent(n, prefix, c)) {
      end_with(n, w, k, c, base, ev);
      ev.push_back(ChartEvent::cap(base + k - 1, c));
      w.erase(w.begin() + k - 1, w.begin() + k + 1);
      --k;
    } else {
      ++k;
    }
  }
  Word target = canonical_word(evaluate_word(n, w));
  for (int i = static_cast<int>(target.size()) - 1; i >= 0; --i) {
    end_with(n, w, i + 1, target[static_cast<std::size_t>(i)], base, ev);
  }
  return ev;
}

std::vector<ChartEvent> undo_events(Alphabet a, const std::vector<ChartEvent>& events) {
  std::vector<ChartEvent> out;
  for (auto it = events.rbegin(); it != events.rend(); ++it) out.push_back(inverse_event(a, *it));
  return out;
}

std::vector<ChartEvent> transform_word(int n, const Word& u, const Word& v, int base) {
  if (evaluate_word(n, u) != evaluate_word(n, v)) {
    throw std::invalid_argument("transform_word: words have different values");
  }
  Word a = u, b = v;
  auto ev = reduce_to_canonical(n, a, base);
  auto back = undo_events(Alphabet::permutation, reduce_to_canonical(n, b, base));
  ev.insert(ev.end(), back.begin(), back.end());
  return ev;
}

Word replay(int degree, Alphabet a, Word w, const std::vector<ChartEvent>& events) {
  Chart c;
  c.degree = degree;
  c.alphabet = a;
  for (const auto& e : events) apply_event(c, w, e);
  return w;
}

std::vector<ChartEvent> shifted(std::vector<ChartEvent> events, int offset) {
  for (auto& e : events) e.pos += offset;
  return events;
}

std::vector<ChartEvent> nested_cups(const Word& w, int base) {
  std::vector<ChartEvent> ev;
  for (std::size_t i = 0; i < w.size(); ++i) {
    ev.push_back(ChartEvent::cup(base + static_cast<int>(i), w[i]));
  }
  return ev;
}

std::vector<ChartEvent> transform_dihedral(int n, const Word& u, const Word& v, int base) {
  if (u == v) return {};
  Word v_inv;
  for (auto it = v.rbegin(); it != v.rend(); ++it) v_inv.push_back(-*it);
  auto ev = nested_cups(v_inv, base + static_cast<int>(u.size()));
  Word both = u;
  both.insert(both.end(), v_inv.begin(), v_inv.end());
  auto t = trivialize_dihedral(n, both, base);
  ev.insert(ev.end(), t.begin(), t.end());
  return ev;
}

std::vector<ChartEvent> trivialize_dihedral(int n, const Word& w, int base) {
  using namespace dletter;
  if (!evaluate_dihedral_word(n, w).is_identity()) {
    throw std::invalid_argument("dihedral word " + format_dihedral_word(w) + " is not trivial");
  }
  std::vector<ChartEvent> ev;
  int f = 0;
  bool e = false;
  const Word xn(static_cast<std::size_t>(n), x);
  const Word xn1(static_cast<std::size_t>(n - 1), x);
  auto absorb_x = [&] {
    if (++f == n) {
      ev.push_back(ChartEvent::relator(base, xn, {}));
      f = 0;
    }
  };
  auto absorb_X = [&] {
    if (f > 0) {
      ev.push_back(ChartEvent::cap(base + f - 1, x));
      --f;
    } else {
      ev.push_back(ChartEvent::relator(base, {x_inv}, xn1));
      f = n - 1;
    }
  };
  for (Letter c : w) {
    const int q = base + f + (e ? 1 : 0);
    if (c == r_inv) {
      ev.push_back(ChartEvent::relator(q, {r_inv}, {r}));
      c = r;
    }
    if (c == r) {
      if (e) ev.push_back(ChartEvent::relator(base + f, {r, r}, {}));
      e = !e;
    } else if (c == x) {
      if (e) {
        ev.push_back(ChartEvent::relator(base + f, {r, x}, {x_inv, r}));
        absorb_X();
      } else {
        absorb_x();
      }
    } else if (c == x_inv) {
      if (e) {
        ev.push_back(ChartEvent::relator(base + f, {r, x_inv}, {x, r}));
        absorb_x();
      } else {
        absorb_X();
      }
    } else {
      throw std::invalid_argument("not a dihedral letter");
    }
  }
  return ev;
}

}  // namespace braidfold
