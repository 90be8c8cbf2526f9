#include "braidfold/dihedral.hpp"

#include <cctype>
#include <sstream>

namespace braidfold {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

void check_dihedral_degree(int n) {
  if (n < 3 || n % 2 == 0 || n > kMaxDegree) {
    throw std::invalid_argument("dihedral group D_n needs odd n in [3, " +
                                std::to_string(kMaxDegree) + "], got " + std::to_string(n));
  }
}

bool is_dihedral_letter(Letter l) { return l == 1 || l == -1 || l == 2 || l == -2; }

char dihedral_letter_char(Letter l) {
  switch (l) {
    case dletter::r: return 'r';
    case dletter::r_inv: return 'R';
    case dletter::x: return 'x';
    case dletter::x_inv: return 'X';
    default: throw std::invalid_argument("not a dihedral letter: " + std::to_string(l));
  }
}

Letter parse_dihedral_letter(char c) {
  switch (c) {
    case 'r': return dletter::r;
    case 'R': return dletter::r_inv;
    case 'x': return dletter::x;
    case 'X': return dletter::x_inv;
    default: throw std::invalid_argument(std::string("not a dihedral letter: ") + c);
  }
}

DihedralElement::DihedralElement(int n) : DihedralElement(n, false, 0) {}

DihedralElement::DihedralElement(int n, bool refl, int rot) : n_(n), refl_(refl), rot_(0) {
  check_dihedral_degree(n);
  rot_ = mod(rot, n);
}

DihedralElement DihedralElement::from_letter(int n, Letter l) {
  switch (l) {
    case dletter::r:
    case dletter::r_inv: return r(n);
    case dletter::x: return x(n);
    case dletter::x_inv: return DihedralElement(n, false, -1);
    default: throw std::invalid_argument("not a dihedral letter: " + std::to_string(l));
  }
}

DihedralElement DihedralElement::inverse() const {
  // (r x^b)^{-1} = r x^b; (x^b)^{-1} = x^{-b}.
  return refl_ ? *this : DihedralElement(n_, false, -rot_);
}

std::string DihedralElement::to_string() const {
  if (is_identity()) return "1";
  std::string s = refl_ ? "r" : "";
  if (rot_ != 0) {
    if (refl_) s += ' ';
    s += rot_ == 1 ? "x" : "x^" + std::to_string(rot_);
  }
  return s;
}

DihedralElement multiply(const DihedralElement& a, const DihedralElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dihedral parameter mismatch");
  // r^a x^b r^c x^d = r^{a+c} x^{(-1)^c b + d}, using x^b r = r x^{-b}.
  int rot = (b.is_reflection() ? -a.rotation() : a.rotation()) + b.rotation();
  return DihedralElement(a.n(), a.is_reflection() != b.is_reflection(), rot);
}

DihedralElement power(const DihedralElement& a, int e) {
  DihedralElement base = e < 0 ? a.inverse() : a;
  DihedralElement acc(a.n());
  for (int i = 0; i < std::abs(e); ++i) acc = multiply(acc, base);
  return acc;
}

DihedralElement parse_dihedral(int n, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty dihedral element");
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("bad vertex alias " + s);
    return reflection_fixing_vertex(n, std::stoi(s.substr(1, s.size() - 2)));
  }
  if (s == "1") return DihedralElement(n);
  DihedralElement acc(n);
  std::size_t i = 0;
  while (i < s.size()) {
    Letter l = parse_dihedral_letter(s[i++]);
    int e = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      std::size_t used = 0;
      e = std::stoi(s.substr(i), &used);
      i += used;
    }
    // Text reads left to right as a group product.
    acc = multiply(acc, power(DihedralElement::from_letter(n, l), e));
  }
  return acc;
}

std::vector<DihedralElement> dihedral_elements(int n) {
  std::vector<DihedralElement> out;
  for (int refl = 0; refl < 2; ++refl) {
    for (int b = 0; b < n; ++b) out.emplace_back(n, refl == 1, b);
  }
  return out;
}

namespace {

Permutation psi_r(int n) {
  int k = (n - 1) / 2;
  std::vector<std::vector<int>> cycles;
  for (int i = 1; i <= k - 1; ++i) cycles.push_back({k - i, k + i});
  cycles.push_back({n - 1, n});
  return Permutation::from_cycles(n, cycles);
}

Permutation psi_x(int n) {
  std::vector<int> c{1};
  for (int v = n; v >= 2; --v) c.push_back(v);
  return Permutation::from_cycles(n, {c});
}

}  // namespace

Permutation psi(const DihedralElement& e) {
  Permutation p = power(psi_x(e.n()), e.rotation());
  return e.is_reflection() ? compose(psi_r(e.n()), p) : p;
}

Permutation psi_letter(int n, Letter l) { return psi(DihedralElement::from_letter(n, l)); }

DihedralElement reflection_fixing_vertex(int n, int v) {
  check_dihedral_degree(n);
  if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
  for (int b = 0; b < n; ++b) {
    DihedralElement e(n, true, b);
    if (psi(e)(v) == v) return e;
  }
  throw std::logic_error("no reflection fixes vertex");
}

int fixed_vertex(const DihedralElement& reflection) {
  if (!reflection.is_reflection()) throw std::invalid_argument("not a reflection");
  Permutation p = psi(reflection);
  for (int v = 1; v <= p.degree(); ++v) {
    if (p(v) == v) return v;
  }
  throw std::logic_error("reflection without a fixed vertex");
}

DihedralElement conjugate_reflection(int n, int j) {
  DihedralElement xj(n, false, j);
  return multiply(multiply(xj.inverse(), DihedralElement::r(n)), xj);
}

DihedralElement evaluate_dihedral_word(int n, std::span<const Letter> w) {
  DihedralElement acc(n);
  for (Letter l : w) acc = multiply(DihedralElement::from_letter(n, l), acc);
  return acc;
}

namespace {

// Word for the transposition (a, b), nested as t_a t_{b-1} (a+1, b-1) t_{b-1} t_a.
Word nested_transposition(int a, int b) {
  if (b == a + 1) return {a};
  if (b == a + 2) return {a, a + 1, a};
  Word inner = nested_transposition(a + 1, b - 1);
  Word w{a, b - 1};
  w.insert(w.end(), inner.begin(), inner.end());
  w.push_back(b - 1);
  w.push_back(a);
  return w;
}

}  // namespace

Word psi_word_r_unreduced(int n) {
  check_dihedral_degree(n);
  int k = (n - 1) / 2;
  Word w;
  for (int i = 1; i <= k - 1; ++i) {
    Word t = nested_transposition(k - i, k + i);
    w.insert(w.end(), t.begin(), t.end());
  }
  w.push_back(n - 1);
  return w;
}

Word psi_word_x(int n) {
  check_dihedral_degree(n);
  Word w;
  for (int j = 1; j <= n - 1; ++j) w.push_back(j);
  return w;
}

Word psi_word_letter(int n, Letter l, bool reduced) {
  Word base;
  switch (l) {
    case dletter::r:
    case dletter::r_inv:
      base = reduced ? canonical_word(psi(DihedralElement::r(n))) : psi_word_r_unreduced(n);
      break;
    case dletter::x:
    case dletter::x_inv:
      base = psi_word_x(n);
      break;
    default: throw std::invalid_argument("not a dihedral letter");
  }
  return l < 0 ? reversed(base) : base;
}

Word psi_word(const DihedralElement& e, bool reduced) {
  if (reduced) return canonical_word(psi(e));
  Word w;
  for (int i = 0; i < e.rotation(); ++i) {
    Word lx = psi_word_x(e.n());
    w.insert(w.end(), lx.begin(), lx.end());
  }
  if (e.is_reflection()) {
    Word lr = psi_word_r_unreduced(e.n());
    w.insert(w.end(), lr.begin(), lr.end());
  }
  return w;
}

Word psi_word(const DihedralWord& dw, bool reduced) {
  Word w;
  for (Letter l : dw.letters) {
    Word part = psi_word_letter(dw.n, l, false);
    w.insert(w.end(), part.begin(), part.end());
  }
  return reduced ? canonical_word(evaluate_word(dw.n, w)) : w;
}

std::string format_dihedral_word(std::span<const Letter> w) {
  std::string s;
  for (Letter l : w) s += dihedral_letter_char(l);
  return s;
}

Word parse_dihedral_word(std::string_view text) {
  Word w;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    w.push_back(parse_dihedral_letter(c));
  }
  return w;
}

}  // namespace braidfold
