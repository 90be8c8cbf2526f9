#pragma once

// The dihedral group D_n = <r, x : r^2 = x^n = (xr)^2 = 1> for odd n >= 3,
// elements kept in the normal form r^a x^b, and its permutation
// representation psi into the symmetric group on the vertices of an n-gon.
//
// psi(x) is the rotation (1, n, n-1, ..., 2). psi(r) is the reflection r_k
// (n = 2k+1) that fixes the vertex k:
//   r_k = (k-1, k+1)(k-2, k+2) ... (1, n-2)(n-1, n).

#include <string>
#include <string_view>
#include <vector>

#include "braidfold/perm.hpp"

namespace braidfold {

/// Letters of a dihedral word. The inverse of a letter is its negation.
namespace dletter {
inline constexpr Letter r = 1;
inline constexpr Letter r_inv = -1;
inline constexpr Letter x = 2;
inline constexpr Letter x_inv = -2;
}  // namespace dletter

void check_dihedral_degree(int n);
bool is_dihedral_letter(Letter l);
/// "r", "R", "x", "X" (upper case is the inverse letter).
char dihedral_letter_char(Letter l);
Letter parse_dihedral_letter(char c);

class DihedralElement {
 public:
  /// Identity of D_n; throws std::invalid_argument for even or small n.
  explicit DihedralElement(int n = 3);
  DihedralElement(int n, bool refl, int rot);

  static DihedralElement r(int n) { return DihedralElement(n, true, 0); }
  static DihedralElement x(int n) { return DihedralElement(n, false, 1); }
  static DihedralElement from_letter(int n, Letter l);

  int n() const { return n_; }
  bool is_reflection() const { return refl_; }
  int rotation() const { return rot_; }
  bool is_identity() const { return !refl_ && rot_ == 0; }
  DihedralElement inverse() const;

  /// Normal form text: "1", "x^3", "r", "r x^2".
  std::string to_string() const;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;

 private:
  int n_;
  bool refl_;
  int rot_;
};

/// Group product a*b in normal form (b acts first under psi).
DihedralElement multiply(const DihedralElement& a, const DihedralElement& b);
inline DihedralElement operator*(const DihedralElement& a, const DihedralElement& b) {
  return multiply(a, b);
}
DihedralElement power(const DihedralElement& a, int e);

/// Parses "r", "x^3", "r x^2", "rx^2", "1" and the vertex alias "[v]".
DihedralElement parse_dihedral(int n, std::string_view text);

/// All 2n elements in normal-form order 1, x, ..., x^{n-1}, r, rx, ...
std::vector<DihedralElement> dihedral_elements(int n);

Permutation psi(const DihedralElement& e);
Permutation psi_letter(int n, Letter l);

/// The reflection [v] whose psi-image fixes vertex v.
DihedralElement reflection_fixing_vertex(int n, int v);
/// Vertex fixed by a reflection.
int fixed_vertex(const DihedralElement& reflection);

/// x^{-j} r x^{j}.
DihedralElement conjugate_reflection(int n, int j);

struct DihedralWord {
  int n = 3;
  Word letters;
};

/// Group value of a word, first letter acting first: l_k * ... * l_1.
DihedralElement evaluate_dihedral_word(int n, std::span<const Letter> w);

/// The transposition word for r_k in the nested-conjugate form
/// (a_i, b_i) = t_{a_i} t_{b_i - 1} (a_i+1, b_i-1) t_{b_i - 1} t_{a_i}, followed
/// by t_{n-1}.
Word psi_word_r_unreduced(int n);
/// [1, 2, ..., n-1], evaluating to psi(x).
Word psi_word_x(int n);

/// Transposition word for one dihedral letter; reduced words are canonical.
Word psi_word_letter(int n, Letter l, bool reduced);
/// Transposition word for an element r^a x^b: x^b acts first, then r^a.
Word psi_word(const DihedralElement& e, bool reduced);
/// Concatenation of the letter words; optionally reduced at the end.
Word psi_word(const DihedralWord& w, bool reduced);

/// Dihedral word text "r x X R" or "rxXR"; format uses no separators.
std::string format_dihedral_word(std::span<const Letter> w);
Word parse_dihedral_word(std::string_view text);

}  // namespace braidfold
