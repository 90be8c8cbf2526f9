#pragma once

// Exact arithmetic in the symmetric group on {1..n} and on words in the
// adjacent transpositions t_j = (j, j+1).
//
// Conventions used throughout the library:
//   * compose(p, q) is function composition, (p o q)(i) = p(q(i)); the
//     rightmost factor acts first.
//   * A transposition word [w_1, ..., w_k] is read in application order: w_1
//     acts first, so evaluate_word(w) = t_{w_k} o ... o t_{w_1}. A written
//     product such as "(45)(34)(23)(12)" is the word [1, 2, 3, 4].

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidfold {

/// Largest degree the library is tuned for; larger values are rejected.
inline constexpr int kMaxDegree = 16;

using Letter = int;
using Word = std::vector<Letter>;

class Permutation {
 public:
  explicit Permutation(int n = 1);

  /// Builds from 1-based images; throws std::invalid_argument unless the
  /// sequence is a bijection of {1..n}.
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(int n, int a, int b);
  static Permutation adjacent(int n, int j) { return transposition(n, j, j + 1); }
  /// Product of disjoint cycles given as lists of points.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Number of cycles, fixed points included.
  int cycle_count() const;
  /// Coxeter length: the number of inversions.
  int length() const;
  /// Cycles of length >= 2, each starting at its smallest point, sorted.
  std::vector<std::vector<int>> cycles() const;
  /// "(1 3)(4 5)"; the identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p o q)(i) = p(q(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }
Permutation power(const Permutation& p, int e);

/// Parses cycle notation: "(1 3)(4 5)", "(1,3)(4,5)" or, for n < 10,
/// the compact "(13)(45)". "()" and "" are the identity.
Permutation parse_permutation(int n, std::string_view text);

struct TranspositionWord {
  int n = 1;
  Word letters;

  TranspositionWord() = default;
  TranspositionWord(int degree, Word w);
  friend bool operator==(const TranspositionWord&, const TranspositionWord&) = default;
};

void check_word(int n, std::span<const Letter> w);

/// Product of adjacent transpositions, first letter acting first.
Permutation evaluate_word(int n, std::span<const Letter> w);
inline Permutation evaluate_word(const TranspositionWord& w) { return evaluate_word(w.n, w.letters); }

/// The canonical reduced word of p: the lexicographically least word of
/// length p.length() that evaluates to p.
Word canonical_word(const Permutation& p);

/// Canonical reduced word for evaluate_word(w).
TranspositionWord reduce_word(const TranspositionWord& w);

/// Finest partition of {1..n} closed under every generator; blocks sorted by
/// smallest element, each block sorted.
std::vector<std::vector<int>> orbits(int n, std::span<const Permutation> generators);

/// Word text "[2,1,2]"; whitespace is tolerated on input.
std::string format_word(std::span<const Letter> w);
Word parse_word(std::string_view text);

inline Word reversed(std::span<const Letter> w) { return Word(w.rbegin(), w.rend()); }

}  // namespace braidfold
