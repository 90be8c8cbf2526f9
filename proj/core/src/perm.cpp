#include "braidfold/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace braidfold {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("degree " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxDegree) + "]");
  }
}

}  // namespace

Permutation::Permutation(int n) {
  check_degree(n);
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  check_degree(n);
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("images do not form a bijection of {1..n}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p(n);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  if (a < 1 || b < 1 || a > n || b > n || a == b) {
    throw std::invalid_argument("bad transposition (" + std::to_string(a) + " " +
                                std::to_string(b) + ") in degree " + std::to_string(n));
  }
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i];
      int b = c[(i + 1) % c.size()];
      if (a < 1 || a > n || used[static_cast<std::size_t>(a - 1)]) {
        throw std::invalid_argument("cycles are not disjoint or out of range");
      }
      used[static_cast<std::size_t>(a - 1)] = true;
      img[static_cast<std::size_t>(a - 1)] = b;
    }
  }
  return from_images(std::move(img));
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int i = 1; i <= degree(); ++i) r.images_[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int count = 0;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    ++count;
    for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
    }
  }
  return count;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++inv;
    }
  }
  return inv;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)] || (*this)(i) == i) continue;
    std::vector<int> c;
    for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  }
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) img[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation::from_images(std::move(img));
}

Permutation power(const Permutation& p, int e) {
  Permutation base = e < 0 ? p.inverse() : p;
  Permutation acc(p.degree());
  for (int i = 0; i < std::abs(e); ++i) acc = compose(base, acc);
  return acc;
}

Permutation parse_permutation(int n, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    std::string_view body = text.substr(i + 1, close - i - 1);
    std::vector<int> cyc;
    bool separated = body.find_first_of(" ,") != std::string_view::npos;
    if (separated) {
      std::string tmp(body);
      std::replace(tmp.begin(), tmp.end(), ',', ' ');
      std::istringstream is(tmp);
      int v;
      while (is >> v) cyc.push_back(v);
      if (!is.eof()) throw std::invalid_argument("bad cycle entry");
    } else {
      if (n >= 10 && body.size() > 1) {
        throw std::invalid_argument("compact cycle notation needs degree < 10");
      }
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          throw std::invalid_argument("bad character in cycle");
        }
        cyc.push_back(ch - '0');
      }
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    i = close + 1;
    skip_ws();
  }
  return Permutation::from_cycles(n, cycles);
}

TranspositionWord::TranspositionWord(int degree, Word w) : n(degree), letters(std::move(w)) {
  check_degree(n);
  check_word(n, letters);
}

void check_word(int n, std::span<const Letter> w) {
  for (Letter j : w) {
    if (j < 1 || j > n - 1) {
      throw std::invalid_argument("letter " + std::to_string(j) + " outside [1, " +
                                  std::to_string(n - 1) + "]");
    }
  }
}

Permutation evaluate_word(int n, std::span<const Letter> w) {
  check_word(n, w);
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  // img[i-1] is the current image of i; applying t_j afterwards swaps the
  // values j and j+1 wherever they occur.
  for (Letter j : w) {
    for (int& v : img) {
      if (v == j) {
        v = j + 1;
      } else if (v == j + 1) {
        v = j;
      }
    }
  }
  return Permutation::from_images(std::move(img));
}

Word canonical_word(const Permutation& p) {
  // p = t_{a_k} o ... o t_{a_1}; a_1 must be a right descent, p(a) > p(a+1).
  std::vector<int> img = p.images();
  Word out;
  for (;;) {
    std::size_t a = 0;
    while (a + 1 < img.size() && img[a] < img[a + 1]) ++a;
    if (a + 1 >= img.size()) break;
    out.push_back(static_cast<Letter>(a + 1));
    std::swap(img[a], img[a + 1]);
  }
  return out;
}

TranspositionWord reduce_word(const TranspositionWord& w) {
  return TranspositionWord(w.n, canonical_word(evaluate_word(w)));
}

std::vector<std::vector<int>> orbits(int n, std::span<const Permutation> generators) {
  check_degree(n);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : generators) {
    if (g.degree() != n) throw std::invalid_argument("degree mismatch in orbits");
    for (int i = 1; i <= n; ++i) {
      int a = find(i - 1), b = find(g(i) - 1);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (index[static_cast<std::size_t>(r)] < 0) {
      index[static_cast<std::size_t>(r)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(index[static_cast<std::size_t>(r)])].push_back(i + 1);
  }
  return blocks;
}

std::string format_word(std::span<const Letter> w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

Word parse_word(std::string_view text) {
  std::string tmp(text);
  auto l = tmp.find('['), r = tmp.rfind(']');
  if (l == std::string::npos || r == std::string::npos || r < l) {
    throw std::invalid_argument("word must be bracketed, e.g. [2,1,2]");
  }
  tmp = tmp.substr(l + 1, r - l - 1);
  std::replace(tmp.begin(), tmp.end(), ',', ' ');
  std::istringstream is(tmp);
  Word w;
  int v;
  while (is >> v) w.push_back(v);
  if (!is.eof()) throw std::invalid_argument("bad word entry");
  return w;
}

}  // namespace braidfold
