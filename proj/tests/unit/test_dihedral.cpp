#include "braidfold/dihedral.hpp"
#include "doctest.h"

using namespace braidfold;

namespace {

Permutation P(int n, const char* s) { return parse_permutation(n, s); }
DihedralElement D(int n, const char* s) { return parse_dihedral(n, s); }

}  // namespace

TEST_CASE("normal form products") {
  const int n = 5;
  CHECK(multiply(DihedralElement::r(n), DihedralElement::x(n)) == DihedralElement(n, true, 1));
  CHECK(multiply(DihedralElement::x(n), DihedralElement::r(n)) == DihedralElement(n, true, n - 1));
  for (int k = 0; k < n; ++k) {
    CHECK(multiply(DihedralElement(n, false, k), DihedralElement(n, false, n - k)).is_identity());
  }
  CHECK_THROWS(DihedralElement(4, false, 0));
  CHECK_THROWS(DihedralElement(1, false, 0));
  CHECK_THROWS(multiply(DihedralElement(5), DihedralElement(7)));
}

TEST_CASE("relators are trivial") {
  for (int n : {3, 5, 7, 9, 11}) {
    auto r = DihedralElement::r(n), x = DihedralElement::x(n);
    CHECK(power(r, 2).is_identity());
    CHECK(power(x, n).is_identity());
    CHECK(power(multiply(x, r), 2).is_identity());
    CHECK(dihedral_elements(n).size() == static_cast<std::size_t>(2 * n));
  }
}

TEST_CASE("psi images") {
  CHECK(psi(DihedralElement::r(5)) == P(5, "(13)(45)"));
  CHECK(psi(DihedralElement::r(7)) == P(7, "(24)(15)(67)"));
  CHECK(psi(DihedralElement::x(5)) == P(5, "(15432)"));
  CHECK(psi(DihedralElement::x(7)) == P(7, "(1765432)"));
  CHECK(psi(DihedralElement(5, false, 5)).is_identity());
}

TEST_CASE("psi is a homomorphism") {
  for (int n : {3, 5, 7, 9}) {
    for (const auto& a : dihedral_elements(n)) {
      for (const auto& b : dihedral_elements(n)) {
        CHECK(psi(multiply(a, b)) == compose(psi(a), psi(b)));
      }
    }
  }
}

TEST_CASE("reflection tables in D_5") {
  const int n = 5;
  CHECK(reflection_fixing_vertex(n, 2) == D(n, "r"));
  CHECK(reflection_fixing_vertex(n, 5) == D(n, "r x"));
  CHECK(reflection_fixing_vertex(n, 3) == D(n, "r x^2"));
  CHECK(reflection_fixing_vertex(n, 1) == D(n, "r x^3"));
  CHECK(reflection_fixing_vertex(n, 4) == D(n, "r x^4"));
  CHECK(conjugate_reflection(n, 0) == D(n, "r"));
  CHECK(conjugate_reflection(n, 1) == D(n, "[3]"));
  CHECK(conjugate_reflection(n, 2) == D(n, "[4]"));
  CHECK(conjugate_reflection(n, 3) == D(n, "[5]"));
  CHECK(conjugate_reflection(n, 4) == D(n, "[1]"));
  CHECK_THROWS(reflection_fixing_vertex(n, 6));
}

TEST_CASE("reflections are conjugates of r for exactly one j") {
  for (int n : {3, 5, 7, 9}) {
    std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j < n; ++j) {
      auto c = conjugate_reflection(n, j);
      REQUIRE(c.is_reflection());
      ++hits[static_cast<std::size_t>(fixed_vertex(c))];
    }
    for (int v = 1; v <= n; ++v) CHECK(hits[static_cast<std::size_t>(v)] == 1);
  }
}

TEST_CASE("psi words") {
  CHECK(psi_word(D(5, "x"), false) == Word{1, 2, 3, 4});
  CHECK(psi_word(DihedralElement(5), true).empty());
  Word wr = psi_word(D(5, "r"), true);
  CHECK(wr == Word{1, 2, 1, 4});
  CHECK(evaluate_word(5, wr) == P(5, "(13)(45)"));
  for (int n : {3, 5, 7, 9}) {
    CHECK(evaluate_word(n, psi_word_r_unreduced(n)) == psi(DihedralElement::r(n)));
    for (const auto& e : dihedral_elements(n)) {
      CHECK(evaluate_word(n, psi_word(e, false)) == psi(e));
      Word red = psi_word(e, true);
      CHECK(evaluate_word(n, red) == psi(e));
      CHECK(static_cast<int>(red.size()) == psi(e).length());
    }
    for (Letter l : {dletter::r, dletter::r_inv, dletter::x, dletter::x_inv}) {
      CHECK(evaluate_word(n, psi_word_letter(n, l, false)) == psi_letter(n, l));
    }
  }
}

TEST_CASE("dihedral words and text") {
  Word w = parse_dihedral_word("r x X R");
  CHECK(format_dihedral_word(w) == "rxXR");
  CHECK(evaluate_dihedral_word(5, w).is_identity());
  CHECK(evaluate_dihedral_word(5, parse_dihedral_word("rxrx")).is_identity());
  CHECK(D(5, "r x^2").to_string() == "r x^2");
  CHECK(D(5, "rx^2") == D(5, "r x^2"));
  CHECK(D(5, "x^3").to_string() == "x^3");
  CHECK(D(5, "1").to_string() == "1");
  CHECK(D(5, "x r") == D(5, "r x^4"));
  CHECK_THROWS(parse_dihedral_word("rq"));
  DihedralWord dw{5, parse_dihedral_word("rx")};
  CHECK(evaluate_word(5, psi_word(dw, false)) == psi(evaluate_dihedral_word(5, dw.letters)));
}
