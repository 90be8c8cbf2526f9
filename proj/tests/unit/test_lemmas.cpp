#include <filesystem>

#include "braidfold/chart_io.hpp"
#include "braidfold/dihedral.hpp"
#include "braidfold/lemmas.hpp"
#include "braidfold/moves.hpp"
#include "doctest.h"

using namespace braidfold;

namespace {

std::filesystem::path fixture(const std::string& rel) { return std::filesystem::path(BRAIDFOLD_FIXTURE_DIR) / rel; }

}  // namespace

TEST_CASE("committed certificates equal the freshly authored ones") {
  const auto authored = author_lemma_certificates();
  REQUIRE(authored.size() == lemma_names().size());
  for (std::size_t i = 0; i < authored.size(); ++i) {
    CAPTURE(authored[i].name);
    CHECK(authored[i].name == lemma_names()[i]);
    const auto text = lemma_certificate_text(authored[i].name);
    CHECK(text == serialize_certificate(authored[i]));
    CHECK(read_text_file(fixture("lemmas/" + authored[i].name + ".cert.json")) == text);
    CHECK(parse_certificate(text) == authored[i]);
  }
  CHECK(lemma_certificate_text("lemma9").empty());
}

TEST_CASE("lemma suite passes") {
  for (const auto& c : run_lemma_suite()) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.ok);
  }
}

TEST_CASE("lemma 1 reads the eight letter word in the middle") {
  const auto c = parse_certificate(lemma_certificate_text("lemma1"));
  CHECK(c.start.source == Word{1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4});
  CHECK(c.middle == Word{4, 3, 2, 1, 4, 3, 2, 1});
  CHECK(evaluate_word(5, c.middle) == parse_permutation(5, "(13524)"));
  CHECK(evaluate_word(5, c.middle) == power(psi(DihedralElement::x(5)), 3));
}

TEST_CASE("tampered certificates fail") {
  auto c = parse_certificate(lemma_certificate_text("lemma2"));
  SUBCASE("wrong middle") {
    c.middle = {1, 1};
    CHECK_FALSE(check_certificate(c).ok);
  }
  SUBCASE("dropped move") {
    c.moves.pop_back();
    CHECK_FALSE(check_certificate(c).ok);
  }
  SUBCASE("illegal move") {
    c.moves.front().pos += 40;
    const auto r = check_certificate(c);
    CHECK_FALSE(r.ok);
    CHECK(r.detail.rfind("move 0:", 0) == 0);
  }
}

TEST_CASE("committed relator blocks match the runtime expansion") {
  const char* const names[] = {"rr", "xn", "rxrx"};
  for (int n : {5, 7, 9}) {
    const auto pres = dihedral_presentation(n);
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
      const auto path = fixture("relators/d" + std::to_string(n) + "_" + names[i] + ".chart.json");
      CAPTURE(path.string());
      const Chart committed = load_chart(path);
      CHECK(committed == relator_block(n, pres, dihedral_psi_map(n), pres.relators[i]));
      CHECK(is_valid(committed));
      CHECK(committed.target.empty());
    }
  }
}
