#include <random>

#include "braidfold/chart_io.hpp"
#include "braidfold/dihedral.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace braidfold;

TEST_CASE("canonical chart text") {
  Chart c = empty_chart(5);
  c.events = {ChartEvent::cup(0, 1), ChartEvent::black(1, 2, Mode::insert, 1),
              ChartEvent::black(1, 2, Mode::erase, 2), ChartEvent::cap(0, 1)};
  const std::string expected =
      "{\n"
      "  \"degree\": 5,\n"
      "  \"alphabet\": \"permutation\",\n"
      "  \"source\": [],\n"
      "  \"target\": [],\n"
      "  \"events\": [\n"
      "    {\"kind\": \"cup\", \"pos\": 0, \"labels\": [1]},\n"
      "    {\"kind\": \"black\", \"pos\": 1, \"labels\": [2], \"mode\": \"insert\", \"vertex\": 1},\n"
      "    {\"kind\": \"black\", \"pos\": 1, \"labels\": [2], \"mode\": \"delete\", \"vertex\": 2},\n"
      "    {\"kind\": \"cap\", \"pos\": 0, \"labels\": [1]}\n"
      "  ]\n"
      "}\n";
  CHECK(serialize_chart(c) == expected);
  CHECK(parse_chart(expected) == c);
  CHECK(serialize_chart(empty_chart(3)).find("\"events\": []") != std::string::npos);
}

TEST_CASE("dihedral labels are letter strings") {
  Chart c = empty_chart(5, Alphabet::dihedral);
  c.events = {ChartEvent::cup(0, dletter::x), ChartEvent::relator(0, parse_dihedral_word("xX"), {})};
  std::string text = serialize_chart(c);
  CHECK(text.find("\"labels\": \"xX\", \"to\": \"\"") != std::string::npos);
  CHECK(parse_chart(text) == c);
}

TEST_CASE("malformed chart text is rejected") {
  CHECK_THROWS_AS(parse_chart("{"), ChartError);
  CHECK_THROWS_AS(parse_chart("{\"degree\": 5}"), ChartError);
  CHECK_THROWS_AS(parse_chart(R"({"degree": 5, "alphabet": "knots", "events": []})"), ChartError);
  CHECK_THROWS_AS(parse_chart(R"({"degree": 5, "alphabet": "permutation", "events": [{"kind": "fold", "pos": 0, "labels": [1]}]})"),
                  ChartError);
  CHECK_THROWS_AS(parse_chart(R"({"degree": 5, "alphabet": "permutation", "events": [{"kind": "black", "pos": 0, "labels": [1], "mode": "maybe"}]})"),
                  ChartError);
}

TEST_CASE("property: round trip is bit-exact") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Chart c = trial % 2 ? testgen::random_chart(rng, 3 + trial % 4, 12)
                        : testgen::random_dihedral_chart(rng, 5, 10);
    std::string text = serialize_chart(c);
    Chart back = parse_chart(text);
    CHECK(back == c);
    CHECK(serialize_chart(back) == text);
  }
}
