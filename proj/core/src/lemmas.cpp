#include "braidfold/lemmas.hpp"

#include <algorithm>
#include <sstream>

#include "braidfold/chart_io.hpp"
#include "braidfold/compile.hpp"
#include "braidfold/dihedral.hpp"
#include "braidfold/movie.hpp"
#include "braidfold/search.hpp"
#include "braidfold/word_rewrite.hpp"
#include "json_internal.hpp"

namespace braidfold {

std::string serialize_certificate(const LemmaCertificate& c) {
  std::ostringstream os;
  detail::json name = c.name, statement = c.statement;
  std::string chart = serialize_chart(c.start);
  chart.pop_back();
  os << "{\n  \"name\": " << name.dump() << ",\n  \"statement\": " << statement.dump()
     << ",\n  \"middle_level\": " << c.middle_level << ",\n  \"middle\": " << serialize_labels(c.start.alphabet, c.middle)
     << ",\n  \"start\": " << detail::indent_block(chart, 2) << ",\n  \"moves\": [";
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << serialize_move(c.start.alphabet, c.moves[i]);
  }
  os << (c.moves.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

LemmaCertificate parse_certificate(std::string_view text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::exception& ex) {
    throw ChartError(std::string("certificate is not JSON: ") + ex.what());
  }
  LemmaCertificate c;
  try {
    c.name = j.at("name").get<std::string>();
    c.statement = j.value("statement", std::string());
    c.start = detail::chart_from_json(j.at("start"));
    c.middle_level = j.at("middle_level").get<int>();
    c.middle = detail::labels_from_json(c.start.alphabet, j.at("middle"));
    c.moves = parse_moves(c.start.alphabet, j.at("moves").dump());
  } catch (const detail::json::exception& ex) {
    throw ChartError(std::string("bad certificate: ") + ex.what());
  } catch (const MoveError& ex) {
    throw ChartError(std::string("bad certificate moves: ") + ex.what());
  }
  return c;
}

namespace {

Word repeat(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word psi_of(int n, const Word& dihedral) {
  Word out;
  for (Letter l : dihedral) {
    Word part = psi_word_letter(n, l, true);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

LemmaCertificate through(std::string name, std::string statement, int n, const Word& source,
                         const std::vector<ChartEvent>& path) {
  Chart start = empty_chart(n);
  start.source = source;
  start.target = source;
  MovieBuilder b(start);
  b.create_pairs(0, path);
  b.cut("");
  LemmaCertificate c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  c.start = start;
  c.moves = b.finish().transitions.front().moves;
  c.middle_level = static_cast<int>(path.size());
  c.middle = replay(n, Alphabet::permutation, source, path);
  return c;
}

}  // namespace

std::vector<LemmaCertificate> author_lemma_certificates() {
  using namespace dletter;
  std::vector<LemmaCertificate> out;

  const Word cube = repeat({1, 2, 3, 4}, 3);
  const Word eight = repeat({4, 3, 2, 1}, 2);
  out.push_back(through("lemma1", "(t4 t3 t2 t1)^3 = (12)(23)(34)(45)(12)(23)(34)(45) = (13524)", 5, cube,
                        transform_word(5, cube, eight)));

  const Word x5 = psi_of(5, Word(5, x));
  Word w = x5;
  out.push_back(through("corollary1", "psi(x^5) is trivial in the chart category", 5, x5, reduce_to_canonical(5, w)));

  const Word rxrx = psi_of(5, {r, x, r, x});
  auto found = search_word_path(5, rxrx, {}, 100000);
  if (!found.found) throw std::logic_error("word search for psi(rxrx) ran out of budget");
  out.push_back(through("lemma2", "psi(rxrx) is trivial in the chart category", 5, rxrx, found.events));
  return out;
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = {"lemma1", "corollary1", "lemma2"};
  return names;
}

LemmaCheck check_certificate(const LemmaCertificate& c) {
  LemmaCheck out{c.name, false, ""};
  auto v = verify_sequence(c.start, c.moves);
  if (!v.ok) {
    out.detail = "move " + std::to_string(v.failed_index) + ": " + v.reason;
    return out;
  }
  const Chart& f = v.final_chart;
  if (f.source != c.start.source || f.target != c.start.target) {
    out.detail = "boundary slices changed";
    return out;
  }
  if (c.middle_level < 0 || c.middle_level > static_cast<int>(f.events.size())) {
    out.detail = "middle level outside the chart";
    return out;
  }
  const Word mid = slice_at(f, c.middle_level);
  if (mid != c.middle) {
    out.detail = "middle slice reads " + format_word(mid);
    return out;
  }
  const int n = f.degree;
  if (evaluate_word(n, mid) != evaluate_word(n, f.source)) {
    out.detail = "middle slice has a different permutation";
    return out;
  }
  if (c.name == "lemma1") {
    if (f.source != repeat({1, 2, 3, 4}, 3) || mid != repeat({4, 3, 2, 1}, 2) ||
        evaluate_word(n, mid) != parse_permutation(5, "(13524)")) {
      out.detail = "lemma1 endpoints differ from (t4 t3 t2 t1)^3 and (13524)";
      return out;
    }
  }
  out.ok = true;
  out.detail = std::to_string(c.moves.size()) + " moves, middle " + (mid.empty() ? "empty" : format_word(mid));
  return out;
}

namespace {

// "(45)(12)(23)" is the word [2, 1, 4]: written products act right to left.
Word word_from_written(std::string_view text) {
  Word w;
  for (std::size_t i = 0; i + 2 < text.size(); ++i) {
    if (text[i] == '(') w.push_back(std::min(text[i + 1], text[i + 2]) - '0');
  }
  return reversed(w);
}

LemmaCheck check_example() {
  LemmaCheck out{"example", false, ""};
  const int n = 5;
  const auto R = DihedralElement::r(n), X = DihedralElement::x(n);
  const std::vector<DihedralElement> colors = {R, X * R * X.inverse(), X * X};
  if (!(colors[0] * colors[1] * colors[2]).is_identity()) {
    out.detail = "r (x r x^-1) x^2 is not trivial";
    return out;
  }
  static constexpr std::string_view lines[] = {
      "(45)(12)(23)(12)(45)(34)(23)(12)(45)(12)(23)(12)(12)(23)(34)(45)",
      "(12)(23)(12)(45)(45)(34)(23)(45)(12)(12)(34)(45)",
      "(12)(23)(12)(34)(23)(45)(34)(45)",
      "(23)(12)(23)(34)(23)(34)(45)(34)",
      "(23)(12)(34)(23)(34)(34)(45)(34)",
      "(23)(12)(34)(23)(45)(34)",
  };
  const Permutation expected = psi(colors[0] * colors[1]);
  if (expected != parse_permutation(n, "(13524)")) {
    out.detail = "psi(r x r x^-1) is not (13524)";
    return out;
  }
  Word prev;
  for (std::size_t i = 0; i < std::size(lines); ++i) {
    const Word w = word_from_written(lines[i]);
    if (evaluate_word(n, w) != expected) {
      out.detail = "line " + std::to_string(i + 1) + " does not evaluate to (13524)";
      return out;
    }
    if (i > 0 && !search_word_path(n, prev, w, 200000).found) {
      out.detail = "no chart joins lines " + std::to_string(i) + " and " + std::to_string(i + 1);
      return out;
    }
    prev = w;
  }
  try {
    Chart d = build_planar_cover_chart(n, colors);
    if (!is_valid(d) || !d.closed()) {
      out.detail = "planar chart is not a valid closed chart";
      return out;
    }
  } catch (const std::exception& ex) {
    out.detail = ex.what();
    return out;
  }
  out.ok = true;
  out.detail = "r (x r x^-1) x^2 = 1; six lines joined by charts, all (13524)";
  return out;
}

}  // namespace

std::vector<LemmaCheck> run_lemma_suite() {
  std::vector<LemmaCheck> out;
  for (const auto& name : lemma_names()) {
    const auto text = lemma_certificate_text(name);
    if (text.empty()) {
      out.push_back({name, false, "certificate was not embedded at build time"});
      continue;
    }
    try {
      out.push_back(check_certificate(parse_certificate(text)));
    } catch (const std::exception& ex) {
      out.push_back({name, false, ex.what()});
    }
  }
  out.push_back(check_example());
  return out;
}

}  // namespace braidfold
