#include <sstream>

#include "braidfold/chart_io.hpp"
#include "braidfold/dihedral.hpp"
#include "braidfold/moves.hpp"
#include "braidfold/word_rewrite.hpp"
#include "json_internal.hpp"

namespace braidfold {

std::string serialize_move(Alphabet a, const MoveInstance& m) {
  std::string s = "{\"move\": \"" + to_string(m.kind) + "\", \"level\": " + std::to_string(m.level) +
                  ", \"pos\": " + std::to_string(m.pos) + ", \"labels\": " + serialize_labels(a, m.labels);
  if (!m.to.empty() || m.kind == MoveKind::relator_pair_create) s += ", \"to\": " + serialize_labels(a, m.to);
  if (!m.ids.empty()) {
    s += ", \"ids\": [";
    for (std::size_t i = 0; i < m.ids.size(); ++i) s += (i ? ", " : "") + std::to_string(m.ids[i]);
    s += "]";
  }
  if (!m.colors.empty()) {
    s += ", \"colors\": [";
    for (std::size_t i = 0; i < m.colors.size(); ++i) s += (i ? ", " : "") + std::to_string(m.colors[i]);
    s += "]";
  }
  return s + "}";
}

std::string serialize_moves(Alphabet a, const std::vector<MoveInstance>& moves) {
  if (moves.empty()) return "[]\n";
  std::string s = "[";
  for (std::size_t i = 0; i < moves.size(); ++i) s += (i ? ",\n  " : "\n  ") + serialize_move(a, moves[i]);
  return s + "\n]\n";
}

std::vector<MoveInstance> parse_moves(Alphabet a, std::string_view text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::exception& e) {
    throw MoveError(std::string("malformed move list: ") + e.what());
  }
  if (!j.is_array()) throw MoveError("move list must be a JSON array");
  std::vector<MoveInstance> out;
  try {
    for (const auto& jm : j) {
      MoveInstance m;
      m.kind = parse_move_kind(jm.at("move").get<std::string>());
      m.level = jm.value("level", 0);
      m.pos = jm.value("pos", 0);
      if (jm.contains("labels")) m.labels = detail::labels_from_json(a, jm.at("labels"));
      if (jm.contains("to")) m.to = detail::labels_from_json(a, jm.at("to"));
      if (jm.contains("ids")) m.ids = jm.at("ids").get<std::vector<int>>();
      if (jm.contains("colors")) m.colors = jm.at("colors").get<std::vector<int>>();
      out.push_back(std::move(m));
    }
  } catch (const detail::json::exception& e) {
    throw MoveError(std::string("bad move entry: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw MoveError(e.what());
  }
  return out;
}

Presentation dihedral_presentation(int n) {
  check_dihedral_degree(n);
  using namespace dletter;
  return {{"r", "x"}, {{r, r}, Word(static_cast<std::size_t>(n), x), {r, x, r, x}}};
}

PsiMap dihedral_psi_map(int n) {
  check_dihedral_degree(n);
  return [n](Letter l) { return psi_word_letter(n, l, true); };
}

Chart relator_block(int degree, const Presentation& p, const PsiMap& psi, const Word& relator) {
  Word source;
  const int gens = static_cast<int>(p.generators.size());
  for (Letter l : relator) {
    if (l == 0 || std::abs(l) > gens) throw std::invalid_argument("relator letter outside the presentation");
    Word part = psi(l);
    source.insert(source.end(), part.begin(), part.end());
  }
  if (!evaluate_word(degree, source).is_identity()) {
    throw std::invalid_argument("psi of the relator is not the identity");
  }
  Chart c = empty_chart(degree);
  c.source = source;
  Word w = source;
  c.events = reduce_to_canonical(degree, w);
  return c;
}

}  // namespace braidfold
