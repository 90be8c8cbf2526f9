#include "braidfold/chart_io.hpp"

#include <fstream>
#include <sstream>

#include "braidfold/dihedral.hpp"
#include "json_internal.hpp"

namespace braidfold {

namespace detail {

Word labels_from_json(Alphabet a, const json& j) {
  if (a == Alphabet::dihedral) {
    if (!j.is_string()) throw ChartError("dihedral labels must be a string over rRxX");
    return parse_dihedral_word(j.get<std::string>());
  }
  if (!j.is_array()) throw ChartError("labels must be an integer list");
  Word w;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ChartError("labels must be integers");
    w.push_back(v.get<int>());
  }
  return w;
}

ChartEvent event_from_json(Alphabet a, const json& j) {
  if (!j.is_object()) throw ChartError("event must be an object");
  ChartEvent e;
  e.kind = parse_event_kind(j.at("kind").get<std::string>());
  e.pos = j.at("pos").get<int>();
  e.labels = labels_from_json(a, j.at("labels"));
  if (j.contains("to")) e.to = labels_from_json(a, j.at("to"));
  if (j.contains("mode")) {
    auto m = j.at("mode").get<std::string>();
    if (m == "insert") {
      e.mode = Mode::insert;
    } else if (m == "delete") {
      e.mode = Mode::erase;
    } else {
      throw ChartError("mode must be insert or delete");
    }
  }
  if (j.contains("vertex")) e.vertex = j.at("vertex").get<int>();
  return e;
}

Chart chart_from_json(const json& j) {
  try {
    Chart c;
    c.degree = j.at("degree").get<int>();
    c.alphabet = parse_alphabet(j.at("alphabet").get<std::string>());
    if (j.contains("source")) c.source = labels_from_json(c.alphabet, j.at("source"));
    if (j.contains("target")) c.target = labels_from_json(c.alphabet, j.at("target"));
    for (const auto& ev : j.at("events")) c.events.push_back(event_from_json(c.alphabet, ev));
    return c;
  } catch (const json::exception& ex) {
    throw ChartError(std::string("malformed chart: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ChartError(std::string("malformed chart: ") + ex.what());
  }
}

std::string indent_block(const std::string& text, int spaces) {
  std::string pad(static_cast<std::size_t>(spaces), ' ');
  std::string out;
  bool line_start = false;
  for (char ch : text) {
    if (line_start && ch != '\n') out += pad;
    line_start = false;
    out += ch;
    if (ch == '\n') line_start = true;
  }
  return out;
}

}  // namespace detail

std::string serialize_labels(Alphabet a, const Word& w) {
  if (a == Alphabet::dihedral) return "\"" + format_dihedral_word(w) + "\"";
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

std::string serialize_event(Alphabet a, const ChartEvent& e) {
  std::string s = "{\"kind\": \"" + to_string(e.kind) + "\", \"pos\": " + std::to_string(e.pos) +
                  ", \"labels\": " + serialize_labels(a, e.labels);
  if (e.kind == EventKind::relator) s += ", \"to\": " + serialize_labels(a, e.to);
  if (e.is_branching()) s += std::string(", \"mode\": \"") + (e.mode == Mode::insert ? "insert" : "delete") + "\"";
  if (e.vertex != 0) s += ", \"vertex\": " + std::to_string(e.vertex);
  return s + "}";
}

std::string serialize_chart(const Chart& c) {
  std::ostringstream os;
  os << "{\n"
     << "  \"degree\": " << c.degree << ",\n"
     << "  \"alphabet\": \"" << to_string(c.alphabet) << "\",\n"
     << "  \"source\": " << serialize_labels(c.alphabet, c.source) << ",\n"
     << "  \"target\": " << serialize_labels(c.alphabet, c.target) << ",\n"
     << "  \"events\": [";
  for (std::size_t i = 0; i < c.events.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << serialize_event(c.alphabet, c.events[i]);
  }
  os << (c.events.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

Chart parse_chart(std::string_view text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::exception& ex) {
    throw ChartError(std::string("chart is not JSON: ") + ex.what());
  }
  return detail::chart_from_json(j);
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

}  // namespace braidfold
