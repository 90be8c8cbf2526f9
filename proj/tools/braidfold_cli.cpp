#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "braidfold/chart_io.hpp"
#include "braidfold/compile.hpp"
#include "braidfold/cover.hpp"
#include "braidfold/dihedral.hpp"
#include "braidfold/knot.hpp"
#include "braidfold/lemmas.hpp"
#include "braidfold/moves.hpp"
#include "braidfold/movie.hpp"
#include "braidfold/orient.hpp"
#include "braidfold/render.hpp"
#include "braidfold/search.hpp"
#include "braidfold/word_rewrite.hpp"
#include "json.hpp"

using namespace braidfold;
using json = nlohmann::ordered_json;

namespace {

bool g_json = false;

// Writes to the file when one is given, otherwise to stdout.
void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    write_text_file(out, text);
  }
}

// Diagram arguments may be files or inline text such as "braid s=2: 1 1 1".
KnotDiagram load_diagram(const std::string& arg) {
  if (std::filesystem::exists(arg)) return parse_diagram(read_text_file(arg));
  return parse_diagram(arg);
}

bool looks_like_movie(const std::string& text) { return text.find("\"frames\"") != std::string::npos; }

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cleaned;
  for (char c : s) cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
  std::istringstream is(cleaned);
  for (int v; is >> v;) out.push_back(v);
  if (!is.eof()) throw std::invalid_argument("expected a list of integers: " + s);
  return out;
}

int cmd_validate(const std::vector<std::string>& files) {
  bool all_ok = true;
  json report = json::array();
  for (const auto& f : files) {
    std::vector<std::string> problems;
    try {
      const std::string text = read_text_file(f);
      if (looks_like_movie(text)) {
        const auto rep = verify_movie(parse_movie(text));
        problems = rep.failures;
      } else {
        for (const auto& v : validate(parse_chart(text))) {
          problems.push_back("level " + std::to_string(v.level) + ": " + v.reason);
        }
      }
    } catch (const std::exception& ex) {
      problems.push_back(ex.what());
    }
    all_ok = all_ok && problems.empty();
    if (g_json) {
      report.push_back({{"file", f}, {"ok", problems.empty()}, {"violations", problems}});
    } else {
      std::cout << f << ": " << (problems.empty() ? "ok" : "invalid") << "\n";
      for (const auto& p : problems) std::cout << "  " << p << "\n";
    }
  }
  if (g_json) std::cout << report.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_invariants(const std::string& file) {
  Chart c = load_chart(file);
  if (c.alphabet == Alphabet::dihedral) c = compile_chart(c);
  const auto inv = cover_invariants(c);
  std::cout << (g_json ? to_json(inv) : summary(inv)) << "\n";
  return 0;
}

int cmd_reduce(int n, const std::string& word, bool dihedral, bool chart) {
  if (dihedral) {
    const Word w = parse_dihedral_word(word);
    DihedralElement e(n);
    for (Letter l : w) e = e * DihedralElement::from_letter(n, l);
    const Word p = psi_word(e, true);
    if (g_json) {
      std::cout << json{{"element", e.to_string()}, {"psi", psi(e).to_string()}, {"psi_word", p}}.dump() << "\n";
    } else {
      std::cout << e.to_string() << "\npsi = " << psi(e).to_string() << " = " << format_word(p) << "\n";
    }
    return 0;
  }
  const Word w = parse_word(word);
  check_word(n, w);
  if (chart) {
    Chart c = empty_chart(n);
    c.source = w;
    Word copy = w;
    c.events = reduce_to_canonical(n, copy);
    c.target = copy;
    std::cout << serialize_chart(c);
    return 0;
  }
  const auto r = reduce_word(TranspositionWord(n, w));
  const auto p = evaluate_word(n, w);
  if (g_json) {
    std::cout << json{{"reduced", r.letters}, {"canonical", canonical_word(p)}, {"permutation", p.to_string()}}.dump()
              << "\n";
  } else {
    std::cout << format_word(r.letters) << "\n" << p.to_string() << "\n";
  }
  return 0;
}

int cmd_compile(const std::string& in, const std::string& out, bool resolve) {
  Chart c = compile_chart(load_chart(in));
  if (resolve) c = resolve_all(c);
  emit(out, serialize_chart(c));
  return 0;
}

int cmd_orient(const std::string& in, const std::string& out, std::int64_t budget) {
  Chart c = load_chart(in);
  if (c.alphabet == Alphabet::dihedral) c = compile_chart(c);
  const auto oc = attempt_orientation(c, {.budget = budget});
  emit(out, serialize_oriented(oc));
  if (!out.empty() && out != "-") {
    std::cout << "nodes=" << oc.node_count << (oc.exhaustive ? " (minimum)" : " (best found)") << "\n";
  }
  return 0;
}

int cmd_color_list(int n, const std::string& diagram) {
  const auto cols = fox_colorings(load_diagram(diagram), n);
  if (g_json) {
    json a = json::array();
    for (const auto& c : cols) a.push_back(json::parse(serialize_coloring(c)));
    std::cout << a.dump(2) << "\n";
  } else {
    for (const auto& c : cols) std::cout << serialize_coloring(c) << "\n";
    std::cout << cols.size() << " colorings\n";
  }
  return 0;
}

int cmd_color_check(int n, const std::string& diagram, const std::string& colors) {
  const bool ok = is_fox_coloring(load_diagram(diagram), n, parse_int_list(colors));
  std::cout << (g_json ? (ok ? "{\"ok\": true}" : "{\"ok\": false}") : (ok ? "ok" : "not a Fox coloring")) << "\n";
  return ok ? 0 : 1;
}

int cmd_moves_apply(const std::string& chart, const std::string& moves, const std::string& out) {
  const Chart c = load_chart(chart);
  const auto v = verify_sequence(c, parse_moves(c.alphabet, read_text_file(moves)));
  if (!v.ok) {
    std::cerr << "move " << v.failed_index << ": " << v.reason << "\n";
    return 1;
  }
  emit(out, serialize_chart(v.final_chart));
  return 0;
}

int cmd_moves_verify(const std::string& chart, const std::string& moves, const std::string& target) {
  const Chart c = load_chart(chart);
  const auto v = verify_sequence(c, parse_moves(c.alphabet, read_text_file(moves)));
  bool ok = v.ok;
  std::string detail = v.ok ? "" : "move " + std::to_string(v.failed_index) + ": " + v.reason;
  if (ok && !target.empty() && !same_up_to_ids(v.final_chart, load_chart(target))) {
    ok = false;
    detail = "final chart differs from the target";
  }
  if (g_json) {
    std::cout << json{{"ok", ok}, {"detail", detail}}.dump() << "\n";
  } else {
    std::cout << (ok ? "ok" : "failed: " + detail) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_moves_search(const std::string& a, const std::string& b, std::size_t budget, const std::string& out) {
  const Chart ca = load_chart(a);
  const auto r = search_equivalence(ca, load_chart(b), {.budget = budget});
  if (!r.found) {
    std::cerr << "not found within " << r.states << " states (inconclusive)\n";
    return 1;
  }
  emit(out, serialize_moves(ca.alphabet, r.moves));
  return 0;
}

int print_movie_report(const ChartMovie& m, bool orient) {
  const auto rep = verify_movie(m, {.orient = orient});
  std::cout << (g_json ? report_to_json(rep) : report_summary(rep));
  if (!g_json) std::cout << "status: " << m.status << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_movie_cyclic(const std::string& diagram, int n, const std::string& out) {
  const auto m = build_cyclic_movie(load_diagram(diagram), n);
  if (out.empty()) return print_movie_report(m, false);
  write_text_file(out, serialize_movie(m));
  std::cout << m.frames.size() << " frames, " << m.status << "\n";
  return 0;
}

int cmd_movie_dihedral(const std::string& diagram, int n, const std::string& colors, const std::string& out) {
  const auto d = load_diagram(diagram);
  DihedralColoring col;
  if (!colors.empty()) {
    col.n = n;
    col.arc_colors = parse_int_list(colors);
    if (!is_fox_coloring(d, n, col.arc_colors)) throw std::invalid_argument("not a Fox coloring of the diagram");
  } else {
    const auto all = fox_colorings(d, n);
    auto it = std::find_if(all.begin(), all.end(), [](const auto& c) { return !c.trivial; });
    col = it != all.end() ? *it : all.front();
  }
  col.trivial = std::all_of(col.arc_colors.begin(), col.arc_colors.end(),
                            [&](int v) { return v == col.arc_colors.front(); });
  const auto m = build_dihedral_movie(d, col);
  if (out.empty()) return print_movie_report(m, false);
  write_text_file(out, serialize_movie(m));
  std::cout << "coloring " << serialize_coloring(col) << "\n" << m.frames.size() << " frames, " << m.status << "\n";
  return 0;
}

int cmd_render(const std::string& in, const std::string& out, bool ascii) {
  const std::string text = read_text_file(in);
  if (looks_like_movie(text)) {
    const auto m = parse_movie(text);
    if (!ascii) {
      emit(out, render_movie_svg(m));
      return 0;
    }
    std::string all;
    for (std::size_t i = 0; i < m.frames.size(); ++i) {
      all += "frame " + std::to_string(i) + "\n" + render_chart_ascii(m.frames[i]);
      if (i < m.transitions.size()) all += "  -> " + m.transitions[i].note + "\n";
    }
    emit(out, all);
    return 0;
  }
  const Chart c = parse_chart(text);
  emit(out, ascii ? render_chart_ascii(c) : render_chart_svg(c));
  return 0;
}

int cmd_lemmas() {
  const auto checks = run_lemma_suite();
  bool ok = true;
  json a = json::array();
  for (const auto& c : checks) {
    ok = ok && c.ok;
    if (g_json) {
      a.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    } else {
      std::cout << (c.ok ? "pass " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
  }
  if (g_json) std::cout << a.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidfold: charts for branched covers of the sphere"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "machine-readable output");
  app.fallthrough();

  int status = 0;
  std::string out;
  int n = 5;

  std::vector<std::string> files;
  auto* validate_cmd = app.add_subcommand("validate", "check chart or movie files");
  validate_cmd->add_option("files", files, "chart or movie files")->required()->check(CLI::ExistingFile);
  validate_cmd->callback([&] { status = cmd_validate(files); });

  std::string in;
  auto* inv = app.add_subcommand("invariants", "components and euler numbers of the cover");
  inv->add_option("chart", in)->required()->check(CLI::ExistingFile);
  inv->callback([&] { status = cmd_invariants(in); });

  std::string word;
  bool dihedral = false, as_chart = false;
  auto* reduce = app.add_subcommand("reduce", "reduce a permutation or dihedral word");
  reduce->add_option("word", word, "word such as [2,1,2] or r x r")->required();
  reduce->add_option("-n,--n", n, "degree")->required();
  reduce->add_flag("--dihedral", dihedral, "read a word in r, R, x, X over D_n");
  reduce->add_flag("--chart", as_chart, "print the chart rewriting the word to canonical form");
  reduce->callback([&] { status = cmd_reduce(n, word, dihedral, as_chart); });

  bool resolve = false;
  auto* compile = app.add_subcommand("compile", "compile a dihedral chart to a permutation chart");
  compile->add_option("chart", in)->required()->check(CLI::ExistingFile);
  compile->add_option("-o,--out", out, "output file");
  compile->add_flag("--resolve", resolve, "resolve every branch vertex into simple ones");
  compile->callback([&] { status = cmd_compile(in, out, resolve); });

  std::int64_t budget = 5'000'000;
  auto* orient = app.add_subcommand("orient", "orient the edges of a chart, inserting nodes where needed");
  orient->add_option("chart", in)->required()->check(CLI::ExistingFile);
  orient->add_option("-o,--out", out, "output file");
  orient->add_option("--budget", budget, "branch-and-bound budget")->capture_default_str();
  orient->callback([&] { status = cmd_orient(in, out, budget); });

  std::string diagram, colors;
  auto* color = app.add_subcommand("color", "Fox colorings of knot diagrams");
  color->require_subcommand(1);
  auto* color_list = color->add_subcommand("list", "all colorings mod n");
  color_list->add_option("diagram", diagram, "diagram file or text")->required();
  color_list->add_option("-n,--n", n, "modulus")->required();
  color_list->callback([&] { status = cmd_color_list(n, diagram); });
  auto* color_check = color->add_subcommand("check", "check one coloring");
  color_check->add_option("diagram", diagram, "diagram file or text")->required();
  color_check->add_option("-n,--n", n, "modulus")->required();
  color_check->add_option("--colors", colors, "arc colors, e.g. 0,1,2")->required();
  color_check->callback([&] { status = cmd_color_check(n, diagram, colors); });

  std::string moves_file, other;
  std::size_t search_budget = 100000;
  auto* moves = app.add_subcommand("moves", "apply, verify or search move sequences");
  moves->require_subcommand(1);
  auto* apply = moves->add_subcommand("apply", "apply moves and write the final chart");
  apply->add_option("chart", in)->required()->check(CLI::ExistingFile);
  apply->add_option("moves", moves_file)->required()->check(CLI::ExistingFile);
  apply->add_option("-o,--out", out, "output file");
  apply->callback([&] { status = cmd_moves_apply(in, moves_file, out); });
  auto* verify = moves->add_subcommand("verify", "check that moves apply, optionally reaching a target");
  verify->add_option("chart", in)->required()->check(CLI::ExistingFile);
  verify->add_option("moves", moves_file)->required()->check(CLI::ExistingFile);
  verify->add_option("--target", other, "expected final chart")->check(CLI::ExistingFile);
  verify->callback([&] { status = cmd_moves_verify(in, moves_file, other); });
  auto* search = moves->add_subcommand("search", "bounded search for moves from one chart to another");
  search->add_option("from", in)->required()->check(CLI::ExistingFile);
  search->add_option("to", other)->required()->check(CLI::ExistingFile);
  search->add_option("--budget", search_budget, "states to expand")->capture_default_str();
  search->add_option("-o,--out", out, "output file");
  search->callback([&] { status = cmd_moves_search(in, other, search_budget, out); });

  bool with_orient = false;
  auto* movie = app.add_subcommand("movie", "build, verify and replay chart movies");
  movie->require_subcommand(1);
  auto* cyclic = movie->add_subcommand("cyclic", "cyclic n-fold cover of a braid closure");
  cyclic->add_option("diagram", diagram, "diagram file or text")->required();
  cyclic->add_option("-n,--n", n, "degree")->required();
  cyclic->add_option("-o,--out", out, "write the movie instead of its report");
  cyclic->callback([&] { status = cmd_movie_cyclic(diagram, n, out); });
  auto* dih = movie->add_subcommand("dihedral", "dihedral cover from a Fox coloring");
  dih->add_option("diagram", diagram, "diagram file or text")->required();
  dih->add_option("-n,--n", n, "odd modulus")->required();
  dih->add_option("--colors", colors, "arc colors; default: first nontrivial coloring");
  dih->add_option("-o,--out", out, "write the movie instead of its report");
  dih->callback([&] { status = cmd_movie_dihedral(diagram, n, colors, out); });
  auto* mverify = movie->add_subcommand("verify", "verify a movie file");
  mverify->add_option("movie", in)->required()->check(CLI::ExistingFile);
  mverify->add_flag("--orient", with_orient, "orient every frame");
  mverify->callback([&] { status = print_movie_report(parse_movie(read_text_file(in)), with_orient); });
  auto* replay = movie->add_subcommand("replay-t25", "verify the built-in T(2,5) movie");
  replay->add_option("-o,--out", out, "also write the movie file");
  replay->callback([&] {
    const auto m = replay_t25_fixture();
    if (!out.empty()) write_text_file(out, serialize_movie(m));
    status = print_movie_report(m, false);
  });

  bool ascii = false;
  auto* render = app.add_subcommand("render", "draw a chart or movie as SVG or text");
  render->add_option("file", in)->required()->check(CLI::ExistingFile);
  render->add_option("-o,--out", out, "output file");
  render->add_flag("--ascii", ascii, "text drawing instead of SVG");
  render->callback([&] { status = cmd_render(in, out, ascii); });

  auto* lemmas = app.add_subcommand("lemmas", "check the built-in rewrite certificates");
  lemmas->callback([&] { status = cmd_lemmas(); });

  for (auto* sub : {validate_cmd, inv, reduce, compile, orient, color, color_list, color_check, moves, apply, verify,
                    search, movie, cyclic, dih, mverify, replay, render, lemmas}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
