// Regenerates the committed fixtures from the engine. Run after changing the
// rewriting rules or the movie builders, then reconfigure so the library
// embeds the new copies.

#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "braidfold/chart_io.hpp"
#include "braidfold/compile.hpp"
#include "braidfold/dihedral.hpp"
#include "braidfold/knot.hpp"
#include "braidfold/lemmas.hpp"
#include "braidfold/movie.hpp"
#include "braidfold/render.hpp"

namespace fs = std::filesystem;
using namespace braidfold;

namespace {

void write(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  write_text_file(p, text);
  std::cout << "wrote " << p.string() << "\n";
}

Chart submarine() {
  Chart c = empty_chart(5);
  c.events = {ChartEvent::cup(0, 1), ChartEvent::branch(1, {2, 4}, Mode::insert, 1),
              ChartEvent::branch(1, {2, 4}, Mode::erase, 2), ChartEvent::cap(0, 1)};
  return c;
}

Chart r_arc() {
  Chart c = empty_chart(5, Alphabet::dihedral);
  c.events = {ChartEvent::black(0, dletter::r, Mode::insert, 1), ChartEvent::black(0, dletter::r, Mode::erase, 2)};
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate braidfold fixtures"};
  std::string out = BRAIDFOLD_FIXTURE_DIR;
  app.add_option("-o,--out", out, "fixture directory")->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  const fs::path root(out);

  write(root / "movies" / "t25.movie.json", serialize_movie(author_t25_movie()));
  for (const auto& c : author_lemma_certificates()) {
    write(root / "lemmas" / (c.name + ".cert.json"), serialize_certificate(c));
  }

  write(root / "charts" / "submarine.chart.json", serialize_chart(submarine()));
  write(root / "charts" / "submarine_resolved.chart.json", serialize_chart(resolve_all(submarine())));
  write(root / "charts" / "r_arc.d5.chart.json", serialize_chart(r_arc()));
  write(root / "render" / "submarine.svg", render_chart_svg(submarine()));
  write(root / "render" / "submarine.txt", render_chart_ascii(submarine()));

  const std::pair<const char*, const char*> diagrams[] = {
      {"t25.knot", "braid s=2: 1 1 1 1 1"},
      {"trefoil.knot", "braid s=2: 1 1 1"},
      {"figure8.knot", "braid s=3: 1 -2 1 -2"},
      {"figure8_stabilized.knot", "braid s=4: 1 -2 1 -2 3"},
      {"figure8_pd.knot", "pd: [[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"},
  };
  for (const auto& [name, text] : diagrams) write(root / "diagrams" / name, serialize_diagram(parse_diagram(text)) + "\n");

  const char* const relator_names[] = {"rr", "xn", "rxrx"};
  for (int n : {5, 7, 9}) {
    const auto pres = dihedral_presentation(n);
    const auto psi_map = dihedral_psi_map(n);
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
      write(root / "relators" / ("d" + std::to_string(n) + "_" + relator_names[i] + ".chart.json"),
            serialize_chart(relator_block(n, pres, psi_map, pres.relators[i])));
    }
  }
  return 0;
}
