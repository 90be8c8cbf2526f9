#include "braidfold/cover.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "union_find.hpp"

namespace braidfold {

namespace {

void require_closed(const Chart& c) {
  require_valid(c);
  if (!c.closed()) throw ChartError("cover invariants need a closed chart (empty boundary words)");
}

ComponentInvariants component(std::vector<int> sheets, int euler) {
  return {std::move(sheets), euler, (2 - euler) / 2};
}

}  // namespace

std::vector<Permutation> global_monodromies(const Chart& c) {
  require_valid(c);
  std::vector<Permutation> out;
  Word slice = c.source;
  for (const auto& e : c.events) {
    if (e.is_branching()) {
      std::span<const Letter> prefix(slice.data(), static_cast<std::size_t>(e.pos));
      Permutation P = slice_permutation(c, prefix);
      Permutation local = slice_permutation(c, e.labels);
      out.push_back(compose(P.inverse(), compose(local, P)));
    }
    apply_event(c, slice, e);
  }
  return out;
}

CoverInvariants invariants_from_monodromies(int n, const std::vector<Permutation>& g) {
  CoverInvariants inv;
  inv.degree = n;
  inv.branch_count = static_cast<int>(g.size());
  inv.component_orbits = orbits(n, g);
  const int b = inv.branch_count;
  for (const auto& orbit : inv.component_orbits) {
    int euler = static_cast<int>(orbit.size()) * (2 - b);
    for (const auto& p : g) {
      // Cycles of p restricted to the orbit, which p preserves.
      std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
      for (int s : orbit) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++euler;
        for (int t = s; !seen[static_cast<std::size_t>(t)]; t = p(t)) seen[static_cast<std::size_t>(t)] = true;
      }
    }
    inv.euler_total += euler;
    inv.per_component.push_back(component(orbit, euler));
  }
  return inv;
}

CoverInvariants cover_invariants(const Chart& c) {
  require_closed(c);
  return invariants_from_monodromies(c.degree, global_monodromies(c));
}

CoverInvariants sheet_trace_oracle(const Chart& c) {
  require_closed(c);
  const int n = c.degree;
  const int p = c.levels();
  const auto S = slices(c);

  // Faces: the gaps of each strip between event lines, then the outer face.
  std::vector<int> off(static_cast<std::size_t>(p) + 2, 0);
  for (int i = 0; i <= p; ++i) {
    off[static_cast<std::size_t>(i) + 1] = off[static_cast<std::size_t>(i)] + static_cast<int>(S[static_cast<std::size_t>(i)].size()) + 1;
  }
  const int outer = off[static_cast<std::size_t>(p) + 1];
  const int faces = outer + 1;
  auto face = [&](int strip, int gap) { return off[static_cast<std::size_t>(strip)] + gap; };

  struct Cell1 {
    int a, b;
    Permutation g;
  };
  std::vector<Cell1> cells;
  std::vector<std::vector<int>> vertices;
  const Permutation id(n);
  auto add_cell = [&](int a, int b, const Permutation& g) {
    cells.push_back({a, b, g});
    return static_cast<int>(cells.size()) - 1;
  };

  std::vector<std::vector<int>> horiz(static_cast<std::size_t>(p) + 1);
  std::vector<int> bottom(static_cast<std::size_t>(p) + 1), top(static_cast<std::size_t>(p) + 1);
  for (int i = 0; i <= p; ++i) {
    const Word& s = S[static_cast<std::size_t>(i)];
    for (int k = 0; k < static_cast<int>(s.size()); ++k) {
      horiz[static_cast<std::size_t>(i)].push_back(
          add_cell(face(i, k), face(i, k + 1), letter_permutation(c, s[static_cast<std::size_t>(k)])));
    }
    bottom[static_cast<std::size_t>(i)] = add_cell(face(i, 0), outer, id);
    top[static_cast<std::size_t>(i)] = add_cell(face(i, static_cast<int>(s.size())), outer, id);
  }
  int left = add_cell(face(0, 0), outer, id);
  int right = add_cell(face(p, 0), outer, id);
  vertices.push_back({left, bottom[0]});
  vertices.push_back({left, top[0]});
  vertices.push_back({right, bottom[static_cast<std::size_t>(p)]});
  vertices.push_back({right, top[static_cast<std::size_t>(p)]});

  for (int e = 1; e <= p; ++e) {
    const auto& ev = c.events[static_cast<std::size_t>(e - 1)];
    const auto& L = horiz[static_cast<std::size_t>(e - 1)];
    const auto& R = horiz[static_cast<std::size_t>(e)];
    const int ls = static_cast<int>(S[static_cast<std::size_t>(e - 1)].size());
    const int m = static_cast<int>(consumed(c.alphabet, ev).size());
    const int k = static_cast<int>(produced(c.alphabet, ev).size());
    const int pos = ev.pos;

    // Points on the event line from bottom to top, with the gaps just above
    // each point and the horizontal cells meeting it.
    struct Point {
      int above_left, above_right;
      std::vector<int> horizontals;
    };
    std::vector<Point> pts;
    pts.push_back({0, 0, {bottom[static_cast<std::size_t>(e - 1)], bottom[static_cast<std::size_t>(e)]}});
    for (int j = 0; j < pos; ++j) pts.push_back({j + 1, j + 1, {L[static_cast<std::size_t>(j)], R[static_cast<std::size_t>(j)]}});
    Point v{pos + m, pos + k, {}};
    for (int j = pos; j < pos + m; ++j) v.horizontals.push_back(L[static_cast<std::size_t>(j)]);
    for (int j = pos; j < pos + k; ++j) v.horizontals.push_back(R[static_cast<std::size_t>(j)]);
    pts.push_back(v);
    for (int u = pos + m; u < ls; ++u) {
      pts.push_back({u + 1, u + 1 - m + k, {L[static_cast<std::size_t>(u)], R[static_cast<std::size_t>(u - m + k)]}});
    }
    pts.push_back({-1, -1, {top[static_cast<std::size_t>(e - 1)], top[static_cast<std::size_t>(e)]}});

    std::vector<int> seg;
    for (std::size_t t = 0; t + 1 < pts.size(); ++t) {
      seg.push_back(add_cell(face(e - 1, pts[t].above_left), face(e, pts[t].above_right), id));
    }
    for (std::size_t t = 0; t < pts.size(); ++t) {
      std::vector<int> inc = pts[t].horizontals;
      if (t > 0) inc.push_back(seg[t - 1]);
      if (t + 1 < pts.size()) inc.push_back(seg[t]);
      vertices.push_back(std::move(inc));
    }
  }

  // Sheets of the whole cover, one node per (face, sheet).
  detail::UnionFind uf(faces * n);
  auto node = [n](int f, int s) { return f * n + (s - 1); };
  for (const auto& cell : cells) {
    for (int s = 1; s <= n; ++s) uf.unite(node(cell.a, s), node(cell.b, cell.g(s)));
  }
  const int base = face(0, 0);
  std::map<int, int> comp_of_root;
  std::vector<std::vector<int>> orbits_out;
  for (int s = 1; s <= n; ++s) {
    int r = uf.find(node(base, s));
    auto [it, fresh] = comp_of_root.try_emplace(r, static_cast<int>(orbits_out.size()));
    if (fresh) orbits_out.emplace_back();
    orbits_out[static_cast<std::size_t>(it->second)].push_back(s);
  }
  std::vector<int> euler(orbits_out.size(), 0);
  auto comp = [&](int f, int s) { return comp_of_root.at(uf.find(node(f, s))); };

  for (int f = 0; f < faces; ++f) {
    for (int s = 1; s <= n; ++s) ++euler[static_cast<std::size_t>(comp(f, s))];
  }
  for (const auto& cell : cells) {
    for (int s = 1; s <= n; ++s) --euler[static_cast<std::size_t>(comp(cell.a, s))];
  }
  // Lifts of a vertex: classes of (incident face, sheet) under the gluings of
  // the 1-cells meeting it.
  for (const auto& inc : vertices) {
    std::vector<int> local_faces;
    for (int ci : inc) {
      for (int f : {cells[static_cast<std::size_t>(ci)].a, cells[static_cast<std::size_t>(ci)].b}) {
        if (std::find(local_faces.begin(), local_faces.end(), f) == local_faces.end()) local_faces.push_back(f);
      }
    }
    auto lidx = [&](int f) {
      return static_cast<int>(std::find(local_faces.begin(), local_faces.end(), f) - local_faces.begin());
    };
    detail::UnionFind luf(static_cast<int>(local_faces.size()) * n);
    for (int ci : inc) {
      const auto& cell = cells[static_cast<std::size_t>(ci)];
      for (int s = 1; s <= n; ++s) luf.unite(lidx(cell.a) * n + s - 1, lidx(cell.b) * n + cell.g(s) - 1);
    }
    for (int x = 0; x < luf.size(); ++x) {
      if (luf.find(x) == x) ++euler[static_cast<std::size_t>(comp(local_faces[static_cast<std::size_t>(x / n)], x % n + 1))];
    }
  }

  CoverInvariants inv;
  inv.degree = n;
  inv.branch_count = static_cast<int>(branch_points(c).size());
  inv.component_orbits = orbits_out;
  for (std::size_t i = 0; i < orbits_out.size(); ++i) {
    inv.euler_total += euler[i];
    inv.per_component.push_back(component(orbits_out[i], euler[i]));
  }
  return inv;
}

std::string summary(const CoverInvariants& inv) {
  return "components=" + std::to_string(inv.components()) + ", euler=" + std::to_string(inv.euler_total);
}

std::string to_json(const CoverInvariants& inv) {
  std::ostringstream os;
  os << "{\"components\": " << inv.components() << ", \"euler\": " << inv.euler_total
     << ", \"per_component\": [";
  for (std::size_t i = 0; i < inv.per_component.size(); ++i) {
    const auto& pc = inv.per_component[i];
    os << (i ? ", " : "") << "{\"sheets\": [";
    for (std::size_t j = 0; j < pc.sheets.size(); ++j) os << (j ? ", " : "") << pc.sheets[j];
    os << "], \"euler\": " << pc.euler << ", \"genus\": " << pc.genus << "}";
  }
  os << "], \"branch_points\": " << inv.branch_count << "}";
  return os.str();
}

}  // namespace braidfold
