#include "braidfold/knot.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "json_internal.hpp"
#include "union_find.hpp"

namespace braidfold {

namespace {

int mod(long v, int n) { return static_cast<int>(((v % n) + n) % n); }

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Arc indices in order of first appearance of their union-find roots.
std::vector<int> number_classes(detail::UnionFind& uf, int count) {
  std::map<int, int> index;
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    auto [it, fresh] = index.try_emplace(uf.find(i), static_cast<int>(index.size()));
    out[static_cast<std::size_t>(i)] = it->second;
  }
  return out;
}

}  // namespace

KnotDiagram braid_closure(int strands, const Word& word) {
  if (strands < 1) throw DiagramError("a braid needs at least one strand");
  for (Letter l : word) {
    if (l == 0 || std::abs(l) >= strands) throw DiagramError("braid letter " + std::to_string(l) + " out of range");
  }
  KnotDiagram d;
  d.kind = KnotDiagram::Kind::braid;
  d.strands = strands;
  d.braid = word;

  // Edge ids: one per strand at the bottom, then two fresh ones per crossing.
  const int edges = strands + 2 * static_cast<int>(word.size());
  detail::UnionFind uf(edges);
  std::vector<int> at(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) at[static_cast<std::size_t>(p)] = p;
  struct Raw {
    int under_in, under_out, over_in, sign;
  };
  std::vector<Raw> raw;
  int next = strands;
  for (Letter l : word) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
    const int left = at[i], right = at[i + 1];
    const int new_left = next++, new_right = next++;
    // The strand at position i moves to i+1; it is the over strand for sigma_i.
    const bool left_over = l > 0;
    const int over_in = left_over ? left : right;
    const int over_out = left_over ? new_right : new_left;
    uf.unite(over_in, over_out);
    raw.push_back({left_over ? right : left, left_over ? new_left : new_right, over_in, l > 0 ? 1 : -1});
    at[i] = new_left;
    at[i + 1] = new_right;
  }
  for (int p = 0; p < strands; ++p) uf.unite(at[static_cast<std::size_t>(p)], p);
  auto arc = number_classes(uf, edges);
  std::vector<int> used;
  for (const auto& r : raw) {
    for (int e : {r.under_in, r.under_out, r.over_in}) used.push_back(arc[static_cast<std::size_t>(e)]);
  }
  for (int p = 0; p < strands; ++p) used.push_back(arc[static_cast<std::size_t>(p)]);
  // Arcs are classes reachable from the strands; renumber densely.
  std::map<int, int> dense;
  for (int a : used) dense.try_emplace(a, static_cast<int>(dense.size()));
  d.arc_count = static_cast<int>(dense.size());
  for (const auto& r : raw) {
    d.crossings.push_back({dense.at(arc[static_cast<std::size_t>(r.under_in)]),
                           dense.at(arc[static_cast<std::size_t>(r.under_out)]),
                           dense.at(arc[static_cast<std::size_t>(r.over_in)]), r.sign});
  }
  for (int p = 0; p < strands; ++p) d.bottom_arcs.push_back(dense.at(arc[static_cast<std::size_t>(p)]));
  // Components: cycles of the strand permutation.
  std::vector<int> perm(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) perm[static_cast<std::size_t>(p)] = p;
  for (Letter l : word) std::swap(perm[static_cast<std::size_t>(std::abs(l) - 1)], perm[static_cast<std::size_t>(std::abs(l))]);
  std::vector<bool> seen(static_cast<std::size_t>(strands), false);
  for (int p = 0; p < strands; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    ++d.components;
    for (int q = p; !seen[static_cast<std::size_t>(q)]; q = perm[static_cast<std::size_t>(q)]) seen[static_cast<std::size_t>(q)] = true;
  }
  return d;
}

KnotDiagram from_pd(const std::vector<std::array<int, 4>>& pd) {
  KnotDiagram d;
  d.kind = KnotDiagram::Kind::pd;
  d.pd = pd;
  d.strands = 0;
  if (pd.empty()) throw DiagramError("an empty PD code has no edges; use \"braid s=1:\" for the unknot");
  std::map<int, int> count;
  for (const auto& x : pd) {
    for (int e : x) ++count[e];
  }
  for (const auto& [e, k] : count) {
    if (k != 2) throw DiagramError("PD edge " + std::to_string(e) + " appears " + std::to_string(k) + " times");
  }
  std::vector<int> labels;
  for (const auto& [e, k] : count) labels.push_back(e);
  const int E = static_cast<int>(labels.size());
  auto idx = [&](int e) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), e) - labels.begin()); };

  // Components: edges sharing a strand through some crossing.
  detail::UnionFind comp(E);
  for (const auto& x : pd) {
    comp.unite(idx(x[0]), idx(x[2]));
    comp.unite(idx(x[1]), idx(x[3]));
  }
  std::map<int, std::pair<int, int>> range;  // component root -> min, max label
  for (int e : labels) {
    auto [it, fresh] = range.try_emplace(comp.find(idx(e)), e, e);
    it->second.first = std::min(it->second.first, e);
    it->second.second = std::max(it->second.second, e);
  }
  auto follows = [&](int from, int to) {
    if (to == from + 1) return true;
    const auto& [lo, hi] = range.at(comp.find(idx(from)));
    return from == hi && to == lo && comp.find(idx(from)) == comp.find(idx(to));
  };
  std::map<int, int> ins, outs;
  detail::UnionFind arcs(E);
  std::vector<int> signs;
  for (const auto& x : pd) {
    if (!follows(x[0], x[2])) {
      throw DiagramError("PD crossing under strand " + std::to_string(x[0]) + " -> " + std::to_string(x[2]) +
                         " is not consecutive");
    }
    int over_from, over_to;
    if (follows(x[1], x[3])) {
      over_from = x[1], over_to = x[3];
      signs.push_back(-1);
    } else if (follows(x[3], x[1])) {
      over_from = x[3], over_to = x[1];
      signs.push_back(1);
    } else {
      throw DiagramError("PD crossing over strand " + std::to_string(x[1]) + ", " + std::to_string(x[3]) +
                         " is not consecutive");
    }
    ++outs[x[0]];
    ++ins[x[2]];
    ++outs[over_from];
    ++ins[over_to];
    arcs.unite(idx(x[1]), idx(x[3]));
  }
  for (int e : labels) {
    if (ins[e] != 1 || outs[e] != 1) throw DiagramError("PD edge " + std::to_string(e) + " is not traversed once");
  }
  auto arc = number_classes(arcs, E);
  d.arc_count = *std::max_element(arc.begin(), arc.end()) + 1;
  for (std::size_t k = 0; k < pd.size(); ++k) {
    const auto& x = pd[k];
    d.crossings.push_back({arc[static_cast<std::size_t>(idx(x[0]))], arc[static_cast<std::size_t>(idx(x[2]))],
                           arc[static_cast<std::size_t>(idx(x[1]))], signs[k]});
  }
  d.components = static_cast<int>(range.size());
  if (d.components == 1 && d.arc_count != static_cast<int>(pd.size())) {
    throw DiagramError("knot diagram with " + std::to_string(pd.size()) + " crossings has " +
                       std::to_string(d.arc_count) + " arcs");
  }
  return d;
}

KnotDiagram parse_diagram(std::string_view text) {
  const std::string t = trim(text);
  if (t.rfind("braid", 0) == 0) {
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw DiagramError("braid syntax: \"braid s=<strands>: <letters>\"");
    std::string head = trim(std::string_view(t).substr(5, colon - 5));
    if (head.rfind("s=", 0) != 0) throw DiagramError("braid syntax: missing s=<strands>");
    int strands = 0;
    try {
      strands = std::stoi(head.substr(2));
    } catch (const std::exception&) {
      throw DiagramError("bad strand count '" + head.substr(2) + "'");
    }
    Word w;
    std::istringstream is(t.substr(colon + 1));
    std::string tok;
    while (is >> tok) {
      try {
        std::size_t used = 0;
        w.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw DiagramError("bad braid letter '" + tok + "'");
      }
    }
    return braid_closure(strands, w);
  }
  if (t.rfind("pd", 0) == 0) {
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw DiagramError("pd syntax: \"pd: [[a,b,c,d], ...]\"");
    try {
      auto j = nlohmann::json::parse(t.substr(colon + 1));
      return from_pd(j.get<std::vector<std::array<int, 4>>>());
    } catch (const nlohmann::json::exception& e) {
      throw DiagramError(std::string("bad PD code: ") + e.what());
    }
  }
  throw DiagramError("diagram text must start with \"braid\" or \"pd\"");
}

std::string serialize_diagram(const KnotDiagram& d) {
  std::string s;
  if (d.kind == KnotDiagram::Kind::braid) {
    s = "braid s=" + std::to_string(d.strands) + ":";
    for (Letter l : d.braid) s += " " + std::to_string(l);
    return s;
  }
  s = "pd: [";
  for (std::size_t k = 0; k < d.pd.size(); ++k) {
    s += k ? ", [" : "[";
    for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(d.pd[k][i]);
    s += "]";
  }
  return s + "]";
}

bool is_fox_coloring(const KnotDiagram& d, int n, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != d.arc_count) return false;
  for (const auto& x : d.crossings) {
    const long lhs = 2L * colors[static_cast<std::size_t>(x.over)];
    const long rhs = colors[static_cast<std::size_t>(x.under_in)] + colors[static_cast<std::size_t>(x.under_out)];
    if (mod(lhs - rhs, n) != 0) return false;
  }
  return true;
}

std::vector<DihedralColoring> fox_colorings(const KnotDiagram& d, int n) {
  check_dihedral_degree(n);
  const int half = (n + 1) / 2;  // inverse of 2 mod n
  std::vector<DihedralColoring> out;
  std::vector<int> col(static_cast<std::size_t>(d.arc_count), -1);

  // Fills in forced colors; false on a contradiction.
  auto propagate = [&](std::vector<int>& c) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& x : d.crossings) {
        int& a = c[static_cast<std::size_t>(x.under_in)];
        int& b = c[static_cast<std::size_t>(x.over)];
        int& e = c[static_cast<std::size_t>(x.under_out)];
        const int known = (a >= 0) + (b >= 0) + (e >= 0);
        if (known == 3) {
          if (mod(2L * b - a - e, n) != 0) return false;
        } else if (known == 2) {
          if (a < 0) a = mod(2L * b - e, n);
          else if (e < 0) e = mod(2L * b - a, n);
          else b = mod(static_cast<long>(a + e) * half, n);
          changed = true;
        }
      }
    }
    return true;
  };
  auto search = [&](auto&& self, std::vector<int> c) -> void {
    if (!propagate(c)) return;
    auto it = std::find(c.begin(), c.end(), -1);
    if (it == c.end()) {
      const bool trivial = std::all_of(c.begin(), c.end(), [&](int v) { return v == c.front(); });
      out.push_back({n, c, trivial});
      return;
    }
    for (int v = 0; v < n; ++v) {
      *it = v;
      self(self, c);
    }
  };
  search(search, col);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.arc_colors < b.arc_colors; });
  return out;
}

std::vector<CyclicLabeling> cyclic_labelings(const KnotDiagram& d, int n) {
  check_dihedral_degree(n);
  // Arcs of one component: joined through the under strand of each crossing.
  detail::UnionFind uf(d.arc_count);
  for (const auto& x : d.crossings) uf.unite(x.under_in, x.under_out);
  auto comp = number_classes(uf, d.arc_count);
  const int k = d.arc_count == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<CyclicLabeling> out;
  std::vector<int> f(static_cast<std::size_t>(k), 0);
  while (true) {
    CyclicLabeling l{n, {}};
    for (int a = 0; a < d.arc_count; ++a) l.arc_rotations.push_back(f[static_cast<std::size_t>(comp[static_cast<std::size_t>(a)])]);
    out.push_back(l);
    int i = k - 1;
    while (i >= 0 && ++f[static_cast<std::size_t>(i)] == n) f[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<DihedralElement> coloring_to_representation(const DihedralColoring& col) {
  std::vector<DihedralElement> out;
  for (int c : col.arc_colors) out.push_back(conjugate_reflection(col.n, c));
  return out;
}

bool wirtinger_holds(const KnotDiagram& d, const std::vector<DihedralElement>& g) {
  if (static_cast<int>(g.size()) != d.arc_count) return false;
  for (const auto& x : d.crossings) {
    const auto& b = g[static_cast<std::size_t>(x.over)];
    if (b * g[static_cast<std::size_t>(x.under_in)] * b.inverse() != g[static_cast<std::size_t>(x.under_out)]) return false;
  }
  return true;
}

std::string serialize_coloring(const DihedralColoring& col) {
  std::string s = "{\"n\": " + std::to_string(col.n) + ", \"colors\": [";
  for (std::size_t i = 0; i < col.arc_colors.size(); ++i) s += (i ? ", " : "") + std::to_string(col.arc_colors[i]);
  return s + "], \"trivial\": " + (col.trivial ? "true" : "false") + "}";
}

}  // namespace braidfold
