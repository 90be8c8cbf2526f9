#include "braidfold/orient.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "braidfold/chart_io.hpp"
#include "json_internal.hpp"

namespace braidfold {

namespace {

struct Layout {
  std::vector<Word> slices;
  std::vector<int> offset;
  int count = 0;

  explicit Layout(const Chart& c) : slices(braidfold::slices(c)) {
    for (const auto& s : slices) {
      offset.push_back(count);
      count += static_cast<int>(s.size());
    }
  }
  int seg(int strip, int pos) const { return offset[static_cast<std::size_t>(strip)] + pos; }
};

// A junction forces two segments to equal (same = true) or opposite directions.
struct Junction {
  int a, b;
  bool same;
};

struct Vertex {
  std::vector<int> half_edges;
  std::vector<std::vector<int>> allowed;  // direction vectors over half_edges
};

std::vector<std::vector<int>> white_patterns() {
  // Cyclic order L0 L1 L2 R2 R1 R0; incoming is +1 on the left, -1 on the right.
  const int order[6] = {0, 1, 2, 5, 4, 3};
  std::vector<std::vector<int>> out;
  for (int start = 0; start < 6; ++start) {
    std::vector<int> d(6);
    for (int t = 0; t < 6; ++t) {
      const int h = order[(start + t) % 6];
      const bool incoming = t < 3;
      const bool left = h < 3;
      d[static_cast<std::size_t>(h)] = (incoming == left) ? 1 : -1;
    }
    out.push_back(d);
  }
  return out;
}

struct Structure {
  Layout layout;
  std::vector<Junction> junctions;
  std::vector<Vertex> vertices;

  explicit Structure(const Chart& c) : layout(c) {
    for (int t = 0; t < c.levels(); ++t) {
      const auto& e = c.events[static_cast<std::size_t>(t)];
      const int ls = static_cast<int>(layout.slices[static_cast<std::size_t>(t)].size());
      const int m = static_cast<int>(consumed(c.alphabet, e).size());
      const int k = static_cast<int>(produced(c.alphabet, e).size());
      for (int j = 0; j < e.pos; ++j) junctions.push_back({layout.seg(t, j), layout.seg(t + 1, j), true});
      for (int u = e.pos + m; u < ls; ++u) junctions.push_back({layout.seg(t, u), layout.seg(t + 1, u - m + k), true});
      if (e.kind == EventKind::cup) junctions.push_back({layout.seg(t + 1, e.pos), layout.seg(t + 1, e.pos + 1), false});
      if (e.kind == EventKind::cap) junctions.push_back({layout.seg(t, e.pos), layout.seg(t, e.pos + 1), false});
      if (e.kind == EventKind::crossing) {
        Vertex v;
        v.half_edges = {layout.seg(t, e.pos), layout.seg(t, e.pos + 1), layout.seg(t + 1, e.pos),
                        layout.seg(t + 1, e.pos + 1)};
        for (int a : {1, -1}) {
          for (int b : {1, -1}) v.allowed.push_back({a, b, b, a});
        }
        vertices.push_back(std::move(v));
      } else if (e.kind == EventKind::white) {
        Vertex v;
        for (int i = 0; i < 3; ++i) v.half_edges.push_back(layout.seg(t, e.pos + i));
        for (int i = 0; i < 3; ++i) v.half_edges.push_back(layout.seg(t + 1, e.pos + i));
        v.allowed = white_patterns();
        vertices.push_back(std::move(v));
      }
    }
  }
};

// Mismatches of the best allowed pattern and its index.
std::pair<int, int> vertex_cost(const Vertex& v, const std::vector<int>& dir) {
  int best = 1 << 20, arg = 0;
  for (std::size_t a = 0; a < v.allowed.size(); ++a) {
    int cost = 0;
    for (std::size_t h = 0; h < v.half_edges.size(); ++h) {
      cost += dir[static_cast<std::size_t>(v.half_edges[h])] != v.allowed[a][h];
    }
    if (cost < best) {
      best = cost;
      arg = static_cast<int>(a);
    }
  }
  return {best, arg};
}

// Union-find carrying the parity of each segment relative to its root.
struct ParityUF {
  std::vector<int> parent, parity;
  explicit ParityUF(int n) : parent(static_cast<std::size_t>(n)), parity(static_cast<std::size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  std::pair<int, int> find(int x) {
    int p = 1;
    while (parent[static_cast<std::size_t>(x)] != x) {
      p *= parity[static_cast<std::size_t>(x)];
      x = parent[static_cast<std::size_t>(x)];
    }
    return {x, p};
  }
  // False when the junction contradicts earlier ones.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return pa * pb == rel;
    if (rb < ra) std::swap(ra, rb);
    parent[static_cast<std::size_t>(rb)] = ra;
    parity[static_cast<std::size_t>(rb)] = pa * pb * rel;
    return true;
  }
};

}  // namespace

OrientedChart attempt_orientation(const Chart& c, const OrientOptions& o) {
  if (c.alphabet != Alphabet::permutation) throw ChartError("orientation needs a permutation chart");
  require_valid(c);
  const Structure st(c);
  const int S = st.layout.count;
  ParityUF uf(S);
  std::vector<int> conflicts;
  for (const auto& j : st.junctions) {
    if (!uf.unite(j.a, j.b, j.same ? 1 : -1)) conflicts.push_back(j.b);
  }
  std::vector<int> root(static_cast<std::size_t>(S)), par(static_cast<std::size_t>(S));
  for (int s = 0; s < S; ++s) std::tie(root[static_cast<std::size_t>(s)], par[static_cast<std::size_t>(s)]) = uf.find(s);

  // Constrained vertices fall into independent groups linked by shared edges;
  // each group is solved by its own branch and bound.
  std::map<int, std::vector<std::size_t>> vertices_of_root;
  for (std::size_t i = 0; i < st.vertices.size(); ++i) {
    for (int h : st.vertices[i].half_edges) vertices_of_root[root[static_cast<std::size_t>(h)]].push_back(i);
  }
  std::map<int, int> value;  // edge class root -> +1/-1, default +1
  std::vector<int> dir(static_cast<std::size_t>(S));
  auto directions_from = [&] {
    for (int s = 0; s < S; ++s) {
      auto it = value.find(root[static_cast<std::size_t>(s)]);
      dir[static_cast<std::size_t>(s)] = (it == value.end() ? 1 : it->second) * par[static_cast<std::size_t>(s)];
    }
  };

  OrientedChart out;
  out.chart = c;
  out.exhaustive = true;
  std::vector<bool> placed(st.vertices.size(), false);
  for (std::size_t seed = 0; seed < st.vertices.size(); ++seed) {
    if (placed[seed]) continue;
    // Breadth-first over the group, numbering edge classes as they appear.
    std::vector<std::size_t> group = {seed};
    placed[seed] = true;
    std::map<int, int> var;
    std::vector<int> roots;
    for (std::size_t g = 0; g < group.size(); ++g) {
      for (int h : st.vertices[group[g]].half_edges) {
        const int r = root[static_cast<std::size_t>(h)];
        if (!var.try_emplace(r, static_cast<int>(roots.size())).second) continue;
        roots.push_back(r);
        for (auto w : vertices_of_root[r]) {
          if (!placed[w]) {
            placed[w] = true;
            group.push_back(w);
          }
        }
      }
    }
    const int V = static_cast<int>(roots.size());
    auto var_of = [&](int seg) { return var.at(root[static_cast<std::size_t>(seg)]); };
    std::vector<std::vector<std::size_t>> closing(static_cast<std::size_t>(V));
    for (auto vi : group) {
      int last = 0;
      for (int h : st.vertices[vi].half_edges) last = std::max(last, var_of(h));
      closing[static_cast<std::size_t>(last)].push_back(vi);
    }
    auto local_cost = [&](std::size_t vi, const std::vector<int>& xs) {
      const auto& v = st.vertices[vi];
      int best_local = 1 << 20;
      for (const auto& pat : v.allowed) {
        int cost = 0;
        for (std::size_t h = 0; h < v.half_edges.size(); ++h) {
          const int seg = v.half_edges[h];
          cost += xs[static_cast<std::size_t>(var_of(seg))] * par[static_cast<std::size_t>(seg)] != pat[h];
        }
        best_local = std::min(best_local, cost);
      }
      return best_local;
    };
    std::vector<int> x(static_cast<std::size_t>(V), 1), xs = x;
    int best = 0;
    for (auto vi : group) best += local_cost(vi, x);
    // Class 0 keeps +1: reversing every edge of a group maps solutions to solutions.
    std::int64_t visited = 0;
    bool complete = true;
    auto dfs = [&](auto&& self, int d, int partial) -> void {
      if (partial >= best) return;
      if (d == V) {
        best = partial;
        x = xs;
        return;
      }
      if (++visited > o.budget) {
        complete = false;
        return;
      }
      for (int val : {1, -1}) {
        if (d == 0 && val == -1) break;
        xs[static_cast<std::size_t>(d)] = val;
        int add = 0;
        for (auto vi : closing[static_cast<std::size_t>(d)]) add += local_cost(vi, xs);
        self(self, d + 1, partial + add);
        if (!complete) return;
      }
    };
    if (best > 0) dfs(dfs, 0, 0);
    out.exhaustive = out.exhaustive && complete;
    for (int i = 0; i < V; ++i) value[roots[static_cast<std::size_t>(i)]] = x[static_cast<std::size_t>(i)];
  }

  directions_from();
  for (const auto& v : st.vertices) {
    auto [cost, a] = vertex_cost(v, dir);
    for (std::size_t h = 0; h < v.half_edges.size(); ++h) {
      if (dir[static_cast<std::size_t>(v.half_edges[h])] != v.allowed[static_cast<std::size_t>(a)][h]) {
        conflicts.push_back(v.half_edges[h]);
      }
    }
  }
  auto locate = [&](int s) {
    int strip = 0;
    while (strip + 1 < static_cast<int>(st.layout.offset.size()) && st.layout.offset[static_cast<std::size_t>(strip) + 1] <= s) ++strip;
    return OrientationNode{strip, s - st.layout.offset[static_cast<std::size_t>(strip)]};
  };
  for (int s : conflicts) out.nodes.push_back(locate(s));
  out.node_count = static_cast<int>(out.nodes.size());
  for (std::size_t i = 0; i < st.layout.slices.size(); ++i) {
    std::vector<int> row;
    for (std::size_t k = 0; k < st.layout.slices[i].size(); ++k) {
      row.push_back(dir[static_cast<std::size_t>(st.layout.seg(static_cast<int>(i), static_cast<int>(k)))]);
    }
    out.directions.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> orientation_violations(const Chart& c, const std::vector<std::vector<int>>& directions) {
  const Structure st(c);
  std::vector<std::string> out;
  if (directions.size() != st.layout.slices.size()) return {"direction table does not match the slices"};
  std::vector<int> dir;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    if (directions[i].size() != st.layout.slices[i].size()) return {"strip " + std::to_string(i) + " has the wrong width"};
    dir.insert(dir.end(), directions[i].begin(), directions[i].end());
  }
  for (const auto& j : st.junctions) {
    const bool ok = j.same ? dir[static_cast<std::size_t>(j.a)] == dir[static_cast<std::size_t>(j.b)]
                           : dir[static_cast<std::size_t>(j.a)] != dir[static_cast<std::size_t>(j.b)];
    if (!ok) out.push_back("edge reverses between segments " + std::to_string(j.a) + " and " + std::to_string(j.b));
  }
  for (std::size_t v = 0; v < st.vertices.size(); ++v) {
    if (vertex_cost(st.vertices[v], dir).first > 0) out.push_back("vertex " + std::to_string(v) + " is not braid-oriented");
  }
  return out;
}

std::string serialize_oriented(const OrientedChart& oc) {
  std::ostringstream os;
  std::string chart = serialize_chart(oc.chart);
  while (!chart.empty() && chart.back() == '\n') chart.pop_back();
  os << "{\n  \"chart\": " << detail::indent_block(chart, 2) << ",\n  \"directions\": [";
  for (std::size_t i = 0; i < oc.directions.size(); ++i) {
    os << (i ? ", " : "") << "[";
    for (std::size_t k = 0; k < oc.directions[i].size(); ++k) os << (k ? ", " : "") << oc.directions[i][k];
    os << "]";
  }
  os << "],\n  \"nodes\": [";
  for (std::size_t i = 0; i < oc.nodes.size(); ++i) {
    os << (i ? ", " : "") << "{\"strip\": " << oc.nodes[i].strip << ", \"pos\": " << oc.nodes[i].pos << "}";
  }
  os << "],\n  \"node_count\": " << oc.node_count << ",\n  \"exhaustive\": " << (oc.exhaustive ? "true" : "false")
     << "\n}\n";
  return os.str();
}

}  // namespace braidfold
