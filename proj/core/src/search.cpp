#include "braidfold/search.hpp"

#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "braidfold/chart_io.hpp"

namespace braidfold {

namespace {

std::string state_key(Chart c) {
  for (auto& e : c.events) e.vertex = 0;
  return serialize_chart(c);
}

// Best-first frontier shared by both searches. Node ids index into a parent
// table so paths are rebuilt only on success.
template <class Step>
struct Frontier {
  struct Node {
    int parent;
    Step step;
    int depth;
    std::string path_key;
  };
  std::vector<Node> nodes;
  using Entry = std::tuple<int, int, std::string, int>;  // cost, depth, path key, node
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

  void push(int cost, int parent, Step step, const std::string& step_key) {
    const int depth = parent < 0 ? 0 : nodes[static_cast<std::size_t>(parent)].depth + 1;
    std::string key = parent < 0 ? "" : nodes[static_cast<std::size_t>(parent)].path_key + step_key + "\n";
    nodes.push_back({parent, std::move(step), depth, key});
    open.emplace(cost, depth, std::move(key), static_cast<int>(nodes.size()) - 1);
  }

  std::vector<Step> path(int id) const {
    std::vector<Step> out;
    for (; nodes[static_cast<std::size_t>(id)].parent >= 0; id = nodes[static_cast<std::size_t>(id)].parent) {
      out.push_back(nodes[static_cast<std::size_t>(id)].step);
    }
    return {out.rbegin(), out.rend()};
  }
};

std::vector<std::pair<ChartEvent, Word>> shrinking_steps(const Word& w) {
  std::vector<std::pair<ChartEvent, Word>> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const int p = static_cast<int>(i);
    if (w[i] == w[i + 1]) {
      Word v = w;
      v.erase(v.begin() + p, v.begin() + p + 2);
      out.push_back({ChartEvent::cap(p, w[i]), v});
    } else if (std::abs(w[i] - w[i + 1]) > 1) {
      Word v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back({ChartEvent::crossing(p, w[i], w[i + 1]), v});
    }
    if (i + 2 < w.size() && w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) {
      Word v = w;
      v[i] = v[i + 2] = w[i + 1];
      v[i + 1] = w[i];
      out.push_back({ChartEvent::white(p, w[i], w[i + 1]), v});
    }
  }
  return out;
}

// Hamming-style distance used to order the word frontier.
int word_distance(const Word& a, const Word& b) {
  int d = static_cast<int>(a.size() > b.size() ? a.size() - b.size() : b.size() - a.size());
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) d += a[i] != b[i];
  return d;
}

}  // namespace

SearchResult search_equivalence(const Chart& a, const Chart& b, const SearchOptions& o) {
  SearchResult r;
  if (a.degree != b.degree || a.alphabet != b.alphabet) return r;
  const std::string goal = state_key(b);
  Frontier<MoveInstance> f;
  std::vector<Chart> charts;
  std::set<std::string> seen;
  auto cost = [&](const Chart& c) { return std::abs(c.levels() - b.levels()); };
  f.push(cost(a), -1, {}, "");
  charts.push_back(a);
  seen.insert(state_key(a));
  while (!f.open.empty() && r.states < o.budget) {
    auto [c0, depth, key, id] = f.open.top();
    f.open.pop();
    ++r.states;
    const Chart cur = charts[static_cast<std::size_t>(id)];
    if (state_key(cur) == goal) {
      r.found = true;
      r.moves = f.path(id);
      return r;
    }
    if (depth >= o.max_depth) continue;
    std::map<std::string, MoveInstance> ordered;
    for (const auto& m : candidate_moves(cur, o.moves)) ordered.emplace(serialize_move(cur.alphabet, m), m);
    for (const auto& [mk, m] : ordered) {
      Chart next = apply_move(cur, m);
      if (!seen.insert(state_key(next)).second) continue;
      f.push(cost(next), id, m, mk);
      charts.push_back(std::move(next));
    }
  }
  return r;
}

WordPathResult search_word_path(int n, const Word& u, const Word& v, std::size_t budget) {
  check_word(n, u);
  check_word(n, v);
  WordPathResult r;
  if (evaluate_word(n, u) != evaluate_word(n, v) || u.size() < v.size()) return r;
  Frontier<ChartEvent> f;
  std::vector<Word> words;
  std::set<Word> seen;
  f.push(word_distance(u, v), -1, {}, "");
  words.push_back(u);
  seen.insert(u);
  while (!f.open.empty() && r.states < budget) {
    auto [c0, depth, key, id] = f.open.top();
    f.open.pop();
    ++r.states;
    const Word cur = words[static_cast<std::size_t>(id)];
    if (cur == v) {
      r.found = true;
      r.events = f.path(id);
      return r;
    }
    for (auto& [e, w] : shrinking_steps(cur)) {
      if (w.size() < v.size() || !seen.insert(w).second) continue;
      f.push(word_distance(w, v), id, e, serialize_event(Alphabet::permutation, e));
      words.push_back(std::move(w));
    }
  }
  return r;
}

}  // namespace braidfold
