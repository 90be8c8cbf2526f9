#include "braidfold/movie.hpp"

#include <algorithm>
#include <sstream>

#include "braidfold/chart_io.hpp"
#include "braidfold/compile.hpp"
#include "braidfold/orient.hpp"
#include "json_internal.hpp"

namespace braidfold {

std::string serialize_movie(const ChartMovie& m) {
  std::ostringstream os;
  os << "{\n  \"status\": \"" << m.status << "\",\n  \"frames\": [";
  for (std::size_t i = 0; i < m.frames.size(); ++i) {
    std::string chart = serialize_chart(m.frames[i]);
    chart.pop_back();
    os << (i ? ",\n    " : "\n    ") << detail::indent_block(chart, 4);
  }
  os << (m.frames.empty() ? "],\n" : "\n  ],\n") << "  \"transitions\": [";
  const Alphabet a = m.frames.empty() ? Alphabet::permutation : m.frames.front().alphabet;
  for (std::size_t i = 0; i < m.transitions.size(); ++i) {
    const auto& t = m.transitions[i];
    detail::json note = t.note;
    os << (i ? ",\n    " : "\n    ") << "{\"note\": " << note.dump() << ", \"one_handles\": " << t.one_handles
       << ", \"two_handles\": " << t.two_handles << ", \"moves\": [";
    for (std::size_t k = 0; k < t.moves.size(); ++k) {
      os << (k ? ",\n      " : "\n      ") << serialize_move(a, t.moves[k]);
    }
    os << (t.moves.empty() ? "]}" : "\n    ]}");
  }
  os << (m.transitions.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

ChartMovie parse_movie(std::string_view text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::exception& ex) {
    throw ChartError(std::string("movie is not JSON: ") + ex.what());
  }
  ChartMovie m;
  try {
    m.status = j.value("status", std::string(kMovieComplete));
    for (const auto& jf : j.at("frames")) m.frames.push_back(detail::chart_from_json(jf));
    const Alphabet a = m.frames.empty() ? Alphabet::permutation : m.frames.front().alphabet;
    for (const auto& jt : j.at("transitions")) {
      MovieTransition t;
      t.note = jt.value("note", std::string());
      t.one_handles = jt.value("one_handles", 0);
      t.two_handles = jt.value("two_handles", 0);
      t.moves = parse_moves(a, jt.at("moves").dump());
      m.transitions.push_back(std::move(t));
    }
  } catch (const detail::json::exception& ex) {
    throw ChartError(std::string("bad movie: ") + ex.what());
  } catch (const MoveError& ex) {
    throw ChartError(std::string("bad movie transition: ") + ex.what());
  }
  return m;
}

std::vector<Anchor> anchors(const Chart& c) {
  std::vector<Anchor> out;
  for (const auto& b : branch_points(c)) out.push_back({b.vertex, b.level, b.pos});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void add_handles(HandleCount& h, const HandleCount& d) {
  h.one_handles += d.one_handles;
  h.two_handles += d.two_handles;
}

}  // namespace

MovieReport verify_movie(const ChartMovie& m, const MovieVerifyOptions& o) {
  MovieReport r;
  auto fail = [&](std::string s) {
    r.ok = false;
    r.failures.push_back(std::move(s));
  };
  for (std::size_t i = 0; i < m.frames.size(); ++i) {
    const Chart& c = m.frames[i];
    FrameReport f;
    auto bad = validate(c);
    if (!c.closed()) bad.push_back({0, "frame has boundary words"});
    if (!bad.empty()) {
      f.valid = false;
      f.violation = "level " + std::to_string(bad.front().level) + ": " + bad.front().reason;
      fail("frame " + std::to_string(i) + " invalid: " + f.violation);
    } else {
      f.invariants = cover_invariants(c);
      f.branch_vertices = static_cast<int>(branch_points(c).size());
      if (o.orient) {
        const Chart p = c.alphabet == Alphabet::dihedral ? compile_chart(c) : c;
        f.orientation_nodes = attempt_orientation(p, {.budget = o.orient_budget}).node_count;
      }
    }
    r.frames.push_back(std::move(f));
  }
  if (!m.frames.empty()) {
    r.flanks_empty = m.frames.front().events.empty() && m.frames.back().events.empty();
    if (!r.flanks_empty && m.status == kMovieComplete) fail("first or last frame is not empty");
    for (const auto& c : m.frames) {
      if (c.degree != m.frames.front().degree || c.alphabet != m.frames.front().alphabet) {
        fail("frames disagree on degree or alphabet");
        break;
      }
    }
  }
  if (m.transitions.size() + 1 != m.frames.size() && !(m.frames.empty() && m.transitions.empty())) {
    fail("expected " + std::to_string(m.frames.empty() ? 0 : m.frames.size() - 1) + " transitions, found " +
         std::to_string(m.transitions.size()));
  }
  for (std::size_t i = 0; i < m.transitions.size(); ++i) {
    const auto& t = m.transitions[i];
    TransitionReport tr;
    const std::string where = "transition " + std::to_string(i) + " (frame " + std::to_string(i) + " -> " +
                              std::to_string(i + 1) + ")";
    if (i + 1 >= m.frames.size() || !r.frames[i].valid) {
      tr.certified = false;
      tr.reason = "source frame missing or invalid";
      fail(where + ": " + tr.reason);
      r.transitions.push_back(tr);
      continue;
    }
    Chart cur = m.frames[i];
    tr.preserving = true;
    for (std::size_t k = 0; k < t.moves.size(); ++k) {
      const auto& mv = t.moves[k];
      if (classify(mv.kind) != MoveEffect::preserving) tr.preserving = false;
      try {
        HandleCount h = handle_count(cur, mv);
        cur = apply_move(cur, mv);
        add_handles(tr.handles, h);
      } catch (const std::exception& ex) {
        tr.certified = false;
        tr.failed_move = static_cast<int>(k);
        tr.reason = ex.what();
        break;
      }
    }
    if (tr.certified && !(cur == m.frames[i + 1])) {
      tr.certified = false;
      tr.reason = "moves do not end at the next frame";
    }
    if (!tr.certified) {
      fail(where + (tr.failed_move >= 0 ? ", move " + std::to_string(tr.failed_move) : std::string()) + ": " +
           tr.reason);
    }
    tr.handles_match = tr.handles.one_handles == t.one_handles && tr.handles.two_handles == t.two_handles;
    if (tr.certified && !tr.handles_match) fail(where + ": handle annotation does not match the moves");
    if (r.frames[i].invariants && r.frames[i + 1].invariants) {
      tr.delta_euler = r.frames[i + 1].invariants->euler_total - r.frames[i].invariants->euler_total;
      tr.euler_matches = tr.delta_euler == 2 * (t.two_handles - t.one_handles);
      if (!tr.euler_matches) {
        fail(where + ": euler changes by " + std::to_string(tr.delta_euler) + " but the handles say " +
             std::to_string(2 * (t.two_handles - t.one_handles)));
      }
    }
    if (tr.preserving && tr.certified && m.frames[i].alphabet == Alphabet::dihedral) {
      tr.anchors_fixed = anchors(m.frames[i]) == anchors(m.frames[i + 1]);
      if (!tr.anchors_fixed) fail(where + ": branch vertices moved in a preserving transition");
    }
    r.transitions.push_back(tr);
  }
  return r;
}

std::string report_to_json(const MovieReport& r) {
  detail::json j;
  j["ok"] = r.ok;
  j["flanks_empty"] = r.flanks_empty;
  j["frames"] = detail::json::array();
  for (const auto& f : r.frames) {
    detail::json jf;
    jf["valid"] = f.valid;
    if (!f.valid) jf["violation"] = f.violation;
    jf["branch_vertices"] = f.branch_vertices;
    if (f.invariants) {
      jf["components"] = f.invariants->components();
      jf["euler"] = f.invariants->euler_total;
    }
    if (f.orientation_nodes >= 0) jf["orientation_nodes"] = f.orientation_nodes;
    j["frames"].push_back(jf);
  }
  j["transitions"] = detail::json::array();
  for (const auto& t : r.transitions) {
    detail::json jt;
    jt["certified"] = t.certified;
    if (t.failed_move >= 0) jt["failed_move"] = t.failed_move;
    if (!t.reason.empty()) jt["reason"] = t.reason;
    jt["one_handles"] = t.handles.one_handles;
    jt["two_handles"] = t.handles.two_handles;
    jt["delta_euler"] = t.delta_euler;
    jt["preserving"] = t.preserving;
    if (t.preserving) jt["anchors_fixed"] = t.anchors_fixed;
    j["transitions"].push_back(jt);
  }
  j["failures"] = r.failures;
  return j.dump(2) + "\n";
}

std::string report_summary(const MovieReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.frames.size(); ++i) {
    const auto& f = r.frames[i];
    os << "frame " << i << ": ";
    if (!f.valid) {
      os << "INVALID " << f.violation << "\n";
      continue;
    }
    os << "branch=" << f.branch_vertices << " " << summary(*f.invariants);
    if (f.orientation_nodes >= 0) os << " nodes=" << f.orientation_nodes;
    os << "\n";
    if (i < r.transitions.size()) {
      const auto& t = r.transitions[i];
      os << "  -> " << (t.certified ? "certified" : "FAILED") << " h1=" << t.handles.one_handles
         << " h2=" << t.handles.two_handles << " d_euler=" << t.delta_euler << "\n";
    }
  }
  for (const auto& s : r.failures) os << "failure: " << s << "\n";
  os << (r.ok ? "movie ok" : "movie FAILED") << "\n";
  return os.str();
}

MoveInstance pair_create_move(Alphabet a, int level, const ChartEvent& e) {
  MoveInstance m;
  m.level = level;
  m.pos = e.pos;
  m.labels = e.labels;
  switch (e.kind) {
    case EventKind::cup: m.kind = MoveKind::bubble_create; break;
    case EventKind::cap: m.kind = MoveKind::saddle_create; break;
    case EventKind::white: m.kind = MoveKind::white_pair_create; break;
    case EventKind::crossing: m.kind = MoveKind::crossing_pair_create; break;
    case EventKind::relator:
      m.kind = MoveKind::relator_pair_create;
      m.to = e.to;
      break;
    case EventKind::black:
    case EventKind::branch:
      if (e.mode != Mode::insert) throw MoveError("a pair of branch vertices starts with an insertion");
      m.kind = MoveKind::black_pair_create;
      if (e.vertex) m.ids = {e.vertex};
      break;
  }
  (void)a;
  return m;
}

namespace {

MoveKind cancel_kind(const ChartEvent& e) {
  switch (e.kind) {
    case EventKind::cup: return MoveKind::bubble_cancel;
    case EventKind::cap: return MoveKind::saddle_cancel;
    case EventKind::white: return MoveKind::white_pair_cancel;
    case EventKind::crossing: return MoveKind::crossing_pair_cancel;
    case EventKind::relator: return MoveKind::relator_pair_cancel;
    default: return MoveKind::black_pair_cancel;
  }
}

}  // namespace

MovieBuilder::MovieBuilder(Chart start) : current_(std::move(start)) { movie_.frames.push_back(current_); }

void MovieBuilder::apply(const MoveInstance& m) {
  current_ = apply_move(current_, m);
  moves_.push_back(m);
}

void MovieBuilder::apply_all(const std::vector<MoveInstance>& ms) {
  for (const auto& m : ms) apply(m);
}

void MovieBuilder::shift_event(int from, int to, bool prefer_above) {
  MoveInstance m;
  m.kind = MoveKind::commute;
  m.pos = prefer_above ? 1 : 0;
  for (int l = from; l < to; ++l) {
    m.level = l;
    apply(m);
  }
  for (int l = from - 1; l >= to; --l) {
    m.level = l;
    apply(m);
  }
}

void MovieBuilder::create_pairs(int level, const std::vector<ChartEvent>& events) {
  for (std::size_t i = 0; i < events.size(); ++i) {
    apply(pair_create_move(current_.alphabet, level + static_cast<int>(i), events[i]));
  }
}

void MovieBuilder::cancel_pairs(int level, int k) {
  for (int i = k - 1; i >= 0; --i) {
    const auto& e = current_.events.at(static_cast<std::size_t>(level + i));
    MoveInstance m;
    m.kind = cancel_kind(e);
    m.level = level + i;
    m.pos = e.pos;
    apply(m);
  }
}

void MovieBuilder::cut(std::string note) {
  MovieTransition t;
  HandleCount h;
  Chart c = movie_.frames.back();
  for (const auto& m : moves_) {
    add_handles(h, handle_count(c, m));
    c = apply_move(c, m);
  }
  t.one_handles = h.one_handles;
  t.two_handles = h.two_handles;
  t.moves = std::move(moves_);
  t.note = std::move(note);
  moves_.clear();
  movie_.transitions.push_back(std::move(t));
  movie_.frames.push_back(current_);
}

ChartMovie MovieBuilder::finish(std::string status) {
  if (!moves_.empty()) throw std::logic_error("MovieBuilder: moves after the last frame");
  movie_.status = std::move(status);
  return movie_;
}

}  // namespace braidfold
