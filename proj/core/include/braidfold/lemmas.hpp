#pragma once

// Rewrite certificates for the word identities used when dihedral relator
// vertices are expanded into permutation charts.
//
// A certificate starts from the product chart of a word (no events, so the
// top slice equals the source) and inserts cancelling pairs until the slice
// at `middle_level` reads `middle`. The boundary slices never change, so a
// verified certificate shows the source and the middle word are joined by a
// chart built from crossings, white vertices, cups and caps.
//
// File format:
//   {"name": "lemma1", "statement": "...", "middle_level": 6,
//    "middle": [4, 3, 2, 1, 4, 3, 2, 1], "start": <chart>, "moves": [ ... ]}

#include <string>
#include <string_view>
#include <vector>

#include "braidfold/chart.hpp"
#include "braidfold/moves.hpp"

namespace braidfold {

struct LemmaCertificate {
  std::string name;
  std::string statement;
  Chart start;
  std::vector<MoveInstance> moves;
  int middle_level = 0;
  Word middle;
  friend bool operator==(const LemmaCertificate&, const LemmaCertificate&) = default;
};

std::string serialize_certificate(const LemmaCertificate& c);
/// Throws ChartError on malformed text.
LemmaCertificate parse_certificate(std::string_view text);

/// Builds the three certificates from the rewriting engine:
///   lemma1      (t4 t3 t2 t1)^3 through (12)(23)(34)(45)(12)(23)(34)(45)
///   corollary1  psi(x^5) through the empty word
///   lemma2      psi(rxrx) through the empty word, path found by search
std::vector<LemmaCertificate> author_lemma_certificates();

/// Names of the committed certificates, in suite order.
const std::vector<std::string>& lemma_names();
/// The committed certificate text embedded at build time (empty if absent).
std::string_view lemma_certificate_text(std::string_view name);

struct LemmaCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Replays the moves and checks the middle slice, the untouched boundary and,
/// for lemma1, the permutation (13524).
LemmaCheck check_certificate(const LemmaCertificate& c);

/// Embedded certificates plus the worked example r (x r x^-1) x^2 = 1 in D_5:
/// the six displayed lines of its boundary word, from sixteen letters down to
/// (23)(12)(34)(23)(45)(34), all evaluate to psi(r x r x^-1) = (13524) and
/// consecutive lines are joined by word searches.
std::vector<LemmaCheck> run_lemma_suite();

}  // namespace braidfold
