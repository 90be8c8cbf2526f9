#pragma once

// Canonical JSON text for charts. Keys appear in a fixed order, events one
// per line; parse(serialize(c)) == c and serialize(parse(s)) == s for any
// canonical s. Dihedral labels are written as strings over "rRxX".
//
//   {
//     "degree": 5,
//     "alphabet": "permutation",
//     "source": [],
//     "target": [],
//     "events": [
//       {"kind": "cup", "pos": 0, "labels": [1]},
//       {"kind": "black", "pos": 1, "labels": [2], "mode": "insert", "vertex": 1},
//       ...
//     ]
//   }

#include <filesystem>
#include <string>
#include <string_view>

#include "braidfold/chart.hpp"

namespace braidfold {

std::string serialize_chart(const Chart& c);
/// Throws ChartError on malformed text; the chart is not validated.
Chart parse_chart(std::string_view text);

/// Compact one-line form of a single event, as used inside chart files.
std::string serialize_event(Alphabet a, const ChartEvent& e);
/// Word as a JSON value: integer list, or "rxRX" string for dihedral charts.
std::string serialize_labels(Alphabet a, const Word& w);

std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, std::string_view text);
inline Chart load_chart(const std::filesystem::path& p) { return parse_chart(read_text_file(p)); }

}  // namespace braidfold
