#pragma once

// Orienting the edges of a permutation chart. Every edge segment in strip i
// (between events i and i+1) at slice position k gets a direction: +1 points
// towards higher levels, -1 towards lower ones. A crossing needs both strands
// directed through it; a white vertex needs three consecutive incoming edges
// in its cyclic order L0 L1 L2 R2 R1 R0. Black, branch and relator vertices
// accept anything. Where no assignment fits, nodes (orientation reversals)
// are placed next to the offending vertex.

#include <cstdint>
#include <string>
#include <vector>

#include "braidfold/chart.hpp"

namespace braidfold {

struct OrientationNode {
  int strip = 0;
  int pos = 0;
  friend bool operator==(const OrientationNode&, const OrientationNode&) = default;
};

struct OrientedChart {
  Chart chart;
  /// directions[i][k] for strip i, slice position k.
  std::vector<std::vector<int>> directions;
  std::vector<OrientationNode> nodes;
  int node_count = 0;
  /// True when the count is the proven minimum (exhaustive search).
  bool exhaustive = false;
};

struct OrientOptions {
  /// Branch-and-bound nodes before settling for the best assignment so far.
  std::int64_t budget = 5'000'000;
};

OrientedChart attempt_orientation(const Chart& c, const OrientOptions& o = {});

/// Local constraint violations of a direction assignment: one line per
/// reversal along an edge or unsatisfied crossing/white vertex. Empty iff the
/// assignment orients c as a braid chart.
std::vector<std::string> orientation_violations(const Chart& c, const std::vector<std::vector<int>>& directions);

std::string serialize_oriented(const OrientedChart& oc);

}  // namespace braidfold
