#pragma once

// Invariants of the branched cover of the sphere described by a closed chart.
// The sheets over the common basepoint (the region below every slice) are
// labeled 1..n; a branch event at (level, pos) gets the global monodromy
// P^-1 o local o P, P being the permutation of the slice prefix below pos.

#include <optional>
#include <string>
#include <vector>

#include "braidfold/chart.hpp"

namespace braidfold {

struct ComponentInvariants {
  std::vector<int> sheets;
  int euler = 0;
  int genus = 0;
  friend bool operator==(const ComponentInvariants&, const ComponentInvariants&) = default;
};

struct CoverInvariants {
  int degree = 0;
  int branch_count = 0;
  std::vector<std::vector<int>> component_orbits;
  int euler_total = 0;
  std::vector<ComponentInvariants> per_component;

  int components() const { return static_cast<int>(component_orbits.size()); }
  friend bool operator==(const CoverInvariants&, const CoverInvariants&) = default;
};

/// One permutation per black/branch event, in level order.
std::vector<Permutation> global_monodromies(const Chart& c);

/// Riemann-Hurwitz on the monodromy data. Needs a valid closed chart.
CoverInvariants cover_invariants(const Chart& c);

/// Independent count: builds a cell structure of the base sphere from the
/// event movie, lifts every cell to n sheets, glues sheets across chart edges
/// and counts components and cells directly.
CoverInvariants sheet_trace_oracle(const Chart& c);

/// Invariants of an abstract branched cover given by its global monodromies.
CoverInvariants invariants_from_monodromies(int n, const std::vector<Permutation>& g);

/// "components=3, euler=6"
std::string summary(const CoverInvariants& inv);
/// {"components": ..., "euler": ..., "per_component": [...], "branch_points": ...}
std::string to_json(const CoverInvariants& inv);

}  // namespace braidfold
