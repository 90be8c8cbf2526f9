#pragma once

// Dihedral charts compiled to permutation charts through psi, resolution of
// radial branch points, and the planar chart of a dihedral branched cover of
// the sphere with prescribed meridian colors.

#include <vector>

#include "braidfold/chart.hpp"
#include "braidfold/dihedral.hpp"

namespace braidfold {

/// Replaces each dihedral letter by its reduced psi-word: cups and caps become
/// nested cups and caps, black vertices become branch vertices carrying the
/// psi-word (black again when it has one letter), relator vertices become
/// cap/crossing/white rewrites. Vertex ids are kept.
Chart compile_chart(const Chart& d);

/// Position of a dihedral slice position inside the compiled slice.
int compiled_position(int n, const Word& dihedral_slice, int pos);

/// Resolves the branch vertex with the given id into n - cycles(g) simple
/// black vertices; a black vertex is returned unchanged. Throws ChartError if
/// no black or branch vertex carries the id.
Chart resolve_branch(const Chart& c, int vertex);

/// Resolves every branch vertex, bottom to top.
Chart resolve_all(const Chart& c);

/// Dihedral chart with one branch vertex per color, stacked so the vertex of
/// a_b is lowest, then trivialized by caps and relator vertices. A reflection
/// x^-j r x^j is drawn as a black r inside j nested x-cups (|j| < n/2); a
/// rotation x^f as a branch vertex carrying x^f. Identity colors get no
/// vertex. Throws std::invalid_argument unless b >= 2 and a_1 ... a_b = 1.
Chart build_planar_cover_chart(int n, const std::vector<DihedralElement>& colors);

/// The j in (-n/2, n/2) with e = x^-j r x^j, for a reflection e.
int conjugation_exponent(const DihedralElement& e);

}  // namespace braidfold
