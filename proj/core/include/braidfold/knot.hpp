#pragma once

// Knot and link diagrams and their colorings by dihedral groups.
//
// Text formats:
//   braid s=2: 1 1 1 1 1        closure of a braid word on s strands; letter i
//                               is sigma_i (strand i passes over strand i+1),
//                               -i its inverse
//   pd: [[1,5,2,4],[3,1,4,6],[5,3,6,2]]
//                               planar diagram code, X[a,b,c,d] with a the
//                               incoming under edge, c the outgoing one and b, d
//                               the over edges, numbered consecutively along
//                               each component

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "braidfold/dihedral.hpp"

namespace braidfold {

struct DiagramCrossing {
  int under_in = 0;   ///< arc index
  int under_out = 0;
  int over = 0;
  int sign = 1;
  friend bool operator==(const DiagramCrossing&, const DiagramCrossing&) = default;
};

struct KnotDiagram {
  enum class Kind { braid, pd };
  Kind kind = Kind::braid;
  int strands = 1;
  Word braid;
  std::vector<std::array<int, 4>> pd;

  int arc_count = 0;
  int components = 0;
  std::vector<DiagramCrossing> crossings;
  /// Braid closures: the arc at each strand position below the first letter.
  std::vector<int> bottom_arcs;

  friend bool operator==(const KnotDiagram&, const KnotDiagram&) = default;
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

KnotDiagram parse_diagram(std::string_view text);
std::string serialize_diagram(const KnotDiagram& d);
KnotDiagram braid_closure(int strands, const Word& word);
KnotDiagram from_pd(const std::vector<std::array<int, 4>>& pd);

/// Color j stands for the reflection x^-j r x^j.
struct DihedralColoring {
  int n = 3;
  std::vector<int> arc_colors;
  bool trivial = false;
  friend bool operator==(const DihedralColoring&, const DihedralColoring&) = default;
};

/// Every arc of a component carries the same rotation x^f.
struct CyclicLabeling {
  int n = 3;
  std::vector<int> arc_rotations;
  friend bool operator==(const CyclicLabeling&, const CyclicLabeling&) = default;
};

bool is_fox_coloring(const KnotDiagram& d, int n, const std::vector<int>& colors);
/// All solutions of 2 over = under_in + under_out (mod n), lexicographic.
std::vector<DihedralColoring> fox_colorings(const KnotDiagram& d, int n);
std::vector<CyclicLabeling> cyclic_labelings(const KnotDiagram& d, int n);

std::vector<DihedralElement> coloring_to_representation(const DihedralColoring& col);
/// under_out = over * under_in * over^-1 at every crossing.
bool wirtinger_holds(const KnotDiagram& d, const std::vector<DihedralElement>& arc_elements);

std::string serialize_coloring(const DihedralColoring& col);

}  // namespace braidfold
