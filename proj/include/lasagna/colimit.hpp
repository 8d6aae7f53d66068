#pragma once

// Graded ranks of the skein module of a disk bundle over the two-sphere with
// nonzero euler number, for the rank-two Frobenius algebra.  The module in
// each cabled degree j is the colimit of centre pieces of arc rings under the
// two stabilization maps; this file computes a truncated presentation of that
// colimit and certifies stabilization by re-running one level lower.
//
// For positive euler number the centre pieces enter through their
// coinvariants for the parity-preserving symmetric action, which collapses a
// dot monomial to the pair (number of odd points, number of even points).
// For negative euler number the dual lattices enter instead, with explicit
// coinvariance columns.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "lasagna/center.hpp"
#include "lasagna/intlinalg.hpp"

namespace lasagna::colimit {

enum class PSign { positive, negative };

// Orbit classes (o, e) with o + e = size and both entries at most n, ordered
// by o.
std::vector<std::pair<int, int>> orbit_classes(int n, int size);

// The presented centre piece after collapsing monomials to orbit classes:
// rows are orbit_classes(n, size); one column per orbit of strictly smaller
// monomials, carrying the multiplicities of its superset sum.
intlinalg::IntMatrix orbit_relation_matrix(int n, int size);
intlinalg::Cokernel orbit_projected_piece(
    int n, int size, std::size_t cap = intlinalg::default_nonzero_cap);

// One truncated colimit piece at cabled degree j (even, nonpositive), using
// levels up to n_max.
intlinalg::Cokernel truncated_piece(
    PSign p_sign, int j, int n_max,
    center::SignConvention sign = center::SignConvention::conjectured,
    std::size_t cap = intlinalg::default_nonzero_cap);

struct FramedUnknotOptions {
  PSign p_sign = PSign::negative;
  int n_max = 4;
  int j_min = -8;
  center::SignConvention sign = center::SignConvention::conjectured;
  std::size_t cap = intlinalg::default_nonzero_cap;
};

struct FramedUnknotResult {
  // Graded pieces keyed by (0, j) for even j in [j_min, 0]; trivial pieces
  // are omitted from the map but were computed.
  intlinalg::GradedGroup groups;
  // Per-degree certificate: the free rank agrees with the same computation
  // truncated one level lower.
  std::map<int, bool> stable;
};

FramedUnknotResult framed_unknot_module(const FramedUnknotOptions& options);

}  // namespace lasagna::colimit
