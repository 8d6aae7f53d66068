#pragma once

// Presentation of the centre of the arc ring H^n by dot monomials: the
// degree-2k piece is the free abelian group on squarefree monomials X_I
// (I a k-element subset of the 2n boundary points) modulo, for every
// (k-1)-subset J, the relation  sum over i not in J of X_{J + i} = 0.
// This module provides the presented pieces, the admissible-monomial basis,
// integral coordinates, the dual lattice with its pairing functionals, the
// parity-preserving symmetric group action, and the two stabilization maps
// into one more strand pair.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lasagna/intlinalg.hpp"

namespace lasagna::center {

// A squarefree dot monomial: bit p-1 set means the dot at boundary point p.
using Subset = std::uint32_t;

int subset_size(Subset s);

// All k-element subsets of {1..2n}, ordered by increasing mask value.
std::vector<Subset> monomials(int n, int k);

// Rows are the size-k monomials, columns the size-(k-1) monomials J; the
// column of J is the relation sum over all I containing J.
intlinalg::IntMatrix relation_matrix(int n, int k);

// The degree-2k piece of the presented centre.
intlinalg::Cokernel presented_piece(int n, int k,
                                    std::size_t cap = intlinalg::default_nonzero_cap);

// All nonzero pieces at bigrading (0, 2k).
intlinalg::GradedGroup presented_center(int n,
                                        std::size_t cap = intlinalg::default_nonzero_cap);

// A monomial is admissible when every prefix {1..m} contains at most m/2 of
// its points.  The admissible monomials descend to a basis of the presented
// piece.
bool admissible(int n, Subset monomial);
std::vector<Subset> admissible_monomials(int n, int k);

// Integral coordinates on the presented piece with respect to the admissible
// monomials.
class AdmissibleCoordinates {
 public:
  AdmissibleCoordinates(int n, int k,
                        std::size_t cap = intlinalg::default_nonzero_cap);

  // Certifies that the admissible monomials are a Z-basis: the piece is
  // torsion free and the coordinate matrix of the admissible monomials has
  // full rank with all elementary divisors equal to one.
  bool basis_is_unimodular() const;

  // Expresses a monomial combination in admissible coordinates modulo the
  // relations; throws std::invalid_argument if it is not expressible.
  std::vector<Int> reduce(const std::map<Subset, Int>& combination) const;

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  int n_;
  int k_;
  std::vector<Subset> monomials_;
  std::vector<Subset> admissible_;
  std::map<Subset, std::size_t> index_;
  intlinalg::SnfResult solver_;  // SNF of [admissible-inclusion | relations]
  bool unimodular_;
};

// The lattice of integral functionals on the size-k monomials that vanish on
// every relation.
class DualLattice {
 public:
  DualLattice(int n, int k, std::size_t cap = intlinalg::default_nonzero_cap);

  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::vector<Int>>& basis() const { return basis_; }
  const std::vector<Subset>& monomial_order() const { return monomials_; }

  // Membership is exactly orthogonality to the relation columns.
  bool contains(const std::vector<Int>& functional) const;

  // Coordinates with respect to basis(); throws std::invalid_argument when
  // the functional is not in the lattice.
  std::vector<Int> coordinates(const std::vector<Int>& functional) const;

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  int n_;
  int k_;
  std::vector<Subset> monomials_;
  intlinalg::IntMatrix relations_;  // relation_matrix(n, k)
  std::vector<std::vector<Int>> basis_;
  intlinalg::SnfResult solver_;  // SNF of the basis matrix (vectors as columns)
};

// The functional prod over pairs (i, j) of (dual X_i - dual X_j), expanded
// over the size-k monomials (k = number of pairs).  Pairs must be disjoint.
std::vector<Int> pairing_functional(int n,
                                    const std::vector<std::pair<int, int>>& pairs);

// All ways to choose k disjoint (odd point, even point) pairs, odd first.
std::vector<std::vector<std::pair<int, int>>> balanced_pairings(int n, int k);

// Certifies that the balanced pairing functionals span the dual lattice over
// the integers (full rank and all elementary divisors one).
bool balanced_span_check(int n, int k,
                         std::size_t cap = intlinalg::default_nonzero_cap);

// Relabels a monomial-indexed vector along a permutation of the boundary
// points.  `perm` has size 2n and maps point p to perm[p-1]; it must send odd
// points to odd points and even to even.
std::vector<Int> permute_monomial_vector(int n, int k,
                                         const std::vector<int>& perm,
                                         const std::vector<Int>& v);

// The two stabilization maps into the centre on 2(n+1) points carry an
// overall sign that is conjectural; both choices are exposed.
enum class SignConvention { conjectured, flipped };
int stabilization_sign(SignConvention sc);

// Annulus map: X_I maps to sign * (X_{I + (2n+2)} - X_{I + (2n+1)}).
std::map<Subset, Int> psi_monomial(int n, Subset monomial, SignConvention sc);

// Dotted cap map: X_I maps to -sign * X_{I + (2n+1) + (2n+2)}.
std::map<Subset, Int> phi_monomial(int n, Subset monomial, SignConvention sc);

// Dual annulus map: multiplication by (dual X_{2n+2} - dual X_{2n+1}), taking
// functionals on size-k monomials of 2n points to functionals on size-(k+1)
// monomials of 2(n+1) points, times the convention sign.
std::vector<Int> psi_dual(int n, int k, const std::vector<Int>& functional,
                          SignConvention sc);

// Dual dotted cap: extension by zero to monomials on 2(n+1) points, times
// minus the convention sign.
std::vector<Int> phi_dual(int n, int k, const std::vector<Int>& functional,
                          SignConvention sc);

}  // namespace lasagna::center
