#pragma once

// Arc ring H^n for the two-dimensional Frobenius algebra Z[X]/(X^2):
// crossingless matchings of 2n boundary points, diagram bases labelled by
// {1, X} on the circles of a glued pair of matchings, multiplication by
// iterated circle surgery, dot actions, and a brute-force computation of the
// centre as the simultaneous kernel of all commutator constraints.

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "lasagna/intlinalg.hpp"

namespace lasagna::arcring {

// A crossingless perfect matching of the points 1..2n, stored as arcs (i, j)
// with i < j, sorted by first endpoint.
using Matching = std::vector<std::pair<int, int>>;

// All crossingless matchings of 2n points in a canonical (lexicographic)
// order.  The count is the n-th Catalan number.
std::vector<Matching> enumerate_matchings(int n);

// Circles of the closed diagram obtained by gluing matching `a` to the
// reflection of matching `b` along the 2n shared boundary points.  Each
// circle is the sorted list of boundary points it passes through; circles are
// ordered by their smallest point.
std::vector<std::vector<int>> compose_circles(const Matching& a,
                                              const Matching& b);

// One basis diagram of H^n: a pair of matchings (indices into
// enumerate_matchings(n)) together with a label in {1, X} on every circle of
// their composite.  Bit k of `labels` is set when circle k carries X.
struct Diagram {
  int a = 0;
  int b = 0;
  unsigned labels = 0;
  auto operator<=>(const Diagram&) const = default;
};

// Homological/quantum-style grading of a diagram: n minus the number of
// circles plus twice the number of X labels.  Ranges over 0..2n in steps
// compatible with the even grading of the centre.
int diagram_degree(int n, const Diagram& d);

// An integer linear combination of basis diagrams.
struct Element {
  std::map<Diagram, Int> terms;

  void add(const Diagram& d, const Int& coefficient);
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  bool zero() const { return terms.empty(); }
  bool operator==(const Element&) const = default;
};

// All basis diagrams of H^n in canonical order (a, then b, then labels).
std::vector<Diagram> hn_basis(int n);

// The two-sided identity: the sum over all matchings a of the (a, a) diagram
// with every circle labelled 1.
Element identity(int n);

// Product in H^n: diagrams (a, b) and (b', c) multiply to zero unless b == b';
// otherwise the two copies of each arc of b are surgered away innermost
// first, merging circle labels through the algebra product and splitting them
// through the coproduct of Z[X]/(X^2).
Element multiply(int n, const Element& x, const Element& y);

// Same product but contracting the middle arcs in a caller-chosen order
// (`arc_order` is a permutation of indices into the middle matching's arc
// list).  Exposed so tests can confirm the result is order-independent.
Element multiply_ordered(int n, const Element& x, const Element& y,
                         const std::vector<std::size_t>& arc_order);

// Action of the dot at boundary point `point` (1-based): multiplies the label
// of the circle through that point by X, with sign +1 at even points and -1
// at odd points.
Element xi_action(int n, int point, const Element& x);

// The product of the dot actions at the given points applied to the identity.
// These elements are central; distinct points on a shared circle annihilate.
Element point_label_product(int n, const std::vector<int>& points);

// True when x commutes with every basis diagram of H^n.
bool is_central(int n, const Element& x);

struct CenterResult {
  // Free rank of the centre in each degree, stored at bigrading (0, degree).
  intlinalg::GradedGroup ranks;
  // An integral basis of the centre, ordered by degree.
  std::vector<Element> basis;
};

// Brute-force centre of H^n: for each degree slice, the kernel of the linear
// system demanding commutation with every basis diagram.  Guarded by an upper
// bound on n (the basis grows like the square of a Catalan number) and by a
// cap on matrix size.
CenterResult center_bruteforce(int n, int n_cap = 3,
                               std::size_t cap = intlinalg::default_nonzero_cap);

}  // namespace lasagna::arcring
