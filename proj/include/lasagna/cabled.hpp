#pragma once

#include "lasagna/intlinalg.hpp"
#include "lasagna/partitions.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

// Cabled homology of 0-framed unknots and unlinks at rank N, by two
// independent routes: a closed-form partition count and a brute-force
// truncated quotient assembled from the maps that add a cable strand pair.
namespace lasagna::cabled {

using intlinalg::GradedGroup;
using partitions::Partition;

// Thrown when a requested quantum window is not certified exact at the
// requested truncation depth.
struct UnstableWindowError : std::runtime_error {
  int required_r_max;
  UnstableWindowError(int required, int given);
};

// Cable parameters for one link: per component, alpha_i parallel strands of
// net orientation and cable multiplicity r_i. Strand counts per component are
// r_i - min(alpha_i, 0) negatively and r_i + max(alpha_i, 0) positively
// oriented.
struct CableLevel {
  int N = 2;
  std::vector<int> alpha;
  std::vector<int> r;

  std::size_t components() const { return alpha.size(); }
  int negative_strands(std::size_t c) const;
  int positive_strands(std::size_t c) const;
};

// Orbit of a monomial basis vector under the per-component symmetric-group
// action on tensor factors: one partition per orientation, parts in
// [1, N-1], recorded in the reversed exponent labels. The quantum degree
// after the cable shift is -2*(|d| + |e|) summed over components.
struct PartitionPair {
  Partition d;  // negatively oriented factors
  Partition e;  // positively oriented factors
  auto operator<=>(const PartitionPair&) const = default;
};
using OrbitClass = std::vector<PartitionPair>;  // one entry per component

int class_degree(const OrbitClass& cls);

// All orbit classes compatible with the level's strand counts whose shifted
// quantum degree is >= min_degree, in lexicographic order.
std::vector<OrbitClass> level_basis(const CableLevel& lv, int min_degree);

// Graded rank of the unshifted homology of an (r_minus + r_plus)-component
// unlink: one rank-N algebra factor per strand, homological degree 0.
GradedGroup unlink_homology(int r_minus, int r_plus, int N);

// Image classes of one orbit class under the degree -2(N-1-m) map that adds
// a strand pair to `component`. All coefficients are +1 and the listed
// classes are pairwise distinct.
std::vector<OrbitClass> psi_image(int m, const OrbitClass& v,
                                  std::size_t component, int N);

// Matrix of that map from the full basis of `source` to the full basis of
// the level with r_component incremented.
intlinalg::IntMatrix psi_m_map(int m, const CableLevel& source,
                               std::size_t component);

// Closed form: free of rank (number of partitions of q with parts < N) in
// degree (0, -2q), for q <= q_max; independent of alpha.
GradedGroup cabled_direct(int N, int alpha, int q_max);

// Truncated quotient: all levels r <= r_max componentwise, relations from
// strand-pair maps with both endpoint levels inside the truncation, per-degree
// cokernels over Z for quantum degrees >= q_min. Unless allow_unstable, the
// truncation depth must meet the certified-exactness bound
// ceil(|q_min|/2) + max|alpha_i| + 1.
GradedGroup cabled_bruteforce(int N, const std::vector<int>& alpha, int r_max,
                              int q_min, bool allow_unstable = false,
                              std::size_t cap = intlinalg::default_nonzero_cap);

// Certified truncation depth for a window.
int required_r_max(const std::vector<int>& alpha, int q_min);

}  // namespace lasagna::cabled
