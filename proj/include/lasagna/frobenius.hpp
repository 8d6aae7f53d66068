#pragma once

#include "lasagna/intlinalg.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

// Rank-N commutative Frobenius algebra Z[X]/(X^N) with grading shift 1-N:
// deg(X^m) = 1 - N + 2m. Two tensor-factor flavors occur downstream, one per
// strand orientation; they share this structure and differ only in which
// symmetric-group factor permutes them.
namespace lasagna::frobenius {

enum class Strand { negative, positive };

int quantum_degree(int N, int m);

// X^a * X^b; nullopt encodes the zero product (a + b >= N).
std::optional<int> multiply(int N, int a, int b);

// Delta(X^m) = sum_{k=0}^{N-1-m} X^{m+k} (x) X^{N-1-k}; all coefficients 1.
// Raises quantum degree by N-1.
std::vector<std::pair<int, int>> comultiply(int N, int m);

// eps(X^m): 1 if m = N-1, else 0.
int counit(int N, int m);

// Involutive re-indexing m <-> N-1-m between the monomial basis and the
// reversed basis in which the partition bookkeeping is done.
int dual_index(int N, int m);

// Integer combination of pure tensors of fixed arity, keyed by exponent
// vectors. Enough structure to state the algebra axioms as map identities.
struct Tensor {
  std::size_t arity = 0;
  std::map<std::vector<int>, Int> terms;

  void add(const std::vector<int>& key, const Int& coeff);
  bool operator==(const Tensor&) const = default;
};

Tensor pure_tensor(const std::vector<int>& exponents);

// Merge factors pos, pos+1 with the product (arity drops by one).
Tensor merge_at(int N, const Tensor& t, std::size_t pos);
// Split factor pos with Delta (arity grows by one).
Tensor split_at(int N, const Tensor& t, std::size_t pos);
// Apply the counit to factor pos (arity drops by one).
Tensor counit_at(int N, const Tensor& t, std::size_t pos);

}  // namespace lasagna::frobenius
