#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lasagna/frobenius.hpp"

using namespace lasagna;
using namespace lasagna::frobenius;

TEST_CASE("product of monomials truncates at X^N") {
  CHECK(multiply(2, 1, 1) == std::nullopt);
  CHECK(multiply(3, 1, 1) == 2);
  CHECK(multiply(2, 0, 1) == 1);
}

TEST_CASE("coproduct on pinned instances") {
  using pairs = std::vector<std::pair<int, int>>;
  CHECK(comultiply(2, 0) == pairs{{0, 1}, {1, 0}});
  CHECK(comultiply(2, 1) == pairs{{1, 1}});
  CHECK(comultiply(3, 1) == pairs{{1, 2}, {2, 1}});
}

TEST_CASE("counit on pinned instances") {
  CHECK(counit(2, 1) == 1);
  CHECK(counit(2, 0) == 0);
  CHECK(counit(5, 3) == 0);
  CHECK(counit(5, 4) == 1);
}

TEST_CASE("degree bookkeeping") {
  for (int N = 1; N <= 5; ++N) {
    for (int m = 0; m < N; ++m) {
      CHECK(quantum_degree(N, m) == 1 - N + 2 * m);
      // coproduct raises degree by N-1 in every term
      for (auto [l, r] : comultiply(N, m))
        CHECK(quantum_degree(N, l) + quantum_degree(N, r) ==
              quantum_degree(N, m) + (N - 1));
      // product raises degree by N-1 relative to the tensor degree
      for (int b = 0; b < N; ++b)
        if (auto p = multiply(N, m, b))
          CHECK(quantum_degree(N, *p) ==
                quantum_degree(N, m) + quantum_degree(N, b) + (N - 1));
    }
  }
}

TEST_CASE("re-indexing is an involution") {
  for (int N = 1; N <= 6; ++N)
    for (int m = 0; m < N; ++m) {
      CHECK(dual_index(N, dual_index(N, m)) == m);
      CHECK(quantum_degree(N, dual_index(N, m)) == -quantum_degree(N, m));
    }
}

TEST_CASE("algebra axioms hold exhaustively for N <= 5") {
  for (int N = 1; N <= 5; ++N) {
    for (int a = 0; a < N; ++a) {
      for (int b = 0; b < N; ++b) {
        // commutativity
        CHECK(multiply(N, a, b) == multiply(N, b, a));
        for (int c = 0; c < N; ++c) {
          // associativity via the tensor calculus
          Tensor t = pure_tensor({a, b, c});
          CHECK(merge_at(N, merge_at(N, t, 0), 0) ==
                merge_at(N, merge_at(N, t, 1), 0));
        }
        // Frobenius condition: (mult (x) id) o (id (x) Delta) = Delta o mult
        Tensor ab = pure_tensor({a, b});
        Tensor lhs = merge_at(N, split_at(N, ab, 1), 0);
        Tensor rhs = split_at(N, merge_at(N, ab, 0), 0);
        CHECK(lhs == rhs);
        // and the mirrored form (Delta o mult = (id (x) mult) o (Delta (x) id))
        Tensor lhs2 = merge_at(N, split_at(N, ab, 0), 1);
        CHECK(lhs == lhs2);
      }
      // coassociativity
      Tensor x = pure_tensor({a});
      CHECK(split_at(N, split_at(N, x, 0), 0) ==
            split_at(N, split_at(N, x, 0), 1));
      // counit laws (eps (x) id) o Delta = id = (id (x) eps) o Delta
      CHECK(counit_at(N, split_at(N, x, 0), 0) == x);
      CHECK(counit_at(N, split_at(N, x, 0), 1) == x);
    }
  }
}
