#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lasagna {

using Int = boost::multiprecision::cpp_int;

namespace intlinalg {

// Budget on matrix size (nonzero entries and each dimension); keeps a bad
// configuration from silently allocating the machine away.
constexpr std::size_t default_nonzero_cap = 200000;

struct ResourceCapError : std::runtime_error {
  std::size_t size;
  std::size_t cap;
  ResourceCapError(std::size_t size_, std::size_t cap_);
};

// Sparse integer matrix. Absent entries are zero; stored entries are never zero.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzero_count() const { return entries_.size(); }
  const std::map<std::pair<std::size_t, std::size_t>, Int>& entries() const {
    return entries_;
  }

  Int at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Int v);
  void add(std::size_t r, std::size_t c, const Int& v);

  static IntMatrix identity(std::size_t n);
  IntMatrix transposed() const;
  IntMatrix times(const IntMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;

  bool operator==(const IntMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Int> entries_;
};

// U * M * V = diag(divisors) padded with zeros; U, V unimodular;
// divisors positive with d_i | d_{i+1}.
struct SnfResult {
  std::vector<Int> divisors;
  IntMatrix U, V;
};

SnfResult smith_normal_form(const IntMatrix& m,
                            std::size_t cap = default_nonzero_cap);

std::size_t rank(const IntMatrix& m, std::size_t cap = default_nonzero_cap);

// Z^rows / im(M), M read as a map from column space to row space.
struct Cokernel {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // divisors > 1, each dividing the next
  bool operator==(const Cokernel&) const = default;
};

Cokernel cokernel(const IntMatrix& m, std::size_t cap = default_nonzero_cap);

// Lattice basis of ker(M) in Z^cols.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m,
                                           std::size_t cap = default_nonzero_cap);

// Particular integral solution of M * x = b, if one exists.
std::optional<std::vector<Int>> solve(const SnfResult& snf,
                                      const std::vector<Int>& b);
std::optional<std::vector<Int>> solve(const IntMatrix& m,
                                      const std::vector<Int>& b,
                                      std::size_t cap = default_nonzero_cap);

Int determinant(const IntMatrix& m);

// Finitely generated graded abelian group keyed by (homological, quantum) degree.
struct GradedPiece {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const GradedPiece&) const = default;
};

struct GradedGroup {
  std::map<std::pair<int, int>, GradedPiece> pieces;  // trivial pieces omitted

  void set(int i, int j, GradedPiece piece);
  const GradedPiece* find(int i, int j) const;
  std::size_t free_rank_at(int i, int j) const;
  bool operator==(const GradedGroup&) const = default;
};

}  // namespace intlinalg
}  // namespace lasagna
