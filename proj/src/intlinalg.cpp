#include "lasagna/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace lasagna::intlinalg {

ResourceCapError::ResourceCapError(std::size_t size_, std::size_t cap_)
    : std::runtime_error("matrix size " + std::to_string(size_) +
                         " exceeds configured cap " + std::to_string(cap_)),
      size(size_),
      cap(cap_) {}

Int IntMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Int(0) : it->second;
}

void IntMatrix::set(std::size_t r, std::size_t c, Int v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::set");
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = std::move(v);
}

void IntMatrix::add(std::size_t r, std::size_t c, const Int& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::add");
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    if (v != 0) entries_.emplace(std::make_pair(r, c), v);
    return;
  }
  it->second += v;
  if (it->second == 0) entries_.erase(it);
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
  return t;
}

IntMatrix IntMatrix::times(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix::times shape");
  IntMatrix out(rows_, rhs.cols_);
  for (const auto& [rc, v] : entries_) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      Int w = rhs.at(rc.second, j);
      if (w != 0) out.add(rc.first, j, v * w);
    }
  }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply shape");
  std::vector<Int> out(rows_, Int(0));
  for (const auto& [rc, v] : entries_) out[rc.first] += v * x[rc.second];
  return out;
}

namespace {

using Dense = std::vector<std::vector<Int>>;

Dense to_dense(const IntMatrix& m) {
  Dense a(m.rows(), std::vector<Int>(m.cols(), Int(0)));
  for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
  return a;
}

Dense dense_identity(std::size_t n) {
  Dense a(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

void check_cap(const IntMatrix& m, std::size_t cap) {
  if (m.nonzero_count() > cap) throw ResourceCapError(m.nonzero_count(), cap);
  if (m.rows() > cap) throw ResourceCapError(m.rows(), cap);
  if (m.cols() > cap) throw ResourceCapError(m.cols(), cap);
}

// In-place SNF of `a`; row operations mirrored into *u, column operations
// into *v when non-null. Returns the positive divisor chain.
std::vector<Int> snf_core(Dense& a, Dense* u, Dense* v) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;

  auto row_sub = [&](std::size_t i, std::size_t t, const Int& q) {
    for (std::size_t j = 0; j < cols; ++j)
      if (a[t][j] != 0) a[i][j] -= q * a[t][j];
    if (u)
      for (std::size_t j = 0; j < rows; ++j)
        if ((*u)[t][j] != 0) (*u)[i][j] -= q * (*u)[t][j];
  };
  auto row_add = [&](std::size_t t, std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) a[t][j] += a[i][j];
    if (u)
      for (std::size_t j = 0; j < rows; ++j) (*u)[t][j] += (*u)[i][j];
  };
  auto row_swap = [&](std::size_t i, std::size_t t) {
    std::swap(a[i], a[t]);
    if (u) std::swap((*u)[i], (*u)[t]);
  };
  auto col_sub = [&](std::size_t j, std::size_t t, const Int& q) {
    for (std::size_t i = 0; i < rows; ++i)
      if (a[i][t] != 0) a[i][j] -= q * a[i][t];
    if (v)
      for (std::size_t i = 0; i < cols; ++i)
        if ((*v)[i][t] != 0) (*v)[i][j] -= q * (*v)[i][t];
  };
  auto col_swap = [&](std::size_t j, std::size_t t) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][t]);
    if (v)
      for (std::size_t i = 0; i < cols; ++i) std::swap((*v)[i][j], (*v)[i][t]);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    bool block_empty = false;
    for (;;) {
      // re-select the minimal-absolute-value pivot every round; selecting it
      // only once per stage lets intermediate entries explode
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) {
        block_empty = true;
        break;
      }
      if (pi != t) row_swap(pi, t);
      if (pj != t) col_swap(pj, t);

      // one Euclidean step where the pivot fails to divide; the remainder
      // strictly shrinks the block minimum, so this terminates
      bool stepped = false;
      for (std::size_t i = t + 1; i < rows && !stepped; ++i)
        if (a[i][t] % a[t][t] != 0) {
          row_sub(i, t, a[i][t] / a[t][t]);
          stepped = true;
        }
      for (std::size_t j = t + 1; j < cols && !stepped; ++j)
        if (a[t][j] % a[t][t] != 0) {
          col_sub(j, t, a[t][j] / a[t][t]);
          stepped = true;
        }
      if (stepped) continue;

      // pivot divides its row and column: clear both exactly
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) row_sub(i, t, a[i][t] / a[t][t]);
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) col_sub(j, t, a[t][j] / a[t][t]);

      // pivot must divide the remaining block for the divisor chain
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols && fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_add(t, i);
            fixed = false;
          }
      if (fixed) break;
    }
    if (block_empty) break;
    ++t;
  }

  std::vector<Int> divisors;
  divisors.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    if (a[i][i] < 0) {
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = -a[i][j];
      if (u)
        for (std::size_t j = 0; j < rows; ++j) (*u)[i][j] = -(*u)[i][j];
    }
    divisors.push_back(a[i][i]);
  }
  return divisors;
}

IntMatrix from_dense(const Dense& a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) m.set(i, j, a[i][j]);
  return m;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, std::size_t cap) {
  check_cap(m, cap);
  Dense a = to_dense(m);
  Dense u = dense_identity(m.rows());
  Dense v = dense_identity(m.cols());
  SnfResult res;
  res.divisors = snf_core(a, &u, &v);
  res.U = from_dense(u);
  res.V = from_dense(v);
  if (res.U.rows() == 0) res.U = IntMatrix(0, 0);
  if (res.V.rows() == 0) res.V = IntMatrix(0, 0);
  return res;
}

std::size_t rank(const IntMatrix& m, std::size_t cap) {
  check_cap(m, cap);
  Dense a = to_dense(m);
  return snf_core(a, nullptr, nullptr).size();
}

Cokernel cokernel(const IntMatrix& m, std::size_t cap) {
  check_cap(m, cap);
  Dense a = to_dense(m);
  std::vector<Int> d = snf_core(a, nullptr, nullptr);
  Cokernel c;
  c.free_rank = m.rows() - d.size();
  for (const Int& x : d)
    if (x > 1) c.torsion.push_back(x);
  return c;
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m, std::size_t cap) {
  check_cap(m, cap);
  Dense a = to_dense(m);
  Dense v = dense_identity(m.cols());
  std::size_t r = snf_core(a, nullptr, &v).size();
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = r; j < m.cols(); ++j) {
    std::vector<Int> k(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) k[i] = v[i][j];
    basis.push_back(std::move(k));
  }
  return basis;
}

std::optional<std::vector<Int>> solve(const SnfResult& snf,
                                      const std::vector<Int>& b) {
  const std::size_t rows = snf.U.rows();
  const std::size_t cols = snf.V.rows();
  if (b.size() != rows) throw std::invalid_argument("solve shape");
  std::vector<Int> c = snf.U.apply(b);
  std::vector<Int> z(cols, Int(0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < snf.divisors.size()) {
      if (c[i] % snf.divisors[i] != 0) return std::nullopt;
      if (i < cols) z[i] = c[i] / snf.divisors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.V.apply(z);
}

std::optional<std::vector<Int>> solve(const IntMatrix& m,
                                      const std::vector<Int>& b,
                                      std::size_t cap) {
  return solve(smith_normal_form(m, cap), b);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant shape");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // fraction-free Bareiss elimination with row pivoting
  Dense a = to_dense(m);
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

void GradedGroup::set(int i, int j, GradedPiece piece) {
  if (piece.trivial())
    pieces.erase({i, j});
  else
    pieces[{i, j}] = std::move(piece);
}

const GradedPiece* GradedGroup::find(int i, int j) const {
  auto it = pieces.find({i, j});
  return it == pieces.end() ? nullptr : &it->second;
}

std::size_t GradedGroup::free_rank_at(int i, int j) const {
  const GradedPiece* p = find(i, j);
  return p ? p->free_rank : 0;
}

}  // namespace lasagna::intlinalg
