#include "lasagna/center.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace lasagna::center {

namespace {

void check_nk(int n, int k) {
  if (n < 0 || n > 15) {
    throw std::invalid_argument("strand pair count out of range: " +
                                std::to_string(n));
  }
  if (k < -1 || k > 2 * n) {
    throw std::invalid_argument("monomial size out of range: " +
                                std::to_string(k));
  }
}

std::size_t index_of(const std::vector<Subset>& sorted, Subset s) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
  if (it == sorted.end() || *it != s) {
    throw std::logic_error("monomial missing from its size class");
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

// Relation columns evaluated against a functional: the J-column pairs to the
// sum of the functional over all size-(k) supersets of J.
bool orthogonal_to_relations(int n, int k, const std::vector<Subset>& monomials_k,
                             const std::vector<Int>& f) {
  const auto smaller = monomials(n, k - 1);
  for (Subset J : smaller) {
    Int sum = 0;
    for (std::size_t i = 0; i < monomials_k.size(); ++i) {
      if ((monomials_k[i] & J) == J) sum += f[i];
    }
    if (sum != 0) return false;
  }
  return true;
}

}  // namespace

int subset_size(Subset s) {
  int size = 0;
  for (; s; s &= s - 1) ++size;
  return size;
}

std::vector<Subset> monomials(int n, int k) {
  check_nk(n, k);
  std::vector<Subset> out;
  if (k < 0 || k > 2 * n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks the size-k masks in increasing order.
  const Subset limit = Subset{1} << (2 * n);
  Subset v = (Subset{1} << k) - 1;
  while (v < limit) {
    out.push_back(v);
    const Subset t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

intlinalg::IntMatrix relation_matrix(int n, int k) {
  check_nk(n, k);
  const auto rows = monomials(n, k);
  // One column per strictly smaller monomial J, summing every size-k
  // superset of J.  Restricting to |J| = k-1 spans the same subgroup only
  // rationally: the smaller sums are needed to present the piece without
  // spurious torsion.
  std::vector<Subset> cols;
  for (int j = 0; j < k; ++j) {
    const auto layer = monomials(n, j);
    cols.insert(cols.end(), layer.begin(), layer.end());
  }
  intlinalg::IntMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if ((rows[r] & cols[c]) == cols[c]) m.set(r, c, 1);
    }
  }
  return m;
}

intlinalg::Cokernel presented_piece(int n, int k, std::size_t cap) {
  return intlinalg::cokernel(relation_matrix(n, k), cap);
}

intlinalg::GradedGroup presented_center(int n, std::size_t cap) {
  intlinalg::GradedGroup g;
  for (int k = 0; k <= 2 * n; ++k) {
    const auto piece = presented_piece(n, k, cap);
    g.set(0, 2 * k, intlinalg::GradedPiece{piece.free_rank, piece.torsion});
  }
  return g;
}

bool admissible(int n, Subset monomial) {
  int count = 0;
  for (int m = 1; m <= 2 * n; ++m) {
    if ((monomial >> (m - 1)) & 1u) ++count;
    if (count > m / 2) return false;
  }
  return true;
}

std::vector<Subset> admissible_monomials(int n, int k) {
  std::vector<Subset> out;
  for (Subset s : monomials(n, k)) {
    if (admissible(n, s)) out.push_back(s);
  }
  return out;
}

AdmissibleCoordinates::AdmissibleCoordinates(int n, int k, std::size_t cap)
    : n_(n),
      k_(k),
      monomials_(monomials(n, k)),
      admissible_(admissible_monomials(n, k)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;

  const intlinalg::IntMatrix relations = relation_matrix(n, k);
  const std::size_t rows = monomials_.size();

  // Solver for "monomial vector = admissible combination + relation
  // combination": columns are the admissible unit vectors followed by the
  // relation columns.
  intlinalg::IntMatrix combined(rows, admissible_.size() + relations.cols());
  for (std::size_t a = 0; a < admissible_.size(); ++a) {
    combined.set(index_.at(admissible_[a]), a, 1);
  }
  for (const auto& [pos, value] : relations.entries()) {
    combined.set(pos.first, admissible_.size() + pos.second, value);
  }
  solver_ = intlinalg::smith_normal_form(combined, cap);

  // Certificate: the piece is torsion free of rank equal to the number of
  // admissible monomials, and the admissible coordinate matrix (the free
  // cokernel coordinates of the admissible unit vectors) is unimodular.
  const intlinalg::SnfResult rel = intlinalg::smith_normal_form(relations, cap);
  const std::size_t r = rel.divisors.size();
  bool ok = std::all_of(rel.divisors.begin(), rel.divisors.end(),
                        [](const Int& d) { return d == 1; });
  ok = ok && (rows - r == admissible_.size());
  if (ok) {
    intlinalg::IntMatrix coords(rows - r, admissible_.size());
    for (std::size_t a = 0; a < admissible_.size(); ++a) {
      const std::size_t col = index_.at(admissible_[a]);
      for (std::size_t i = r; i < rows; ++i) {
        const Int v = rel.U.at(i, col);
        if (v != 0) coords.set(i - r, a, v);
      }
    }
    const auto cert = intlinalg::smith_normal_form(coords, cap);
    ok = cert.divisors.size() == admissible_.size() &&
         std::all_of(cert.divisors.begin(), cert.divisors.end(),
                     [](const Int& d) { return d == 1; });
  }
  unimodular_ = ok;
}

bool AdmissibleCoordinates::basis_is_unimodular() const { return unimodular_; }

std::vector<Int> AdmissibleCoordinates::reduce(
    const std::map<Subset, Int>& combination) const {
  std::vector<Int> v(monomials_.size(), 0);
  for (const auto& [s, c] : combination) {
    const auto it = index_.find(s);
    if (it == index_.end()) {
      throw std::invalid_argument("monomial of the wrong size class");
    }
    v[it->second] = c;
  }
  const auto z = intlinalg::solve(solver_, v);
  if (!z) {
    throw std::invalid_argument(
        "combination is not in the span of admissibles and relations");
  }
  return std::vector<Int>(z->begin(),
                          z->begin() + static_cast<std::ptrdiff_t>(admissible_.size()));
}

DualLattice::DualLattice(int n, int k, std::size_t cap)
    : n_(n),
      k_(k),
      monomials_(monomials(n, k)),
      relations_(relation_matrix(n, k)) {
  basis_ = intlinalg::kernel_basis(relations_.transposed(), cap);
  intlinalg::IntMatrix b(monomials_.size(), basis_.size());
  for (std::size_t c = 0; c < basis_.size(); ++c) {
    for (std::size_t r = 0; r < monomials_.size(); ++r) {
      if (basis_[c][r] != 0) b.set(r, c, basis_[c][r]);
    }
  }
  solver_ = intlinalg::smith_normal_form(b, cap);
}

bool DualLattice::contains(const std::vector<Int>& functional) const {
  if (functional.size() != monomials_.size()) {
    throw std::invalid_argument("functional has the wrong length");
  }
  return orthogonal_to_relations(n_, k_, monomials_, functional);
}

std::vector<Int> DualLattice::coordinates(
    const std::vector<Int>& functional) const {
  if (!contains(functional)) {
    throw std::invalid_argument("functional is outside the dual lattice");
  }
  const auto x = intlinalg::solve(solver_, functional);
  if (!x) {
    throw std::logic_error("saturated kernel lattice rejected a member");
  }
  return *x;
}

std::vector<Int> pairing_functional(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  const int k = static_cast<int>(pairs.size());
  Subset support = 0;
  for (auto [i, j] : pairs) {
    if (i < 1 || i > 2 * n || j < 1 || j > 2 * n || i == j) {
      throw std::invalid_argument("pairing endpoint out of range");
    }
    const Subset mask = (Subset{1} << (i - 1)) | (Subset{1} << (j - 1));
    if (support & mask) {
      throw std::invalid_argument("pairing endpoints are not disjoint");
    }
    support |= mask;
  }
  const auto ms = monomials(n, k);
  std::vector<Int> f(ms.size(), 0);
  for (std::size_t idx = 0; idx < ms.size(); ++idx) {
    const Subset I = ms[idx];
    if ((I | support) != support) continue;  // hits a point outside the pairs
    Int sign = 1;
    bool valid = true;
    for (auto [i, j] : pairs) {
      const bool has_i = (I >> (i - 1)) & 1u;
      const bool has_j = (I >> (j - 1)) & 1u;
      if (has_i == has_j) {
        valid = false;
        break;
      }
      if (has_j) sign = -sign;
    }
    if (valid) f[idx] = sign;
  }
  return f;
}

std::vector<std::vector<std::pair<int, int>>> balanced_pairings(int n, int k) {
  check_nk(n, k);
  std::vector<std::vector<std::pair<int, int>>> out;
  if (k > n) return out;
  std::vector<int> odds, evens;
  for (int i = 1; i <= n; ++i) {
    odds.push_back(2 * i - 1);
    evens.push_back(2 * i);
  }
  std::vector<std::pair<int, int>> current;
  // Choose the odd points in increasing order, each matched to a free even
  // point; this enumerates every set of k disjoint odd-even pairs once.
  std::vector<char> even_used(n, 0);
  auto rec = [&](auto&& self, int odd_from, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int oi = odd_from; oi <= n - remaining; ++oi) {
      for (int ei = 0; ei < n; ++ei) {
        if (even_used[ei]) continue;
        even_used[ei] = 1;
        current.emplace_back(odds[oi], evens[ei]);
        self(self, oi + 1, remaining - 1);
        current.pop_back();
        even_used[ei] = 0;
      }
    }
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

bool balanced_span_check(int n, int k, std::size_t cap) {
  const DualLattice lattice(n, k, cap);
  const auto pairings = balanced_pairings(n, k);
  intlinalg::IntMatrix coords(pairings.size(), lattice.rank());
  for (std::size_t r = 0; r < pairings.size(); ++r) {
    const auto x = lattice.coordinates(pairing_functional(n, pairings[r]));
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c] != 0) coords.set(r, c, x[c]);
    }
  }
  const auto cert = intlinalg::smith_normal_form(coords, cap);
  return cert.divisors.size() == lattice.rank() &&
         std::all_of(cert.divisors.begin(), cert.divisors.end(),
                     [](const Int& d) { return d == 1; });
}

std::vector<Int> permute_monomial_vector(int n, int k,
                                         const std::vector<int>& perm,
                                         const std::vector<Int>& v) {
  if (perm.size() != static_cast<std::size_t>(2 * n)) {
    throw std::invalid_argument("permutation has the wrong length");
  }
  std::vector<char> hit(2 * n + 1, 0);
  for (int p = 1; p <= 2 * n; ++p) {
    const int q = perm[p - 1];
    if (q < 1 || q > 2 * n || hit[q]) {
      throw std::invalid_argument("not a permutation of the boundary points");
    }
    if ((q - p) % 2 != 0) {
      throw std::invalid_argument("permutation mixes odd and even points");
    }
    hit[q] = 1;
  }
  const auto ms = monomials(n, k);
  if (v.size() != ms.size()) {
    throw std::invalid_argument("vector has the wrong length");
  }
  std::vector<Int> out(ms.size(), 0);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Subset image = 0;
    for (int p = 1; p <= 2 * n; ++p) {
      if ((ms[i] >> (p - 1)) & 1u) image |= Subset{1} << (perm[p - 1] - 1);
    }
    out[index_of(ms, image)] = v[i];
  }
  return out;
}

int stabilization_sign(SignConvention sc) {
  return sc == SignConvention::conjectured ? 1 : -1;
}

std::map<Subset, Int> psi_monomial(int n, Subset monomial, SignConvention sc) {
  const Int s = stabilization_sign(sc);
  std::map<Subset, Int> out;
  out[monomial | (Subset{1} << (2 * n + 1))] = s;   // add the new even point
  out[monomial | (Subset{1} << (2 * n))] = -s;      // add the new odd point
  return out;
}

std::map<Subset, Int> phi_monomial(int n, Subset monomial, SignConvention sc) {
  const Int s = stabilization_sign(sc);
  std::map<Subset, Int> out;
  out[monomial | (Subset{3} << (2 * n))] = -s;  // add both new points
  return out;
}

std::vector<Int> psi_dual(int n, int k, const std::vector<Int>& functional,
                          SignConvention sc) {
  const auto source = monomials(n, k);
  if (functional.size() != source.size()) {
    throw std::invalid_argument("functional has the wrong length");
  }
  const Int s = stabilization_sign(sc);
  const auto target = monomials(n + 1, k + 1);
  const Subset old_points = (Subset{1} << (2 * n)) - 1;
  const Subset new_odd = Subset{1} << (2 * n);
  const Subset new_even = Subset{1} << (2 * n + 1);
  std::vector<Int> out(target.size(), 0);
  for (std::size_t t = 0; t < target.size(); ++t) {
    const Subset I = target[t];
    Int value = 0;
    if ((I & new_even) && (I & ~new_even) == (I & old_points)) {
      value += functional[index_of(source, I & old_points)];
    }
    if ((I & new_odd) && (I & ~new_odd) == (I & old_points)) {
      value -= functional[index_of(source, I & old_points)];
    }
    out[t] = s * value;
  }
  return out;
}

std::vector<Int> phi_dual(int n, int k, const std::vector<Int>& functional,
                          SignConvention sc) {
  const auto source = monomials(n, k);
  if (functional.size() != source.size()) {
    throw std::invalid_argument("functional has the wrong length");
  }
  const Int s = stabilization_sign(sc);
  const auto target = monomials(n + 1, k);
  const Subset old_points = (Subset{1} << (2 * n)) - 1;
  std::vector<Int> out(target.size(), 0);
  for (std::size_t t = 0; t < target.size(); ++t) {
    if ((target[t] & ~old_points) != 0) continue;
    out[t] = -s * functional[index_of(source, target[t])];
  }
  return out;
}

}  // namespace lasagna::center
