#include "lasagna/colimit.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lasagna::colimit {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

void check_degree(int j) {
  if (j > 0 || j % 2 != 0) {
    throw std::invalid_argument("cabled degree must be even and nonpositive");
  }
}

// Smallest level whose class size 2n + j/2 is nonnegative.
int first_level(int j) {
  const int need = -j / 2;  // class size at level n is 2n - need
  return (need + 1) / 2;
}

using Column = std::map<std::size_t, Int>;

intlinalg::Cokernel cokernel_of_columns(std::size_t rows,
                                        const std::vector<Column>& columns,
                                        std::size_t cap) {
  intlinalg::IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c]) {
      if (v != 0) m.set(r, c, v);
    }
  }
  return intlinalg::cokernel(m, cap);
}

// --- positive euler number: orbit-collapsed presentation ------------------

struct PositiveAssembler {
  int sign;
  std::size_t cap;
  std::map<std::pair<int, int>, bool> zero_piece;  // (level, size) -> trivial?

  bool piece_is_zero(int level, int size) {
    const auto key = std::make_pair(level, size);
    const auto it = zero_piece.find(key);
    if (it != zero_piece.end()) return it->second;
    const auto piece = orbit_projected_piece(level, size, cap);
    const bool zero = piece.free_rank == 0 && piece.torsion.empty();
    zero_piece.emplace(key, zero);
    return zero;
  }

  intlinalg::Cokernel piece(int j, int n_max) {
    const int n_lo = first_level(j);
    const auto size_at = [&](int n) { return 2 * n + j / 2; };

    // Row indexing over all levels' orbit classes.
    std::map<std::tuple<int, int, int>, std::size_t> row;
    for (int n = n_lo; n <= n_max; ++n) {
      for (auto [o, e] : orbit_classes(n, size_at(n))) {
        const std::size_t next = row.size();
        row[{n, o, e}] = next;
      }
    }

    std::vector<Column> columns;

    // Presented relations, orbit-collapsed, level by level.
    for (int n = n_lo; n <= n_max; ++n) {
      const auto classes = orbit_classes(n, size_at(n));
      const auto relations = orbit_relation_matrix(n, size_at(n));
      for (std::size_t c = 0; c < relations.cols(); ++c) {
        Column col;
        for (std::size_t r = 0; r < classes.size(); ++r) {
          const Int v = relations.at(r, c);
          if (v != 0) {
            col[row.at({n, classes[r].first, classes[r].second})] = v;
          }
        }
        if (!col.empty()) columns.push_back(std::move(col));
      }
    }

    // Dotted-cap identifications between consecutive levels.  At the top
    // level the target falls outside the window; the identification then
    // degenerates to killing the source exactly when the target piece is the
    // zero group.
    for (int n = n_lo; n <= n_max; ++n) {
      for (auto [o, e] : orbit_classes(n, size_at(n))) {
        const std::size_t source = row.at({n, o, e});
        if (n < n_max) {
          Column col;
          col[row.at({n + 1, o + 1, e + 1})] += -sign;
          col[source] += -1;
          columns.push_back(std::move(col));
        } else if (piece_is_zero(n_max + 1, size_at(n_max) + 2)) {
          Column col;
          col[source] = -1;
          columns.push_back(std::move(col));
        }
      }
    }

    // Annulus-map images from the neighbouring degree: sources carry one more
    // point than this degree's classes; their images land one level up.
    for (int n = std::max(0, first_level(j + 2) - 1); n + 1 <= n_max; ++n) {
      const int source_size = size_at(n) + 1;
      if (source_size < 0) continue;
      for (auto [o, e] : orbit_classes(n, source_size)) {
        Column col;
        col[row.at({n + 1, o, e + 1})] += sign;
        col[row.at({n + 1, o + 1, e})] += -sign;
        if (!col.empty()) columns.push_back(std::move(col));
      }
    }

    return cokernel_of_columns(row.size(), columns, cap);
  }
};

// --- negative euler number: dual lattices with coinvariance columns -------

struct NegativeAssembler {
  center::SignConvention sign;
  std::size_t cap;
  std::map<std::pair<int, int>, std::unique_ptr<center::DualLattice>> cache;

  const center::DualLattice& lattice(int n, int k) {
    const auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache
               .emplace(key,
                        std::make_unique<center::DualLattice>(n, k, cap))
               .first;
    }
    return *it->second;
  }

  intlinalg::Cokernel piece(int j, int n_max) {
    const int k = -j / 2;

    std::map<std::pair<int, std::size_t>, std::size_t> row;
    for (int n = k; n <= n_max; ++n) {
      for (std::size_t b = 0; b < lattice(n, k).rank(); ++b) {
        const std::size_t next = row.size();
        row[{n, b}] = next;
      }
    }

    std::vector<Column> columns;
    const auto add_block = [&](Column& col, int level,
                               const std::vector<Int>& coords, int scale) {
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) col[row.at({level, i})] += scale * coords[i];
      }
    };

    for (int n = k; n <= n_max; ++n) {
      const auto& ln = lattice(n, k);

      // Coinvariance under the adjacent parity-preserving transpositions.
      std::vector<std::vector<int>> perms;
      for (int i = 1; i + 1 <= n; ++i) {
        std::vector<int> odd(2 * n), even(2 * n);
        std::iota(odd.begin(), odd.end(), 1);
        std::iota(even.begin(), even.end(), 1);
        std::swap(odd[2 * i - 2], odd[2 * i]);    // points 2i-1 and 2i+1
        std::swap(even[2 * i - 1], even[2 * i + 1]);  // points 2i and 2i+2
        perms.push_back(std::move(odd));
        perms.push_back(std::move(even));
      }
      for (const auto& perm : perms) {
        for (std::size_t b = 0; b < ln.rank(); ++b) {
          const auto image =
              center::permute_monomial_vector(n, k, perm, ln.basis()[b]);
          Column col;
          add_block(col, n, ln.coordinates(image), 1);
          col[row.at({n, b})] += -1;
          std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
          if (!col.empty()) columns.push_back(std::move(col));
        }
      }

      // Dotted-cap identifications; the top-level target lattice is never
      // the zero group, so the boundary columns are simply dropped.
      if (n < n_max) {
        const auto& target = lattice(n + 1, k);
        for (std::size_t b = 0; b < ln.rank(); ++b) {
          const auto image = center::phi_dual(n, k, ln.basis()[b], sign);
          Column col;
          add_block(col, n + 1, target.coordinates(image), 1);
          col[row.at({n, b})] += -1;
          columns.push_back(std::move(col));
        }
      }
    }

    // Annulus-map images from the neighbouring degree.
    if (k >= 1) {
      for (int n = k - 1; n + 1 <= n_max; ++n) {
        const auto& source = lattice(n, k - 1);
        const auto& target = lattice(n + 1, k);
        for (std::size_t b = 0; b < source.rank(); ++b) {
          const auto image = center::psi_dual(n, k - 1, source.basis()[b], sign);
          Column col;
          add_block(col, n + 1, target.coordinates(image), 1);
          if (!col.empty()) columns.push_back(std::move(col));
        }
      }
    }

    return cokernel_of_columns(row.size(), columns, cap);
  }
};

}  // namespace

std::vector<std::pair<int, int>> orbit_classes(int n, int size) {
  std::vector<std::pair<int, int>> out;
  if (size < 0) return out;
  for (int o = 0; o <= n; ++o) {
    const int e = size - o;
    if (e >= 0 && e <= n) out.emplace_back(o, e);
  }
  return out;
}

intlinalg::IntMatrix orbit_relation_matrix(int n, int size) {
  const auto classes = orbit_classes(n, size);
  std::vector<std::pair<int, int>> smaller;
  for (int s = 0; s < size; ++s) {
    const auto layer = orbit_classes(n, s);
    smaller.insert(smaller.end(), layer.begin(), layer.end());
  }
  intlinalg::IntMatrix m(classes.size(), smaller.size());
  for (std::size_t c = 0; c < smaller.size(); ++c) {
    const auto [jo, je] = smaller[c];
    for (std::size_t r = 0; r < classes.size(); ++r) {
      const auto [o, e] = classes[r];
      const Int v = binomial(n - jo, o - jo) * binomial(n - je, e - je);
      if (v != 0) m.set(r, c, v);
    }
  }
  return m;
}

intlinalg::Cokernel orbit_projected_piece(int n, int size, std::size_t cap) {
  return intlinalg::cokernel(orbit_relation_matrix(n, size), cap);
}

intlinalg::Cokernel truncated_piece(PSign p_sign, int j, int n_max,
                                    center::SignConvention sign,
                                    std::size_t cap) {
  check_degree(j);
  if (n_max < 0) {
    throw std::invalid_argument("negative truncation level");
  }
  if (p_sign == PSign::positive) {
    PositiveAssembler a{center::stabilization_sign(sign), cap, {}};
    return a.piece(j, n_max);
  }
  NegativeAssembler a{sign, cap, {}};
  return a.piece(j, n_max);
}

FramedUnknotResult framed_unknot_module(const FramedUnknotOptions& options) {
  check_degree(options.j_min);
  if (options.n_max < 1) {
    throw std::invalid_argument("truncation level must be at least one");
  }

  FramedUnknotResult result;
  if (options.p_sign == PSign::positive) {
    PositiveAssembler a{center::stabilization_sign(options.sign), options.cap,
                        {}};
    for (int j = 0; j >= options.j_min; j -= 2) {
      const auto piece = a.piece(j, options.n_max);
      const auto previous = a.piece(j, options.n_max - 1);
      result.groups.set(0, j,
                        intlinalg::GradedPiece{piece.free_rank, piece.torsion});
      result.stable[j] = piece.free_rank == previous.free_rank;
    }
  } else {
    NegativeAssembler a{options.sign, options.cap, {}};
    for (int j = 0; j >= options.j_min; j -= 2) {
      const auto piece = a.piece(j, options.n_max);
      const auto previous = a.piece(j, options.n_max - 1);
      result.groups.set(0, j,
                        intlinalg::GradedPiece{piece.free_rank, piece.torsion});
      result.stable[j] = piece.free_rank == previous.free_rank;
    }
  }
  return result;
}

}  // namespace lasagna::colimit
