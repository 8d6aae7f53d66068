#include "lasagna/cabled.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace lasagna::cabled {

using intlinalg::GradedPiece;
using intlinalg::IntMatrix;

UnstableWindowError::UnstableWindowError(int required, int given)
    : std::runtime_error("truncation depth " + std::to_string(given) +
                         " is below the certified bound " +
                         std::to_string(required) +
                         "; pass allow_unstable to compute anyway"),
      required_r_max(required) {}

int CableLevel::negative_strands(std::size_t c) const {
  return r[c] - std::min(alpha[c], 0);
}

int CableLevel::positive_strands(std::size_t c) const {
  return r[c] + std::max(alpha[c], 0);
}

int class_degree(const OrbitClass& cls) {
  int w = 0;
  for (const auto& p : cls) {
    for (int x : p.d) w += x;
    for (int x : p.e) w += x;
  }
  return -2 * w;
}

namespace {

void check_level(const CableLevel& lv) {
  if (lv.N < 1) throw std::invalid_argument("rank must be >= 1");
  if (lv.alpha.empty() || lv.alpha.size() != lv.r.size())
    throw std::invalid_argument("component count mismatch");
  for (std::size_t c = 0; c < lv.components(); ++c)
    if (lv.r[c] < 0 || lv.negative_strands(c) < 0 || lv.positive_strands(c) < 0)
      throw std::invalid_argument("negative strand count");
}

// all pairs (d, e) for one component with |d|+|e| <= weight_cap, sorted
std::vector<PartitionPair> component_pairs(int N, int k_minus, int k_plus,
                                           int weight_cap) {
  std::vector<PartitionPair> out;
  if (N == 1) {
    out.push_back({});
    return out;
  }
  for (int wd = 0; wd <= weight_cap; ++wd)
    for (const auto& d : partitions::enumerate(wd, N - 1, k_minus))
      for (int we = 0; wd + we <= weight_cap; ++we)
        for (const auto& e : partitions::enumerate(we, N - 1, k_plus))
          out.push_back({d, e});
  std::sort(out.begin(), out.end());
  return out;
}

void insert_part(Partition& p, int value) {
  p.insert(std::upper_bound(p.begin(), p.end(), value, std::greater<int>()),
           value);
}

}  // namespace

std::vector<OrbitClass> level_basis(const CableLevel& lv, int min_degree) {
  check_level(lv);
  const int weight_cap = min_degree >= 0 ? 0 : (-min_degree) / 2;
  std::vector<std::vector<PartitionPair>> per_component;
  for (std::size_t c = 0; c < lv.components(); ++c)
    per_component.push_back(component_pairs(
        lv.N, lv.negative_strands(c), lv.positive_strands(c), weight_cap));

  std::vector<OrbitClass> out;
  OrbitClass current(lv.components());
  std::function<void(std::size_t, int)> rec = [&](std::size_t c, int budget) {
    if (c == lv.components()) {
      out.push_back(current);
      return;
    }
    for (const auto& pair : per_component[c]) {
      int w = 0;
      for (int x : pair.d) w += x;
      for (int x : pair.e) w += x;
      if (w > budget) continue;
      current[c] = pair;
      rec(c + 1, budget - w);
    }
  };
  rec(0, weight_cap);
  std::sort(out.begin(), out.end());
  return out;
}

GradedGroup unlink_homology(int r_minus, int r_plus, int N) {
  if (N < 1 || r_minus < 0 || r_plus < 0)
    throw std::invalid_argument("unlink_homology arguments");
  std::map<int, Int> poly{{0, Int(1)}};
  for (int f = 0; f < r_minus + r_plus; ++f) {
    std::map<int, Int> next;
    for (const auto& [deg, c] : poly)
      for (int m = 0; m < N; ++m) next[deg + 1 - N + 2 * m] += c;
    poly = std::move(next);
  }
  GradedGroup g;
  for (const auto& [deg, c] : poly)
    g.set(0, deg, GradedPiece{c.convert_to<std::size_t>(), {}});
  return g;
}

std::vector<OrbitClass> psi_image(int m, const OrbitClass& v,
                                  std::size_t component, int N) {
  if (m < 0 || m > N - 1)
    throw std::invalid_argument("strand-pair label outside [0, N-1]");
  if (component >= v.size()) throw std::invalid_argument("component index");
  std::vector<OrbitClass> out;
  for (int k = 0; k <= N - 1 - m; ++k) {
    OrbitClass w = v;
    if (N - 1 - m - k > 0) insert_part(w[component].d, N - 1 - m - k);
    if (k > 0) insert_part(w[component].e, k);
    out.push_back(std::move(w));
  }
  return out;
}

IntMatrix psi_m_map(int m, const CableLevel& source, std::size_t component) {
  check_level(source);
  if (component >= source.components())
    throw std::invalid_argument("component index");
  CableLevel target = source;
  target.r[component] += 1;

  int max_weight = 0;
  for (std::size_t c = 0; c < target.components(); ++c)
    max_weight += (target.N - 1) *
                  (target.negative_strands(c) + target.positive_strands(c));
  const int floor_degree = -2 * max_weight;

  std::vector<OrbitClass> src = level_basis(source, floor_degree);
  std::vector<OrbitClass> dst = level_basis(target, floor_degree);
  std::map<OrbitClass, std::size_t> dst_index;
  for (std::size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], i);

  IntMatrix mat(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& t : psi_image(m, src[j], component, source.N))
      mat.add(dst_index.at(t), j, 1);
  return mat;
}

GradedGroup cabled_direct(int N, int alpha, int q_max) {
  (void)alpha;  // the closed form does not depend on it
  if (N < 1 || q_max < 0) throw std::invalid_argument("cabled_direct arguments");
  GradedGroup g;
  for (int q = 0; q <= q_max; ++q) {
    Int count = N == 1 ? Int(q == 0 ? 1 : 0)
                       : partitions::count_bounded(q, N - 1);
    g.set(0, -2 * q, GradedPiece{count.convert_to<std::size_t>(), {}});
  }
  return g;
}

int required_r_max(const std::vector<int>& alpha, int q_min) {
  int max_alpha = 0;
  for (int a : alpha) max_alpha = std::max(max_alpha, std::abs(a));
  return (-q_min + 1) / 2 + max_alpha + 1;
}

GradedGroup cabled_bruteforce(int N, const std::vector<int>& alpha, int r_max,
                              int q_min, bool allow_unstable,
                              std::size_t cap) {
  if (N < 1 || alpha.empty() || r_max < 0 || q_min > 0)
    throw std::invalid_argument("cabled_bruteforce arguments");
  if (int req = required_r_max(alpha, q_min); r_max < req && !allow_unstable)
    throw UnstableWindowError(req, r_max);

  const std::size_t n = alpha.size();

  struct Generator {
    std::vector<int> level;
    OrbitClass cls;
    auto operator<=>(const Generator&) const = default;
  };

  // generators per quantum degree, in canonical (level, class) order
  std::map<int, std::map<Generator, std::size_t>> rows;
  std::vector<std::vector<int>> levels;
  {
    std::vector<int> lv(n, 0);
    for (;;) {
      levels.push_back(lv);
      std::size_t c = 0;
      while (c < n && lv[c] == r_max) lv[c++] = 0;
      if (c == n) break;
      ++lv[c];
    }
    std::sort(levels.begin(), levels.end());
  }
  for (const auto& lv : levels) {
    CableLevel cl{N, alpha, lv};
    for (const auto& cls : level_basis(cl, q_min))
      rows[class_degree(cls)].emplace(Generator{lv, cls}, 0);
  }
  for (auto& [deg, m] : rows) {
    std::size_t idx = 0;
    for (auto& [gen, i] : m) i = idx++;
  }

  std::map<int, std::vector<std::map<std::size_t, Int>>> cols;
  for (const auto& lv : levels) {
    CableLevel cl{N, alpha, lv};
    for (const auto& cls : level_basis(cl, q_min)) {
      const int sdeg = class_degree(cls);
      for (std::size_t comp = 0; comp < n; ++comp) {
        if (lv[comp] + 1 > r_max) continue;
        std::vector<int> tlv = lv;
        ++tlv[comp];
        for (int m = 0; m <= N - 1; ++m) {
          const int tdeg = sdeg - 2 * (N - 1 - m);
          if (tdeg < q_min) continue;  // relation lands below the window
          std::map<std::size_t, Int> col;
          for (const auto& t : psi_image(m, cls, comp, N))
            col[rows.at(tdeg).at(Generator{tlv, t})] += 1;
          if (m == N - 1)  // this strand-pair map identifies, others annihilate
            col[rows.at(sdeg).at(Generator{lv, cls})] -= 1;
          cols[tdeg].push_back(std::move(col));
        }
      }
    }
  }

  GradedGroup g;
  for (const auto& [deg, gens] : rows) {
    const auto it = cols.find(deg);
    const std::size_t ncols = it == cols.end() ? 0 : it->second.size();
    IntMatrix m(gens.size(), ncols);
    if (it != cols.end())
      for (std::size_t j = 0; j < ncols; ++j)
        for (const auto& [i, v] : it->second[j]) m.add(i, j, v);
    intlinalg::Cokernel ck = intlinalg::cokernel(m, cap);
    g.set(0, deg, GradedPiece{ck.free_rank, ck.torsion});
  }
  return g;
}

}  // namespace lasagna::cabled
