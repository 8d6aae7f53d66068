#include "lasagna/arcring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "lasagna/frobenius.hpp"

namespace lasagna::arcring {

namespace {

constexpr int kAlgebraSize = 2;  // rank of Z[X]/(X^2)

void check_n(int n) {
  if (n < 0 || n > 14) {
    throw std::invalid_argument("arc ring size out of range: " +
                                std::to_string(n));
  }
}

// Precomputed combinatorics for a fixed number of arcs n: the matchings and,
// for every ordered pair of matchings, the circles of their composite plus a
// point -> circle lookup.
struct Tables {
  std::vector<Matching> matchings;
  // circles[a][b][k] = sorted points of circle k of compose(a, b)
  std::vector<std::vector<std::vector<std::vector<int>>>> circles;
  // circle_of[a][b][p - 1] = index of the circle through point p
  std::vector<std::vector<std::vector<int>>> circle_of;
};

const Tables& tables(int n) {
  thread_local std::map<int, Tables> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Tables t;
  t.matchings = enumerate_matchings(n);
  const std::size_t m = t.matchings.size();
  t.circles.resize(m);
  t.circle_of.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    t.circles[a].resize(m);
    t.circle_of[a].resize(m);
    for (std::size_t b = 0; b < m; ++b) {
      auto circles = compose_circles(t.matchings[a], t.matchings[b]);
      std::vector<int> lookup(2 * n, -1);
      for (std::size_t k = 0; k < circles.size(); ++k) {
        for (int p : circles[k]) lookup[p - 1] = static_cast<int>(k);
      }
      t.circles[a][b] = std::move(circles);
      t.circle_of[a][b] = std::move(lookup);
    }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

void enumerate_rec(int lo, int hi, Matching& partial,
                   std::vector<Matching>& out) {
  if (lo > hi) {
    out.push_back(partial);
    return;
  }
  // The smallest free point must pair with a point at odd distance so that
  // both enclosed and trailing regions can be matched without crossings.
  for (int q = lo + 1; q <= hi; q += 2) {
    partial.emplace_back(lo, q);
    Matching inner;
    std::vector<Matching> inside;
    enumerate_rec(lo + 1, q - 1, inner, inside);
    for (const auto& in : inside) {
      Matching merged = partial;
      merged.insert(merged.end(), in.begin(), in.end());
      std::vector<Matching> tails;
      Matching tail;
      enumerate_rec(q + 1, hi, tail, tails);
      for (const auto& tl : tails) {
        Matching whole = merged;
        whole.insert(whole.end(), tl.begin(), tl.end());
        std::sort(whole.begin(), whole.end());
        out.push_back(std::move(whole));
      }
    }
    partial.pop_back();
  }
}

// Walks the degree-two graph whose edges alternate between `stat` and `dyn`
// partner involutions; returns the vertex sets of its cycles.
std::vector<std::vector<int>> cycles_of(const std::vector<int>& stat,
                                        const std::vector<int>& dyn) {
  const int total = static_cast<int>(stat.size());
  std::vector<char> seen(total, 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int w = start;
    bool use_static = true;
    do {
      seen[w] = 1;
      cycle.push_back(w);
      w = use_static ? stat[w] : dyn[w];
      use_static = !use_static;
    } while (w != start);
    std::sort(cycle.begin(), cycle.end());
    out.push_back(std::move(cycle));
  }
  return out;
}

int cycle_key(const std::vector<std::vector<int>>& cycles, int vertex) {
  for (const auto& c : cycles) {
    if (std::binary_search(c.begin(), c.end(), vertex)) return c.front();
  }
  throw std::logic_error("vertex missing from cycle decomposition");
}

// One partially-surgered state during a diagram product: the label (exponent
// of X) of each current cycle keyed by its smallest vertex, and the
// accumulated coefficient of this branch.
struct SurgeryState {
  std::map<int, int> label;
  Int coefficient;
};

// Product of two basis diagrams, contracting the shared middle matching's
// arcs in the given order.
Element multiply_diagrams(int n, const Diagram& x, const Diagram& y,
                          const std::vector<std::size_t>& arc_order) {
  Element out;
  if (x.b != y.a) return out;

  const Tables& t = tables(n);
  const Matching& bottom = t.matchings[x.a];
  const Matching& middle = t.matchings[x.b];
  const Matching& top = t.matchings[y.b];

  // Vertices 0..2n-1 are the lower row's points 1..2n, vertices 2n..4n-1 the
  // upper row's.  Static edges come from the outer matchings; dynamic edges
  // start as the two parallel copies of each middle arc and become vertical
  // identifications as the copies are surgered away.
  const int row = 2 * n;
  std::vector<int> stat(2 * row, -1), dyn(2 * row, -1);
  for (auto [i, j] : bottom) {
    stat[i - 1] = j - 1;
    stat[j - 1] = i - 1;
  }
  for (auto [i, j] : top) {
    stat[row + i - 1] = row + j - 1;
    stat[row + j - 1] = row + i - 1;
  }
  for (auto [i, j] : middle) {
    dyn[i - 1] = j - 1;
    dyn[j - 1] = i - 1;
    dyn[row + i - 1] = row + j - 1;
    dyn[row + j - 1] = row + i - 1;
  }

  // Initial cycles sit entirely in one row and correspond to the circles the
  // factors carry their labels on.
  auto cycles = cycles_of(stat, dyn);
  std::vector<SurgeryState> states(1);
  states[0].coefficient = 1;
  for (const auto& cycle : cycles) {
    const int key = cycle.front();
    int circle;
    unsigned labels;
    if (key < row) {
      circle = t.circle_of[x.a][x.b][key];
      labels = x.labels;
    } else {
      circle = t.circle_of[y.a][y.b][key - row];
      labels = y.labels;
    }
    states[0].label[key] = (labels >> circle) & 1u;
  }

  for (std::size_t step : arc_order) {
    auto [i, j] = middle[step];
    const int ui = i - 1, uj = j - 1;
    const int vi = row + i - 1, vj = row + j - 1;
    const int key_u = cycle_key(cycles, ui);
    const int key_v = cycle_key(cycles, vi);

    dyn[ui] = vi;
    dyn[vi] = ui;
    dyn[uj] = vj;
    dyn[vj] = uj;
    auto next = cycles_of(stat, dyn);

    std::vector<SurgeryState> merged;
    if (key_u != key_v) {
      // Two circles join: labels multiply in Z[X]/(X^2).
      if (next.size() + 1 != cycles.size()) {
        throw std::logic_error("surgery expected to merge two circles");
      }
      const int key_new = cycle_key(next, ui);
      for (auto& s : states) {
        const int lu = s.label.at(key_u);
        const int lv = s.label.at(key_v);
        auto product = frobenius::multiply(kAlgebraSize, lu, lv);
        if (!product) continue;
        SurgeryState ns = std::move(s);
        ns.label.erase(key_u);
        ns.label.erase(key_v);
        ns.label[key_new] = *product;
        merged.push_back(std::move(ns));
      }
    } else {
      // One circle splits in two: the label branches through the coproduct.
      if (next.size() != cycles.size() + 1) {
        throw std::logic_error("surgery expected to split one circle");
      }
      const int key_a = cycle_key(next, ui);
      const int key_b = cycle_key(next, uj);
      if (key_a == key_b) {
        throw std::logic_error("split surgery produced a single circle");
      }
      for (auto& s : states) {
        const int old = s.label.at(key_u);
        for (auto [la, lb] : frobenius::comultiply(kAlgebraSize, old)) {
          SurgeryState ns = s;
          ns.label.erase(key_u);
          ns.label[key_a] = la;
          ns.label[key_b] = lb;
          merged.push_back(std::move(ns));
        }
      }
    }
    states = std::move(merged);
    cycles = std::move(next);
  }

  // Every middle arc has become a pair of verticals, so the remaining cycles
  // trace exactly the circles of the bottom/top composite.
  for (const auto& s : states) {
    Diagram d{x.a, y.b, 0};
    for (const auto& [key, label] : s.label) {
      const int point = (key < row ? key : key - row) + 1;
      const int circle = t.circle_of[x.a][y.b][point - 1];
      if (label) d.labels |= 1u << circle;
    }
    out.add(d, s.coefficient);
  }
  return out;
}

std::vector<std::size_t> innermost_first(const Matching& middle) {
  std::vector<std::size_t> order(middle.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    const auto span = [&](std::size_t k) {
      return std::pair(middle[k].second - middle[k].first, middle[k].first);
    };
    return span(l) < span(r);
  });
  return order;
}

}  // namespace

std::vector<Matching> enumerate_matchings(int n) {
  check_n(n);
  std::vector<Matching> out;
  Matching partial;
  enumerate_rec(1, 2 * n, partial, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> compose_circles(const Matching& a,
                                              const Matching& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("matchings pair different point counts");
  }
  const int points = static_cast<int>(2 * a.size());
  std::vector<int> pa(points + 1, 0), pb(points + 1, 0);
  for (auto [i, j] : a) {
    pa[i] = j;
    pa[j] = i;
  }
  for (auto [i, j] : b) {
    pb[i] = j;
    pb[j] = i;
  }
  std::vector<char> seen(points + 1, 0);
  std::vector<std::vector<int>> circles;
  for (int s = 1; s <= points; ++s) {
    if (seen[s]) continue;
    std::vector<int> circle;
    int p = s;
    bool via_a = true;
    do {
      seen[p] = 1;
      circle.push_back(p);
      p = via_a ? pa[p] : pb[p];
      via_a = !via_a;
    } while (p != s);
    std::sort(circle.begin(), circle.end());
    circles.push_back(std::move(circle));
  }
  std::sort(circles.begin(), circles.end());
  return circles;
}

int diagram_degree(int n, const Diagram& d) {
  const Tables& t = tables(n);
  const int circles =
      static_cast<int>(t.circles[d.a][d.b].size());
  int dots = 0;
  for (unsigned bits = d.labels; bits; bits &= bits - 1) ++dots;
  return n - circles + 2 * dots;
}

void Element::add(const Diagram& d, const Int& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms.emplace(d, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [d, c] : other.terms) add(d, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [d, c] : other.terms) add(d, -c);
  return *this;
}

std::vector<Diagram> hn_basis(int n) {
  const Tables& t = tables(n);
  std::vector<Diagram> out;
  const int m = static_cast<int>(t.matchings.size());
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const unsigned circles =
          static_cast<unsigned>(t.circles[a][b].size());
      for (unsigned mask = 0; mask < (1u << circles); ++mask) {
        out.push_back(Diagram{a, b, mask});
      }
    }
  }
  return out;
}

Element identity(int n) {
  const Tables& t = tables(n);
  Element e;
  for (int a = 0; a < static_cast<int>(t.matchings.size()); ++a) {
    e.add(Diagram{a, a, 0}, 1);
  }
  return e;
}

Element multiply(int n, const Element& x, const Element& y) {
  const Tables& t = tables(n);
  Element out;
  for (const auto& [dx, cx] : x.terms) {
    for (const auto& [dy, cy] : y.terms) {
      if (dx.b != dy.a) continue;
      const auto order = innermost_first(t.matchings[dx.b]);
      Element part = multiply_diagrams(n, dx, dy, order);
      for (const auto& [d, c] : part.terms) out.add(d, cx * cy * c);
    }
  }
  return out;
}

Element multiply_ordered(int n, const Element& x, const Element& y,
                         const std::vector<std::size_t>& arc_order) {
  Element out;
  for (const auto& [dx, cx] : x.terms) {
    for (const auto& [dy, cy] : y.terms) {
      if (dx.b != dy.a) continue;
      Element part = multiply_diagrams(n, dx, dy, arc_order);
      for (const auto& [d, c] : part.terms) out.add(d, cx * cy * c);
    }
  }
  return out;
}

Element xi_action(int n, int point, const Element& x) {
  if (point < 1 || point > 2 * n) {
    throw std::invalid_argument("dot position out of range");
  }
  const Tables& t = tables(n);
  const Int sign = (point % 2 == 0) ? 1 : -1;
  Element out;
  for (const auto& [d, c] : x.terms) {
    const int circle = t.circle_of[d.a][d.b][point - 1];
    if ((d.labels >> circle) & 1u) continue;  // X * X = 0
    Diagram nd = d;
    nd.labels |= 1u << circle;
    out.add(nd, sign * c);
  }
  return out;
}

Element point_label_product(int n, const std::vector<int>& points) {
  Element e = identity(n);
  for (int p : points) e = xi_action(n, p, e);
  return e;
}

bool is_central(int n, const Element& x) {
  for (const Diagram& d : hn_basis(n)) {
    Element g;
    g.add(d, 1);
    Element comm = multiply(n, x, g);
    comm -= multiply(n, g, x);
    if (!comm.zero()) return false;
  }
  return true;
}

CenterResult center_bruteforce(int n, int n_cap, std::size_t cap) {
  check_n(n);
  if (n > n_cap) {
    throw std::invalid_argument("arc ring centre: n exceeds configured bound");
  }
  const auto basis = hn_basis(n);
  const auto generators = basis;  // commute against every basis diagram

  std::map<int, std::vector<std::size_t>> slices;
  for (std::size_t s = 0; s < basis.size(); ++s) {
    slices[diagram_degree(n, basis[s])].push_back(s);
  }

  CenterResult result;
  for (const auto& [degree, slice] : slices) {
    // Column s of the constraint matrix is the slice element e_s; one row per
    // (generator, output diagram) pair that appears in some commutator.
    std::map<std::pair<std::size_t, Diagram>, std::map<std::size_t, Int>> rows;
    for (std::size_t col = 0; col < slice.size(); ++col) {
      Element e;
      e.add(basis[slice[col]], 1);
      for (std::size_t g = 0; g < generators.size(); ++g) {
        Element h;
        h.add(generators[g], 1);
        Element comm = multiply(n, e, h);
        comm -= multiply(n, h, e);
        for (const auto& [d, c] : comm.terms) {
          rows[{g, d}][col] += c;
        }
      }
    }

    std::set<std::map<std::size_t, Int>> distinct;
    for (auto& [key, row] : rows) {
      std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
      if (!row.empty()) distinct.insert(row);
    }

    intlinalg::IntMatrix constraints(distinct.size(), slice.size());
    std::size_t r = 0;
    for (const auto& row : distinct) {
      for (const auto& [col, c] : row) constraints.set(r, col, c);
      ++r;
    }

    const auto kernel = intlinalg::kernel_basis(constraints, cap);
    if (kernel.empty()) continue;
    result.ranks.set(0, degree,
                     intlinalg::GradedPiece{kernel.size(), {}});
    for (const auto& vec : kernel) {
      Element z;
      for (std::size_t s = 0; s < slice.size(); ++s) {
        z.add(basis[slice[s]], vec[s]);
      }
      result.basis.push_back(std::move(z));
    }
  }
  return result;
}

}  // namespace lasagna::arcring
