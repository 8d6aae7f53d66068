#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "lasagna/arcring.hpp"
#include "lasagna/intlinalg.hpp"

using lasagna::Int;
using lasagna::arcring::Diagram;
using lasagna::arcring::Element;
using lasagna::arcring::Matching;

namespace {

Element atom(int a, int b, unsigned labels) {
  Element e;
  e.add(Diagram{a, b, labels}, 1);
  return e;
}

bool arcs_cross(std::pair<int, int> x, std::pair<int, int> y) {
  return (x.first < y.first && y.first < x.second && x.second < y.second) ||
         (y.first < x.first && x.first < y.second && y.second < x.second);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Coefficient row of x with respect to the listed diagrams.
std::vector<Int> coordinates(const Element& x,
                             const std::vector<Diagram>& diagrams) {
  std::vector<Int> row(diagrams.size(), 0);
  std::map<Diagram, std::size_t> index;
  for (std::size_t i = 0; i < diagrams.size(); ++i) index[diagrams[i]] = i;
  for (const auto& [d, c] : x.terms) row[index.at(d)] = c;
  return row;
}

}  // namespace

TEST_CASE("crossingless matchings are counted by Catalan numbers") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) {
    const auto ms = lasagna::arcring::enumerate_matchings(n);
    CHECK(static_cast<int>(ms.size()) == catalan[n]);
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    for (const auto& m : ms) {
      REQUIRE(static_cast<int>(m.size()) == n);
      std::vector<char> used(2 * n + 1, 0);
      for (auto [i, j] : m) {
        CHECK(i < j);
        CHECK(!used[i]);
        CHECK(!used[j]);
        used[i] = used[j] = 1;
      }
      for (std::size_t p = 0; p < m.size(); ++p) {
        for (std::size_t q = p + 1; q < m.size(); ++q) {
          CHECK(!arcs_cross(m[p], m[q]));
        }
      }
    }
  }
}

TEST_CASE("composing matchings yields the expected circles") {
  SUBCASE("one arc against itself gives a single circle") {
    const Matching a = {{1, 2}};
    const auto circles = lasagna::arcring::compose_circles(a, a);
    REQUIRE(circles.size() == 1);
    CHECK(circles[0] == std::vector<int>{1, 2});
  }
  SUBCASE("equal matchings give one circle per arc") {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& m : lasagna::arcring::enumerate_matchings(n)) {
        CHECK(lasagna::arcring::compose_circles(m, m).size() ==
              static_cast<std::size_t>(n));
      }
    }
  }
  SUBCASE("nested against parallel arcs gives a single circle") {
    const Matching parallel = {{1, 2}, {3, 4}};
    const Matching nested = {{1, 4}, {2, 3}};
    const auto circles = lasagna::arcring::compose_circles(parallel, nested);
    REQUIRE(circles.size() == 1);
    CHECK(circles[0] == std::vector<int>{1, 2, 3, 4});
  }
  SUBCASE("every point lies on exactly one circle") {
    const auto ms = lasagna::arcring::enumerate_matchings(3);
    for (const auto& a : ms) {
      for (const auto& b : ms) {
        std::vector<int> all;
        for (const auto& c : lasagna::arcring::compose_circles(a, b)) {
          all.insert(all.end(), c.begin(), c.end());
        }
        std::sort(all.begin(), all.end());
        CHECK(all == std::vector<int>{1, 2, 3, 4, 5, 6});
      }
    }
  }
}

TEST_CASE("basis sizes and degrees") {
  CHECK(lasagna::arcring::hn_basis(0).size() == 1);
  CHECK(lasagna::arcring::hn_basis(1).size() == 2);
  CHECK(lasagna::arcring::hn_basis(2).size() == 12);

  // One strand pair: the ring is Z[X]/(X^2) in degrees 0 and 2.
  CHECK(lasagna::arcring::diagram_degree(1, Diagram{0, 0, 0}) == 0);
  CHECK(lasagna::arcring::diagram_degree(1, Diagram{0, 0, 1}) == 2);

  // Diagram degrees run from n - circles to n + circles; only the diagonal
  // components (and the centre) are forced into even degrees.
  for (int n = 0; n <= 3; ++n) {
    for (const auto& d : lasagna::arcring::hn_basis(n)) {
      const int deg = lasagna::arcring::diagram_degree(n, d);
      CHECK(deg >= 0);
      CHECK(deg <= 2 * n);
      if (d.a == d.b) CHECK(deg % 2 == 0);
    }
  }
}

TEST_CASE("products of one-arc diagrams follow Z[X]/(X^2)") {
  const Element one = atom(0, 0, 0);
  const Element x = atom(0, 0, 1);
  CHECK(lasagna::arcring::multiply(1, one, one) == one);
  CHECK(lasagna::arcring::multiply(1, one, x) == x);
  CHECK(lasagna::arcring::multiply(1, x, one) == x);
  CHECK(lasagna::arcring::multiply(1, x, x).zero());
}

TEST_CASE("mismatched middle matchings multiply to zero") {
  // (a, b) * (a', c) with b != a' has no composable terms.
  CHECK(lasagna::arcring::multiply(2, atom(0, 0, 0), atom(1, 1, 0)).zero());
  CHECK(lasagna::arcring::multiply(2, atom(0, 1, 0), atom(0, 1, 0)).zero());
}

TEST_CASE("a merge followed by a split produces the coproduct terms") {
  // Matching 0 is the parallel pair {(1,2),(3,4)}, matching 1 the nested pair
  // {(1,4),(2,3)}.  Going a -> b -> a merges the two unlabelled circles and
  // then splits them again, leaving 1 (x) X + X (x) 1 on the two circles.
  Element expect;
  expect.add(Diagram{0, 0, 1u << 0}, 1);
  expect.add(Diagram{0, 0, 1u << 1}, 1);
  CHECK(lasagna::arcring::multiply(2, atom(0, 1, 0), atom(1, 0, 0)) == expect);

  Element expect_rev;
  expect_rev.add(Diagram{1, 1, 1u << 0}, 1);
  expect_rev.add(Diagram{1, 1, 1u << 1}, 1);
  CHECK(lasagna::arcring::multiply(2, atom(1, 0, 0), atom(0, 1, 0)) ==
        expect_rev);

  // With an X already on the through circle the split has a single branch.
  Element expect_x;
  expect_x.add(Diagram{0, 0, 3u}, 1);
  CHECK(lasagna::arcring::multiply(2, atom(0, 1, 1), atom(1, 0, 0)) ==
        expect_x);
}

TEST_CASE("products are homogeneous of additive degree") {
  for (int n = 1; n <= 2; ++n) {
    const auto basis = lasagna::arcring::hn_basis(n);
    for (const auto& dx : basis) {
      for (const auto& dy : basis) {
        if (dx.b != dy.a) continue;
        const Element p = lasagna::arcring::multiply(
            n, atom(dx.a, dx.b, dx.labels), atom(dy.a, dy.b, dy.labels));
        const int want = lasagna::arcring::diagram_degree(n, dx) +
                         lasagna::arcring::diagram_degree(n, dy);
        for (const auto& [d, c] : p.terms) {
          CHECK(lasagna::arcring::diagram_degree(n, d) == want);
        }
      }
    }
  }
}

TEST_CASE("multiplication is associative") {
  SUBCASE("exhaustively for up to two arcs") {
    for (int n = 1; n <= 2; ++n) {
      const auto basis = lasagna::arcring::hn_basis(n);
      for (const auto& dx : basis) {
        for (const auto& dy : basis) {
          for (const auto& dz : basis) {
            const Element x = atom(dx.a, dx.b, dx.labels);
            const Element y = atom(dy.a, dy.b, dy.labels);
            const Element z = atom(dz.a, dz.b, dz.labels);
            Element left = lasagna::arcring::multiply(
                n, lasagna::arcring::multiply(n, x, y), z);
            Element right = lasagna::arcring::multiply(
                n, x, lasagna::arcring::multiply(n, y, z));
            REQUIRE(left == right);
          }
        }
      }
    }
  }
  SUBCASE("on random composable triples with three arcs") {
    const int n = 3;
    const auto ms = lasagna::arcring::enumerate_matchings(n);
    const auto circles = [&](int a, int b) {
      return lasagna::arcring::compose_circles(ms[a], ms[b]).size();
    };
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> pick(0,
                                            static_cast<int>(ms.size()) - 1);
    for (int trial = 0; trial < 10000; ++trial) {
      const int a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
      std::uniform_int_distribution<unsigned> m1(
          0, (1u << circles(a, b)) - 1),
          m2(0, (1u << circles(b, c)) - 1), m3(0, (1u << circles(c, d)) - 1);
      const Element x = atom(a, b, m1(rng));
      const Element y = atom(b, c, m2(rng));
      const Element z = atom(c, d, m3(rng));
      Element left =
          lasagna::arcring::multiply(n, lasagna::arcring::multiply(n, x, y), z);
      Element right =
          lasagna::arcring::multiply(n, x, lasagna::arcring::multiply(n, y, z));
      REQUIRE(left == right);
    }
  }
}

TEST_CASE("the sum of diagonal diagrams is a two-sided identity") {
  for (int n = 0; n <= 3; ++n) {
    const Element e = lasagna::arcring::identity(n);
    for (const auto& d : lasagna::arcring::hn_basis(n)) {
      const Element x = atom(d.a, d.b, d.labels);
      CHECK(lasagna::arcring::multiply(n, e, x) == x);
      CHECK(lasagna::arcring::multiply(n, x, e) == x);
    }
  }
}

TEST_CASE("the contraction order of middle arcs does not matter") {
  for (int n = 2; n <= 3; ++n) {
    const auto basis = lasagna::arcring::hn_basis(n);
    std::vector<std::size_t> order(n);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 200; ++trial) {
      const Diagram dx = basis[pick(rng)];
      const Diagram dy = basis[pick(rng)];
      if (dx.b != dy.a) continue;
      ++checked;
      const Element x = atom(dx.a, dx.b, dx.labels);
      const Element y = atom(dy.a, dy.b, dy.labels);
      const Element reference = lasagna::arcring::multiply(n, x, y);
      std::iota(order.begin(), order.end(), std::size_t{0});
      do {
        REQUIRE(lasagna::arcring::multiply_ordered(n, x, y, order) ==
                reference);
      } while (std::next_permutation(order.begin(), order.end()));
    }
    REQUIRE(checked == 200);
  }
}

TEST_CASE("dot actions square to zero, commute, and are central") {
  for (int n = 1; n <= 3; ++n) {
    const Element e = lasagna::arcring::identity(n);
    for (int i = 1; i <= 2 * n; ++i) {
      const Element xi = lasagna::arcring::xi_action(n, i, e);
      CHECK(lasagna::arcring::xi_action(n, i, xi).zero());
      CHECK(lasagna::arcring::is_central(n, xi));
      for (int j = i + 1; j <= 2 * n; ++j) {
        CHECK(lasagna::arcring::xi_action(n, j, xi) ==
              lasagna::arcring::xi_action(
                  n, i, lasagna::arcring::xi_action(n, j, e)));
      }
    }
  }
}

TEST_CASE("dot action signs alternate with the boundary point") {
  // On one arc the circle through both points is the same, so the two dot
  // elements differ exactly by the sign convention: -1 at odd points, +1 at
  // even ones.
  const Element e = lasagna::arcring::identity(1);
  Element minus_x;
  minus_x.add(Diagram{0, 0, 1}, -1);
  Element plus_x;
  plus_x.add(Diagram{0, 0, 1}, 1);
  CHECK(lasagna::arcring::xi_action(1, 1, e) == minus_x);
  CHECK(lasagna::arcring::xi_action(1, 2, e) == plus_x);
}

TEST_CASE("relation sums of dot monomials vanish") {
  // For every subset J the sum over i of the monomials J + {i} is zero.
  for (int n = 1; n <= 3; ++n) {
    const int points = 2 * n;
    for (unsigned jmask = 0; jmask < (1u << points); ++jmask) {
      int size = 0;
      for (unsigned b = jmask; b; b &= b - 1) ++size;
      if (size > n - 1) continue;
      Element sum;
      for (int i = 1; i <= points; ++i) {
        if ((jmask >> (i - 1)) & 1u) continue;
        std::vector<int> pts;
        for (int p = 1; p <= points; ++p) {
          if (((jmask >> (p - 1)) & 1u) || p == i) pts.push_back(p);
        }
        sum += lasagna::arcring::point_label_product(n, pts);
      }
      CHECK(sum.zero());
    }
  }
}

TEST_CASE("brute-force centre has the predicted ranks") {
  using lasagna::intlinalg::GradedPiece;

  SUBCASE("no arcs: the ring is the integers") {
    const auto c = lasagna::arcring::center_bruteforce(0);
    REQUIRE(c.ranks.pieces.size() == 1);
    CHECK(c.ranks.free_rank_at(0, 0) == 1);
  }
  SUBCASE("one arc: the whole commutative ring") {
    const auto c = lasagna::arcring::center_bruteforce(1);
    CHECK(c.ranks.free_rank_at(0, 0) == 1);
    CHECK(c.ranks.free_rank_at(0, 2) == 1);
    CHECK(c.ranks.pieces.size() == 2);
  }
  SUBCASE("two arcs") {
    const auto c = lasagna::arcring::center_bruteforce(2);
    CHECK(c.ranks.free_rank_at(0, 0) == 1);
    CHECK(c.ranks.free_rank_at(0, 2) == 3);
    CHECK(c.ranks.free_rank_at(0, 4) == 2);
    CHECK(c.ranks.pieces.size() == 3);
  }
  SUBCASE("three arcs: binomial differences, zero beyond degree 2n") {
    const auto c = lasagna::arcring::center_bruteforce(3);
    for (int k = 0; k <= 3; ++k) {
      CHECK(c.ranks.free_rank_at(0, 2 * k) ==
            binomial(6, k) - binomial(6, k - 1));
    }
    CHECK(c.ranks.pieces.size() == 4);
    // Every reported basis element really is central.
    for (const auto& z : c.basis) {
      CHECK(lasagna::arcring::is_central(3, z));
    }
  }
  SUBCASE("the configured bound is enforced") {
    CHECK_THROWS_AS(lasagna::arcring::center_bruteforce(3, 2),
                    std::invalid_argument);
  }
}

TEST_CASE("dot monomials span the centre rationally") {
  for (int n = 1; n <= 3; ++n) {
    const auto centre = lasagna::arcring::center_bruteforce(n);
    const auto basis = lasagna::arcring::hn_basis(n);
    for (int k = 0; k <= n; ++k) {
      // Slice basis in degree 2k.
      std::vector<Diagram> slice;
      for (const auto& d : basis) {
        if (lasagna::arcring::diagram_degree(n, d) == 2 * k) {
          slice.push_back(d);
        }
      }
      // Rows: coordinates of every dot monomial of size k.
      std::vector<std::vector<Int>> rows;
      std::vector<int> points;
      const int total = 2 * n;
      for (unsigned mask = 0; mask < (1u << total); ++mask) {
        int size = 0;
        for (unsigned b = mask; b; b &= b - 1) ++size;
        if (size != k) continue;
        points.clear();
        for (int p = 1; p <= total; ++p) {
          if ((mask >> (p - 1)) & 1u) points.push_back(p);
        }
        rows.push_back(coordinates(
            lasagna::arcring::point_label_product(n, points), slice));
      }
      lasagna::intlinalg::IntMatrix span(rows.size(), slice.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < slice.size(); ++c) {
          if (rows[r][c] != 0) span.set(r, c, rows[r][c]);
        }
      }
      CHECK(lasagna::intlinalg::rank(span) ==
            static_cast<std::size_t>(centre.ranks.free_rank_at(0, 2 * k)));
    }
  }
}
