#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lasagna/partitions.hpp"

#include <algorithm>

using namespace lasagna;
using namespace lasagna::partitions;

TEST_CASE("pinned enumerations") {
  CHECK(enumerate(0, 3) == std::vector<Partition>{{}});
  CHECK(enumerate(3, 2) == std::vector<Partition>{{2, 1}, {1, 1, 1}});
  CHECK(enumerate(4, 2, 2) == std::vector<Partition>{{2, 2}});
  CHECK(enumerate(2, 1, 1).empty());
}

TEST_CASE("pinned counts") {
  for (int q = 0; q <= 10; ++q) CHECK(count_bounded(q, 1) == 1);
  CHECK(count_bounded(5, 2) == 3);
  CHECK(count_bounded(4, 2) == 3);
  CHECK(count_bounded(6, 5) == 10);
}

TEST_CASE("a zero part bound admits only the empty partition") {
  CHECK(enumerate(0, 0) == std::vector<Partition>{{}});
  CHECK(enumerate(3, 0).empty());
  CHECK(count_bounded(0, 0) == 1);
  CHECK(count_bounded(7, 0) == 0);
  CHECK(series_coefficients(0, 4) ==
        std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(0)});
}

TEST_CASE("enumeration output is canonical") {
  for (int max_part = 1; max_part <= 4; ++max_part) {
    for (int q = 0; q <= 12; ++q) {
      auto parts = enumerate(q, max_part);
      // weakly decreasing parts within bounds, whole list strictly
      // lexicographically decreasing, no duplicates
      for (const auto& p : parts) {
        int total = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
          CHECK(p[i] >= 1);
          CHECK(p[i] <= max_part);
          if (i) CHECK(p[i] <= p[i - 1]);
          total += p[i];
        }
        CHECK(total == q);
      }
      for (std::size_t i = 1; i < parts.size(); ++i)
        CHECK(std::lexicographical_compare(parts[i].begin(), parts[i].end(),
                                           parts[i - 1].begin(),
                                           parts[i - 1].end()));
    }
  }
}

TEST_CASE("part-count bound filters the unbounded list") {
  for (int q = 0; q <= 10; ++q)
    for (int max_parts = 0; max_parts <= 5; ++max_parts) {
      auto bounded = enumerate(q, 3, max_parts);
      auto all = enumerate(q, 3);
      std::vector<Partition> expected;
      for (const auto& p : all)
        if (static_cast<int>(p.size()) <= max_parts) expected.push_back(p);
      CHECK(bounded == expected);
    }
}

TEST_CASE("count, series and enumeration agree") {
  for (int max_part = 1; max_part <= 5; ++max_part) {
    auto series = series_coefficients(max_part, 30);
    for (int q = 0; q <= 30; ++q) {
      CHECK(count_bounded(q, max_part) == series[q]);
      if (q <= 18)
        CHECK(count_bounded(q, max_part) ==
              Int(enumerate(q, max_part).size()));
    }
  }
}
