#include "lasagna/partitions.hpp"

#include <map>
#include <stdexcept>

namespace lasagna::partitions {

namespace {

void enumerate_into(int q, int max_part, int max_parts, Partition& prefix,
                    std::vector<Partition>& out) {
  if (q == 0) {
    out.push_back(prefix);
    return;
  }
  if (max_parts == 0) return;
  for (int p = std::min(max_part, q); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_into(q - p, p, max_parts < 0 ? -1 : max_parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int q, int max_part, int max_parts) {
  if (q < 0 || max_part < 0) throw std::invalid_argument("enumerate bounds");
  std::vector<Partition> out;
  Partition prefix;
  enumerate_into(q, max_part, max_parts, prefix, out);
  return out;
}

Int count_bounded(int q, int max_part) {
  if (q < 0 || max_part < 0) throw std::invalid_argument("count bounds");
  static thread_local std::map<std::pair<int, int>, Int> memo;
  auto rec = [](auto&& self, int n, int m) -> Int {
    if (n == 0) return 1;
    if (m == 0) return 0;
    auto it = memo.find({n, m});
    if (it != memo.end()) return it->second;
    Int total = self(self, n, m - 1);           // no part equal to m
    if (n >= m) total += self(self, n - m, m);  // at least one part equal to m
    memo.emplace(std::make_pair(n, m), total);
    return total;
  };
  return rec(rec, q, max_part);
}

std::vector<Int> series_coefficients(int max_part, int degree) {
  if (degree < 0 || max_part < 0) throw std::invalid_argument("series bounds");
  std::vector<Int> acc(degree + 1, Int(0));
  acc[0] = 1;
  for (int k = 1; k <= max_part; ++k) {
    // truncated geometric series 1 + x^k + x^2k + ...
    std::vector<Int> factor(degree + 1, Int(0));
    for (int e = 0; e <= degree; e += k) factor[e] = 1;
    std::vector<Int> next(degree + 1, Int(0));
    for (int i = 0; i <= degree; ++i) {
      if (acc[i] == 0) continue;
      for (int j = 0; i + j <= degree; ++j)
        if (factor[j] != 0) next[i + j] += acc[i];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace lasagna::partitions
