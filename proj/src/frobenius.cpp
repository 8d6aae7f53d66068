#include "lasagna/frobenius.hpp"

#include <stdexcept>

namespace lasagna::frobenius {

namespace {
void check_exponent(int N, int m) {
  if (N < 1 || m < 0 || m > N - 1)
    throw std::invalid_argument("exponent outside [0, N-1]");
}
}  // namespace

int quantum_degree(int N, int m) {
  check_exponent(N, m);
  return 1 - N + 2 * m;
}

std::optional<int> multiply(int N, int a, int b) {
  check_exponent(N, a);
  check_exponent(N, b);
  if (a + b > N - 1) return std::nullopt;
  return a + b;
}

std::vector<std::pair<int, int>> comultiply(int N, int m) {
  check_exponent(N, m);
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k <= N - 1 - m; ++k) out.emplace_back(m + k, N - 1 - k);
  return out;
}

int counit(int N, int m) {
  check_exponent(N, m);
  return m == N - 1 ? 1 : 0;
}

int dual_index(int N, int m) {
  check_exponent(N, m);
  return N - 1 - m;
}

void Tensor::add(const std::vector<int>& key, const Int& coeff) {
  if (key.size() != arity) throw std::invalid_argument("tensor arity");
  auto it = terms.find(key);
  if (it == terms.end()) {
    if (coeff != 0) terms.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

Tensor pure_tensor(const std::vector<int>& exponents) {
  Tensor t;
  t.arity = exponents.size();
  t.terms.emplace(exponents, Int(1));
  return t;
}

Tensor merge_at(int N, const Tensor& t, std::size_t pos) {
  if (pos + 1 >= t.arity) throw std::invalid_argument("merge position");
  Tensor out;
  out.arity = t.arity - 1;
  for (const auto& [key, coeff] : t.terms) {
    auto prod = multiply(N, key[pos], key[pos + 1]);
    if (!prod) continue;
    std::vector<int> merged(key);
    merged[pos] = *prod;
    merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
    out.add(merged, coeff);
  }
  return out;
}

Tensor split_at(int N, const Tensor& t, std::size_t pos) {
  if (pos >= t.arity) throw std::invalid_argument("split position");
  Tensor out;
  out.arity = t.arity + 1;
  for (const auto& [key, coeff] : t.terms) {
    for (const auto& [left, right] : comultiply(N, key[pos])) {
      std::vector<int> split(key);
      split[pos] = left;
      split.insert(split.begin() + static_cast<std::ptrdiff_t>(pos) + 1, right);
      out.add(split, coeff);
    }
  }
  return out;
}

Tensor counit_at(int N, const Tensor& t, std::size_t pos) {
  if (pos >= t.arity) throw std::invalid_argument("counit position");
  Tensor out;
  out.arity = t.arity - 1;
  for (const auto& [key, coeff] : t.terms) {
    if (counit(N, key[pos]) == 0) continue;
    std::vector<int> rest(key);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
    out.add(rest, coeff);
  }
  return out;
}

}  // namespace lasagna::frobenius
