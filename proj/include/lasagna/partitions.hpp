#pragma once

#include "lasagna/intlinalg.hpp"

#include <vector>

namespace lasagna::partitions {

// Weakly decreasing positive parts; the empty partition is {}.
using Partition = std::vector<int>;

// All partitions of q with parts in [1, max_part] and at most max_parts
// parts (max_parts < 0: unbounded), in lexicographically decreasing order.
// max_part == 0 is allowed: only the empty partition of zero qualifies.
std::vector<Partition> enumerate(int q, int max_part, int max_parts = -1);

// Number of partitions of q with parts in [1, max_part], by recursion on the
// largest part.
Int count_bounded(int q, int max_part);

// Coefficients 0..degree of prod_{k=1}^{max_part} (1 - x^k)^(-1), computed by
// truncated convolution against each geometric factor. Independent of
// count_bounded by construction; the two must agree.
std::vector<Int> series_coefficients(int max_part, int degree);

}  // namespace lasagna::partitions
