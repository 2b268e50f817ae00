#pragma once

#include <cstdint>
#include <vector>

#include "bia/rational.hpp"

namespace bia {

/// C(n, k) as a checked 64-bit value; throws Error(Usage) on overflow.
unsigned long long binom_u64(long long n, long long k);

/// C(n, k) in arbitrary precision.
Int binom_int(unsigned long n, unsigned long k);

/// All k-subsets of {0, ..., K-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int K, int k);

/// {0, ..., K-1} minus a sorted subset.
std::vector<int> complement_of(const std::vector<int>& subset, int K);

}  // namespace bia
