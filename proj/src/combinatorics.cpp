#include "bia/combinatorics.hpp"

#include "bia/errors.hpp"

namespace bia {

unsigned long long binom_u64(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i);
    acc /= static_cast<unsigned __int128>(i);
    if (acc > static_cast<unsigned __int128>(~0ULL)) {
      throw Error(ErrorKind::Usage, "binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<unsigned long long>(acc);
}

Int binom_int(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::vector<std::vector<int>> subsets_lex(int K, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > K) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == K - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<int> complement_of(const std::vector<int>& subset, int K) {
  std::vector<int> out;
  out.reserve(K - subset.size());
  size_t s = 0;
  for (int i = 0; i < K; ++i) {
    if (s < subset.size() && subset[s] == i) {
      ++s;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace bia
