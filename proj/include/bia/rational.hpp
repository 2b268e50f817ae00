#pragma once

#include <gmpxx.h>

#include <string>

namespace bia {

/// Exact rational scalar used for all verification arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(long long num, long long den = 1) {
  Rat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline std::string rat_string(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace bia
