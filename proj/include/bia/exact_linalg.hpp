#pragma once

#include <optional>
#include <vector>

#include "bia/rational.hpp"

namespace bia {

/// Rank of the span of the given vectors, exact over the rationals
/// (fraction-free elimination after clearing denominators).
int rank_exact(const std::vector<std::vector<Rat>>& vectors);

/// Floating rank with the documented pivot rule: a pivot counts only if its
/// magnitude exceeds rel_threshold times the largest absolute input entry.
/// Non-authoritative; use rank_exact for verdicts.
int rank_float(const std::vector<std::vector<double>>& vectors, double rel_threshold = 1e-10);

struct ExactSolve {
  bool consistent = false;         // right-hand side lies in the column span
  bool unique = false;             // columns are linearly independent
  std::vector<Rat> solution;       // defined when consistent && unique
  int column_rank = 0;
};

/// Solves sum_c z_c * columns[c] = rhs exactly.
ExactSolve solve_columns_exact(const std::vector<std::vector<Rat>>& columns,
                               const std::vector<Rat>& rhs);

/// Least-squares solve of the same system in doubles (via normal equations).
std::vector<double> solve_columns_float(const std::vector<std::vector<double>>& columns,
                                        const std::vector<double>& rhs);

}  // namespace bia
