#pragma once

#include <vector>

#include "bia/rational.hpp"

namespace bia {

/// d(K, r) = K*r / (r^2 - r + K), exact.
Rat dof_formula(long long users, long long order);

/// Smallest r >= 1 with d(r+1) - d(r) <= 0, i.e. the smallest integer r with
/// r(r+1) >= K. Integer arithmetic only; never evaluates a floating ceil.
int optimal_r(long long users);

/// sign(d(r+1) - d(r)) for r = 1..K-1 as -1/0/+1. Throws Error(LemmaViolation)
/// if the sequence is not nonnegative-then-nonpositive with at most one zero.
std::vector<int> unimodality_witness(long long users);

/// n - (r-1)K - C(K, r) with n = C(K-1, r) + r*C(K-1, r-1), exact.
/// Positive slack means more B rows would be needed than distinct
/// weight-(K-r) rows exist; tight construction requires slack in {-1, 0}.
Int b_row_slack(long long users, long long order);

struct AsymptoticPoint {
  long long users;
  int r_star;
  Rat d_star;
  double ratio_to_half_sqrt_k;  // d* / (sqrt(K)/2)
};

/// d(r*)/(sqrt(K)/2) per K.
std::vector<AsymptoticPoint> asymptotic_check(const std::vector<long long>& users_list);

struct DofReport {
  long long users;
  int r_star;
  Rat d_star;
  std::vector<Rat> d_table;  // index r-1 -> d(K, r), r = 1..K
  double asymptotic_ratio;
};

/// Full exact table; intended for moderate K (the table has K entries).
DofReport dof_report(long long users);

}  // namespace bia
