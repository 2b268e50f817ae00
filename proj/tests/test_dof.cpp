#include <doctest.h>

#include <cmath>

#include "bia/combinatorics.hpp"
#include "bia/dof.hpp"
#include "bia/errors.hpp"

using namespace bia;

namespace {

// Brute-force oracle: scan every r and keep the first maximizer.
int argmax_r_oracle(long long K) {
  int best_r = 1;
  Rat best = dof_formula(K, 1);
  for (long long r = 2; r <= K; ++r) {
    Rat d = dof_formula(K, r);
    if (d > best) {
      best = d;
      best_r = static_cast<int>(r);
    }
  }
  return best_r;
}

Int slack_oracle(long long K, long long r) {
  const unsigned long k = static_cast<unsigned long>(K);
  const unsigned long rr = static_cast<unsigned long>(r);
  Int n = binom_int(k - 1, rr) + make_int(r) * binom_int(k - 1, rr - 1);
  return n - make_int(r - 1) * make_int(K) - binom_int(k, rr);
}

}  // namespace

TEST_CASE("dof formula fixed values") {
  CHECK(dof_formula(5, 2) == make_rat(10, 7));
  CHECK(dof_formula(3, 2) == make_rat(6, 5));
  CHECK(dof_formula(4, 2) == make_rat(4, 3));
  CHECK(dof_formula(7, 3) == make_rat(21, 13));
  for (long long k : {1, 2, 3, 5, 9, 17, 100}) {
    CHECK(dof_formula(k, k) == make_rat(1));
  }
  CHECK_THROWS_AS(dof_formula(4, 5), Error);
  CHECK_THROWS_AS(dof_formula(0, 1), Error);
}

TEST_CASE("optimal r fixed values and oracle agreement") {
  CHECK(optimal_r(1) == 1);
  CHECK(optimal_r(2) == 1);
  CHECK(optimal_r(5) == 2);
  CHECK(optimal_r(6) == 2);  // 1+4K a perfect square; no ceiling misfire
  CHECK(optimal_r(7) == 3);

  for (long long K = 1; K <= 300; ++K) {
    CHECK(optimal_r(K) == argmax_r_oracle(K));
  }
  // Spot-check ladder for large K: the defining inequality r(r+1) >= K holds
  // at r* and fails at r*-1.
  for (long long K : {1000LL, 10000LL, 250000LL, 1000000LL}) {
    const long long r = optimal_r(K);
    CHECK(r * (r + 1) >= K);
    if (r > 1) CHECK((r - 1) * r < K);
  }
}

TEST_CASE("argmax over exact table agrees on a doubling ladder") {
  for (long long K = 1; K <= (1 << 20); K *= 2) {
    const int r = optimal_r(K);
    const Rat d = dof_formula(K, r);
    if (r > 1) CHECK(d >= dof_formula(K, r - 1));
    if (r < K) CHECK(d >= dof_formula(K, r + 1));
  }
}

TEST_CASE("unimodality witness") {
  CHECK(unimodality_witness(1).empty());
  CHECK(unimodality_witness(4) == std::vector<int>{1, -1, -1});
  SUBCASE("zero difference sits at the peak for K = r(r+1)") {
    const auto signs = unimodality_witness(6);
    CHECK(signs == std::vector<int>{1, 0, -1, -1, -1});
  }
  SUBCASE("K = 25 changes sign at r = 5") {
    const auto signs = unimodality_witness(25);
    for (int r = 1; r <= 4; ++r) CHECK(signs[r - 1] == 1);
    CHECK(signs[4] == -1);  // d(6) < d(5)
  }
  SUBCASE("sequence is nonnegative then nonpositive for many K") {
    for (long long K = 1; K <= 120; ++K) CHECK_NOTHROW(unimodality_witness(K));
  }
}

TEST_CASE("b-row slack fixed values") {
  for (long long K : {3, 4, 5, 6}) CHECK(b_row_slack(K, 2) == Int(-1));
  CHECK(b_row_slack(7, 3) == Int(16));
  CHECK(b_row_slack(1, 1) == Int(0));
  CHECK(b_row_slack(4, 3) == Int(-2));
}

TEST_CASE("formula suite brute force over K = 1..1000") {
  for (long long K = 1; K <= 1000; ++K) {
    const int r_star = optimal_r(K);
    Rat best(-1);
    long long best_r = 0;
    for (long long r = 1; r <= K; ++r) {
      // dof oracle recomputed from scratch
      Rat d(make_int(K) * make_int(r), make_int(r) * make_int(r) - make_int(r) + make_int(K));
      d.canonicalize();
      CHECK(d == dof_formula(K, r));
      if (d > best) {
        best = d;
        best_r = r;
      }
    }
    CHECK(best_r == r_star);
    CHECK(b_row_slack(K, r_star) == slack_oracle(K, r_star));
    CHECK(b_row_slack(K, r_star) >= Int(-1));
  }
}

TEST_CASE("asymptotic ratio table") {
  const auto pts = asymptotic_check({1, 10, 100, 1000, 10000});
  CHECK(pts[0].ratio_to_half_sqrt_k == doctest::Approx(2.0));
  for (size_t i = 2; i < pts.size(); ++i) {
    CHECK(pts[i].ratio_to_half_sqrt_k < pts[i - 1].ratio_to_half_sqrt_k);
  }
  CHECK(pts.back().ratio_to_half_sqrt_k == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("dof report table") {
  const auto rep = dof_report(5);
  CHECK(rep.r_star == 2);
  CHECK(rep.d_star == make_rat(10, 7));
  REQUIRE(rep.d_table.size() == 5);
  CHECK(rep.d_table[0] == make_rat(1));
  CHECK(rep.d_table[1] == make_rat(10, 7));
  CHECK(rep.d_table[4] == make_rat(1));
}

TEST_CASE("bound matches construction rate identity") {
  // K * C(K-1, r-1) / n == d(K, r) whenever n = C(K-1,r) + r*C(K-1,r-1).
  for (long long K = 1; K <= 40; ++K) {
    for (long long r = 1; r <= K; ++r) {
      const Int cols = binom_int(K - 1, r - 1);
      const Int n = binom_int(K - 1, r) + make_int(r) * cols;
      Rat lhs(make_int(K) * cols, n);
      lhs.canonicalize();
      CHECK(lhs == dof_formula(K, r));
    }
  }
}
