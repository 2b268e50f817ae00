#include "bia/dof.hpp"

#include <cmath>
#include <sstream>

#include "bia/combinatorics.hpp"
#include "bia/errors.hpp"

namespace bia {

Rat dof_formula(long long users, long long order) {
  if (users < 1 || order < 1 || order > users) {
    throw Error(ErrorKind::Usage, "dof_formula requires K >= 1 and 1 <= r <= K");
  }
  Int num = make_int(users) * make_int(order);
  Int den = make_int(order) * make_int(order) - make_int(order) + make_int(users);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

int optimal_r(long long users) {
  if (users < 1) throw Error(ErrorKind::Usage, "optimal_r requires K >= 1");
  // Smallest r with r(r+1) >= K, the integer form of r >= (sqrt(1+4K)-1)/2.
  long long r = static_cast<long long>((std::sqrt(1.0 + 4.0 * double(users)) - 1.0) / 2.0);
  if (r < 1) r = 1;
  while (r > 1 && (r - 1) * r >= users) --r;
  while (r * (r + 1) < users) ++r;
  return static_cast<int>(r);
}

std::vector<int> unimodality_witness(long long users) {
  if (users < 1) throw Error(ErrorKind::Usage, "unimodality_witness requires K >= 1");
  std::vector<int> signs;
  signs.reserve(users > 0 ? users - 1 : 0);
  Rat prev = dof_formula(users, 1);
  for (long long r = 1; r + 1 <= users; ++r) {
    Rat next = dof_formula(users, r + 1);
    const int c = cmp(next, prev);
    signs.push_back(c > 0 ? 1 : (c < 0 ? -1 : 0));
    prev = next;
  }
  // Single extremum: the sign sequence must be nonincreasing with at most one zero.
  int zeros = 0;
  for (size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == 0) ++zeros;
    if (i + 1 < signs.size() && signs[i + 1] > signs[i]) {
      throw Error(ErrorKind::LemmaViolation, "dof difference signs are not unimodal");
    }
  }
  if (zeros > 1) {
    throw Error(ErrorKind::LemmaViolation, "dof difference signs have more than one zero");
  }
  return signs;
}

Int b_row_slack(long long users, long long order) {
  if (users < 1 || order < 1 || order > users) {
    throw Error(ErrorKind::Usage, "b_row_slack requires K >= 1 and 1 <= r <= K");
  }
  const unsigned long k = static_cast<unsigned long>(users);
  const unsigned long r = static_cast<unsigned long>(order);
  Int n = binom_int(k - 1, r) + make_int(order) * binom_int(k - 1, r - 1);
  return n - make_int(order - 1) * make_int(users) - binom_int(k, r);
}

std::vector<AsymptoticPoint> asymptotic_check(const std::vector<long long>& users_list) {
  std::vector<AsymptoticPoint> out;
  out.reserve(users_list.size());
  for (long long k : users_list) {
    AsymptoticPoint pt;
    pt.users = k;
    pt.r_star = optimal_r(k);
    pt.d_star = dof_formula(k, pt.r_star);
    pt.ratio_to_half_sqrt_k = rat_double(pt.d_star) / (std::sqrt(double(k)) / 2.0);
    out.push_back(pt);
  }
  return out;
}

DofReport dof_report(long long users) {
  DofReport rep;
  rep.users = users;
  rep.r_star = optimal_r(users);
  rep.d_star = dof_formula(users, rep.r_star);
  rep.d_table.reserve(users);
  for (long long r = 1; r <= users; ++r) rep.d_table.push_back(dof_formula(users, r));
  rep.asymptotic_ratio = rat_double(rep.d_star) / (std::sqrt(double(users)) / 2.0);
  return rep;
}

}  // namespace bia
