#include "bia/params.hpp"

#include <sstream>

#include "bia/combinatorics.hpp"
#include "bia/dof.hpp"

namespace bia {

std::string to_string(BuildMode m) { return m == BuildMode::Tight ? "tight" : "padded"; }

BuildMode build_mode_from_string(const std::string& s) {
  if (s == "tight") return BuildMode::Tight;
  if (s == "padded") return BuildMode::Padded;
  throw Error(ErrorKind::Usage, "unknown mode '" + s + "' (expected tight|padded)");
}

SchemeParams derive_params(int users, std::optional<int> order, BuildMode mode) {
  if (users < 1) throw Error(ErrorKind::Usage, "users must be >= 1");
  const int r = order.value_or(optimal_r(users));
  if (r < 1 || r > users) {
    std::ostringstream msg;
    msg << "order " << r << " violates 1 <= r <= K with K = " << users;
    throw Error(ErrorKind::Usage, msg.str());
  }
  const auto c_subsets = binom_u64(users, r);              // C(K, r)
  const auto cols = binom_u64(users - 1, r - 1);           // C(K-1, r-1)
  const auto aligned = binom_u64(users - 1, r);            // C(K-1, r)

  SchemeParams p;
  p.users = users;
  p.order = r;
  p.mode = mode;
  p.columns_per_tx = static_cast<int>(cols);
  p.aligned_per_rx = static_cast<int>(aligned);
  p.subset_count = static_cast<long long>(c_subsets);

  const long long a_rows = static_cast<long long>(r - 1) * users;
  if (mode == BuildMode::Tight) {
    const long long n = static_cast<long long>(aligned) + static_cast<long long>(r) * cols;
    const long long b_rows = n - a_rows;
    const long long slack = b_rows - static_cast<long long>(c_subsets);
    if (slack < -1) {
      std::ostringstream msg;
      msg << "tight mode needs n - (r-1)K - C(K,r) >= -1 but "
          << n << " - " << a_rows << " - " << c_subsets << " = " << slack;
      throw Error(ErrorKind::InfeasibleParams, msg.str());
    }
    if (slack > 0) {
      // More B rows than distinct weight-(K-r) rows exist; the B block cannot
      // satisfy its distinct-rows contract, so the tight layout does not exist.
      std::ostringstream msg;
      msg << "tight mode needs n - (r-1)K <= C(K,r) but " << n << " - " << a_rows << " = "
          << b_rows << " > " << c_subsets
          << " (only C(K,r) distinct weight-(K-r) rows exist); use padded mode or a smaller order";
      throw Error(ErrorKind::InfeasibleParams, msg.str());
    }
    p.slots = static_cast<int>(n);
    p.b_rows = static_cast<int>(b_rows);
  } else {
    const long long n = a_rows + static_cast<long long>(c_subsets);
    p.slots = static_cast<int>(n);
    p.b_rows = static_cast<int>(c_subsets);
  }
  if (p.slots < 1 || p.slots > 2'000'000) {
    throw Error(ErrorKind::InfeasibleParams, "slot count out of supported range");
  }
  return p;
}

}  // namespace bia
