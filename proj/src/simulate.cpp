#include "bia/simulate.hpp"

#include <Eigen/Dense>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "bia/exact_linalg.hpp"
#include "bia/rng.hpp"

namespace bia {

namespace {

int worker_count(size_t tasks) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("BIA_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = static_cast<unsigned>(v);
  }
  return static_cast<int>(std::min<size_t>(n, std::max<size_t>(tasks, 1)));
}

/// Runs fn(0..count-1) on a small pool; results must be written to
/// index-addressed slots so the reduction order never depends on scheduling.
template <typename Fn>
void parallel_for_indexed(size_t count, Fn fn) {
  const int workers = worker_count(count);
  if (workers <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<int> interference_column_index(const PrecoderSet& pre, int rx) {
  // Flattened (tx, column) pairs mirroring interference_columns_exact.
  std::vector<int> pairs;  // encoded tx * columns_per_tx + col
  for (const auto& entry : pre.shared) {
    bool member = false;
    for (int m : entry.subset) member |= (m == rx);
    if (member) {
      for (size_t i = 0; i < entry.subset.size(); ++i) {
        if (entry.subset[i] != rx) {
          pairs.push_back(entry.subset[i] * pre.columns_per_tx + entry.column_in_tx[i]);
        }
      }
    } else {
      pairs.push_back(entry.subset[0] * pre.columns_per_tx + entry.column_in_tx[0]);
    }
  }
  return pairs;
}

double per_tx_symbol_power(const PrecoderSet& pre, int tx, double snr_linear, int slots) {
  long long weight = 0;
  for (int d = 0; d < pre.columns_per_tx; ++d) {
    for (int j = 0; j < pre.tx[tx].rows(); ++j) weight += pre.tx[tx](j, d);
  }
  if (weight == 0) return 0.0;
  // Equal power per symbol; per-transmitter average power over the block = SNR.
  return snr_linear * static_cast<double>(slots) / static_cast<double>(weight);
}

}  // namespace

std::vector<Rat> zero_force_decode(const std::vector<Rat>& observation, int rx,
                                   const VerifyContext& ctx) {
  if (static_cast<int>(observation.size()) != ctx.params.slots) {
    throw Error(ErrorKind::DimensionMismatch, "observation length != slot count");
  }
  auto columns = desired_columns_exact(ctx, rx);
  const int desired = static_cast<int>(columns.size());
  auto interference = interference_columns_exact(ctx, rx);
  columns.insert(columns.end(), interference.begin(), interference.end());
  const auto solved = solve_columns_exact(columns, observation);
  if (!solved.consistent) {
    throw Error(ErrorKind::Decodability, "observation outside the modeled signal span");
  }
  if (!solved.unique) {
    std::ostringstream msg;
    msg << "desired space polluted by interference at receiver " << rx + 1 << " (stack rank "
        << solved.column_rank << " < " << columns.size() << " columns)";
    throw Error(ErrorKind::Decodability, msg.str());
  }
  return std::vector<Rat>(solved.solution.begin(), solved.solution.begin() + desired);
}

std::vector<double> zero_force_decode_float(const std::vector<double>& observation, int rx,
                                            const ReceivedBasisT<double>& rb,
                                            const PrecoderSet& pre) {
  std::vector<std::vector<double>> columns;
  for (int d = 0; d < rb.columns_per_tx; ++d) columns.push_back(rb.img[rx][rx][d]);
  const int desired = static_cast<int>(columns.size());
  for (int enc : interference_column_index(pre, rx)) {
    columns.push_back(rb.img[rx][enc / pre.columns_per_tx][enc % pre.columns_per_tx]);
  }
  auto z = solve_columns_float(columns, observation);
  z.resize(desired);
  return z;
}

RateCurve simulate_rates(const SimulationConfig& config) {
  if (config.snr_db.empty() && !config.noiseless_guard) {
    throw Error(ErrorKind::Usage, "snr list must be nonempty");
  }
  for (size_t i = 1; i < config.snr_db.size(); ++i) {
    if (config.snr_db[i] <= config.snr_db[i - 1]) {
      throw Error(ErrorKind::Usage, "snr list must be strictly increasing");
    }
  }
  if (config.trials_per_point < 1) throw Error(ErrorKind::Usage, "trials_per_point must be >= 1");
  if (config.seeds.empty()) throw Error(ErrorKind::Usage, "at least one seed required");

  const auto bundle = construct_bundle(config.params);
  const int K = config.params.users;
  const int n = config.params.slots;

  RateCurve curve;

  if (config.noiseless_guard) {
    // Infinite-SNR guard: the slope is the exact count of interference-free
    // desired dimensions per slot.
    const auto ctx = make_verify_context(bundle, config.seeds[0], Arithmetic::Exact);
    long long clean = 0;
    for (int rx = 0; rx < K; ++rx) {
      auto desired = desired_columns_exact(ctx, rx);
      auto interference = interference_columns_exact(ctx, rx);
      const int ri = rank_exact(interference);
      auto joint = desired;
      joint.insert(joint.end(), interference.begin(), interference.end());
      clean += rank_exact(joint) - ri;
    }
    curve.rank_based = true;
    curve.slope_dof = static_cast<double>(clean) / n;
    return curve;
  }

  struct TaskResult {
    // per receiver: eigenvalues of D^T P_perp D and the symbol power scale
    std::vector<std::vector<double>> eigs;
    std::vector<double> power_scale;  // per-tx power at SNR 1; multiply by snr_linear
  };

  std::vector<std::pair<uint64_t, int>> tasks;
  for (uint64_t seed : config.seeds) {
    for (int t = 0; t < config.trials_per_point; ++t) tasks.emplace_back(seed, t);
  }
  std::vector<TaskResult> results(tasks.size());

  parallel_for_indexed(tasks.size(), [&](size_t idx) {
    const auto [seed, trial] = tasks[idx];
    const uint64_t ch_seed =
        derive_seed(seed, {seed_tag::kSimulate, static_cast<uint64_t>(trial)});
    const auto ch = draw_channel(config.params, ch_seed, Representation::Floating);
    const auto rb = received_basis_float(ch, bundle.switching, bundle.precoders);
    TaskResult res;
    res.eigs.resize(K);
    res.power_scale.resize(K);
    for (int rx = 0; rx < K; ++rx) {
      Eigen::MatrixXd D(n, rb.columns_per_tx);
      for (int d = 0; d < rb.columns_per_tx; ++d) {
        for (int j = 0; j < n; ++j) D(j, d) = rb.img[rx][rx][d][j];
      }
      const auto intf_idx = interference_column_index(bundle.precoders, rx);
      Eigen::MatrixXd Dp = D;
      if (!intf_idx.empty()) {
        Eigen::MatrixXd I(n, static_cast<int>(intf_idx.size()));
        for (size_t c = 0; c < intf_idx.size(); ++c) {
          const int tx = intf_idx[c] / rb.columns_per_tx;
          const int col = intf_idx[c] % rb.columns_per_tx;
          for (int j = 0; j < n; ++j) I(j, static_cast<int>(c)) = rb.img[rx][tx][col][j];
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(I);
        const int rank = static_cast<int>(qr.rank());
        Eigen::MatrixXd Q =
            qr.householderQ() * Eigen::MatrixXd::Identity(n, rank);
        Dp = D - Q * (Q.transpose() * D);
      }
      Eigen::MatrixXd G = Dp.transpose() * Dp;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
      std::vector<double> eigs(es.eigenvalues().size());
      for (int i = 0; i < es.eigenvalues().size(); ++i) {
        eigs[i] = std::max(0.0, es.eigenvalues()(i));
      }
      res.eigs[rx] = std::move(eigs);
      res.power_scale[rx] = per_tx_symbol_power(bundle.precoders, rx, 1.0, n);
    }
    results[idx] = std::move(res);
  });

  for (double snr_db : config.snr_db) {
    const double snr_linear = std::pow(10.0, snr_db / 10.0);
    RatePoint pt;
    pt.snr_db = snr_db;
    pt.per_user.assign(K, 0.0);
    for (const auto& res : results) {
      for (int rx = 0; rx < K; ++rx) {
        const double p_sym = res.power_scale[rx] * snr_linear;  // noise power is 1
        double bits = 0.0;
        for (double lambda : res.eigs[rx]) bits += std::log2(1.0 + p_sym * lambda);
        pt.per_user[rx] += 0.5 * bits / n;
      }
    }
    for (int rx = 0; rx < K; ++rx) {
      pt.per_user[rx] /= static_cast<double>(results.size());
      pt.sum_rate += pt.per_user[rx];
    }
    curve.points.push_back(std::move(pt));
  }
  curve.slope_dof = estimate_dof_slope(curve, config.snr_db);
  return curve;
}

double estimate_dof_slope(const RateCurve& curve, const std::vector<double>& snr_db) {
  if (curve.rank_based) return curve.slope_dof;
  if (snr_db.size() < 2 || curve.points.size() != snr_db.size()) {
    throw Error(ErrorKind::InsufficientSnrSpan, "need at least two SNR points");
  }
  if (snr_db.back() - snr_db.front() < 20.0) {
    throw Error(ErrorKind::InsufficientSnrSpan, "SNR span must be at least 20 dB");
  }
  if (snr_db.back() < 40.0) {
    throw Error(ErrorKind::InsufficientSnrSpan, "top SNR point must be at least 40 dB");
  }
  // Fit over the top three points to suppress the O(1) offset.
  const size_t take = std::min<size_t>(3, curve.points.size());
  const size_t start = curve.points.size() - take;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = start; i < curve.points.size(); ++i) {
    const double x = std::log2(std::pow(10.0, snr_db[i] / 10.0));
    const double y = curve.points[i].sum_rate;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(take);
  const double slope_bits = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  // One DoF corresponds to log2(SNR)/2 bits per slot for real signaling.
  return 2.0 * slope_bits;
}

}  // namespace bia
