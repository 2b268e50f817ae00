#pragma once

#include <cstdint>
#include <vector>

#include "bia/rational.hpp"
#include "bia/verify.hpp"

namespace bia {

struct SimulationConfig {
  SchemeParams params;
  std::vector<uint64_t> seeds;   // independent channel streams
  std::vector<double> snr_db;    // strictly increasing, nonempty
  int trials_per_point = 4;
  bool noiseless_guard = false;  // true: skip rate estimation, return the rank-based slope
};

struct RatePoint {
  double snr_db = 0.0;
  std::vector<double> per_user;  // bits per slot
  double sum_rate = 0.0;
};

struct RateCurve {
  std::vector<RatePoint> points;
  double slope_dof = 0.0;      // DoF units: 2 * (bits/slot per doubling of SNR)
  bool rank_based = false;     // slope came from the noiseless rank census
};

/// Zero-forcing recovery: projects the observation onto the orthogonal
/// complement of the interference span at rx and solves for the desired
/// symbols. Exact path; throws Error(Decodability) when the desired space is
/// polluted by interference.
std::vector<Rat> zero_force_decode(const std::vector<Rat>& observation, int rx,
                                   const VerifyContext& ctx);

/// Floating zero-forcing (least squares over [desired | interference]).
std::vector<double> zero_force_decode_float(const std::vector<double>& observation, int rx,
                                            const ReceivedBasisT<double>& rb,
                                            const PrecoderSet& pre);

/// Gaussian-input log-det rate estimate of the post-projection channel,
/// averaged over seeds x trials per SNR point, normalized per slot.
/// Deterministic given config (trials run with derived seeds; reduction is
/// index-ordered regardless of thread count).
RateCurve simulate_rates(const SimulationConfig& config);

/// Least-squares slope of sum rate versus log2(SNR) over the top three
/// points, in DoF units (one DoF = log2(SNR)/2 bits per slot for real
/// signaling). Requires >= 2 points spanning >= 20 dB with the top >= 40 dB.
double estimate_dof_slope(const RateCurve& curve, const std::vector<double>& snr_db);

}  // namespace bia
