#pragma once

#include <cstdint>
#include <vector>

#include "bia/construct.hpp"
#include "bia/params.hpp"
#include "bia/rational.hpp"

namespace bia {

enum class Representation { ExactRational, Floating };

/// Per-link mode coefficients h[p][q][m]: nonzero, and pairwise distinct in m
/// for every fixed (p, q). Immutable after draw_channel.
struct ChannelRealization {
  int users = 0;
  int modes = 0;  // r
  Representation repr = Representation::ExactRational;
  uint64_t seed = 0;
  // Exact mode: integers in [1, 2^16]; floating mode: uniform [0.5, 2.0].
  std::vector<long long> exact_values;  // size K*K*modes, unused when floating
  std::vector<double> float_values;     // size K*K*modes

  long long exact_at(int p, int q, int m) const;
  double value_at(int p, int q, int m) const;
};

ChannelRealization draw_channel(const SchemeParams& params, uint64_t seed, Representation repr);

/// Entry j is h[p][q](SW_p(j)). p, q are 0-based.
std::vector<Rat> diagonal_channel_exact(const ChannelRealization& ch, const SwitchingPlan& sw,
                                        int p, int q);
std::vector<double> diagonal_channel_float(const ChannelRealization& ch, const SwitchingPlan& sw,
                                           int p, int q);

/// All channel-scaled beamforming columns seen at each receiver:
/// img[p][q][d] = diag(h[p][q](SW_p(.))) * v_d^{(q)}.
template <typename T>
struct ReceivedBasisT {
  int users = 0;
  int slots = 0;
  int columns_per_tx = 0;
  std::vector<std::vector<std::vector<std::vector<T>>>> img;
};

ReceivedBasisT<Rat> received_basis_exact(const ChannelRealization& ch, const SwitchingPlan& sw,
                                         const PrecoderSet& pre);
ReceivedBasisT<double> received_basis_float(const ChannelRealization& ch, const SwitchingPlan& sw,
                                            const PrecoderSet& pre);

/// Noiseless exact transmission: y_p = sum_q diag(h) * V_q * x_q.
/// symbols[q] must have length C(K-1, r-1).
std::vector<std::vector<Rat>> transmit_exact(const PrecoderSet& pre,
                                             const std::vector<std::vector<Rat>>& symbols,
                                             const ChannelRealization& ch,
                                             const SwitchingPlan& sw);

/// Floating transmission with AWGN of the given power (0 for noiseless).
std::vector<std::vector<double>> transmit_float(const PrecoderSet& pre,
                                                const std::vector<std::vector<double>>& symbols,
                                                const ChannelRealization& ch,
                                                const SwitchingPlan& sw, double noise_power,
                                                uint64_t noise_seed);

}  // namespace bia
