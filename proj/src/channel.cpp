#include "bia/channel.hpp"

#include <algorithm>
#include <cmath>

#include "bia/rng.hpp"

namespace bia {

namespace {

size_t coeff_index(const ChannelRealization& ch, int p, int q, int m) {
  return (static_cast<size_t>(p) * ch.users + q) * ch.modes + m;
}

void check_pq(const ChannelRealization& ch, int p, int q) {
  if (p < 0 || p >= ch.users || q < 0 || q >= ch.users) {
    throw Error(ErrorKind::Usage, "receiver/transmitter index out of range");
  }
}

}  // namespace

long long ChannelRealization::exact_at(int p, int q, int m) const {
  if (repr != Representation::ExactRational) {
    throw Error(ErrorKind::Usage, "exact coefficients requested from a floating realization");
  }
  return exact_values[coeff_index(*this, p, q, m)];
}

double ChannelRealization::value_at(int p, int q, int m) const {
  return float_values[coeff_index(*this, p, q, m)];
}

ChannelRealization draw_channel(const SchemeParams& params, uint64_t seed, Representation repr) {
  ChannelRealization ch;
  ch.users = params.users;
  ch.modes = params.order;
  ch.repr = repr;
  ch.seed = seed;
  const size_t total = static_cast<size_t>(ch.users) * ch.users * ch.modes;
  ch.float_values.assign(total, 0.0);
  if (repr == Representation::ExactRational) ch.exact_values.assign(total, 0);

  for (int p = 0; p < ch.users; ++p) {
    for (int q = 0; q < ch.users; ++q) {
      Rng rng(derive_seed(seed, {seed_tag::kChannel, static_cast<uint64_t>(p),
                                 static_cast<uint64_t>(q)}));
      if (repr == Representation::ExactRational) {
        // Distinct integers in [1, 2^16]; resample on collision.
        std::vector<long long> vals;
        while (static_cast<int>(vals.size()) < ch.modes) {
          const long long v = 1 + static_cast<long long>(rng.below(1ULL << 16));
          if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        for (int m = 0; m < ch.modes; ++m) {
          ch.exact_values[coeff_index(ch, p, q, m)] = vals[m];
          ch.float_values[coeff_index(ch, p, q, m)] = static_cast<double>(vals[m]);
        }
      } else {
        // Uniform on [0.5, 2.0], bounded away from zero; distinct per mode.
        std::vector<double> vals;
        while (static_cast<int>(vals.size()) < ch.modes) {
          const double v = rng.uniform(0.5, 2.0);
          if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        for (int m = 0; m < ch.modes; ++m) {
          ch.float_values[coeff_index(ch, p, q, m)] = vals[m];
        }
      }
    }
  }
  return ch;
}

std::vector<Rat> diagonal_channel_exact(const ChannelRealization& ch, const SwitchingPlan& sw,
                                        int p, int q) {
  check_pq(ch, p, q);
  const int n = sw.sw.rows();
  std::vector<Rat> out(n);
  for (int j = 0; j < n; ++j) out[j] = Rat(make_int(ch.exact_at(p, q, sw.sw(j, p))));
  return out;
}

std::vector<double> diagonal_channel_float(const ChannelRealization& ch, const SwitchingPlan& sw,
                                           int p, int q) {
  check_pq(ch, p, q);
  const int n = sw.sw.rows();
  std::vector<double> out(n);
  for (int j = 0; j < n; ++j) out[j] = ch.value_at(p, q, sw.sw(j, p));
  return out;
}

namespace {

template <typename T, typename Coeff>
ReceivedBasisT<T> received_basis_impl(const ChannelRealization& ch, const SwitchingPlan& sw,
                                      const PrecoderSet& pre, Coeff coeff) {
  ReceivedBasisT<T> rb;
  rb.users = ch.users;
  rb.slots = sw.sw.rows();
  rb.columns_per_tx = pre.columns_per_tx;
  if (static_cast<int>(pre.tx.size()) != ch.users ||
      (ch.users > 0 && pre.tx[0].rows() != rb.slots)) {
    throw Error(ErrorKind::DimensionMismatch, "precoders and switching plan disagree");
  }
  rb.img.assign(rb.users, {});
  for (int p = 0; p < rb.users; ++p) {
    rb.img[p].assign(rb.users, {});
    for (int q = 0; q < rb.users; ++q) {
      rb.img[p][q].assign(rb.columns_per_tx, std::vector<T>(rb.slots));
      for (int d = 0; d < rb.columns_per_tx; ++d) {
        for (int j = 0; j < rb.slots; ++j) {
          rb.img[p][q][d][j] = pre.tx[q](j, d) ? coeff(p, q, sw.sw(j, p)) : T(0);
        }
      }
    }
  }
  return rb;
}

}  // namespace

ReceivedBasisT<Rat> received_basis_exact(const ChannelRealization& ch, const SwitchingPlan& sw,
                                         const PrecoderSet& pre) {
  return received_basis_impl<Rat>(ch, sw, pre,
                                  [&](int p, int q, int m) { return Rat(make_int(ch.exact_at(p, q, m))); });
}

ReceivedBasisT<double> received_basis_float(const ChannelRealization& ch, const SwitchingPlan& sw,
                                            const PrecoderSet& pre) {
  return received_basis_impl<double>(
      ch, sw, pre, [&](int p, int q, int m) { return ch.value_at(p, q, m); });
}

std::vector<std::vector<Rat>> transmit_exact(const PrecoderSet& pre,
                                             const std::vector<std::vector<Rat>>& symbols,
                                             const ChannelRealization& ch,
                                             const SwitchingPlan& sw) {
  const int users = ch.users;
  const int n = sw.sw.rows();
  if (static_cast<int>(symbols.size()) != users) {
    throw Error(ErrorKind::DimensionMismatch, "one symbol list per transmitter required");
  }
  for (const auto& s : symbols) {
    if (static_cast<int>(s.size()) != pre.columns_per_tx) {
      throw Error(ErrorKind::DimensionMismatch, "symbol list length != columns per transmitter");
    }
  }
  std::vector<std::vector<Rat>> y(users, std::vector<Rat>(n, Rat(0)));
  for (int p = 0; p < users; ++p) {
    for (int q = 0; q < users; ++q) {
      for (int j = 0; j < n; ++j) {
        Rat acc(0);
        for (int d = 0; d < pre.columns_per_tx; ++d) {
          if (pre.tx[q](j, d)) acc += symbols[q][d];
        }
        if (acc != 0) y[p][j] += Rat(make_int(ch.exact_at(p, q, sw.sw(j, p)))) * acc;
      }
    }
  }
  return y;
}

std::vector<std::vector<double>> transmit_float(const PrecoderSet& pre,
                                                const std::vector<std::vector<double>>& symbols,
                                                const ChannelRealization& ch,
                                                const SwitchingPlan& sw, double noise_power,
                                                uint64_t noise_seed) {
  const int users = ch.users;
  const int n = sw.sw.rows();
  if (static_cast<int>(symbols.size()) != users) {
    throw Error(ErrorKind::DimensionMismatch, "one symbol list per transmitter required");
  }
  if (noise_power < 0) throw Error(ErrorKind::Usage, "noise power must be nonnegative");
  std::vector<std::vector<double>> y(users, std::vector<double>(n, 0.0));
  for (int p = 0; p < users; ++p) {
    for (int q = 0; q < users; ++q) {
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int d = 0; d < pre.columns_per_tx; ++d) {
          if (pre.tx[q](j, d)) acc += symbols[q][d];
        }
        y[p][j] += ch.value_at(p, q, sw.sw(j, p)) * acc;
      }
    }
    if (noise_power > 0) {
      Rng rng(derive_seed(noise_seed, {seed_tag::kNoise, static_cast<uint64_t>(p)}));
      const double sigma = std::sqrt(noise_power);
      for (int j = 0; j < n; ++j) y[p][j] += sigma * rng.gaussian();
    }
  }
  return y;
}

}  // namespace bia
