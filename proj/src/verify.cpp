#include "bia/verify.hpp"

#include <algorithm>
#include <sstream>

#include "bia/combinatorics.hpp"
#include "bia/exact_linalg.hpp"

namespace bia {

std::string to_string(Arithmetic a) { return a == Arithmetic::Exact ? "exact" : "float"; }

namespace {

int column_of_member(const SharedVectorEntry& entry, int member) {
  for (size_t i = 0; i < entry.subset.size(); ++i) {
    if (entry.subset[i] == member) return entry.column_in_tx[i];
  }
  throw Error(ErrorKind::Usage, "receiver is not a member of the sharing set");
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

int rank_of(const std::vector<std::vector<Rat>>& vecs) { return rank_exact(vecs); }
int rank_of(const std::vector<std::vector<double>>& vecs) { return rank_float(vecs); }

template <typename T>
std::vector<T> to_scalar_vec(const std::vector<int>& v) {
  std::vector<T> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = T(v[i]);
  return out;
}

template <typename T>
const ReceivedBasisT<T>& basis_of(const VerifyContext& ctx);

template <>
const ReceivedBasisT<Rat>& basis_of<Rat>(const VerifyContext& ctx) {
  return ctx.received;
}
template <>
const ReceivedBasisT<double>& basis_of<double>(const VerifyContext& ctx) {
  return ctx.received_f;
}

template <typename T>
AlignmentReport alignment_impl(const VerifyContext& ctx, const SharedVectorEntry& entry,
                               int outside_rx) {
  AlignmentReport rep;
  rep.subset = entry.subset;
  rep.outside_rx = outside_rx;
  if (static_cast<int>(entry.subset.size()) == ctx.params.users) {
    rep.applicable = false;
    rep.outside_rx = -1;
    rep.pass = true;
    return rep;
  }
  if (contains(entry.subset, outside_rx)) {
    throw Error(ErrorKind::Usage, "alignment check requires a receiver outside the sharing set");
  }
  const auto& rb = basis_of<T>(ctx);
  std::vector<std::vector<T>> copies;
  for (size_t i = 0; i < entry.subset.size(); ++i) {
    copies.push_back(rb.img[outside_rx][entry.subset[i]][entry.column_in_tx[i]]);
  }
  rep.span_dim = rank_of(copies);
  copies.push_back(to_scalar_vec<T>(entry.vec));
  rep.along_vector = (rank_of(copies) == 1);
  rep.pass = (rep.span_dim == 1) && rep.along_vector;
  return rep;
}

template <typename T>
std::vector<SharedIndependenceReport> shared_independence_impl(const VerifyContext& ctx,
                                                               const SharedVectorEntry& entry) {
  const auto& rb = basis_of<T>(ctx);
  std::vector<SharedIndependenceReport> out;
  for (int rx : entry.subset) {
    SharedIndependenceReport rep;
    rep.subset = entry.subset;
    rep.rx = rx;
    rep.expected = static_cast<int>(entry.subset.size());
    std::vector<std::vector<T>> copies;
    for (size_t i = 0; i < entry.subset.size(); ++i) {
      copies.push_back(rb.img[rx][entry.subset[i]][entry.column_in_tx[i]]);
    }
    rep.rank = rank_of(copies);
    rep.pass = (rep.rank == rep.expected);
    out.push_back(std::move(rep));
  }
  return out;
}

template <typename T>
std::vector<std::vector<T>> desired_columns_impl(const VerifyContext& ctx, int rx) {
  const auto& rb = basis_of<T>(ctx);
  std::vector<std::vector<T>> cols;
  cols.reserve(rb.columns_per_tx);
  for (int d = 0; d < rb.columns_per_tx; ++d) cols.push_back(rb.img[rx][rx][d]);
  return cols;
}

// One representative per sharing set avoiding rx (alignment makes the copies
// collinear) plus every foreign copy of the sets containing rx.
template <typename T>
std::vector<std::vector<T>> interference_columns_impl(const VerifyContext& ctx, int rx) {
  const auto& rb = basis_of<T>(ctx);
  std::vector<std::vector<T>> cols;
  for (const auto& entry : ctx.precoders.shared) {
    if (contains(entry.subset, rx)) {
      for (size_t i = 0; i < entry.subset.size(); ++i) {
        if (entry.subset[i] != rx) {
          cols.push_back(rb.img[rx][entry.subset[i]][entry.column_in_tx[i]]);
        }
      }
    } else {
      cols.push_back(rb.img[rx][entry.subset[0]][entry.column_in_tx[0]]);
    }
  }
  return cols;
}

template <typename T>
DesiredCleanReport desired_clean_impl(const VerifyContext& ctx, int rx) {
  DesiredCleanReport rep;
  rep.rx = rx;
  auto desired = desired_columns_impl<T>(ctx, rx);
  auto interference = interference_columns_impl<T>(ctx, rx);
  rep.desired_rank = rank_of(desired);
  rep.interference_rank = rank_of(interference);
  auto joint = desired;
  joint.insert(joint.end(), interference.begin(), interference.end());
  rep.joint_rank = rank_of(joint);
  rep.intersection_dim = rep.desired_rank + rep.interference_rank - rep.joint_rank;
  rep.pass = (rep.intersection_dim == 0) && (rep.desired_rank == ctx.params.columns_per_tx);
  return rep;
}

template <typename T>
DimensionCensus census_impl(const VerifyContext& ctx, int rx) {
  const auto& p = ctx.params;
  const auto& rb = basis_of<T>(ctx);
  DimensionCensus c;
  c.rx = rx;
  c.slot_budget = p.slots;
  c.expected_desired = p.columns_per_tx;
  c.expected_shared = p.order * p.columns_per_tx;
  c.expected_aligned = p.aligned_per_rx;
  c.expected_total = c.expected_shared + c.expected_aligned;

  c.desired_dims = rank_of(desired_columns_impl<T>(ctx, rx));

  std::vector<std::vector<T>> shared_group;
  std::vector<std::vector<T>> aligned_group;
  std::vector<std::vector<T>> everything;
  for (const auto& entry : ctx.precoders.shared) {
    if (contains(entry.subset, rx)) {
      for (size_t i = 0; i < entry.subset.size(); ++i) {
        shared_group.push_back(rb.img[rx][entry.subset[i]][entry.column_in_tx[i]]);
      }
    } else {
      aligned_group.push_back(rb.img[rx][entry.subset[0]][entry.column_in_tx[0]]);
    }
  }
  for (int q = 0; q < p.users; ++q) {
    for (int d = 0; d < p.columns_per_tx; ++d) everything.push_back(rb.img[rx][q][d]);
  }
  c.shared_with_rx_dims = rank_of(shared_group);
  c.aligned_foreign_dims = aligned_group.empty() ? 0 : rank_of(aligned_group);
  c.total_occupied = rank_of(everything);
  c.pass = c.desired_dims == c.expected_desired && c.shared_with_rx_dims == c.expected_shared &&
           c.aligned_foreign_dims == c.expected_aligned && c.total_occupied == c.expected_total &&
           c.total_occupied <= c.slot_budget;
  return c;
}

}  // namespace

VerifyContext make_verify_context(const ConstructionBundle& bundle, uint64_t channel_seed,
                                  Arithmetic arithmetic) {
  VerifyContext ctx;
  ctx.params = bundle.params;
  ctx.basis = bundle.basis;
  ctx.precoders = bundle.precoders;
  ctx.switching = bundle.switching;
  ctx.arithmetic = arithmetic;
  // Exact-valued draws back both arithmetic paths, so a floating failure can
  // always be re-verified exactly on the same realization.
  ctx.channel = draw_channel(bundle.params, channel_seed, Representation::ExactRational);
  ctx.received = received_basis_exact(ctx.channel, ctx.switching, ctx.precoders);
  if (arithmetic == Arithmetic::Floating) {
    ctx.received_f = received_basis_float(ctx.channel, ctx.switching, ctx.precoders);
  }
  return ctx;
}

TxIndependenceReport check_tx_independence(const PrecoderSet& pre, int tx) {
  if (tx < 0 || tx >= static_cast<int>(pre.tx.size())) {
    throw Error(ErrorKind::Usage, "transmitter index out of range");
  }
  TxIndependenceReport rep;
  rep.tx = tx;
  rep.expected = pre.columns_per_tx;
  std::vector<std::vector<Rat>> cols;
  for (int d = 0; d < pre.columns_per_tx; ++d) {
    const auto c = pre.tx[tx].col(d);
    std::vector<Rat> col(c.size());
    for (size_t i = 0; i < c.size(); ++i) col[i] = Rat(c[i]);
    cols.push_back(std::move(col));
  }
  rep.rank = rank_exact(cols);
  rep.pass = (rep.rank == rep.expected);
  return rep;
}

AlignmentReport check_alignment(const VerifyContext& ctx, const SharedVectorEntry& entry,
                                int outside_rx) {
  if (ctx.arithmetic == Arithmetic::Floating) {
    auto rep = alignment_impl<double>(ctx, entry, outside_rx);
    if (!rep.pass) return alignment_impl<Rat>(ctx, entry, outside_rx);
    return rep;
  }
  return alignment_impl<Rat>(ctx, entry, outside_rx);
}

std::vector<SharedIndependenceReport> check_shared_independence(const VerifyContext& ctx,
                                                                const SharedVectorEntry& entry) {
  if (ctx.arithmetic == Arithmetic::Floating) {
    auto reps = shared_independence_impl<double>(ctx, entry);
    const bool any_fail = std::any_of(reps.begin(), reps.end(),
                                      [](const auto& r) { return !r.pass; });
    if (any_fail) return shared_independence_impl<Rat>(ctx, entry);
    return reps;
  }
  return shared_independence_impl<Rat>(ctx, entry);
}

DesiredCleanReport check_desired_clean(const VerifyContext& ctx, int rx) {
  if (ctx.arithmetic == Arithmetic::Floating) {
    auto rep = desired_clean_impl<double>(ctx, rx);
    if (!rep.pass) return desired_clean_impl<Rat>(ctx, rx);
    return rep;
  }
  return desired_clean_impl<Rat>(ctx, rx);
}

DimensionCensus dimension_census(const VerifyContext& ctx, int rx) {
  if (ctx.arithmetic == Arithmetic::Floating) {
    auto c = census_impl<double>(ctx, rx);
    if (!c.pass) return census_impl<Rat>(ctx, rx);
    return c;
  }
  return census_impl<Rat>(ctx, rx);
}

std::vector<ConverseAuditRow> audit_converse_inequalities(
    const std::vector<DimensionCensus>& censuses, const SchemeParams& params) {
  if (static_cast<int>(censuses.size()) != params.users) {
    throw Error(ErrorKind::Usage, "audit needs one census per receiver");
  }
  long long sum_d = 0;
  for (const auto& c : censuses) sum_d += c.desired_dims;
  std::vector<ConverseAuditRow> out;
  out.reserve(params.users);
  for (const auto& c : censuses) {
    ConverseAuditRow row;
    row.rx = c.rx;
    // Every sharing set avoiding rx occupies one dimension there; there are
    // C(K-1, r) of them and each is over-counted r-1 times in sum_d.
    row.lhs = sum_d - static_cast<long long>(params.order - 1) * params.aligned_per_rx;
    row.slack = static_cast<long long>(params.slots) - row.lhs;
    row.pass = (row.slack >= 0);
    out.push_back(row);
  }
  return out;
}

std::vector<std::vector<Rat>> interference_columns_exact(const VerifyContext& ctx, int rx) {
  return interference_columns_impl<Rat>(ctx, rx);
}

std::vector<std::vector<Rat>> desired_columns_exact(const VerifyContext& ctx, int rx) {
  return desired_columns_impl<Rat>(ctx, rx);
}

namespace {

std::string subset_string(const std::vector<int>& subset) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i] + 1;
  os << "}";
  return os.str();
}

}  // namespace

VerificationReport run_verification(const ConstructionBundle& bundle,
                                    const std::vector<uint64_t>& seeds, Arithmetic arithmetic) {
  VerificationReport rep;
  rep.params = bundle.params;
  rep.arithmetic = arithmetic;
  rep.seeds = seeds;
  const auto record = [&rep](std::string name, uint64_t seed, bool pass, std::string detail) {
    rep.outcomes.push_back(CheckOutcome{std::move(name), std::move(detail), seed, pass});
    if (pass) {
      ++rep.passed;
    } else {
      ++rep.failed;
    }
  };

  // Channel-independent: transmitter-side independence.
  for (int q = 0; q < bundle.params.users; ++q) {
    const auto r = check_tx_independence(bundle.precoders, q);
    std::ostringstream d;
    d << "tx=" << q + 1 << " rank=" << r.rank << " expected=" << r.expected;
    record("tx_independence", 0, r.pass, d.str());
  }

  for (uint64_t seed : seeds) {
    const auto ctx = make_verify_context(bundle, seed, arithmetic);
    for (const auto& entry : bundle.precoders.shared) {
      if (static_cast<int>(entry.subset.size()) < bundle.params.users) {
        for (int l = 0; l < bundle.params.users; ++l) {
          if (contains(entry.subset, l)) continue;
          const auto a = check_alignment(ctx, entry, l);
          std::ostringstream d;
          d << "subset=" << subset_string(entry.subset) << " rx=" << l + 1
            << " span_dim=" << a.span_dim << " along_vector=" << (a.along_vector ? 1 : 0);
          record("alignment", seed, a.pass, d.str());
        }
      } else {
        record("alignment", seed, true,
               "subset=" + subset_string(entry.subset) + " not applicable (r = K)");
      }
      for (const auto& s : check_shared_independence(ctx, entry)) {
        std::ostringstream d;
        d << "subset=" << subset_string(entry.subset) << " rx=" << s.rx + 1
          << " rank=" << s.rank << " expected=" << s.expected;
        record("shared_independence", seed, s.pass, d.str());
      }
    }
    std::vector<DimensionCensus> censuses;
    for (int rx = 0; rx < bundle.params.users; ++rx) {
      const auto dc = check_desired_clean(ctx, rx);
      std::ostringstream d;
      d << "rx=" << rx + 1 << " desired=" << dc.desired_rank
        << " interference=" << dc.interference_rank << " joint=" << dc.joint_rank
        << " intersection=" << dc.intersection_dim;
      record("desired_clean", seed, dc.pass, d.str());

      const auto c = dimension_census(ctx, rx);
      censuses.push_back(c);
      std::ostringstream e;
      e << "rx=" << rx + 1 << " census=(" << c.desired_dims << "," << c.shared_with_rx_dims << ","
        << c.aligned_foreign_dims << "," << c.total_occupied << ") expected=("
        << c.expected_desired << "," << c.expected_shared << "," << c.expected_aligned << ","
        << c.expected_total << ") n=" << c.slot_budget;
      record("dimension_census", seed, c.pass, e.str());
    }
    for (const auto& row : audit_converse_inequalities(censuses, bundle.params)) {
      std::ostringstream d;
      d << "rx=" << row.rx + 1 << " lhs=" << row.lhs << " slack=" << row.slack;
      record("converse_audit", seed, row.pass, d.str());
    }
  }
  rep.all_pass = (rep.failed == 0);
  return rep;
}

}  // namespace bia
