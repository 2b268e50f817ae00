#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bia/channel.hpp"
#include "bia/construct.hpp"

namespace bia {

enum class Arithmetic { Exact, Floating };

std::string to_string(Arithmetic a);

struct TxIndependenceReport {
  int tx = 0;
  int expected = 0;
  int rank = 0;
  bool pass = false;
};

struct AlignmentReport {
  std::vector<int> subset;
  int outside_rx = -1;    // -1 when not applicable (r = K)
  bool applicable = true;
  int span_dim = 0;       // dim span{ H^{lm} v : m in subset }
  bool along_vector = false;  // span equals span{v}
  bool pass = false;
};

struct SharedIndependenceReport {
  std::vector<int> subset;
  int rx = 0;             // member of subset
  int expected = 0;       // r
  int rank = 0;
  bool pass = false;
};

struct DesiredCleanReport {
  int rx = 0;
  int desired_rank = 0;
  int interference_rank = 0;
  int joint_rank = 0;
  int intersection_dim = 0;  // desired_rank + interference_rank - joint_rank
  bool pass = false;
};

/// Per-receiver accounting of occupied dimensions against the slot budget.
struct DimensionCensus {
  int rx = 0;
  int desired_dims = 0;
  int shared_with_rx_dims = 0;
  int aligned_foreign_dims = 0;
  int total_occupied = 0;
  int slot_budget = 0;
  int expected_desired = 0;   // C(K-1, r-1)
  int expected_shared = 0;    // r * C(K-1, r-1)
  int expected_aligned = 0;   // C(K-1, r)
  int expected_total = 0;     // r*C(K-1,r-1) + C(K-1,r); equals n in tight mode
  bool pass = false;
};

struct ConverseAuditRow {
  int rx = 0;
  long long lhs = 0;    // sum_i d_i - (r-1) * sum_{subsets not containing rx} d_subset
  long long slack = 0;  // n - lhs; nonnegative required, 0 in tight mode
  bool pass = false;
};

/// Everything the checks need for one (construction, channel) pair.
struct VerifyContext {
  SchemeParams params;
  BasisMatrix basis;
  PrecoderSet precoders;
  SwitchingPlan switching;
  ChannelRealization channel;
  ReceivedBasisT<Rat> received;        // filled for exact arithmetic
  ReceivedBasisT<double> received_f;   // filled for floating arithmetic
  Arithmetic arithmetic = Arithmetic::Exact;
};

VerifyContext make_verify_context(const ConstructionBundle& bundle, uint64_t channel_seed,
                                  Arithmetic arithmetic);

/// rank(V^{(q)}) must be C(K-1, r-1); channel-independent.
TxIndependenceReport check_tx_independence(const PrecoderSet& pre, int tx);

/// For l outside the sharing set: the received copies of the shared vector
/// span one dimension and that span is the vector's own line.
AlignmentReport check_alignment(const VerifyContext& ctx, const SharedVectorEntry& entry,
                                int outside_rx);

/// For each member l of the sharing set: the r received copies have rank r.
std::vector<SharedIndependenceReport> check_shared_independence(const VerifyContext& ctx,
                                                                const SharedVectorEntry& entry);

/// span(desired at rx) must intersect span(interference at rx) trivially.
DesiredCleanReport check_desired_clean(const VerifyContext& ctx, int rx);

/// Exact-rank census of the desired / shared / aligned groups at rx.
DimensionCensus dimension_census(const VerifyContext& ctx, int rx);

/// Per-receiver inequality sum_i d_i - (r-1) * sum d_subset <= n, with
/// d_subset = 1 per sharing set (from the shared index).
std::vector<ConverseAuditRow> audit_converse_inequalities(
    const std::vector<DimensionCensus>& censuses, const SchemeParams& params);

/// Interference columns at rx: one representative per sharing set avoiding
/// rx plus every foreign copy of the sets containing rx. Used by the census,
/// the cleanliness check and the zero-forcing decoder.
std::vector<std::vector<Rat>> interference_columns_exact(const VerifyContext& ctx, int rx);
std::vector<std::vector<Rat>> desired_columns_exact(const VerifyContext& ctx, int rx);

struct CheckOutcome {
  std::string name;
  std::string detail;   // small JSON-ish detail string for the report
  uint64_t seed = 0;
  bool pass = false;
};

struct VerificationReport {
  SchemeParams params;
  Arithmetic arithmetic = Arithmetic::Exact;
  std::vector<uint64_t> seeds;
  std::vector<CheckOutcome> outcomes;
  int passed = 0;
  int failed = 0;
  bool all_pass = false;
};

/// Runs every check (transmitter independence, alignment, shared
/// independence, desired cleanliness, census, converse audit) across the
/// given channel seeds. In floating arithmetic a failing rank check is
/// re-verified exactly before being reported as a violation.
VerificationReport run_verification(const ConstructionBundle& bundle,
                                    const std::vector<uint64_t>& seeds, Arithmetic arithmetic);

}  // namespace bia
