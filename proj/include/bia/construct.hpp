#pragma once

#include <vector>

#include "bia/matrix.hpp"
#include "bia/params.hpp"

namespace bia {

/// The n x K binary matrix S every beamforming vector is cut from.
/// Rows 0..(r-1)K-1 are r-1 stacked copies of A = 1 - I (row (j-1)K + q has
/// its only zero at column q); the remaining rows are the B block whose rows
/// each carry exactly K-r ones.
struct BasisMatrix {
  BinMat entries;      // n x K
  BinMat b_block;      // b_rows x K
  int a_block_count = 0;  // r - 1
};

struct SharedVectorEntry {
  std::vector<int> subset;       // the r transmitters sharing this vector (0-based, sorted)
  std::vector<int> vec;          // the common binary column, length n
  std::vector<int> column_in_tx; // column index of the vector inside each member's precoder,
                                 // ordered like `subset`
};

/// Per-transmitter beamforming matrices plus the shared-vector index covering
/// all C(K, r) sharing sets.
struct PrecoderSet {
  int columns_per_tx = 0;
  std::vector<BinMat> tx;                  // K matrices, each n x C(K-1, r-1)
  std::vector<SharedVectorEntry> shared;   // lex order of subsets
};

/// Per-receiver antenna mode sequence over the alphabet {0, ..., r-1};
/// column p is receiver p's schedule.
struct SwitchingPlan {
  BinMat sw;           // n x K
  int mode_count = 0;  // r
};

/// Assembles S = [A; ...; A; B]. B rows are the weight-(K-r) incidence rows
/// ordered by ascending lexicographic order of their complement subsets
/// (equivalently descending support order); when fewer than C(K, r) rows fit,
/// rows are dropped from the lexicographically smallest support first.
BasisMatrix build_basis(const SchemeParams& params);

/// Every column of transmitter q is the entrywise product of K-r distinct
/// columns of S avoiding column q; the empty product (r = K) is all-ones.
/// Columns are ordered by the lex order of their sharing subsets.
/// Throws Error(ConstructionIntegrity) on duplicate columns in one precoder.
PrecoderSet build_precoders(const BasisMatrix& basis, const SchemeParams& params);

/// SW stacked from blocks A + c_j*I (c_1 = 0, c_j = j for j >= 2) followed by
/// the B rows verbatim, giving the mode alphabet {0, ..., r-1}. For r = 2 the
/// plan equals S entrywise; for r = 1 the plan is all zeros (single mode).
SwitchingPlan build_switching(const SchemeParams& params);

struct ConstructionBundle {
  SchemeParams params;
  BasisMatrix basis;
  PrecoderSet precoders;
  SwitchingPlan switching;
};

ConstructionBundle construct_bundle(const SchemeParams& params);

}  // namespace bia
