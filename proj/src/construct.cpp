#include "bia/construct.hpp"

#include <map>
#include <sstream>

#include "bia/combinatorics.hpp"

namespace bia {

namespace {

// B rows in construction order: one weight-(K-r) incidence row per sharing
// subset, subsets in lex order (their supports therefore descend), truncated
// to the first b_rows entries. The dropped rows are the lex-largest subsets,
// i.e. the lex-smallest supports.
BinMat make_b_block(const SchemeParams& p) {
  const auto subsets = subsets_lex(p.users, p.order);
  BinMat b(p.b_rows, p.users, 0);
  for (int row = 0; row < p.b_rows; ++row) {
    for (int c : complement_of(subsets[row], p.users)) b(row, c) = 1;
  }
  return b;
}

}  // namespace

BasisMatrix build_basis(const SchemeParams& p) {
  BasisMatrix out;
  out.a_block_count = p.order - 1;
  out.b_block = make_b_block(p);
  out.entries = BinMat(p.slots, p.users, 0);
  int row = 0;
  for (int blk = 0; blk < out.a_block_count; ++blk) {
    for (int q = 0; q < p.users; ++q, ++row) {
      for (int c = 0; c < p.users; ++c) out.entries(row, c) = (c == q) ? 0 : 1;
    }
  }
  for (int i = 0; i < p.b_rows; ++i, ++row) {
    for (int c = 0; c < p.users; ++c) out.entries(row, c) = out.b_block(i, c);
  }
  return out;
}

PrecoderSet build_precoders(const BasisMatrix& basis, const SchemeParams& p) {
  if (basis.entries.rows() != p.slots || basis.entries.cols() != p.users) {
    throw Error(ErrorKind::DimensionMismatch, "basis does not match params");
  }
  PrecoderSet out;
  out.columns_per_tx = p.columns_per_tx;
  out.tx.assign(p.users, BinMat(p.slots, p.columns_per_tx, 0));
  std::vector<int> next_col(p.users, 0);

  const auto subsets = subsets_lex(p.users, p.order);
  out.shared.reserve(subsets.size());
  for (const auto& subset : subsets) {
    // Hadamard product of the generator columns outside the subset; the
    // empty product (r = K) is the all-ones vector.
    std::vector<int> vec(p.slots, 1);
    for (int c : complement_of(subset, p.users)) {
      for (int i = 0; i < p.slots; ++i) vec[i] &= basis.entries(i, c);
    }
    SharedVectorEntry entry;
    entry.subset = subset;
    entry.vec = vec;
    for (int q : subset) {
      const int col = next_col[q]++;
      entry.column_in_tx.push_back(col);
      for (int i = 0; i < p.slots; ++i) out.tx[q](i, col) = vec[i];
    }
    out.shared.push_back(std::move(entry));
  }

  for (int q = 0; q < p.users; ++q) {
    if (next_col[q] != p.columns_per_tx) {
      throw Error(ErrorKind::ConstructionIntegrity, "column count mismatch at a transmitter");
    }
    std::map<std::vector<int>, int> seen;
    for (int d = 0; d < p.columns_per_tx; ++d) {
      auto col = out.tx[q].col(d);
      auto [it, inserted] = seen.emplace(std::move(col), d);
      if (!inserted) {
        std::ostringstream msg;
        msg << "duplicate beamforming columns " << it->second + 1 << " and " << d + 1
            << " at transmitter " << q + 1;
        throw Error(ErrorKind::ConstructionIntegrity, msg.str());
      }
    }
  }
  return out;
}

SwitchingPlan build_switching(const SchemeParams& p) {
  SwitchingPlan out;
  out.mode_count = p.order;
  out.sw = BinMat(p.slots, p.users, 0);
  if (p.order == 1) {
    return out;  // single receive mode: constant schedule
  }
  int row = 0;
  for (int blk = 0; blk < p.order - 1; ++blk) {
    const int diag = (blk == 0) ? 0 : blk + 1;  // c_1 = 0, c_j = j for j >= 2
    for (int q = 0; q < p.users; ++q, ++row) {
      for (int c = 0; c < p.users; ++c) out.sw(row, c) = (c == q) ? diag : 1;
    }
  }
  const BinMat b = make_b_block(p);
  for (int i = 0; i < p.b_rows; ++i, ++row) {
    for (int c = 0; c < p.users; ++c) out.sw(row, c) = b(i, c);
  }
  return out;
}

ConstructionBundle construct_bundle(const SchemeParams& params) {
  ConstructionBundle bundle;
  bundle.params = params;
  bundle.basis = build_basis(params);
  bundle.precoders = build_precoders(bundle.basis, params);
  bundle.switching = build_switching(params);
  return bundle;
}

}  // namespace bia
