#pragma once

#include <optional>
#include <string>

#include "bia/errors.hpp"

namespace bia {

/// Slot-budget flavor of the construction.
///   Tight:  n = C(K-1, r) + r*C(K-1, r-1); the basis B block drops rows when
///           fewer than C(K, r) fit and is rejected when more would be needed.
///   Padded: n = (r-1)K + C(K, r); the B block holds every weight-(K-r) row.
enum class BuildMode { Tight, Padded };

std::string to_string(BuildMode m);
BuildMode build_mode_from_string(const std::string& s);

/// Single source of truth for all derived sizes.
struct SchemeParams {
  int users = 0;           // K
  int order = 0;           // r, the alignment order (also the antenna mode count)
  BuildMode mode = BuildMode::Tight;
  int slots = 0;           // n
  int b_rows = 0;          // rows of the B block = n - (r-1)K
  int columns_per_tx = 0;  // C(K-1, r-1) beamforming vectors per transmitter
  int aligned_per_rx = 0;  // C(K-1, r) foreign groups at each receiver
  long long subset_count = 0;  // C(K, r) sharing sets

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// Derives all sizes; r defaults to the optimizer of Kr/(r^2 - r + K).
/// Throws Error(InfeasibleParams) naming the violated inequality when the
/// B block cannot hold the required number of distinct weight-(K-r) rows.
SchemeParams derive_params(int users, std::optional<int> order, BuildMode mode);

}  // namespace bia
