#pragma once

#include <array>
#include <vector>

// Reference five-user construction (K = 5, r = 2, tight): the 14 x 5 basis
// matrix, the ten shared beamforming vectors with their per-transmitter
// column labels, and the five switching schedules.
namespace golden {

inline constexpr int kFiveUserSlots = 14;
inline constexpr int kFiveUserCount = 5;

// S, row-major.
inline constexpr std::array<std::array<int, 5>, 14> kFiveUserS = {{
    {0, 1, 1, 1, 1},
    {1, 0, 1, 1, 1},
    {1, 1, 0, 1, 1},
    {1, 1, 1, 0, 1},
    {1, 1, 1, 1, 0},
    {0, 0, 1, 1, 1},
    {0, 1, 0, 1, 1},
    {0, 1, 1, 0, 1},
    {0, 1, 1, 1, 0},
    {1, 0, 0, 1, 1},
    {1, 0, 1, 0, 1},
    {1, 0, 1, 1, 0},
    {1, 1, 0, 0, 1},
    {1, 1, 0, 1, 0},
}};

struct SharedFixture {
  std::array<int, 2> subset;       // 1-based sharing pair
  std::array<int, 2> column_in;    // 1-based column index at each member
  std::array<int, 14> vec;
};

inline const std::vector<SharedFixture> kFiveUserShared = {
    {{1, 2}, {1, 1}, {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{1, 3}, {2, 1}, {1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
    {{1, 4}, {3, 1}, {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
    {{1, 5}, {4, 1}, {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0}},
    {{2, 3}, {2, 2}, {0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}},
    {{2, 4}, {3, 2}, {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}},
    {{2, 5}, {4, 2}, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0}},
    {{3, 4}, {3, 3}, {0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}},
    {{3, 5}, {4, 3}, {0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {{4, 5}, {4, 4}, {0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
};

// Switching schedules SW_1..SW_5 (columns of SW).
inline constexpr std::array<std::array<int, 14>, 5> kFiveUserSw = {{
    {0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1},
    {1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1},
    {1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0},
    {1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1},
    {1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 0},
}};

// Four-user, order-3, padded slot budget: the A-block stack is fixed; the B
// block holds all four weight-1 rows ordered by ascending complement subsets.
inline constexpr std::array<std::array<int, 4>, 12> kFourUserOrder3S = {{
    {0, 1, 1, 1},
    {1, 0, 1, 1},
    {1, 1, 0, 1},
    {1, 1, 1, 0},
    {0, 1, 1, 1},
    {1, 0, 1, 1},
    {1, 1, 0, 1},
    {1, 1, 1, 0},
    {0, 0, 0, 1},
    {0, 0, 1, 0},
    {0, 1, 0, 0},
    {1, 0, 0, 0},
}};

}  // namespace golden
