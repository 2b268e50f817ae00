#pragma once

#include <vector>

namespace bia {

/// Minimal dense row-major matrix.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, T init = T{})
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, init) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<T> col(int j) const {
    std::vector<T> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  std::vector<T> row(int i) const {
    std::vector<T> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using BinMat = Mat<int>;

}  // namespace bia
