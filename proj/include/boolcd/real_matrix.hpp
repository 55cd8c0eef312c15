#pragma once

#include <cstddef>
#include <vector>

namespace boolcd {

/// Small dense real matrix, row-major. Holds covariance accumulators and raw
/// feature values ahead of binarization; nothing here needs a linear algebra
/// library.
struct RealMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  RealMatrix() = default;
  RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool same_shape(const RealMatrix& other) const {
    return rows == other.rows && cols == other.cols;
  }

  bool operator==(const RealMatrix&) const = default;
};

}  // namespace boolcd
