#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boolcd/errors.hpp"

namespace boolcd {

/// Dense bit-packed binary matrix, row-major, 64 cells per word.
/// Padding bits past cols() in the last word of a row are always zero, so
/// whole-row word operations (OR, XOR, popcount) need no masking.
class BoolMatrix {
 public:
  BoolMatrix() = default;

  BoolMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {}

  /// Build from 0/1 integer literals; rows must be uniform width.
  static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }
  std::size_t word_count() const { return words_.size(); }

  bool get(std::size_t i, std::size_t j) const {
    return (words_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  void set(std::size_t i, std::size_t j, bool v) {
    std::uint64_t& w = words_[i * wpr_ + (j >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    if (v) {
      w |= bit;
    } else {
      w &= ~bit;
    }
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {words_.data() + i * wpr_, wpr_};
  }

  std::span<std::uint64_t> row_mut(std::size_t i) { return {words_.data() + i * wpr_, wpr_}; }

  std::size_t ones_count() const;

  /// Column j as a packed bit vector over row indices (bit i == cell (i, j)).
  std::vector<std::uint64_t> column_words(std::size_t j) const;

  /// Row indices of the 1-cells in column j, ascending.
  std::vector<std::uint32_t> column_indices(std::size_t j) const;

  bool operator==(const BoolMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace boolcd
