#include "boolcd/bool_matrix.hpp"

#include "boolcd/detail/bits.hpp"

namespace boolcd {

BoolMatrix BoolMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  BoolMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      throw ShapeError("BoolMatrix::from_rows: ragged row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < c; ++j) {
      m.set(i, j, rows[i][j] != 0);
    }
  }
  return m;
}

std::size_t BoolMatrix::ones_count() const {
  return detail::popcount_words({words_.data(), words_.size()});
}

std::vector<std::uint64_t> BoolMatrix::column_words(std::size_t j) const {
  std::vector<std::uint64_t> out((rows_ + 63) / 64, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (get(i, j)) {
      out[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  }
  return out;
}

std::vector<std::uint32_t> BoolMatrix::column_indices(std::size_t j) const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (get(i, j)) {
      out.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return out;
}

}  // namespace boolcd
