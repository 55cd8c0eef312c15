// Independent reference implementations used only to compute expected test
// values. Everything here is written as plain nested loops over cells, on
// purpose: these must not share code paths with the bit-packed kernels they
// check.
#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "boolcd/bool_matrix.hpp"
#include "boolcd/bool_tensor.hpp"
#include "boolcd/model.hpp"
#include "boolcd/real_matrix.hpp"

namespace oracles {

inline boolcd::BoolMatrix naive_matmul(const boolcd::BoolMatrix& l, const boolcd::BoolMatrix& r) {
  boolcd::BoolMatrix out(l.rows(), r.cols());
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      bool v = false;
      for (std::size_t k = 0; k < l.cols(); ++k) {
        v = v || (l.get(i, k) && r.get(k, j));
      }
      out.set(i, j, v);
    }
  }
  return out;
}

inline boolcd::BoolMatrix naive_kronecker(const boolcd::BoolMatrix& l,
                                          const boolcd::BoolMatrix& r) {
  boolcd::BoolMatrix out(l.rows() * r.rows(), l.cols() * r.cols());
  for (std::size_t i = 0; i < l.rows(); ++i) {
    for (std::size_t j = 0; j < l.cols(); ++j) {
      for (std::size_t p = 0; p < r.rows(); ++p) {
        for (std::size_t q = 0; q < r.cols(); ++q) {
          out.set(i * r.rows() + p, j * r.cols() + q, l.get(i, j) && r.get(p, q));
        }
      }
    }
  }
  return out;
}

inline boolcd::BoolTensor3 naive_reconstruct(const boolcd::BoolTensor3& g,
                                             const boolcd::BoolMatrix& a,
                                             const boolcd::BoolMatrix& b,
                                             const boolcd::BoolMatrix& c) {
  boolcd::BoolTensor3 out(a.rows(), b.rows(), c.rows());
  for (std::size_t o = 0; o < a.rows(); ++o) {
    for (std::size_t f = 0; f < b.rows(); ++f) {
      for (std::size_t t = 0; t < c.rows(); ++t) {
        bool v = false;
        for (std::size_t r1 = 0; r1 < g.dim_o(); ++r1) {
          for (std::size_t r2 = 0; r2 < g.dim_f(); ++r2) {
            for (std::size_t r3 = 0; r3 < g.dim_t(); ++r3) {
              v = v || (g.get(r1, r2, r3) && a.get(o, r1) && b.get(f, r2) && c.get(t, r3));
            }
          }
        }
        out.set(o, f, t, v);
      }
    }
  }
  return out;
}

inline std::size_t naive_mismatches(const boolcd::BoolTensor3& x, const boolcd::BoolTensor3& y) {
  std::size_t n = 0;
  for (std::size_t o = 0; o < x.dim_o(); ++o) {
    for (std::size_t f = 0; f < x.dim_f(); ++f) {
      for (std::size_t t = 0; t < x.dim_t(); ++t) {
        if (x.get(o, f, t) != y.get(o, f, t)) ++n;
      }
    }
  }
  return n;
}

/// Two-pass definitional sample covariance across rows.
inline boolcd::RealMatrix two_pass_covariance(const boolcd::BoolMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  boolcd::RealMatrix out(k, k);
  if (n < 2) return out;
  std::vector<double> mean(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) mean[j] += m.get(i, j) ? 1.0 : 0.0;
    mean[j] /= static_cast<double>(n);
  }
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        s += ((m.get(i, p) ? 1.0 : 0.0) - mean[p]) * ((m.get(i, q) ? 1.0 : 0.0) - mean[q]);
      }
      out.at(p, q) = s / static_cast<double>(n - 1);
    }
  }
  return out;
}

/// Best binary row against target under OR-combination of H's rows, by
/// enumerating all 2^rank candidates in ascending numeric order (so ties keep
/// the sparser, earlier mask).
inline std::uint64_t best_row_exhaustive(const boolcd::BoolMatrix& xn, std::size_t row,
                                         const boolcd::BoolMatrix& h) {
  const std::size_t rank = h.rows();
  const std::size_t cols = xn.cols();
  std::uint64_t best_mask = 0;
  std::size_t best_err = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rank); ++mask) {
    std::size_t err = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      bool v = false;
      for (std::size_t s = 0; s < rank; ++s) {
        if (((mask >> s) & 1u) && h.get(s, j)) v = true;
      }
      if (v != xn.get(row, j)) ++err;
    }
    if (err < best_err) {
      best_err = err;
      best_mask = mask;
    }
  }
  return best_mask;
}

/// Second, independently structured exhaustive enumerator: recursive descent
/// over a flat cell list instead of integer bit unpacking.
std::size_t recursive_exhaustive_best_error(const boolcd::BoolTensor3& x,
                                            const boolcd::Ranks& ranks);

}  // namespace oracles
