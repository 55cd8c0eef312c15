#include "boolcd/kernels.hpp"

#include <algorithm>
#include <string>

#include "boolcd/detail/bits.hpp"

namespace boolcd {

namespace {

std::string shape_str(const BoolMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

BoolMatrix transpose(const BoolMatrix& m) {
  BoolMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    detail::for_each_set_bit(m.row(i), [&](std::size_t j) { out.set(j, i, true); });
  }
  return out;
}

BoolMatrix bool_matmul(const BoolMatrix& left, const BoolMatrix& right) {
  if (left.cols() != right.rows()) {
    throw ShapeError("bool_matmul: " + shape_str(left) + " x " + shape_str(right));
  }
  BoolMatrix out(left.rows(), right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    auto dst = out.row_mut(i);
    detail::for_each_set_bit(left.row(i),
                             [&](std::size_t k) { detail::or_into(dst, right.row(k)); });
  }
  return out;
}

BoolMatrix bool_kronecker(const BoolMatrix& left, const BoolMatrix& right) {
  const std::size_t max = SIZE_MAX / 64;
  if ((right.rows() != 0 && left.rows() > max / (right.rows() ? right.rows() : 1)) ||
      (right.cols() != 0 && left.cols() > max / (right.cols() ? right.cols() : 1))) {
    throw CapacityError("bool_kronecker: row/col product overflows");
  }
  BoolMatrix out(left.rows() * right.rows(), left.cols() * right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    detail::for_each_set_bit(left.row(i), [&](std::size_t j) {
      for (std::size_t r = 0; r < right.rows(); ++r) {
        detail::for_each_set_bit(right.row(r), [&](std::size_t s) {
          out.set(i * right.rows() + r, j * right.cols() + s, true);
        });
      }
    });
  }
  return out;
}

BoolMatrix unfold(const BoolTensor3& x, Mode mode) {
  const std::size_t O = x.dim_o();
  const std::size_t F = x.dim_f();
  const std::size_t T = x.dim_t();
  BoolMatrix out;
  switch (mode) {
    case Mode::Objects:
      out = BoolMatrix(O, F * T);
      break;
    case Mode::Features:
      out = BoolMatrix(F, O * T);
      break;
    case Mode::Time:
      out = BoolMatrix(T, O * F);
      break;
  }
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t f = 0; f < F; ++f) {
      detail::for_each_set_bit(x.fiber(f, t), [&](std::size_t o) {
        switch (mode) {
          case Mode::Objects:
            out.set(o, f + t * F, true);
            break;
          case Mode::Features:
            out.set(f, o + t * O, true);
            break;
          case Mode::Time:
            out.set(t, o + f * O, true);
            break;
        }
      });
    }
  }
  return out;
}

BoolTensor3 fold(const BoolMatrix& m, Mode mode, Dims3 dims) {
  const std::size_t O = dims.dim_o;
  const std::size_t F = dims.dim_f;
  const std::size_t T = dims.dim_t;
  std::size_t want_rows = 0;
  std::size_t want_cols = 0;
  switch (mode) {
    case Mode::Objects:
      want_rows = O;
      want_cols = F * T;
      break;
    case Mode::Features:
      want_rows = F;
      want_cols = O * T;
      break;
    case Mode::Time:
      want_rows = T;
      want_cols = O * F;
      break;
  }
  if (m.rows() != want_rows || m.cols() != want_cols) {
    throw ShapeError("fold: matrix " + shape_str(m) + " does not match expected " +
                     std::to_string(want_rows) + "x" + std::to_string(want_cols));
  }
  BoolTensor3 out(O, F, T);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    detail::for_each_set_bit(m.row(i), [&](std::size_t j) {
      switch (mode) {
        case Mode::Objects:
          out.set(i, j % F, j / F, true);
          break;
        case Mode::Features:
          out.set(j % O, i, j / O, true);
          break;
        case Mode::Time:
          out.set(j % O, j / O, i, true);
          break;
      }
    });
  }
  return out;
}

BoolTensor3 tucker_reconstruct(const BoolTensor3& g, const BoolMatrix& a, const BoolMatrix& b,
                               const BoolMatrix& c) {
  if (a.cols() != g.dim_o() || b.cols() != g.dim_f() || c.cols() != g.dim_t()) {
    throw ShapeError("tucker_reconstruct: factor columns (" + std::to_string(a.cols()) + "," +
                     std::to_string(b.cols()) + "," + std::to_string(c.cols()) +
                     ") do not match core dims (" + std::to_string(g.dim_o()) + "," +
                     std::to_string(g.dim_f()) + "," + std::to_string(g.dim_t()) + ")");
  }
  BoolTensor3 out(a.rows(), b.rows(), c.rows());

  std::vector<std::vector<std::uint64_t>> a_cols(g.dim_o());
  for (std::size_t r1 = 0; r1 < g.dim_o(); ++r1) a_cols[r1] = a.column_words(r1);
  std::vector<std::vector<std::uint32_t>> b_cols(g.dim_f());
  for (std::size_t r2 = 0; r2 < g.dim_f(); ++r2) b_cols[r2] = b.column_indices(r2);
  std::vector<std::vector<std::uint32_t>> c_cols(g.dim_t());
  for (std::size_t r3 = 0; r3 < g.dim_t(); ++r3) c_cols[r3] = c.column_indices(r3);

  for (std::size_t r3 = 0; r3 < g.dim_t(); ++r3) {
    for (std::size_t r2 = 0; r2 < g.dim_f(); ++r2) {
      for (std::size_t r1 = 0; r1 < g.dim_o(); ++r1) {
        if (!g.get(r1, r2, r3)) continue;
        const auto& col = a_cols[r1];
        for (std::uint32_t t : c_cols[r3]) {
          for (std::uint32_t f : b_cols[r2]) {
            detail::or_into(out.fiber_mut(f, t), {col.data(), col.size()});
          }
        }
      }
    }
  }
  return out;
}

HammingError hamming_error(const BoolTensor3& x, const BoolTensor3& xhat) {
  if (!x.same_dims(xhat)) {
    throw ShapeError("hamming_error: dims (" + std::to_string(x.dim_o()) + "," +
                     std::to_string(x.dim_f()) + "," + std::to_string(x.dim_t()) + ") vs (" +
                     std::to_string(xhat.dim_o()) + "," + std::to_string(xhat.dim_f()) + "," +
                     std::to_string(xhat.dim_t()) + ")");
  }
  const std::size_t mism = detail::popcount_xor(x.all_words(), xhat.all_words());
  const std::size_t denom = std::max<std::size_t>(1, x.ones_count());
  return {mism, static_cast<double>(mism) / static_cast<double>(denom)};
}

double density(const BoolTensor3& x) {
  if (x.cell_count() == 0) {
    throw DomainError("density: empty tensor");
  }
  return static_cast<double>(x.ones_count()) / static_cast<double>(x.cell_count());
}

}  // namespace boolcd
