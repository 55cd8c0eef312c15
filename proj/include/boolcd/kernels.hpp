#pragma once

#include <cstdint>
#include <utility>

#include "boolcd/bool_matrix.hpp"
#include "boolcd/bool_tensor.hpp"

namespace boolcd {

/// Unfolding axis of a 3-order tensor: objects (mode 1), features (mode 2),
/// time (mode 3).
enum class Mode { Objects = 0, Features = 1, Time = 2 };

BoolMatrix transpose(const BoolMatrix& m);

/// Boolean product: out[i,j] = OR_k (left[i,k] AND right[k,j]).
BoolMatrix bool_matmul(const BoolMatrix& left, const BoolMatrix& right);

/// Kronecker product under AND: out[i*R+r, j*S+s] = left[i,j] AND right[r,s]
/// for right of shape R x S.
BoolMatrix bool_kronecker(const BoolMatrix& left, const BoolMatrix& right);

/// Mode-n unfolding. Column order follows the convention that the lower
/// remaining mode varies fastest:
///   Objects  -> O x (F*T), column f + t*F
///   Features -> F x (O*T), column o + t*O
///   Time     -> T x (O*F), column o + f*O
BoolMatrix unfold(const BoolTensor3& x, Mode mode);

struct Dims3 {
  std::size_t dim_o;
  std::size_t dim_f;
  std::size_t dim_t;
};

/// Inverse of unfold: fold(unfold(x, mode), mode, dims(x)) == x.
BoolTensor3 fold(const BoolMatrix& m, Mode mode, Dims3 dims);

/// Boolean Tucker reconstruction:
/// out[o,f,t] = OR over (r1,r2,r3) of g[r1,r2,r3] AND a[o,r1] AND b[f,r2] AND c[t,r3].
BoolTensor3 tucker_reconstruct(const BoolTensor3& g, const BoolMatrix& a, const BoolMatrix& b,
                               const BoolMatrix& c);

struct HammingError {
  std::size_t mismatches;
  /// mismatches / max(1, ones in the reference tensor).
  double relative;
};

/// Cellwise mismatch count between x and xhat; `relative` is normalized by the
/// 1-cells of x so an all-zero approximation of a nonempty x scores 1.0.
HammingError hamming_error(const BoolTensor3& x, const BoolTensor3& xhat);

/// Fraction of 1-cells. Empty tensors have no density.
double density(const BoolTensor3& x);

}  // namespace boolcd
