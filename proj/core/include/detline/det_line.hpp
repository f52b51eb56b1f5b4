#pragma once

// Points [S, lambda] of the determinant line of a Fredholm operator, with
// (S q, lambda) ~ (S, lambda det_F q). Representatives are window-truncated
// operators I + K.

#include <utility>

#include "detline/mode_operator.hpp"

namespace detline::det_line {

using grassmannian::cplx;
using grassmannian::ModeOperator;

/// Normal-form representative of a point of Det T. Equality of points is
/// decided through `ratio`; `zero` is set when the representative is not
/// invertible, independently of the scale.
class DetPoint {
 public:
  DetPoint(ModeOperator rep, cplx scale);

  const ModeOperator& rep() const noexcept { return rep_; }
  cplx scale() const noexcept { return scale_; }
  bool is_zero() const noexcept { return zero_; }

  /// mu . [S, lambda] = [S, mu lambda]
  DetPoint scaled(cplx mu) const { return {rep_, mu * scale_}; }

  /// [S q, lambda] for a determinant-class q.
  DetPoint right_multiplied(const ModeOperator& q) const { return {rep_ * q, scale_}; }

 private:
  ModeOperator rep_;
  cplx scale_;
  bool zero_;
};

/// det T = [T, 1].
DetPoint det_point(const ModeOperator& t);

/// p / q = (lambda_p / lambda_q) det_F(T_p T_q^{-1}).
/// DivisionByZeroPoint when q is zero; a zero p gives 0.
cplx ratio(const DetPoint& p, const DetPoint& q);

/// Points agree when their ratio is 1 within `tol`.
bool equivalent(const DetPoint& p, const DetPoint& q, double tol = 1e-10);

/// det A (x) det B in Det A (x) Det B; ratios multiply factorwise.
struct DetTensor {
  DetPoint first;
  DetPoint second;
};

cplx ratio(const DetTensor& p, const DetTensor& q);

struct TensorSplit {
  DetPoint product;  // det(A B)
  DetTensor factors; // det A (x) det B
};

/// Canonical isomorphism Det(AB) = Det A (x) Det B, det AB <-> det A (x) det B.
TensorSplit tensor_split(const ModeOperator& a, const ModeOperator& b);

/// Index of a map C^cols -> C^rows from kernel and cokernel dimensions.
int fredholm_index(const grassmannian::Matrix& map);

}  // namespace detline::det_line
