#include "detline/det_line.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

namespace detline::det_line {

namespace {

bool invertible(const ModeOperator& t) {
  Eigen::JacobiSVD<grassmannian::Matrix> svd(t.entries);
  const auto& sv = svd.singularValues();
  return sv.size() == 0 || sv(sv.size() - 1) > grassmannian::kRankThreshold;
}

}  // namespace

DetPoint::DetPoint(ModeOperator rep, cplx scale) : rep_(std::move(rep)), scale_(scale) {
  if (!rep_.is_det_class())
    throw NotDetClass("determinant-line representatives must be I + window-supported");
  zero_ = !invertible(rep_) || scale_ == cplx{0.0};
}

DetPoint det_point(const ModeOperator& t) { return {t, 1.0}; }

cplx ratio(const DetPoint& p, const DetPoint& q) {
  if (q.is_zero()) throw DivisionByZeroPoint("ratio by the zero point of a determinant line");
  if (!p.rep().same_tails(q.rep()))
    throw NotCommensurable("representatives differ outside the window");
  if (p.is_zero()) return 0.0;
  // det_F(T_p T_q^{-1}) = det_F(T_p) / det_F(T_q) for identity-tailed
  // representatives; two LU factorizations avoid forming T_q^{-1}.
  return p.scale() / q.scale() * (grassmannian::fredholm_det(p.rep()) /
                                  grassmannian::fredholm_det(q.rep()));
}

bool equivalent(const DetPoint& p, const DetPoint& q, double tol) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return std::abs(ratio(p, q) - 1.0) <= tol;
}

cplx ratio(const DetTensor& p, const DetTensor& q) {
  return ratio(p.first, q.first) * ratio(p.second, q.second);
}

TensorSplit tensor_split(const ModeOperator& a, const ModeOperator& b) {
  return {det_point(a * b), {det_point(a), det_point(b)}};
}

int fredholm_index(const grassmannian::Matrix& map) {
  return grassmannian::kernel_cokernel(map).index();
}

}  // namespace detline::det_line
