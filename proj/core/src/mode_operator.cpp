#include "detline/mode_operator.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <string>

namespace detline::grassmannian {
namespace {

cplx tail_value(Tail t) { return t == Tail::Identity ? cplx{1.0} : cplx{0.0}; }

Tail tail_product(Tail a, Tail b) {
  return (a == Tail::Identity && b == Tail::Identity) ? Tail::Identity : Tail::Zero;
}

Tail tail_from(cplx v, const char* op) {
  if (v == cplx{1.0}) return Tail::Identity;
  if (v == cplx{0.0}) return Tail::Zero;
  throw NotCommensurable(std::string("tail of ") + op + " is not 0 or the identity");
}

ModeWindow larger(ModeWindow a, ModeWindow b) { return a.n_max() >= b.n_max() ? a : b; }

}  // namespace

ModeWindow::ModeWindow(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw DomainError("mode window needs n_max >= 1, got " + std::to_string(n_max));
}

int ModeWindow::index_of(int mode) const {
  if (!contains(mode))
    throw WindowOverflow("mode " + std::to_string(mode) + " outside window [-" +
                         std::to_string(n_max_) + ", " + std::to_string(n_max_) + "]");
  return mode + n_max_;
}

ModeOperator::ModeOperator(ModeWindow w, Matrix m, Tail lo, Tail up)
    : window(w), entries(std::move(m)), lower(lo), upper(up) {
  if (entries.rows() != w.dim() || entries.cols() != w.dim())
    throw DomainError("operator entries do not match the window dimension");
  if (!entries.allFinite()) throw DomainError("operator entries must be finite");
}

ModeOperator ModeOperator::identity(ModeWindow w) {
  return {w, Matrix::Identity(w.dim(), w.dim()), Tail::Identity, Tail::Identity};
}

ModeOperator ModeOperator::zero(ModeWindow w) {
  return {w, Matrix::Zero(w.dim(), w.dim()), Tail::Zero, Tail::Zero};
}

ModeOperator ModeOperator::embedded(ModeWindow big) const {
  if (big.n_max() < window.n_max()) throw WindowOverflow("cannot embed into a smaller window");
  if (big == window) return *this;
  const int pad = big.n_max() - window.n_max();
  Matrix m = Matrix::Zero(big.dim(), big.dim());
  m.block(pad, pad, window.dim(), window.dim()) = entries;
  for (int i = 0; i < pad; ++i) {
    m(i, i) = tail_value(lower);
    m(big.dim() - 1 - i, big.dim() - 1 - i) = tail_value(upper);
  }
  return {big, std::move(m), lower, upper};
}

ModeOperator ModeOperator::adjoint() const { return {window, entries.adjoint(), lower, upper}; }

bool ModeOperator::is_projection(double tol) const {
  return (entries * entries - entries).cwiseAbs().maxCoeff() <= tol &&
         (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

ModeOperator operator*(const ModeOperator& a, const ModeOperator& b) {
  const ModeWindow w = larger(a.window, b.window);
  const ModeOperator ea = a.embedded(w), eb = b.embedded(w);
  return {w, ea.entries * eb.entries, tail_product(a.lower, b.lower),
          tail_product(a.upper, b.upper)};
}

ModeOperator operator+(const ModeOperator& a, const ModeOperator& b) {
  const ModeWindow w = larger(a.window, b.window);
  const ModeOperator ea = a.embedded(w), eb = b.embedded(w);
  return {w, ea.entries + eb.entries, tail_from(tail_value(a.lower) + tail_value(b.lower), "sum"),
          tail_from(tail_value(a.upper) + tail_value(b.upper), "sum")};
}

ModeOperator operator-(const ModeOperator& a, const ModeOperator& b) {
  const ModeWindow w = larger(a.window, b.window);
  const ModeOperator ea = a.embedded(w), eb = b.embedded(w);
  return {w, ea.entries - eb.entries,
          tail_from(tail_value(a.lower) - tail_value(b.lower), "difference"),
          tail_from(tail_value(a.upper) - tail_value(b.upper), "difference")};
}

ModeOperator identity_plus(ModeWindow w, const Matrix& k) {
  ModeOperator t = ModeOperator::identity(w);
  t.entries += k;
  return t;
}

cplx fredholm_det(const ModeOperator& t) {
  if (!t.is_det_class())
    throw NotDetClass("Fredholm determinant needs identity tails (I + window-supported)");
  return t.entries.partialPivLu().determinant();
}

int numerical_rank(const Matrix& m, double threshold) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold) ++r;
  return r;
}

KernelCokernel kernel_cokernel(const Matrix& map, double threshold) {
  const int r = numerical_rank(map, threshold);
  return {static_cast<int>(map.cols()) - r, static_cast<int>(map.rows()) - r};
}

Matrix range_basis(const ModeOperator& projection) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(projection.entries);
  const auto& vals = eig.eigenvalues();
  int count = 0;
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals(i) > 0.5) ++count;
  // eigenvalues ascend, so the range is spanned by the last `count` vectors
  return eig.eigenvectors().rightCols(count);
}

}  // namespace detline::grassmannian
