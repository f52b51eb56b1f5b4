#include "detline/interval_cp1.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace detline::cp1 {
namespace {

using std::numbers::pi;

std::string to_string(cplx z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

Mat2 rank_one(const Vec2& v) { return v * v.adjoint() / v.squaredNorm(); }

}  // namespace

bool BoundaryProjection2::is_hermitian(double tol) const {
  return (entries - entries.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool BoundaryProjection2::is_idempotent(double tol) const {
  return (entries * entries - entries).cwiseAbs().maxCoeff() <= tol;
}

bool BoundaryProjection2::has_unit_trace(double tol) const {
  return std::abs(entries.trace() - 1.0) <= tol;
}

bool BoundaryProjection2::annihilates(cplx psi0, cplx psi2pi, double tol) const {
  const Vec2 gamma(psi0, psi2pi);
  return (entries * gamma).norm() <= tol * std::max(1.0, gamma.norm());
}

cplx SpectralDatum::root() const { return std::polar(1.0, 2.0 * pi * alpha); }

BoundaryProjection2 projection_from_chart(cplx z) {
  const double w = 1.0 + std::norm(z);
  Mat2 m;
  m << 1.0, std::conj(z), z, std::norm(z);
  return {m / w, z};
}

BoundaryProjection2 projection_at_infinity() {
  Mat2 m = Mat2::Zero();
  m(1, 1) = 1.0;
  return {m, std::nullopt};
}

BoundaryProjection2 adjoint_projection(cplx z) {
  return {rank_one(Vec2(std::conj(z), 1.0)), z};
}

SpectralDatum alpha_of(cplx z) {
  const double c = -2.0 * z.real() / (1.0 + std::norm(z));
  // |c| <= 1 analytically; clamp the rounding excess.
  const double alpha = std::acos(std::clamp(c, -1.0, 1.0)) / (2.0 * pi);
  SpectralDatum d{alpha, z};
  if (std::abs(d.root() - 1.0) < 1e-10)
    throw DegenerateSpectrum("zero eigenvalue of Delta_{P_z} at z = " + to_string(z));
  return d;
}

double zeta_det_closed(cplx z) { return 2.0 * std::norm(1.0 + z) / (1.0 + std::norm(z)); }

cplx spectral_zeta(cplx s, double alpha) {
  using specfun::HurwitzParams;
  return specfun::hurwitz_zeta(HurwitzParams{2.0 * s, alpha}) +
         specfun::hurwitz_zeta(HurwitzParams{2.0 * s, 1.0 - alpha});
}

double zeta_det_from_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DegenerateSpectrum("spectral offset must lie in (0, 1), got " + std::to_string(alpha));
  // zeta_Delta'(0) = 2 [zeta_H'(0, alpha) + zeta_H'(0, 1 - alpha)]
  const double dzeta =
      2.0 * (specfun::hurwitz_zeta_ds0(alpha) + specfun::hurwitz_zeta_ds0(1.0 - alpha));
  return std::exp(-dzeta);
}

double zeta_det_spectral(cplx z) { return zeta_det_from_alpha(alpha_of(z).alpha); }

double quillen_curvature_fd(cplx z, specfun::FdStencil st) {
  st.kind = specfun::StencilKind::Laplacian2D;
  st.validate();
  if (std::abs(z + 1.0) <= 4.0 * st.step)
    throw DegenerateSpectrum("stencil around " + to_string(z) + " reaches the zero mode z = -1");
  const specfun::PlaneField log_det = [](double x, double y) {
    return std::log(zeta_det_spectral({x, y}));
  };
  return -0.25 * specfun::fd_apply(log_det, {z.real(), z.imag()}, st);
}

BoundaryProjection2 calderon_projection_interval() {
  return {rank_one(Vec2(1.0, 1.0)), cplx{1.0, 0.0}};
}

cplx s_of_p(cplx z) {
  const Vec2 e_k = Vec2(1.0, 1.0) / std::sqrt(2.0);
  const Vec2 e_w = Vec2(1.0, z) / std::sqrt(1.0 + std::norm(z));
  const Mat2 s = projection_from_chart(z).entries * calderon_projection_interval().entries;
  return e_w.dot(s * e_k);  // Eigen's dot conjugates the left argument
}

MetricPatching metric_patching_check(cplx z, cplx w) {
  const double det_z = zeta_det_spectral(z);
  const double det_w = zeta_det_spectral(w);
  const double s_z = std::norm(s_of_p(z));
  const double s_w = std::norm(s_of_p(w));
  return {det_z / det_w, s_z / s_w, det_z / s_z, det_w / s_w};
}

cplx trace_pdpdp_2x2(cplx z) {
  const cplx zb = std::conj(z);
  const double w = 1.0 + std::norm(z);
  Mat2 m, m_z, m_zb;
  m << 1.0, zb, z, z * zb;
  m_z << 0.0, 0.0, 1.0, zb;
  m_zb << 0.0, 1.0, 0.0, z;
  const Mat2 p = m / w;
  const Mat2 p_z = m_z / w - m * zb / (w * w);
  const Mat2 p_zb = m_zb / w - m * z / (w * w);
  return (p * (p_z * p_zb - p_zb * p_z)).trace();
}

double kahler_form_2x2(cplx z) { return kKahlerOrientationSign * trace_pdpdp_2x2(z).real(); }

}  // namespace detline::cp1
