#pragma once

// D = i d/dx on [0, 2 pi] with boundary conditions P (psi(0), psi(2 pi)) = 0
// parametrized by the line [1, z] in CP^1.

#include <Eigen/Core>
#include <complex>
#include <optional>

#include "detline/specfun.hpp"

namespace detline::cp1 {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

/// Orthogonal rank-one projection acting on boundary values (psi(0), psi(2 pi)).
/// `chart` is the affine coordinate z, or empty for the point at infinity.
struct BoundaryProjection2 {
  Mat2 entries = Mat2::Zero();
  std::optional<cplx> chart;

  bool is_hermitian(double tol = 1e-12) const;
  bool is_idempotent(double tol = 1e-12) const;
  bool has_unit_trace(double tol = 1e-12) const;
  bool is_valid(double tol = 1e-12) const {
    return is_hermitian(tol) && is_idempotent(tol) && has_unit_trace(tol);
  }
  /// P gamma psi = 0 for boundary values gamma psi = (psi0, psi2pi).
  bool annihilates(cplx psi0, cplx psi2pi, double tol = 1e-12) const;
};

/// Spectral offset alpha in (0, 1/2]: Delta_{P_z} has spectrum {(n + alpha)^2 : n in Z}.
struct SpectralDatum {
  double alpha = 0.25;
  cplx z{0.0, 0.0};

  /// u = exp(2 pi i alpha), a root of u^2 (1+|z|^2) + 2u (z + conj z) + (1+|z|^2).
  cplx root() const;
};

/// Sign relating Tr(P [d_z P, d_zbar P]) to the coefficient of dz ^ dzbar in
/// dbar d log det_zeta. Measured once at z = 0 against quillen_curvature_fd.
inline constexpr double kKahlerOrientationSign = -1.0;

/// det_zeta Delta_{P_z} = kQuillenNormalization * |S(P_z)|^2, measured at z = 0.
inline constexpr double kQuillenNormalization = 4.0;

/// Exclusion radius around the zero mode at z = -1 used by all grids.
inline constexpr double kZeroModeExclusion = 0.2;

BoundaryProjection2 projection_from_chart(cplx z);
BoundaryProjection2 projection_at_infinity();

/// Adjoint boundary condition: the adjoint problem imposes phi(2 pi) = -z phi(0),
/// so P*_z projects onto span{(conj z, 1)} and annihilates (1, -z).
BoundaryProjection2 adjoint_projection(cplx z);

/// Throws DegenerateSpectrum when u = 1 within 1e-10 (z near -1).
SpectralDatum alpha_of(cplx z);

/// 2 |1 + z|^2 / (1 + |z|^2).
double zeta_det_closed(cplx z);

/// zeta_Delta(s) = zeta_H(2s, alpha) + zeta_H(2s, 1 - alpha).
cplx spectral_zeta(cplx s, double alpha);

/// exp(-zeta_Delta'(0)) for the spectrum {(n + alpha)^2 : n in Z}, alpha in (0, 1).
double zeta_det_from_alpha(double alpha);

double zeta_det_spectral(cplx z);

/// Coefficient of dz ^ dzbar in dbar d log det_zeta Delta_{P_z}, i.e.
/// -(1/4) Laplacian of log det_zeta, by finite differences of the spectral
/// determinant. Only `step` and `order` of the stencil are used.
double quillen_curvature_fd(cplx z, specfun::FdStencil st = {});

/// Projection onto the Cauchy data {(c, c)} of Ker D = constants.
BoundaryProjection2 calderon_projection_interval();

/// Matrix of S(P_z) = P_z o P(D) : ran P(D) -> ran P_z in the unit bases
/// (1,1)/sqrt 2 and (1,z)/sqrt(1+|z|^2).
cplx s_of_p(cplx z);

struct MetricPatching {
  double lhs = 0.0;  // det_zeta(z) / det_zeta(w)
  double rhs = 0.0;  // |S(P_z)|^2 / |S(P_w)|^2
  double normalization_z = 0.0;  // det_zeta(z) / |S(P_z)|^2
  double normalization_w = 0.0;
};

MetricPatching metric_patching_check(cplx z, cplx w);

/// kKahlerOrientationSign * Tr(P_z [d_z P_z, d_zbar P_z]) from closed-form derivatives.
double kahler_form_2x2(cplx z);

/// Tr(P_z [d_z P_z, d_zbar P_z]) without the orientation sign; purely real.
cplx trace_pdpdp_2x2(cplx z);

}  // namespace detline::cp1
