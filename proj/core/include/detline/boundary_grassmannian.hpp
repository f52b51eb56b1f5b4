#pragma once

// Finite-rank perturbations of the spectral projection on the boundary
// circle: relative eta invariants, relative indices, the connection on
// Det S(P) and its curvature, and the chart patching identities.

#include <functional>
#include <map>

#include "detline/mode_operator.hpp"
#include "detline/specfun.hpp"

namespace detline::grassmannian {

struct Param2 {
  double t1 = 0.0;
  double t2 = 0.0;
};

enum class Direction { T1, T2 };

/// Smooth map (t1, t2) -> Hermitian projection, all values commensurable
/// with each other (differences supported in `window`).
struct ProjectionFamily {
  ModeWindow window{1};
  std::function<ModeOperator(Param2)> map;

  ModeOperator operator()(Param2 t) const { return map(t).embedded(window); }
};

/// Smooth family of window-supported (tail zero) perturbations sigma(t).
/// An empty function stands for sigma = 0.
using SmoothingFamily = std::function<ModeOperator(Param2)>;

/// Pi_{>=k}: diagonal projection onto modes n >= k; identity above the
/// window, zero below it.
ModeOperator spectral_projection(ModeWindow w, int k);

/// P(t) = U(t) Pi_{>=0} U(t)* with U(t) the rotation by pi t1 / 2, phased by
/// exp(2 pi i t2), in span{e_m1, e_m2}; requires m1 < 0 <= m2 in the window.
ProjectionFamily rotated_family(ModeWindow w, int m1, int m2);

/// P(t) = U(t) base U(t)* with U(t) = exp(i (t1 H1 + t2 H2)) for Hermitian
/// window matrices H1, H2.
ProjectionFamily hermitian_orbit_family(ModeOperator base, Matrix h1, Matrix h2);

ProjectionFamily constant_family(ModeOperator p);

/// V P(t) V* for a constant window-supported unitary V (identity tails).
ProjectionFamily conjugated_family(ProjectionFamily fam, ModeOperator v);

/// eta(P, Q) = Tr((P - P^perp) - (Q - Q^perp)) = 2 Tr(P - Q).
/// NotCommensurable unless P and Q carry the same tails.
double relative_eta(const ModeOperator& p, const ModeOperator& q);

/// Index of Q o P : ran P -> ran Q from kernel and cokernel dimensions.
int relative_index(const ModeOperator& p, const ModeOperator& q);

/// eta(P, Q) / 2 = kEtaIndexSign * relative_index(P, Q). Measured on
/// (Pi_{>=1}, Pi_{>=0}).
inline constexpr int kEtaIndexSign = +1;

/// Regularized eta invariant of the operator with eigenvalues {n + a : n in Z}.
double eta_invariant_spectral(double a);

/// Boundary operator with eigenvalue n + a - shift(n) on the mode e_n.
/// Shifts are finite in number, so the operator differs from the unshifted
/// one by a finite-rank operator.
struct ShiftedSpectrum {
  double a = 0.5;
  std::map<int, int> shifts;

  double eigenvalue(int n) const;
  /// Copy with the eigenvalue of mode `n` lowered by one.
  ShiftedSpectrum flipped(int n) const;
};

/// Projection onto the positive spectral subspace, written on `w`.
ModeOperator positive_projection(ModeWindow w, const ShiftedSpectrum& spec);

/// eta(s) = sum sign(lambda) |lambda|^{-s}: Hurwitz sums for the unshifted
/// spectrum corrected by the shifted eigenvalues.
specfun::cplx eta_function(const ShiftedSpectrum& spec, specfun::cplx s);
double eta_regularized(const ShiftedSpectrum& spec);

struct EtaComparison {
  double lhs = 0.0;  // relative eta of the positive spectral projections
  double rhs = 0.0;  // eta(before) - eta(after)
};

EtaComparison eta_finite_rank_check(double a, int flip_mode, ModeWindow w = ModeWindow{8});
EtaComparison eta_finite_rank_check(const ShiftedSpectrum& before, int flip_mode, ModeWindow w);

/// Chart membership threshold on the singular values of S(P).
inline constexpr double kChartThreshold = 1e-6;

/// omega = Tr(S^{-1} nabla^{K,W} S) for S = (P + P sigma P) o base : ran base -> ran P,
/// with the flat ambient connection. NotInvertible outside the chart.
specfun::cplx connection_form(const ProjectionFamily& fam, const ModeOperator& base, Param2 t,
                              Direction d, specfun::FdStencil st = {});
specfun::cplx connection_form(const ProjectionFamily& fam, const SmoothingFamily& sigma,
                              const ModeOperator& base, Param2 t, Direction d,
                              specfun::FdStencil st = {});

/// d omega (t) = d_1 omega_2 - d_2 omega_1, nested finite differences.
specfun::cplx curvature_rkw(const ProjectionFamily& fam, const ModeOperator& base, Param2 t,
                            specfun::FdStencil st = {});
specfun::cplx curvature_rkw(const ProjectionFamily& fam, const SmoothingFamily& sigma,
                            const ModeOperator& base, Param2 t, specfun::FdStencil st = {});

/// Tr(P [d_1 P, d_2 P]) with the derivatives taken by finite differences.
specfun::cplx trace_pdpdp(const ProjectionFamily& fam, Param2 t, specfun::FdStencil st = {});

/// Degree-two part Tr((nabla^W)^2 - (nabla^K)^2) with nabla^W = P d P and
/// nabla^K = Q d Q.
specfun::cplx boundary_chern_form_2(const ProjectionFamily& w_fam, const ProjectionFamily& k_fam,
                                    Param2 t, specfun::FdStencil st = {});

/// g_12(t) = det_F(S_1(t) S_2(t)^{-1}) on ran P(t) for the charts sigma_1, sigma_2.
specfun::cplx transition_function(const ProjectionFamily& fam, const SmoothingFamily& sigma1,
                                  const SmoothingFamily& sigma2, const ModeOperator& base,
                                  Param2 t);

struct PatchingComparison {
  specfun::cplx lhs;  // d log g_12
  specfun::cplx rhs;  // omega_1 - omega_2
};

PatchingComparison patching_identity_check(const ProjectionFamily& fam,
                                           const SmoothingFamily& sigma1,
                                           const SmoothingFamily& sigma2,
                                           const ModeOperator& base, Param2 t, Direction d,
                                           specfun::FdStencil st = {});

struct StokesComparison {
  specfun::cplx boundary;  // closed line integral of omega
  specfun::cplx area;      // double integral of Tr(P [d_1 P, d_2 P])
};

/// Stokes check on [0, t1_max] x [0, t2_max] with composite 10-point
/// Gauss-Legendre quadrature, `panels` panels per edge and per axis.
StokesComparison stokes_check(const ProjectionFamily& fam, const ModeOperator& base,
                              double t1_max, double t2_max, int panels = 4,
                              specfun::FdStencil st = {});

}  // namespace detline::grassmannian
