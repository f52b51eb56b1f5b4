#include "detline/boundary_grassmannian.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>

namespace detline::grassmannian {

using specfun::cplx;
using specfun::FdStencil;

namespace {

using std::numbers::pi;

Param2 shifted(Param2 t, Direction d, double tau) {
  return d == Direction::T1 ? Param2{t.t1 + tau, t.t2} : Param2{t.t1, t.t2 + tau};
}

ModeWindow larger(ModeWindow a, ModeWindow b) { return a.n_max() >= b.n_max() ? a : b; }

void require_projection(const ModeOperator& p, const char* what) {
  if (!p.is_projection(1e-10))
    throw DomainError(std::string(what) + " is not a Hermitian projection");
}

// Everything needed to evaluate S(P_sigma)(t) = (P + P sigma P) o base.
struct SectionModel {
  const ProjectionFamily& fam;
  const SmoothingFamily& sigma;
  ModeWindow window;
  Matrix base_basis;  // orthonormal columns spanning ran(base) in the window

  SectionModel(const ProjectionFamily& f, const SmoothingFamily& s, const ModeOperator& base)
      : fam(f), sigma(s), window(larger(f.window, base.window)) {
    const ModeOperator b = base.embedded(window);
    require_projection(b, "base");
    base_basis = range_basis(b);
  }

  Matrix projection(Param2 t) const { return fam(t).embedded(window).entries; }

  Matrix section(Param2 t) const {
    const Matrix p = projection(t);
    if (!sigma) return p * base_basis;
    const ModeOperator s = sigma(t);
    if (s.lower != Tail::Zero || s.upper != Tail::Zero)
      throw NotCommensurable("chart perturbation sigma must be window-supported");
    const Matrix sig = s.embedded(window).entries;
    return (p + p * sig * p) * base_basis;
  }

  // Left inverse of S on ran P; enforces the chart condition.
  Matrix section_inverse(Param2 t, const Matrix& s) const {
    const Matrix p = projection(t);
    const int r = static_cast<int>(base_basis.cols());
    if (numerical_rank(p) != r)
      throw NotInvertible("ran P and ran base have different dimension in the window");
    Eigen::JacobiSVD<Matrix> svd(s);
    if (r > 0 && svd.singularValues()(r - 1) <= kChartThreshold)
      throw NotInvertible("S(P) is not invertible at (" + std::to_string(t.t1) + ", " +
                          std::to_string(t.t2) + ")");
    return (s.adjoint() * s).ldlt().solve(s.adjoint());
  }

  cplx omega(Param2 t, Direction d, const FdStencil& st) const {
    const Matrix s = section(t);
    const Matrix s_inv = section_inverse(t, s);
    const Matrix ds = specfun::fd_derivative(
        [&](double tau) { return section(shifted(t, d, tau)); }, 0.0, st.step, st.order);
    // nabla^{K,W} S = P dS on ran(base); base is constant so nabla^K does not contribute
    return (s_inv * projection(t) * ds).trace();
  }

  cplx transition(const SectionModel& other, Param2 t) const {
    const Matrix s1 = section(t);
    const Matrix s2 = other.section(t);
    const Matrix s2_inv = other.section_inverse(t, s2);
    section_inverse(t, s1);
    const Matrix p = projection(t);
    // C = S_1 S_2^{-1} on ran P, extended by the identity on (ran P)^perp
    const Matrix c = s1 * s2_inv * p;
    const Matrix identity = Matrix::Identity(window.dim(), window.dim());
    return fredholm_det(ModeOperator(window, c + (identity - p), Tail::Identity, Tail::Identity));
  }
};

Matrix family_derivative(const ProjectionFamily& fam, ModeWindow w, Param2 t, Direction d,
                         const FdStencil& st) {
  return specfun::fd_derivative(
      [&](double tau) { return Matrix(fam(shifted(t, d, tau)).embedded(w).entries); }, 0.0,
      st.step, st.order);
}

cplx pdpdp(const ProjectionFamily& fam, ModeWindow w, Param2 t, const FdStencil& st) {
  const Matrix p = fam(t).embedded(w).entries;
  const Matrix d1 = family_derivative(fam, w, t, Direction::T1, st);
  const Matrix d2 = family_derivative(fam, w, t, Direction::T2, st);
  return (p * (d1 * d2 - d2 * d1)).trace();
}

const SmoothingFamily& no_sigma() {
  static const SmoothingFamily none;
  return none;
}

}  // namespace

ModeOperator spectral_projection(ModeWindow w, int k) {
  if (!w.contains(k))
    throw WindowOverflow("spectral cut k = " + std::to_string(k) + " outside the window");
  Matrix m = Matrix::Zero(w.dim(), w.dim());
  for (int n = k; n <= w.n_max(); ++n) m(w.index_of(n), w.index_of(n)) = 1.0;
  return {w, std::move(m), Tail::Zero, Tail::Identity};
}

ProjectionFamily rotated_family(ModeWindow w, int m1, int m2) {
  if (!(m1 < 0 && 0 <= m2))
    throw DomainError("rotated_family needs m1 < 0 <= m2, got (" + std::to_string(m1) + ", " +
                      std::to_string(m2) + ")");
  const int i1 = w.index_of(m1);
  const int i2 = w.index_of(m2);
  const ModeOperator pi0 = spectral_projection(w, 0);
  return {w, [w, i1, i2, pi0](Param2 t) {
            const double theta = 0.5 * pi * t.t1;
            const cplx phase = std::polar(1.0, 2.0 * pi * t.t2);
            ModeOperator u = ModeOperator::identity(w);
            u.entries(i1, i1) = std::cos(theta);
            u.entries(i1, i2) = -std::conj(phase) * std::sin(theta);
            u.entries(i2, i1) = phase * std::sin(theta);
            u.entries(i2, i2) = std::cos(theta);
            return u * pi0 * u.adjoint();
          }};
}

ProjectionFamily hermitian_orbit_family(ModeOperator base, Matrix h1, Matrix h2) {
  const ModeWindow w = base.window;
  if (h1.rows() != w.dim() || h1.cols() != w.dim() || h2.rows() != w.dim() ||
      h2.cols() != w.dim())
    throw DomainError("generators must match the window dimension");
  if (!h1.isApprox(h1.adjoint()) || !h2.isApprox(h2.adjoint()))
    throw DomainError("generators must be Hermitian");
  return {w, [w, base = std::move(base), h1 = std::move(h1), h2 = std::move(h2)](Param2 t) {
            Eigen::SelfAdjointEigenSolver<Matrix> eig(t.t1 * h1 + t.t2 * h2);
            const Eigen::VectorXcd phases =
                (eig.eigenvalues().cast<cplx>() * cplx{0.0, 1.0}).array().exp();
            const Matrix u = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
            const ModeOperator uop(w, u, Tail::Identity, Tail::Identity);
            return uop * base * uop.adjoint();
          }};
}

ProjectionFamily constant_family(ModeOperator p) {
  const ModeWindow w = p.window;
  return {w, [p = std::move(p)](Param2) { return p; }};
}

ProjectionFamily conjugated_family(ProjectionFamily fam, ModeOperator v) {
  if (!v.is_det_class()) throw NotCommensurable("conjugating unitary must have identity tails");
  const ModeWindow w = larger(fam.window, v.window);
  return {w, [fam = std::move(fam), v = std::move(v)](Param2 t) {
            return v * fam(t) * v.adjoint();
          }};
}

double relative_eta(const ModeOperator& p, const ModeOperator& q) {
  if (!p.same_tails(q))
    throw NotCommensurable("relative eta needs projections with equal tails");
  const cplx tr = (p - q).entries.trace();
  return 2.0 * tr.real();
}

int relative_index(const ModeOperator& p, const ModeOperator& q) {
  if (!p.same_tails(q))
    throw NotCommensurable("relative index needs projections with equal tails");
  const ModeWindow w = larger(p.window, q.window);
  const ModeOperator pe = p.embedded(w), qe = q.embedded(w);
  require_projection(pe, "P");
  require_projection(qe, "Q");
  const Matrix bp = range_basis(pe);
  const Matrix bq = range_basis(qe);
  // matrix of Q o P : ran P -> ran Q in the orthonormal bases
  const Matrix map = bq.adjoint() * qe.entries * pe.entries * bp;
  return kernel_cokernel(map).index();
}

double eta_invariant_spectral(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw DomainError("eta_invariant_spectral needs a in (0, 1), got " + std::to_string(a));
  return eta_regularized(ShiftedSpectrum{a, {}});
}

double ShiftedSpectrum::eigenvalue(int n) const {
  const auto it = shifts.find(n);
  return n + a - (it == shifts.end() ? 0 : it->second);
}

ShiftedSpectrum ShiftedSpectrum::flipped(int n) const {
  ShiftedSpectrum out = *this;
  ++out.shifts[n];
  return out;
}

ModeOperator positive_projection(ModeWindow w, const ShiftedSpectrum& spec) {
  Matrix m = Matrix::Zero(w.dim(), w.dim());
  for (const auto& [n, shift] : spec.shifts) {
    (void)shift;
    if (!w.contains(n))
      throw WindowOverflow("shifted mode " + std::to_string(n) + " outside the window");
  }
  for (int n = -w.n_max(); n <= w.n_max(); ++n)
    if (spec.eigenvalue(n) > 0.0) m(w.index_of(n), w.index_of(n)) = 1.0;
  return {w, std::move(m), Tail::Zero, Tail::Identity};
}

cplx eta_function(const ShiftedSpectrum& spec, cplx s) {
  if (!(spec.a > 0.0 && spec.a < 1.0))
    throw DomainError("spectral shift a must lie in (0, 1), got " + std::to_string(spec.a));
  using specfun::HurwitzParams;
  // unshifted: positive eigenvalues n + a (n >= 0), negative -(m + 1 - a) (m >= 0)
  cplx value = specfun::hurwitz_zeta(HurwitzParams{s, spec.a}) -
               specfun::hurwitz_zeta(HurwitzParams{s, 1.0 - spec.a});
  auto term = [s](double lambda) {
    const double sign = lambda > 0.0 ? 1.0 : -1.0;
    return sign * std::exp(-s * std::log(std::abs(lambda)));
  };
  for (const auto& [n, shift] : spec.shifts) {
    if (shift == 0) continue;
    value += term(spec.eigenvalue(n)) - term(n + spec.a);
  }
  return value;
}

double eta_regularized(const ShiftedSpectrum& spec) { return eta_function(spec, 0.0).real(); }

EtaComparison eta_finite_rank_check(double a, int flip_mode, ModeWindow w) {
  return eta_finite_rank_check(ShiftedSpectrum{a, {}}, flip_mode, w);
}

EtaComparison eta_finite_rank_check(const ShiftedSpectrum& before, int flip_mode, ModeWindow w) {
  if (!(before.a > 0.0 && before.a < 1.0))
    throw DomainError("spectral shift a must lie in (0, 1), got " + std::to_string(before.a));
  if (!w.contains(flip_mode))
    throw WindowOverflow("flip mode " + std::to_string(flip_mode) + " outside the window");
  const ShiftedSpectrum after = before.flipped(flip_mode);
  const double lhs = relative_eta(positive_projection(w, before), positive_projection(w, after));
  const double rhs = eta_regularized(before) - eta_regularized(after);
  return {lhs, rhs};
}

cplx connection_form(const ProjectionFamily& fam, const ModeOperator& base, Param2 t, Direction d,
                     FdStencil st) {
  return connection_form(fam, no_sigma(), base, t, d, st);
}

cplx connection_form(const ProjectionFamily& fam, const SmoothingFamily& sigma,
                     const ModeOperator& base, Param2 t, Direction d, FdStencil st) {
  st.validate();
  return SectionModel(fam, sigma, base).omega(t, d, st);
}

cplx curvature_rkw(const ProjectionFamily& fam, const ModeOperator& base, Param2 t,
                   FdStencil st) {
  return curvature_rkw(fam, no_sigma(), base, t, st);
}

cplx curvature_rkw(const ProjectionFamily& fam, const SmoothingFamily& sigma,
                   const ModeOperator& base, Param2 t, FdStencil st) {
  st.validate();
  const SectionModel model(fam, sigma, base);
  const cplx d1_omega2 = specfun::fd_derivative(
      [&](double tau) { return model.omega({t.t1 + tau, t.t2}, Direction::T2, st); }, 0.0,
      st.step, st.order);
  const cplx d2_omega1 = specfun::fd_derivative(
      [&](double tau) { return model.omega({t.t1, t.t2 + tau}, Direction::T1, st); }, 0.0,
      st.step, st.order);
  return d1_omega2 - d2_omega1;
}

cplx trace_pdpdp(const ProjectionFamily& fam, Param2 t, FdStencil st) {
  st.validate();
  return pdpdp(fam, fam.window, t, st);
}

cplx boundary_chern_form_2(const ProjectionFamily& w_fam, const ProjectionFamily& k_fam, Param2 t,
                           FdStencil st) {
  st.validate();
  const ModeWindow w = larger(w_fam.window, k_fam.window);
  // (P d P)^2 = P dP ^ dP P on ran P, whose trace is Tr(P [d_1 P, d_2 P]) dt1 ^ dt2
  return pdpdp(w_fam, w, t, st) - pdpdp(k_fam, w, t, st);
}

cplx transition_function(const ProjectionFamily& fam, const SmoothingFamily& sigma1,
                         const SmoothingFamily& sigma2, const ModeOperator& base, Param2 t) {
  const SectionModel m1(fam, sigma1, base), m2(fam, sigma2, base);
  return m1.transition(m2, t);
}

PatchingComparison patching_identity_check(const ProjectionFamily& fam,
                                           const SmoothingFamily& sigma1,
                                           const SmoothingFamily& sigma2,
                                           const ModeOperator& base, Param2 t, Direction d,
                                           FdStencil st) {
  st.validate();
  const SectionModel m1(fam, sigma1, base), m2(fam, sigma2, base);
  const cplx g = m1.transition(m2, t);
  const cplx dg = specfun::fd_derivative(
      [&](double tau) { return m1.transition(m2, shifted(t, d, tau)); }, 0.0, st.step, st.order);
  return {dg / g, m1.omega(t, d, st) - m2.omega(t, d, st)};
}

StokesComparison stokes_check(const ProjectionFamily& fam, const ModeOperator& base,
                              double t1_max, double t2_max, int panels, FdStencil st) {
  st.validate();
  if (panels < 1) throw DomainError("stokes_check needs at least one panel");
  using Rule = boost::math::quadrature::gauss<double, 10>;
  const SectionModel model(fam, no_sigma(), base);

  auto integrate = [panels](double len, auto&& f) {
    cplx total{0.0};
    const double h = len / panels;
    for (int k = 0; k < panels; ++k) {
      const double lo = k * h;
      for (std::size_t i = 0; i < Rule::abscissa().size(); ++i) {
        const double x = Rule::abscissa()[i];
        const double wgt = Rule::weights()[i];
        // the stored rule is symmetric; positive abscissae only, with x = 0 counted once
        total += 0.5 * h * wgt * f(lo + 0.5 * h * (1.0 + x));
        if (x != 0.0) total += 0.5 * h * wgt * f(lo + 0.5 * h * (1.0 - x));
      }
    }
    return total;
  };

  // counterclockwise: bottom, right, top (reversed), left (reversed)
  const cplx bottom = integrate(t1_max, [&](double s) { return model.omega({s, 0.0}, Direction::T1, st); });
  const cplx right = integrate(t2_max, [&](double s) { return model.omega({t1_max, s}, Direction::T2, st); });
  const cplx top = integrate(t1_max, [&](double s) { return model.omega({s, t2_max}, Direction::T1, st); });
  const cplx left = integrate(t2_max, [&](double s) { return model.omega({0.0, s}, Direction::T2, st); });

  const cplx area = integrate(t1_max, [&](double s1) {
    return integrate(t2_max, [&](double s2) { return pdpdp(fam, model.window, {s1, s2}, st); });
  });
  return {bottom + right - top - left, area};
}

}  // namespace detline::grassmannian
