#include <Eigen/LU>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "detline/boundary_grassmannian.hpp"
#include "detline/chern_series.hpp"
#include "detline/det_line.hpp"
#include "detline/interval_cp1.hpp"
#include "detline/random.hpp"
#include "detline/report.hpp"

namespace detline::report {
namespace {

using cplx = std::complex<double>;
using std::numbers::pi;

template <class F>
void for_each_grid_point(int n, double lo, double hi, F&& f) {
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const cplx z(lo + i * (hi - lo) / (n - 1), lo + j * (hi - lo) / (n - 1));
      if (std::abs(z + 1.0) < cp1::kZeroModeExclusion * (1.0 - 1e-12)) continue;
      f(z);
    }
}

double projection_defect(const cp1::Mat2& p) {
  return std::max({(p - p.adjoint()).cwiseAbs().maxCoeff(), (p * p - p).cwiseAbs().maxCoeff(),
                   std::abs(p.trace() - 1.0)});
}

double rel(double observed, double expected) {
  return std::abs(observed - expected) / std::abs(expected);
}

}  // namespace

void run_cp1_suite(std::vector<Case>& out, const RunOptions& opts) {
  using namespace cp1;
  const specfun::FdStencil st{opts.fd_step, 4};
  const std::string anchor_example = "example complex projective space";

  double worst = 0.0;
  for_each_grid_point(21, -2.0, 2.0, [&](cplx z) {
    worst = std::max({worst, projection_defect(projection_from_chart(z).entries),
                      projection_defect(adjoint_projection(z).entries)});
  });
  out.push_back(numeric_case("cp1.projection_invariants_grid21", worst, 0.0, 1e-12, anchor_example));

  Mat2 expect0 = Mat2::Zero();
  expect0(0, 0) = 1.0;
  out.push_back(numeric_case("cp1.projection_z0",
                             (projection_from_chart(0.0).entries - expect0).cwiseAbs().maxCoeff(),
                             0.0, 1e-12, anchor_example));
  out.push_back(numeric_case(
      "cp1.projection_z1",
      (projection_from_chart(1.0).entries - Mat2::Constant(0.5)).cwiseAbs().maxCoeff(), 0.0,
      1e-12, anchor_example));

  // P_z annihilates gamma psi exactly when psi(0) = -conj(z) psi(2 pi); P*_z kills (1, -z).
  bool bc_ok = true;
  double adj_worst = 0.0;
  for_each_grid_point(9, -2.0, 2.0, [&](cplx z) {
    const BoundaryProjection2 p = projection_from_chart(z);
    const cplx psi2pi = std::polar(1.3, 0.7);
    bc_ok = bc_ok && p.annihilates(-std::conj(z) * psi2pi, psi2pi, 1e-12) &&
            !p.annihilates(-std::conj(z) * psi2pi + 0.1, psi2pi, 1e-6);
    adj_worst = std::max(adj_worst, (adjoint_projection(z).entries * Vec2(cplx(1.0), -z)).norm());
  });
  out.push_back(check_case("cp1.boundary_condition_equivalence", bc_ok, anchor_example));
  out.push_back(numeric_case("cp1.adjoint_kills_(1,-z)", adj_worst, 0.0, 1e-12, anchor_example));

  out.push_back(numeric_case("cp1.alpha_z0", alpha_of(0.0).alpha, 0.25, 1e-12, anchor_example));
  out.push_back(numeric_case("cp1.alpha_z1", alpha_of(1.0).alpha, 0.5, 1e-12, anchor_example));
  bool degenerate = false;
  try {
    alpha_of(-1.0);
  } catch (const DegenerateSpectrum&) {
    degenerate = true;
  }
  out.push_back(check_case("cp1.alpha_z-1_degenerate", degenerate, anchor_example,
                           "zero mode raises DegenerateSpectrum"));

  out.push_back(numeric_case("cp1.det_closed_z0", zeta_det_closed(0.0), 2.0, 1e-14, "z metric cp1"));
  out.push_back(numeric_case("cp1.det_closed_z1", zeta_det_closed(1.0), 4.0, 1e-14, "z metric cp1"));
  out.push_back(numeric_case("cp1.det_closed_zi", zeta_det_closed({0.0, 1.0}), 2.0, 1e-14,
                             "z metric cp1"));
  out.push_back(numeric_case("cp1.det_spectral_z0", zeta_det_spectral(0.0), 2.0, 2e-8, "z metric"));
  out.push_back(numeric_case("cp1.det_spectral_alpha_1/3", zeta_det_from_alpha(1.0 / 3.0), 3.0,
                             3e-8, "z metric"));

  double det_worst = 0.0, branch_worst = 0.0, norm_worst = 0.0;
  for_each_grid_point(21, -2.0, 2.0, [&](cplx z) {
    const double spectral = zeta_det_spectral(z);
    det_worst = std::max(det_worst, rel(spectral, zeta_det_closed(z)));
    const double alpha = alpha_of(z).alpha;
    branch_worst =
        std::max(branch_worst, std::abs(zeta_det_from_alpha(1.0 - alpha) - spectral));
    norm_worst = std::max(norm_worst, rel(spectral, kQuillenNormalization * std::norm(s_of_p(z))));
  });
  out.push_back(numeric_case("cp1.det_spectral_vs_closed_grid21", det_worst, 0.0, 1e-8,
                             "z metric cp1"));
  out.push_back(numeric_case("cp1.det_branch_independence", branch_worst, 0.0, 1e-10,
                             "z metric cp1"));
  out.push_back(numeric_case("cp1.quillen_normalization_grid21", norm_worst, 0.0, 1e-8,
                             "z metric patching"));

  double curv_worst = 0.0, kahler_worst = 0.0;
  for_each_grid_point(5, -0.5, 0.5, [&](cplx z) {
    const double closed = 1.0 / std::pow(1.0 + std::norm(z), 2);
    const double fd = quillen_curvature_fd(z, st);
    curv_worst = std::max(curv_worst, rel(fd, closed));
    kahler_worst = std::max(kahler_worst, rel(fd, kahler_form_2x2(z)));
  });
  out.push_back(numeric_case("cp1.curvature_z0", quillen_curvature_fd(0.0, st), 1.0, 1e-4,
                             "curv=kahler"));
  out.push_back(numeric_case("cp1.curvature_vs_kahler_grid5", curv_worst, 0.0, 1e-4,
                             "curv=kahler"));
  out.push_back(numeric_case("cp1.curvature_vs_trpdpdp_grid5", kahler_worst, 0.0, 1e-4,
                             "det P curv intro"));

  out.push_back(numeric_case("cp1.calderon_is_chart_point_1",
                             (calderon_projection_interval().entries -
                              projection_from_chart(1.0).entries)
                                 .cwiseAbs()
                                 .maxCoeff(),
                             0.0, 1e-14, "calderon"));
  out.push_back(numeric_case("cp1.s_of_p_z0", std::abs(s_of_p(0.0)), 1.0 / std::sqrt(2.0), 1e-14,
                             "z metric patching"));
  out.push_back(numeric_case("cp1.s_of_p_z-1", std::abs(s_of_p(-1.0)), 0.0, 1e-14,
                             "z metric patching"));

  auto g = rng::stream(opts.seed, "cp1.metric_patching");
  double patch_worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    cplx z, w;
    do z = rng::uniform_disk_point(g, 2.5); while (std::abs(z + 1.0) < kZeroModeExclusion);
    do w = rng::uniform_disk_point(g, 2.5); while (std::abs(w + 1.0) < kZeroModeExclusion);
    const MetricPatching m = metric_patching_check(z, w);
    patch_worst = std::max(patch_worst, rel(m.lhs, m.rhs));
  }
  out.push_back(numeric_case("cp1.metric_patching_50_pairs", patch_worst, 0.0, 1e-8,
                             "z metric patching"));
}

void run_grassmannian_suite(std::vector<Case>& out, const RunOptions& opts) {
  using namespace grassmannian;
  const specfun::FdStencil st{opts.fd_step, 4, specfun::StencilKind::FirstDerivative};
  const ModeWindow w2(2), w3(3), w5(5), w8(8);

  {
    Matrix expect = Matrix::Zero(5, 5);
    for (int i = 2; i < 5; ++i) expect(i, i) = 1.0;
    out.push_back(numeric_case("grassmannian.spectral_projection_n2_k0",
                               (spectral_projection(w2, 0).entries - expect).cwiseAbs().maxCoeff(),
                               0.0, 0.0, "e:etareg"));
  }

  double eta_worst = 0.0;
  bool index_ok = true;
  for (int k = -5; k <= 5; ++k) {
    const ModeOperator pk = spectral_projection(w5, k), p0 = spectral_projection(w5, 0);
    const double eta = relative_eta(pk, p0);
    eta_worst = std::max(eta_worst, std::abs(eta + 2.0 * k));
    index_ok = index_ok && std::abs(eta / 2.0 - kEtaIndexSign * relative_index(pk, p0)) < 1e-8;
  }
  out.push_back(numeric_case("grassmannian.relative_eta_spectral_cuts", eta_worst, 0.0, 1e-10,
                             "e:releta"));
  out.push_back(check_case("grassmannian.eta_equals_relative_index", index_ok, "e:releta4",
                           "eta(Pi_k, Pi_0)/2 = sigma ind for k in -5..5"));

  auto g = rng::stream(opts.seed, "grassmannian.unitary_conjugation");
  double conj_worst = 0.0, additivity_worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const ModeOperator u = rng::random_unitary(g, w3);
    const ModeOperator p0 = spectral_projection(w3, 0);
    const ModeOperator p = u * p0 * u.adjoint();
    const ModeOperator q = spectral_projection(w3, -2);
    conj_worst = std::max(conj_worst, std::abs(relative_eta(p, p0)));
    additivity_worst = std::max(
        additivity_worst, std::abs(relative_eta(p, q) + relative_eta(q, p0) - relative_eta(p, p0)));
  }
  out.push_back(numeric_case("grassmannian.relative_eta_unitary_invariance", conj_worst, 0.0,
                             1e-10, "e:releta"));
  out.push_back(numeric_case("grassmannian.relative_eta_additivity", additivity_worst, 0.0, 1e-10,
                             "e:releta"));

  double spectral_eta_worst = 0.0, antisym_worst = 0.0;
  for (int k = 1; k <= 19; ++k) {
    const double a = 0.05 * k;
    spectral_eta_worst = std::max(spectral_eta_worst, std::abs(eta_invariant_spectral(a) - (1.0 - 2.0 * a)));
    antisym_worst = std::max(antisym_worst,
                             std::abs(eta_invariant_spectral(a) + eta_invariant_spectral(1.0 - a)));
  }
  out.push_back(numeric_case("grassmannian.eta_spectral_linear", spectral_eta_worst, 0.0, 1e-10,
                             "e:etareg"));
  out.push_back(numeric_case("grassmannian.eta_spectral_antisymmetry", antisym_worst, 0.0, 1e-10,
                             "e:etareg"));

  {
    const EtaComparison c = eta_finite_rank_check(0.25, 0, w8);
    out.push_back(numeric_case("grassmannian.eta_flip_zero_mode_lhs", c.lhs, 2.0, 1e-10, "e:releta"));
    out.push_back(numeric_case("grassmannian.eta_flip_zero_mode_rhs", c.rhs, 2.0, 1e-10, "e:etareg"));
  }
  auto ge = rng::stream(opts.seed, "grassmannian.eta_flips");
  double flip_worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double a = rng::uniform(ge, 0.02, 0.98);
    const int flip = std::uniform_int_distribution<int>(-8, 8)(ge);
    const EtaComparison c = eta_finite_rank_check(a, flip, w8);
    flip_worst = std::max(flip_worst, std::abs(c.lhs - c.rhs));
  }
  out.push_back(numeric_case("grassmannian.eta_finite_rank_20_pairs", flip_worst, 0.0, 1e-10,
                             "e:releta"));

  {
    Matrix k = Matrix::Zero(5, 5);
    k(2, 2) = 1.0;
    out.push_back(numeric_case("grassmannian.fredholm_det_rank_one",
                               std::abs(fredholm_det(identity_plus(w2, k)) - 2.0), 0.0, 1e-14,
                               "det ratio"));
  }
  auto gd = rng::stream(opts.seed, "grassmannian.fredholm_det");
  double mult_worst = 0.0, stable_worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const ModeOperator a = rng::random_perturbation(gd, w3, 0.3);
    const ModeOperator b = rng::random_perturbation(gd, w3, 0.3);
    const cplx dab = fredholm_det(a * b);
    mult_worst = std::max(mult_worst, std::abs(dab - fredholm_det(a) * fredholm_det(b)) / std::abs(dab));
    stable_worst = std::max(stable_worst, std::abs(fredholm_det(a.embedded(ModeWindow(6))) - fredholm_det(a)));
  }
  out.push_back(numeric_case("grassmannian.fredholm_det_multiplicative", mult_worst, 0.0, 1e-12,
                             "det ratio"));
  out.push_back(numeric_case("grassmannian.fredholm_det_window_stability", stable_worst, 0.0,
                             1e-12, "det ratio"));

  const ProjectionFamily rot = rotated_family(w3, -1, 0);
  const ModeOperator base = spectral_projection(w3, 0);
  {
    double defect = 0.0;
    for (double t1 : {0.0, 0.3, 0.7, 1.0})
      for (double t2 : {0.0, 0.25, 0.6}) {
        const ModeOperator p = rot({t1, t2});
        defect = std::max({defect, (p.entries * p.entries - p.entries).cwiseAbs().maxCoeff(),
                           (p.entries - p.entries.adjoint()).cwiseAbs().maxCoeff()});
      }
    out.push_back(numeric_case("grassmannian.rotated_family_projection", defect, 0.0, 1e-10, "Ps"));
  }
  out.push_back(numeric_case(
      "grassmannian.connection_form_zero_at_t1_0",
      std::abs(connection_form(rot, base, {0.0, 0.37}, Direction::T1, st)) +
          std::abs(connection_form(rot, base, {0.0, 0.37}, Direction::T2, st)),
      0.0, 1e-10, "omega det k w"));

  {
    auto gu = rng::stream(opts.seed, "grassmannian.connection_conjugation");
    const ModeOperator v = rng::random_unitary(gu, w3);
    const ProjectionFamily rot_v = conjugated_family(rot, v);
    const ModeOperator base_v = v * base * v.adjoint();
    const Param2 t{0.4, 0.3};
    const double diff =
        std::abs(connection_form(rot, base, t, Direction::T1, st) -
                 connection_form(rot_v, base_v, t, Direction::T1, st)) +
        std::abs(connection_form(rot, base, t, Direction::T2, st) -
                 connection_form(rot_v, base_v, t, Direction::T2, st));
    out.push_back(numeric_case("grassmannian.connection_form_conjugation_invariance", diff, 0.0,
                               1e-8, "omega det k w"));
  }

  {
    const Param2 t{0.5, 0.5};
    const cplx d_omega = curvature_rkw(rot, base, t, st);
    const cplx trace = trace_pdpdp(rot, t, st);
    out.push_back(numeric_case("grassmannian.curvature_vs_trpdpdp_rotated",
                               std::abs(d_omega - trace), 0.0, 1e-3, "localrkw"));
    out.push_back(numeric_case("grassmannian.curvature_rotated_closed_form",
                               std::abs(d_omega - cplx(0.0, -pi * pi)), 0.0, 1e-3,
                               "curv=kahler Gr"));
    const cplx chern = boundary_chern_form_2(rot, constant_family(base), t, st);
    out.push_back(numeric_case("grassmannian.curvature_vs_boundary_chern_form",
                               std::abs(d_omega - chern), 0.0, 1e-3, "rkw"));
  }

  auto gs = rng::stream(opts.seed, "grassmannian.charts");
  const ModeOperator s1 = rng::random_smoothing(gs, w3, 0.2);
  const ModeOperator s2 = rng::random_smoothing(gs, w3, 0.2);
  const ModeOperator s3 = rng::random_smoothing(gs, w3, 0.2);
  const SmoothingFamily sigma1 = [s1](Param2) { return s1; };
  const SmoothingFamily sigma2 = [s2](Param2 t) {
    ModeOperator s = s2;
    s.entries *= std::cos(t.t1 + 2.0 * t.t2);
    return s;
  };
  const SmoothingFamily sigma3 = [s3](Param2) { return s3; };
  {
    double worst_patch = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Param2 t{rng::uniform(gs, 0.05, 0.6), rng::uniform(gs, 0.0, 1.0)};
      const Direction d = k % 2 == 0 ? Direction::T1 : Direction::T2;
      const PatchingComparison c = patching_identity_check(rot, sigma1, sigma2, base, t, d, st);
      worst_patch = std::max(worst_patch, std::abs(c.lhs - c.rhs));
    }
    out.push_back(numeric_case("grassmannian.connection_patching_10_points", worst_patch, 0.0,
                               1e-5, "connection patching"));
  }
  {
    const Param2 t{0.35, 0.2};
    const cplx prod = transition_function(rot, sigma1, sigma2, base, t) *
                      transition_function(rot, sigma2, sigma3, base, t) *
                      transition_function(rot, sigma3, sigma1, base, t);
    out.push_back(numeric_case("grassmannian.transition_cocycle", std::abs(prod - 1.0), 0.0,
                               1e-10, "transition Det sp"));
    const double chart_diff =
        std::abs(curvature_rkw(rot, sigma1, base, t, st) - curvature_rkw(rot, sigma2, base, t, st));
    out.push_back(numeric_case("grassmannian.curvature_chart_independence", chart_diff, 0.0, 1e-3,
                               "connection patching"));
  }
  {
    const StokesComparison c = stokes_check(rot, base, 0.8, 1.0, 4, st);
    out.push_back(numeric_case("grassmannian.stokes_rotated_family",
                               std::abs(c.boundary - c.area), 0.0, 1e-2, "localrkw"));
    const cplx closed(0.0, -pi * (1.0 - std::cos(0.8 * pi)));
    out.push_back(numeric_case("grassmannian.stokes_rotated_closed_form",
                               std::abs(c.area - closed), 0.0, 1e-2, "localrkw"));
  }
}

void run_detline_suite(std::vector<Case>& out, const RunOptions& opts) {
  using namespace det_line;
  using grassmannian::Matrix;
  using grassmannian::ModeWindow;
  const ModeWindow w(3);
  const ModeOperator id = ModeOperator::identity(w);
  const std::string anchor = "det ratio";

  out.push_back(numeric_case("detline.ratio_identity",
                             std::abs(ratio(det_point(id), det_point(id)) - 1.0), 0.0, 1e-14,
                             anchor));
  {
    Matrix k = Matrix::Zero(w.dim(), w.dim());
    k(w.index_of(0), w.index_of(0)) = -1.0;
    out.push_back(check_case("detline.singular_point_is_zero",
                             det_point(grassmannian::identity_plus(w, k)).is_zero(), anchor,
                             "det T = 0 iff T not invertible"));
    k(w.index_of(0), w.index_of(0)) = 1.0;
    out.push_back(numeric_case(
        "detline.rank_one_ratio",
        std::abs(ratio(det_point(grassmannian::identity_plus(w, k)), det_point(id)) - 2.0), 0.0,
        1e-14, anchor));
  }

  auto g = rng::stream(opts.seed, "detline.random_instances");
  double equiv = 0.0, trans = 0.0, detratio = 0.0, scalar = 0.0, mult = 0.0;
  bool index_ok = true;
  for (int k = 0; k < 100; ++k) {
    const ModeOperator s = rng::random_perturbation(g, w, 0.3);
    const ModeOperator q = rng::random_perturbation(g, w, 0.3);
    const ModeOperator t = rng::random_perturbation(g, w, 0.3);
    const cplx lambda(rng::uniform(g, 0.5, 2.0), rng::uniform(g, -1.0, 1.0));
    const cplx mu(rng::uniform(g, -2.0, 2.0), rng::uniform(g, -2.0, 2.0));

    const DetPoint p(s, lambda);
    equiv = std::max(equiv, std::abs(ratio(p.right_multiplied(q),
                                           DetPoint(s, lambda * grassmannian::fredholm_det(q))) -
                                     1.0));
    const DetPoint pq = det_point(q), pt = det_point(t);
    trans = std::max(trans, std::abs(ratio(p, pq) * ratio(pq, pt) - ratio(p, pt)) /
                                std::abs(ratio(p, pt)));
    const cplx direct = Matrix(s.entries * t.entries.inverse()).determinant();
    detratio = std::max(detratio, std::abs(ratio(det_point(s), pt) - direct) / std::abs(direct));
    scalar = std::max(scalar, std::abs(ratio(p.scaled(mu), pt) - mu * ratio(p, pt)) /
                                  std::abs(mu * ratio(p, pt)));

    const TensorSplit ref = tensor_split(s, q);
    const ModeOperator s2 = rng::random_perturbation(g, w, 0.3) * s;
    const ModeOperator q2 = q * rng::random_perturbation(g, w, 0.3);
    const TensorSplit moved = tensor_split(s2, q2);
    const cplx lhs = ratio(moved.product, ref.product);
    mult = std::max(mult, std::abs(lhs - ratio(moved.factors, ref.factors)) / std::abs(lhs));

    // partial isometries C^n1 -> C^n2 -> C^n3 of random rank
    std::uniform_int_distribution<int> dim(1, 7);
    const int n1 = dim(g), n2 = dim(g), n3 = dim(g);
    auto partial_isometry = [&](int rows, int cols) {
      const int r = std::uniform_int_distribution<int>(0, std::min(rows, cols))(g);
      Eigen::HouseholderQR<Matrix> qa(rng::gaussian_matrix(g, rows, rows));
      Eigen::HouseholderQR<Matrix> qb(rng::gaussian_matrix(g, cols, cols));
      const Matrix ua = Matrix(qa.householderQ()).leftCols(r);
      const Matrix ub = Matrix(qb.householderQ()).leftCols(r);
      return Matrix(ua * ub.adjoint());
    };
    const Matrix a2 = partial_isometry(n2, n1), a1 = partial_isometry(n3, n2);
    index_ok = index_ok && fredholm_index(a1 * a2) == fredholm_index(a1) + fredholm_index(a2);
  }
  out.push_back(numeric_case("detline.equivalence_100", equiv, 0.0, 1e-10, "det line"));
  out.push_back(numeric_case("detline.ratio_transitivity_100", trans, 0.0, 1e-10, anchor));
  out.push_back(numeric_case("detline.ratio_is_det_F_100", detratio, 0.0, 1e-10, anchor));
  out.push_back(numeric_case("detline.scalar_action_100", scalar, 0.0, 1e-10, "det line"));
  out.push_back(numeric_case("detline.multiplicativity_100", mult, 0.0, 1e-10, "mult in bundle"));
  out.push_back(check_case("detline.index_additivity_100", index_ok, "ind P",
                           "Ind A1 A2 = Ind A1 + Ind A2 on random partial isometries"));

  bool division = false;
  Matrix k = Matrix::Zero(w.dim(), w.dim());
  k(0, 0) = -1.0;
  try {
    ratio(det_point(id), det_point(grassmannian::identity_plus(w, k)));
  } catch (const DivisionByZeroPoint&) {
    division = true;
  }
  out.push_back(check_case("detline.division_by_zero_point", division, anchor));
}

void run_chern_suite(std::vector<Case>& out, const RunOptions&) {
  using namespace chern;
  const std::string anchor = "GRR 2";
  const RationalSeries todd = todd_series(kDefaultCap);

  auto render = [](const RationalSeries& s, int upto) {
    std::string r = "[";
    for (int k = 0; k <= upto; ++k) r += (k ? ", " : "") + chern::to_string(s[k]);
    return r + "]";
  };
  out.push_back(exact_case("chern.todd_cap2", render(todd_series(2), 2), "[1, 1/2, 1/12]", "GRR"));
  out.push_back(exact_case("chern.todd_xi3_xi4", chern::to_string(todd[3]) + ", " + chern::to_string(todd[4]),
                           "0, -1/720", "GRR"));
  out.push_back(exact_case("chern.todd_defining_identity", render(todd_denominator() * todd, kDefaultCap),
                           render(one_series(kDefaultCap), kDefaultCap), "GRR"));
  out.push_back(exact_case("chern.exp_m1_cap2", render(exp_series(Rational(1), 2), 2),
                           "[1, 1, 1/2]", "GRR"));
  out.push_back(exact_case("chern.exp_homomorphism",
                           render(exp_series(Rational(2, 3)) * exp_series(Rational(-5, 7)), kDefaultCap),
                           render(exp_series(Rational(2, 3) + Rational(-5, 7)), kDefaultCap), "GRR"));

  for (long m = -10; m <= 10; ++m) {
    out.push_back(exact_case("chern.grr_c1_m" + std::to_string(m), chern::to_string(grr_c1_coefficient(m)),
                             chern::to_string(Rational(6 * m * m + 6 * m + 1, 12)), anchor));
  }
  bool linear_ok = true, duality_ok = true;
  for (long m = -10; m <= 10; ++m) {
    linear_ok = linear_ok && grr_linear_coefficient(m) == Rational(2 * m + 1, 2);
    duality_ok = duality_ok && grr_c1_coefficient(m) == grr_c1_coefficient(-1 - m);
  }
  out.push_back(check_case("chern.grr_linear_m_plus_half", linear_ok, "GRR",
                           "xi^1 coefficient equals m + 1/2 for m in -10..10"));
  out.push_back(check_case("chern.grr_serre_symmetry", duality_ok, anchor,
                           "c1(m) = c1(-1-m) for m in -10..10"));

  const RationalSeries a(kDefaultCap, {Rational(1, 2), Rational(-3), Rational(2, 5), Rational(7)});
  const RationalSeries b(kDefaultCap, {Rational(-1), Rational(1, 3), Rational(0), Rational(9, 4)});
  const RationalSeries c = todd;
  const bool ring_ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                       a * b == b * a;
  out.push_back(check_case("chern.ring_laws", ring_ok, "GRR", "associativity, distributivity, commutativity"));
}

}  // namespace detline::report
