// Acceptance criteria, one line each. Exit status is nonzero if any fails.

#include <Eigen/LU>
#include <Eigen/QR>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "detline/boundary_grassmannian.hpp"
#include "detline/chern_series.hpp"
#include "detline/det_line.hpp"
#include "detline/interval_cp1.hpp"
#include "detline/random.hpp"

namespace {

using namespace detline;
using cplx = std::complex<double>;
using std::numbers::pi;

constexpr std::uint64_t kSeed = 7;

// Tolerances and limits.
constexpr double kTolZetaDet = 1e-8;
constexpr double kTolCurvature = 1e-4;
constexpr double kTolPatching = 1e-8;
constexpr double kTolEta = 1e-10;
constexpr double kTolConnectionPatch = 1e-5;
constexpr double kTolCurvatureGr = 1e-3;
constexpr double kTolCocycle = 1e-10;
constexpr double kTolDet = 1e-10;
constexpr double kRuntimeCriterion1 = 10.0;
constexpr double kRuntimeCriterion2 = 30.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double closed_det(cplx z) { return 2.0 * std::norm(1.0 + z) / (1.0 + std::norm(z)); }

template <class F>
void grid(int n, double lo, double hi, F&& f) {
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const cplx z(lo + i * (hi - lo) / (n - 1), lo + j * (hi - lo) / (n - 1));
      if (std::abs(z + 1.0) < cp1::kZeroModeExclusion * (1.0 - 1e-12)) continue;
      f(z);
    }
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int points = 0;
  grid(21, -2.0, 2.0, [&](cplx z) {
    worst = std::max(worst, std::abs(cp1::zeta_det_spectral(z) - closed_det(z)) / closed_det(z));
    ++points;
  });
  double spot = 0.0;
  for (auto [z, v] : {std::pair{cplx(0.0), 2.0}, {cplx(1.0), 4.0}, {cplx(0.0, 1.0), 2.0}})
    spot = std::max({spot, std::abs(cp1::zeta_det_closed(z) - v) / v,
                     std::abs(cp1::zeta_det_spectral(z) - v) / v});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst < kTolZetaDet && spot < kTolZetaDet && secs < kRuntimeCriterion1,
          fmt("max rel err %.2e over %g points, spot %.2e", worst, points, spot) +
              fmt(", %.3f s", secs)};
}

Outcome criterion2() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int points = 0;
  grid(5, -0.5, 0.5, [&](cplx z) {
    const double exact = 1.0 / std::pow(1.0 + std::norm(z), 2);
    worst = std::max(worst, std::abs(cp1::quillen_curvature_fd(z) - exact) / exact);
    ++points;
  });
  const double origin = cp1::quillen_curvature_fd(0.0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {points == 25 && worst < kTolCurvature && std::abs(origin - 1.0) < kTolCurvature &&
              secs < kRuntimeCriterion2,
          fmt("max rel err %.2e at %g points, F(0) = %.8f", worst, points, origin) +
              fmt(", %.3f s", secs)};
}

Outcome criterion3() {
  double worst_kahler = 0.0, worst_trace = 0.0;
  grid(5, -0.5, 0.5, [&](cplx z) {
    const double fd = cp1::quillen_curvature_fd(z);
    const double kahler = cp1::kahler_form_2x2(z);
    const double trace = cp1::kKahlerOrientationSign * cp1::trace_pdpdp_2x2(z).real();
    worst_kahler = std::max(worst_kahler, std::abs(fd - kahler) / kahler);
    worst_trace = std::max(worst_trace, std::abs(kahler - trace) / kahler);
  });
  // the Calderon family is constant, so its Kahler term vanishes
  const bool constant_calderon =
      (cp1::calderon_projection_interval().entries - cp1::projection_from_chart(1.0).entries).norm() <
      1e-15;
  return {worst_kahler < kTolCurvature && worst_trace < kTolCurvature && constant_calderon,
          fmt("fd vs kahler %.2e, kahler vs Tr(PdPdP) %.2e", worst_kahler, worst_trace)};
}

Outcome criterion4() {
  auto g = rng::stream(kSeed, "acceptance.metric_patching");
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    cplx z, w;
    do z = rng::uniform_disk_point(g, 2.5); while (std::abs(z + 1.0) < cp1::kZeroModeExclusion);
    do w = rng::uniform_disk_point(g, 2.5); while (std::abs(w + 1.0) < cp1::kZeroModeExclusion);
    const double lhs = cp1::zeta_det_spectral(z) / cp1::zeta_det_spectral(w);
    const double rhs = std::norm(cp1::s_of_p(z)) / std::norm(cp1::s_of_p(w));
    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
  }
  double constant = 0.0;
  grid(21, -2.0, 2.0, [&](cplx z) {
    constant = std::max(constant, std::abs(cp1::zeta_det_spectral(z) / std::norm(cp1::s_of_p(z)) - 4.0) / 4.0);
  });
  return {worst < kTolPatching && constant < kTolPatching,
          fmt("50 pairs max rel err %.2e, det = 4|S|^2 within %.2e", worst, constant)};
}

Outcome criterion5() {
  using namespace grassmannian;
  const ModeWindow w(5);
  bool exact = true;
  int sign = 0;
  bool one_sign = true;
  for (int k = -5; k <= 5; ++k) {
    const double eta = relative_eta(spectral_projection(w, k), spectral_projection(w, 0));
    exact = exact && eta == -2.0 * k;
    const int index = relative_index(spectral_projection(w, k), spectral_projection(w, 0));
    if (k != 0) {
      const int s = (eta / 2.0) / index > 0 ? 1 : -1;
      if (sign == 0) sign = s;
      one_sign = one_sign && s == sign && std::abs(eta / 2.0 - s * index) < kTolEta;
    } else {
      one_sign = one_sign && index == 0;
    }
  }
  auto g = rng::stream(kSeed, "acceptance.eta_flips");
  double flips = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double a = rng::uniform(g, 0.02, 0.98);
    const int flip = std::uniform_int_distribution<int>(-8, 8)(g);
    const EtaComparison c = eta_finite_rank_check(a, flip, ModeWindow(8));
    flips = std::max(flips, std::abs(c.lhs - c.rhs));
  }
  double linear = 0.0;
  for (int k = 1; k <= 19; ++k)
    linear = std::max(linear, std::abs(eta_invariant_spectral(0.05 * k) - (1.0 - 0.1 * k)));
  return {exact && one_sign && sign == kEtaIndexSign && flips < kTolEta && linear < kTolEta,
          fmt("eta = -2k exact, global sign %+g, flips %.2e, eta(a) err %.2e", sign, flips, linear)};
}

Outcome criterion6() {
  using namespace grassmannian;
  const ModeWindow w(3);
  const ModeOperator base = spectral_projection(w, 0);
  const ProjectionFamily rot = rotated_family(w, -1, 0);
  const specfun::FdStencil st{specfun::kDefaultFdStep, 4};
  auto g = rng::stream(kSeed, "acceptance.charts");
  const ModeOperator s1 = rng::random_smoothing(g, w, 0.2), s2 = rng::random_smoothing(g, w, 0.2),
                     s3 = rng::random_smoothing(g, w, 0.2);
  const SmoothingFamily sig1 = [s1](Param2) { return s1; };
  const SmoothingFamily sig2 = [s2](Param2 t) {
    ModeOperator s = s2;
    s.entries *= std::cos(t.t1 + 2.0 * t.t2);
    return s;
  };
  const SmoothingFamily sig3 = [s3](Param2) { return s3; };
  double patch = 0.0, cocycle = 0.0;
  for (int k = 0; k < 10; ++k) {
    const Param2 t{rng::uniform(g, 0.05, 0.6), rng::uniform(g, 0.0, 1.0)};
    const Direction d = k % 2 == 0 ? Direction::T1 : Direction::T2;
    const PatchingComparison c = patching_identity_check(rot, sig1, sig2, base, t, d, st);
    patch = std::max(patch, std::abs(c.lhs - c.rhs));
    const cplx prod = transition_function(rot, sig1, sig2, base, t) *
                      transition_function(rot, sig2, sig3, base, t) *
                      transition_function(rot, sig3, sig1, base, t);
    cocycle = std::max(cocycle, std::abs(prod - 1.0));
  }
  double curvature = 0.0;
  for (Param2 t : {Param2{0.2, 0.3}, Param2{0.5, 0.5}, Param2{0.7, 0.1}}) {
    const cplx d_omega = curvature_rkw(rot, base, t, st);
    curvature = std::max({curvature, std::abs(d_omega - trace_pdpdp(rot, t, st)),
                          std::abs(d_omega - cplx(0.0, -pi * pi * std::sin(pi * t.t1)))});
  }
  return {patch < kTolConnectionPatch && curvature < kTolCurvatureGr && cocycle < kTolCocycle,
          fmt("dlog g - (w1 - w2) %.2e, dw - Tr(P[dP,dP]) %.2e, cocycle %.2e", patch, curvature,
              cocycle)};
}

Outcome criterion7() {
  using namespace det_line;
  using grassmannian::Matrix;
  const grassmannian::ModeWindow w(3);
  auto g = rng::stream(kSeed, "acceptance.det_line");
  double equiv = 0.0, trans = 0.0, mult = 0.0;
  bool index_ok = true;
  for (int k = 0; k < 100; ++k) {
    const ModeOperator s = rng::random_perturbation(g, w, 0.3), q = rng::random_perturbation(g, w, 0.3),
                       t = rng::random_perturbation(g, w, 0.3);
    const cplx lambda(rng::uniform(g, 0.5, 2.0), rng::uniform(g, -1.0, 1.0));
    const DetPoint p(s, lambda);
    equiv = std::max(equiv, std::abs(ratio(p.right_multiplied(q), DetPoint(s, lambda * grassmannian::fredholm_det(q))) - 1.0));
    trans = std::max(trans, std::abs(ratio(p, det_point(q)) * ratio(det_point(q), det_point(t)) -
                                     ratio(p, det_point(t))) /
                                std::abs(ratio(p, det_point(t))));
    const TensorSplit ab = tensor_split(s, q), tb = tensor_split(t, q);
    const cplx lhs = ratio(ab.product, tb.product);
    mult = std::max(mult, std::abs(lhs - ratio(ab.factors, tb.factors)) / std::abs(lhs));

    std::uniform_int_distribution<int> dim(1, 7);
    const int n1 = dim(g), n2 = dim(g), n3 = dim(g);
    auto partial_isometry = [&](int rows, int cols) {
      const int r = std::uniform_int_distribution<int>(0, std::min(rows, cols))(g);
      const Matrix ua = Matrix(Eigen::HouseholderQR<Matrix>(rng::gaussian_matrix(g, rows, rows)).householderQ()).leftCols(r);
      const Matrix ub = Matrix(Eigen::HouseholderQR<Matrix>(rng::gaussian_matrix(g, cols, cols)).householderQ()).leftCols(r);
      return Matrix(ua * ub.adjoint());
    };
    const Matrix a2 = partial_isometry(n2, n1), a1 = partial_isometry(n3, n2);
    index_ok = index_ok && fredholm_index(a1 * a2) == fredholm_index(a1) + fredholm_index(a2);
  }
  return {equiv < kTolDet && trans < kTolDet && mult < kTolDet && index_ok,
          fmt("equivalence %.2e, transitivity %.2e, multiplicativity %.2e", equiv, trans, mult) +
              (index_ok ? ", index additive" : ", index NOT additive")};
}

Outcome criterion8() {
  bool ok = true;
  for (long m = -10; m <= 10; ++m) {
    const chern::RationalSeries s = chern::grr_integrand(m);
    ok = ok && s[2] == chern::Rational(6 * m * m + 6 * m + 1, 12) &&
         s[1] == chern::Rational(2 * m + 1, 2);
  }
  return {ok, "xi^2 = (6m^2+6m+1)/12 and xi^1 = m+1/2 for m in -10..10"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"CP1 zeta determinant vs closed form", criterion1},
      {"curvature of the Quillen metric = Kahler form", criterion2},
      {"curvature = Kahler form = Tr(P dP dP) with constant Calderon family", criterion3},
      {"Quillen metric patching", criterion4},
      {"relative eta and index", criterion5},
      {"connection patching, curvature and cocycle", criterion6},
      {"determinant-line algebra", criterion7},
      {"GRR degree-two coefficient", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
