#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <type_traits>

#include "detline/errors.hpp"

namespace detline::specfun {

using cplx = std::complex<double>;

/// Arguments of the Hurwitz zeta function zeta(s, a) = sum_{n>=0} (n+a)^{-s}.
///
/// `em_order` is the number of Bernoulli correction terms kept in the
/// Euler-Maclaurin tail, `cutoff` the number of terms summed directly.
/// The defaults give at least 12 significant digits for s near 0 and
/// a in (0.01, 1].
struct HurwitzParams {
  cplx s{0.0, 0.0};
  double a = 1.0;
  int em_order = 8;
  int cutoff = 50;
};

/// Analytic continuation of zeta(s, a) to s != 1.
/// Throws PoleAtOne when |s - 1| < 1e-12 and DomainError when a is not in
/// (0, 1] or the Euler-Maclaurin parameters are out of range.
cplx hurwitz_zeta(const HurwitzParams& p);

/// d/ds zeta(s, a) at s = 0, a in (0, 1).
///
/// Obtained by differentiating each Euler-Maclaurin term in closed form.
/// The result is checked against log Gamma(a) - log(2 pi)/2 before it is
/// returned; a mismatch above 1e-10 is a logic error.
double hurwitz_zeta_ds0(double a, int em_order = 8, int cutoff = 50);

inline constexpr double kDefaultFdStep = 1e-3;

enum class StencilKind { FirstDerivative, Laplacian2D };
enum class Axis { X, Y };

/// Central finite-difference stencil. `axis` selects the variable for
/// first derivatives and is ignored for the Laplacian.
struct FdStencil {
  double step = kDefaultFdStep;
  int order = 4;
  StencilKind kind = StencilKind::Laplacian2D;
  Axis axis = Axis::X;

  void validate() const;
};

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

using PlaneField = std::function<double(double, double)>;

/// First derivative or five-point (order 2) / nine-point (order 4) Laplacian
/// of `f` at `at`. Exceptions thrown by `f` propagate; a non-finite sample
/// raises EvaluationError.
double fd_apply(const PlaneField& f, PlanePoint at, const FdStencil& st);

/// Central first derivative of a vector-space valued function of one real
/// variable (doubles, complex numbers, Eigen matrices).
template <class F>
auto fd_derivative(F&& f, double x, double step, int order) {
  using R = std::decay_t<decltype(f(x))>;
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  if (order == 2) {
    R out = (f(x + step) - f(x - step)) / (2.0 * step);
    return out;
  }
  if (order == 4) {
    R out = (f(x - 2.0 * step) - 8.0 * f(x - step) + 8.0 * f(x + step) -
             f(x + 2.0 * step)) /
            (12.0 * step);
    return out;
  }
  throw DomainError("finite-difference order must be 2 or 4");
}

}  // namespace detline::specfun
