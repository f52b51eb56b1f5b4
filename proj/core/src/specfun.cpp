#include "detline/specfun.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <numbers>
#include <string>

namespace detline::specfun {
namespace {

void check_em(int em_order, int cutoff) {
  if (em_order < 2 || em_order % 2 != 0)
    throw DomainError("em_order must be an even integer >= 2, got " + std::to_string(em_order));
  if (cutoff < 10) throw DomainError("cutoff must be >= 10, got " + std::to_string(cutoff));
}

// B_{2k} / (2k)!
double bernoulli_over_factorial(int k) {
  return boost::math::bernoulli_b2n<double>(k) / std::tgamma(2.0 * k + 1.0);
}

}  // namespace

cplx hurwitz_zeta(const HurwitzParams& p) {
  if (!(p.a > 0.0 && p.a <= 1.0))
    throw DomainError("Hurwitz shift a must lie in (0, 1], got " + std::to_string(p.a));
  check_em(p.em_order, p.cutoff);
  const cplx s = p.s;
  if (std::abs(s - 1.0) < 1e-12) throw PoleAtOne("zeta(s, a) has a simple pole at s = 1");

  cplx sum{0.0, 0.0};
  for (int n = 0; n < p.cutoff; ++n) sum += std::exp(-s * std::log(n + p.a));

  const double x = p.cutoff + p.a;
  const double logx = std::log(x);
  const cplx x_pow_ms = std::exp(-s * logx);
  sum += x * x_pow_ms / (s - 1.0);
  sum += 0.5 * x_pow_ms;

  // Rising factorial (s)_{2k-1} = s (s+1) ... (s+2k-2), updated two factors at a time.
  cplx rising = s;
  double x_pow = 1.0 / x;  // x^{1-2k}
  for (int k = 1; k <= p.em_order; ++k) {
    sum += bernoulli_over_factorial(k) * rising * x_pow_ms * x_pow;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    x_pow /= x * x;
  }
  return sum;
}

double hurwitz_zeta_ds0(double a, int em_order, int cutoff) {
  if (!(a > 0.0 && a < 1.0))
    throw DomainError("hurwitz_zeta_ds0 needs a in (0, 1), got " + std::to_string(a));
  check_em(em_order, cutoff);

  double value = 0.0;
  for (int n = 0; n < cutoff; ++n) value -= std::log(n + a);

  const double x = cutoff + a;
  const double logx = std::log(x);
  value += x * logx - x - 0.5 * logx;

  // d/ds [(s)_{2k-1}] at s = 0 is (2k-2)!, so the k-th term reduces to
  // B_{2k} / (2k (2k-1)) x^{1-2k}.
  double x_pow = 1.0 / x;
  for (int k = 1; k <= em_order; ++k) {
    value += boost::math::bernoulli_b2n<double>(k) / (2.0 * k * (2.0 * k - 1.0)) * x_pow;
    x_pow /= x * x;
  }

  const double lerch = std::lgamma(a) - 0.5 * std::log(2.0 * std::numbers::pi);
  if (std::abs(value - lerch) > 1e-10)
    throw std::logic_error("hurwitz_zeta_ds0 disagrees with the Lerch identity at a = " +
                           std::to_string(a));
  return value;
}

void FdStencil::validate() const {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  if (order != 2 && order != 4) throw DomainError("finite-difference order must be 2 or 4");
}

double fd_apply(const PlaneField& f, PlanePoint at, const FdStencil& st) {
  st.validate();
  auto sample = [&f](double x, double y) {
    const double v = f(x, y);
    if (!std::isfinite(v))
      throw EvaluationError("non-finite sample at (" + std::to_string(x) + ", " +
                            std::to_string(y) + ")");
    return v;
  };

  if (st.kind == StencilKind::FirstDerivative) {
    if (st.axis == Axis::X)
      return fd_derivative([&](double x) { return sample(x, at.y); }, at.x, st.step, st.order);
    return fd_derivative([&](double y) { return sample(at.x, y); }, at.y, st.step, st.order);
  }

  const double h = st.step;
  const double c = sample(at.x, at.y);
  if (st.order == 2) {
    return (sample(at.x + h, at.y) + sample(at.x - h, at.y) + sample(at.x, at.y + h) +
            sample(at.x, at.y - h) - 4.0 * c) /
           (h * h);
  }
  // Sum of the 1D fourth-order second-derivative stencils along each axis.
  auto second = [&](auto&& g) {
    return (-g(2.0 * h) + 16.0 * g(h) - 30.0 * c + 16.0 * g(-h) - g(-2.0 * h)) / (12.0 * h * h);
  };
  return second([&](double d) { return sample(at.x + d, at.y); }) +
         second([&](double d) { return sample(at.x, at.y + d); });
}

}  // namespace detline::specfun
