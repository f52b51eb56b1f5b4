#pragma once

// Truncated power series in one variable xi over exact rationals.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace detline::chern {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultCap = 8;

/// Element of Q[xi] / (xi^{cap+1}).
class RationalSeries {
 public:
  explicit RationalSeries(int cap);
  RationalSeries(int cap, std::vector<Rational> coeffs);

  int cap() const noexcept { return cap_; }
  /// Coefficient of xi^k; zero beyond the stored terms, including k > cap.
  Rational operator[](int k) const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Multiplicative inverse; requires a nonzero constant term.
  RationalSeries inverse() const;

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend bool operator==(const RationalSeries& a, const RationalSeries& b);

 private:
  int cap_;
  std::vector<Rational> coeffs_;  // size cap + 1
};

RationalSeries one_series(int cap);

/// e^{m xi}
RationalSeries exp_series(const Rational& m, int cap = kDefaultCap);

/// (1 - e^{-xi}) / xi
RationalSeries todd_denominator(int cap = kDefaultCap);

/// Todd generating function xi / (1 - e^{-xi}).
RationalSeries todd_series(int cap = kDefaultCap);

/// e^{m xi} Todd(xi): the integrand ch(T^m) Todd(T).
RationalSeries grr_integrand(long m, int cap = kDefaultCap);

/// Coefficient of xi^2 in e^{m xi} Todd(xi), i.e. (6m^2 + 6m + 1) / 12.
Rational grr_c1_coefficient(long m);

/// Coefficient of xi^1, i.e. m + 1/2.
Rational grr_linear_coefficient(long m);

/// "p/q" (or "p" for integers).
std::string to_string(const Rational& r);

}  // namespace detline::chern
