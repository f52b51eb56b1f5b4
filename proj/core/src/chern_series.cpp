#include "detline/chern_series.hpp"

#include <stdexcept>

#include "detline/errors.hpp"

namespace detline::chern {

RationalSeries::RationalSeries(int cap) : cap_(cap), coeffs_(static_cast<std::size_t>(cap) + 1) {
  if (cap < 0) throw DomainError("series cap must be non-negative");
}

RationalSeries::RationalSeries(int cap, std::vector<Rational> coeffs) : RationalSeries(cap) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  for (std::size_t k = 0; k < n; ++k) coeffs_[k] = std::move(coeffs[k]);
}

Rational RationalSeries::operator[](int k) const {
  if (k < 0 || k > cap_) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

RationalSeries RationalSeries::inverse() const {
  if (coeffs_[0] == 0) throw DomainError("series with zero constant term is not invertible");
  RationalSeries out(cap_);
  out.coeffs_[0] = Rational(1) / coeffs_[0];
  for (int k = 1; k <= cap_; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = -acc / coeffs_[0];
  }
  return out;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out(std::min(a.cap_, b.cap_));
  for (int k = 0; k <= out.cap_; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out(std::min(a.cap_, b.cap_));
  for (int k = 0; k <= out.cap_; ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries out(std::min(a.cap_, b.cap_));
  for (int k = 0; k <= out.cap_; ++k) {
    Rational acc(0);
    for (int j = 0; j <= k; ++j) acc += a.coeffs_[j] * b.coeffs_[k - j];
    out.coeffs_[k] = std::move(acc);
  }
  return out;
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
  return a.cap_ == b.cap_ && a.coeffs_ == b.coeffs_;
}

RationalSeries one_series(int cap) { return {cap, {Rational(1)}}; }

RationalSeries exp_series(const Rational& m, int cap) {
  std::vector<Rational> c(static_cast<std::size_t>(cap) + 1);
  Rational term(1);
  for (int k = 0; k <= cap; ++k) {
    c[k] = term;
    term = term * m / (k + 1);
  }
  return {cap, std::move(c)};
}

RationalSeries todd_denominator(int cap) {
  // (1 - e^{-xi}) / xi = sum_k (-1)^k xi^k / (k+1)!
  std::vector<Rational> c(static_cast<std::size_t>(cap) + 1);
  Rational term(1);
  for (int k = 0; k <= cap; ++k) {
    c[k] = term;
    term = -term / (k + 2);
  }
  return {cap, std::move(c)};
}

RationalSeries todd_series(int cap) {
  if (cap < 2) throw DomainError("todd_series needs cap >= 2");
  return todd_denominator(cap).inverse();
}

RationalSeries grr_integrand(long m, int cap) { return exp_series(Rational(m), cap) * todd_series(cap); }

Rational grr_c1_coefficient(long m) { return grr_integrand(m)[2]; }

Rational grr_linear_coefficient(long m) { return grr_integrand(m)[1]; }

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace detline::chern
