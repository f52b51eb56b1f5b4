#include <doctest.h>

#include "detline/chern_series.hpp"

using namespace detline::chern;

namespace {

// Bernoulli numbers B_0..B_n with B_1 = -1/2 from sum_{k<=n} C(n+1, k) B_k = 0.
std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    Rational binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      s += binom * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -s / (m + 1);
  }
  return b;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Rational binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// B_n(x) = sum_k C(n, k) B_k x^{n-k}
Rational bernoulli_poly(int n, const Rational& x) {
  const auto b = bernoulli(n);
  Rational out = 0;
  for (int k = 0; k <= n; ++k) {
    Rational power = 1;
    for (int j = 0; j < n - k; ++j) power *= x;
    out += binomial(n, k) * b[k] * power;
  }
  return out;
}

}  // namespace

TEST_CASE("todd series coefficients are B_n(1) / n!") {
  const RationalSeries t = todd_series(12);
  for (int n = 0; n <= 12; ++n) CHECK(t[n] == bernoulli_poly(n, 1) / factorial(n));
  CHECK(to_string(t[2]) == "1/12");
  CHECK(to_string(t[4]) == "-1/720");
  CHECK(t[13] == 0);
}

TEST_CASE("e^{m xi} Todd(xi) has coefficients B_n(m + 1) / n!") {
  for (long m = -10; m <= 10; ++m) {
    const RationalSeries s = grr_integrand(m, 8);
    for (int n = 0; n <= 8; ++n) CHECK(s[n] == bernoulli_poly(n, Rational(m + 1)) / factorial(n));
    CHECK(grr_c1_coefficient(m) == Rational(6 * m * m + 6 * m + 1, 12));
    CHECK(grr_linear_coefficient(m) == Rational(2 * m + 1, 2));
  }
}

TEST_CASE("series ring laws") {
  const RationalSeries a(6, {Rational(2), Rational(1, 3), Rational(-4)});
  const RationalSeries b(6, {Rational(-1, 5), Rational(0), Rational(7, 2), Rational(1)});
  const RationalSeries c = todd_series(6);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * b == b * a);
  CHECK(a - a == RationalSeries(6));
  CHECK(a * a.inverse() == one_series(6));
  CHECK(todd_denominator(6) * todd_series(6) == one_series(6));
  CHECK_THROWS(RationalSeries(6, {Rational(0), Rational(1)}).inverse());
}

TEST_CASE("truncation to the smaller cap") {
  const RationalSeries a = exp_series(Rational(1), 3);
  const RationalSeries b = exp_series(Rational(1), 6);
  const RationalSeries p = a * b;
  CHECK(p.cap() == 3);
  CHECK(p == exp_series(Rational(2), 3));
  CHECK(to_string(exp_series(Rational(1), 4)[4]) == "1/24");
  CHECK(to_string(Rational(-6, 3)) == "-2");
}

TEST_CASE("exponential is a homomorphism") {
  for (const auto& [m, n] : {std::pair{Rational(1, 2), Rational(3)}, std::pair{Rational(-7, 3), Rational(2, 9)}})
    CHECK(exp_series(m) * exp_series(n) == exp_series(m + n));
}
