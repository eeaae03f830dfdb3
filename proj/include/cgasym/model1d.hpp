#pragma once

// One-dimensional model F(m, n) = integral over [-pi/2, pi/2] of cos^n(x) e^(imx) dx:
// exact closed forms, their large-n asymptotics and a quadrature oracle.

#include <gmpxx.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "cgasym/errors.hpp"
#include "cgasym/exact.hpp"
#include "cgasym/rational.hpp"

namespace cgasym {

struct ModelInput {
  std::int64_t m = 1;
  std::int64_t n = 1;
};

inline void validate(const ModelInput& in) {
  if (in.m < 1 || in.n < 1) throw DomainError("model1d needs positive integers m and n");
}

/// coefficient * (pi if times_pi).
struct ModelExact {
  mpq_class coefficient = 0;
  bool times_pi = false;

  double value() const {
    const double c = to_real<double>(coefficient);
    return times_pi ? c * std::numbers::pi : c;
  }
};

inline ModelExact f_exact(const ModelInput& in) {
  validate(in);
  const std::int64_t m = in.m, n = in.n;
  ModelExact r;
  if ((n - m) % 2 == 0) {
    r.times_pi = true;
    const std::int64_t k = (n - m) / 2;
    mpz_class pow2 = 1;
    pow2 <<= static_cast<mp_bitcnt_t>(n);
    r.coefficient = mpq_class(binomial(n, k), pow2);
  } else if (n < m) {
    const int sign = (((n + 1 - m) / 2) % 2 == 0) ? 1 : -1;
    mpz_class num = factorial(n) * factorial((m + n + 1) / 2) * factorial(m - n - 1);
    num <<= static_cast<mp_bitcnt_t>(n + 2);
    r.coefficient = mpq_class(sign * num, factorial(m + n + 1) * factorial((m - n - 1) / 2));
  } else {
    mpz_class num = factorial(n) * factorial((n + 1 - m) / 2) * factorial((n + 1 + m) / 2);
    num <<= static_cast<mp_bitcnt_t>(n + 2);
    r.coefficient = mpq_class(num, factorial(n + 1 - m) * factorial(n + 1 + m));
  }
  r.coefficient.canonicalize();
  return r;
}

/// Adaptive Gauss-Kronrod quadrature of the real and imaginary parts.
inline std::complex<double> f_quadrature(const ModelInput& in, double tol = 1e-12) {
  validate(in);
  if (!(tol >= 1e-12)) throw DomainError("quadrature tolerance must be at least 1e-12");
  using Q = boost::math::quadrature::gauss_kronrod<long double, 15>;
  const long double half_pi = std::numbers::pi_v<long double> / 2;
  const long double m = static_cast<long double>(in.m);
  const int n = static_cast<int>(in.n);
  auto integrate = [&](auto f) {
    long double err = 0, l1 = 0;
    // The integrand is bounded by 1 on an interval of length pi, so a relative
    // tolerance of tol / 4 bounds the absolute error by tol.
    const long double v = Q::integrate(f, -half_pi, half_pi, 20, static_cast<long double>(tol) / 4, &err, &l1);
    if (!(err <= tol)) throw ConvergenceError("quadrature error estimate " + std::to_string(static_cast<double>(err)));
    return static_cast<double>(v);
  };
  const double re = integrate([&](long double x) { return std::pow(std::cos(x), n) * std::cos(m * x); });
  const double im = integrate([&](long double x) { return std::pow(std::cos(x), n) * std::sin(m * x); });
  return {re, im};
}

/// Large-n approximation; excluded at the critical ratio m = n.
inline double f_asymptotic(const ModelInput& in) {
  validate(in);
  if (in.m == in.n) throw CriticalRatioError("m = n is the critical ratio of the model");
  const long double m = static_cast<long double>(in.m), n = static_cast<long double>(in.n);
  const long double r = m / n;
  const long double base = std::sqrt(2 * std::numbers::pi_v<long double> / n);
  if (in.n > in.m) return static_cast<double>(base * std::pow((1 - r) / (1 + r), m / 2) * std::pow(1 - r * r, -(n + 1) / 2));
  if ((in.n - in.m) % 2 == 0) return 0.0;
  const int sign = (((in.n + 1 - in.m) / 2) % 2 == 0) ? 1 : -1;
  return static_cast<double>(sign * 2 * base * std::pow((r - 1) / (r + 1), m / 2) * std::pow(r * r - 1, -(n + 1) / 2));
}

/// Magnitude of the Gaussian contribution of the single saddle at
/// x = pi/2 + i arccoth(m/n) (n < m): |cos x|^n e^(-m Im x) sqrt(2 pi / |h''|)
/// with h(x) = n log cos x + i m x.
inline double f_single_saddle_magnitude(const ModelInput& in) {
  validate(in);
  if (in.n >= in.m) throw DomainError("the pair of off-axis saddles exists only for n < m");
  const long double m = static_cast<long double>(in.m), n = static_cast<long double>(in.n);
  const long double y = std::atanh(n / m);  // arccoth(m/n)
  const std::complex<long double> x(std::numbers::pi_v<long double> / 2, y);
  const auto c = std::cos(x);
  const long double h2 = std::abs(-n / (c * c));
  return static_cast<double>(std::pow(std::abs(c), n) * std::exp(-m * y) * std::sqrt(2 * std::numbers::pi_v<long double> / h2));
}

}  // namespace cgasym
