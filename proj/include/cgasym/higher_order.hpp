#pragma once

// Next-order stationary-phase value: each point's first-order term is multiplied
// by (1 + delta4 + delta6), with N evaluated by corrected Stirling factorials.
// Also the closed forms along m1 = m2 = m = 0.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "cgasym/errors.hpp"
#include "cgasym/first_order.hpp"
#include "cgasym/region_geometry.hpp"
#include "cgasym/stationary_phase.hpp"

namespace cgasym {

template <class Real = real>
struct CorrectionPair {
  complex_t<Real> delta4;
  complex_t<Real> delta6;

  complex_t<Real> sum() const { return delta4 + delta6; }
};

/// Quartic-term correction: the fourth derivatives contracted with the Gaussian
/// covariance, over 8 det^2.
template <class Real = real>
complex_t<Real> delta4(const DerivativeBundle<Real>& d) {
  const auto det = d.hessian_det();
  if (det == complex_t<Real>(0)) throw SingularError("zero Hessian determinant");
  const auto tt = d.g_tt, tp = d.g_tp, pp = d.g_pp;
  const Real two = 2, four = 4, eight = 8;
  const auto num = d.g_tttt * pp * pp - four * d.g_tttp * tp * pp + two * d.g_ttpp * (two * tp * tp + tt * pp) -
                   four * d.g_tppp * tt * tp + d.g_pppp * tt * tt;
  return num / (eight * det * det);
}

/// Squared-cubic-term correction, over 24 det^3.
template <class Real = real>
complex_t<Real> delta6(const DerivativeBundle<Real>& d) {
  const auto det = d.hessian_det();
  if (det == complex_t<Real>(0)) throw SingularError("zero Hessian determinant");
  const auto tt = d.g_tt, tp = d.g_tp, pp = d.g_pp;
  const auto T = d.g_ttt, Tp = d.g_ttp, Pt = d.g_tpp, P = d.g_ppp;
  const Real two = 2, three = 3, four = 4, five = 5, nine = 9, thirty = 30, k24 = 24;
  const auto num = two * tp * (three * tt * pp + two * tp * tp) * (T * P + nine * Tp * Pt) -
                   three * (tt * pp + four * tp * tp) *
                       (two * T * Pt * pp + two * P * Tp * tt + three * Tp * Tp * pp + three * Pt * Pt * tt) +
                   thirty * tp * (T * Tp * pp * pp + P * Pt * tt * tt) -
                   five * (T * T * pp * pp * pp + P * P * tt * tt * tt);
  return num / (k24 * det * det * det);
}

template <class Real = real>
CorrectionPair<Real> corrections(const DerivativeBundle<Real>& d) {
  return {delta4(d), delta6(d)};
}

template <class Real = real>
Real higher_order_as(const QuantumNumbers& q) {
  const auto terms = active_branch_terms<Real>(q, static_cast<Real>(log_n_corrected(q)));
  std::vector<complex_t<Real>> parts;
  for (const auto& t : terms) parts.push_back(t.value() * (Real(1) + corrections(t.derivatives).sum()));
  return realify(parts);
}

inline double higher_order(const QuantumNumbers& q) { return static_cast<double>(higher_order_as<real>(q)); }

// ---------------------------------------------------------------------------
// m = 0 closed forms

namespace detail {

struct M0Triple {
  long double j1, j2, j, beta2;
  std::int64_t sum;
  std::int64_t b;  // j1 + j2 - j
};

inline M0Triple m0_triple(std::int64_t j1, std::int64_t j2, std::int64_t j) {
  if (j1 < 0 || j2 < 0 || j < 0) throw DomainError("angular momenta must be nonnegative");
  if (j > j1 + j2 || j < j1 - j2 || j < j2 - j1) throw DomainError("j's violate the triangle inequalities");
  const mpq_class b2 = alpha_squared(j1, j2, j);
  if (sgn(b2) == 0) throw DomainError("beta = 0 for this triple");
  return {static_cast<long double>(j1), static_cast<long double>(j2), static_cast<long double>(j),
          to_real<long double>(b2), j1 + j2 + j, j1 + j2 - j};
}

}  // namespace detail

/// delta4 + delta6 at m = 0: a degree-6 polynomial over 12 j j1 j2 beta^2.
inline double m0_delta_sum(std::int64_t j1i, std::int64_t j2i, std::int64_t ji) {
  const auto t = detail::m0_triple(j1i, j2i, ji);
  const long double a = t.j1, b = t.j2, c = t.j;
  auto p = [](long double x, int n) { return std::pow(x, n); };
  const long double num = p(a, 5) * b - 2 * p(a, 3) * p(b, 3) + a * p(b, 5) + p(a, 5) * c - p(a, 3) * p(b, 2) * c -
                          p(a, 2) * p(b, 3) * c + p(b, 5) * c - p(a, 3) * b * p(c, 2) -
                          10 * p(a, 2) * p(b, 2) * p(c, 2) - a * p(b, 3) * p(c, 2) - 2 * p(a, 3) * p(c, 3) -
                          p(a, 2) * b * p(c, 3) - a * p(b, 2) * p(c, 3) - 2 * p(b, 3) * p(c, 3) + a * p(c, 5) +
                          b * p(c, 5);
  return static_cast<double>(num / (12 * c * a * b * t.beta2));
}

/// Next-order value at m = 0 including the factorial-correction bracket.
inline double m0_higher(std::int64_t j1i, std::int64_t j2i, std::int64_t ji) {
  const auto t = detail::m0_triple(j1i, j2i, ji);
  if (t.sum % 2 != 0) return 0.0;
  const long double pi = std::numbers::pi_v<long double>;
  const long double s = static_cast<long double>(t.sum);
  const long double beta = std::sqrt(t.beta2);
  const int sign = ((t.b / 2) % 2 == 0) ? 1 : -1;
  const long double bracket =
      1 + (2 / t.j + 2 / t.j1 + 2 / t.j2 - 1 / s - 1 / (-t.j + t.j1 + t.j2) - 1 / (t.j - t.j1 + t.j2) -
           1 / (t.j + t.j1 - t.j2)) /
              24;
  const long double v = 2 * sign * std::sqrt((2 * t.j + 1) / (2 * pi * beta)) * std::sqrt(s / (s + 1)) *
                        (1 + m0_delta_sum(j1i, j2i, ji)) * bracket;
  return static_cast<double>(v);
}

/// Expansion of the exact m = 0 value to the same order.
inline double m0_approx_of_exact(std::int64_t j1i, std::int64_t j2i, std::int64_t ji) {
  const auto t = detail::m0_triple(j1i, j2i, ji);
  if (t.sum % 2 != 0) return 0.0;
  const long double pi = std::numbers::pi_v<long double>;
  const long double s = static_cast<long double>(t.sum);
  const long double beta = std::sqrt(t.beta2);
  const int sign = ((t.b / 2) % 2 == 0) ? 1 : -1;
  const long double v = 2 * sign * std::sqrt((2 * t.j + 1) / (2 * pi * beta)) * std::sqrt(s / (s + 1)) *
                        (1 - t.j * t.j1 * t.j2 / t.beta2);
  return static_cast<double>(v);
}

}  // namespace cgasym
