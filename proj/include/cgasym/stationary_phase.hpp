#pragma once

// Stationary points of the exponent g(theta, phi), its derivatives through fourth
// order and the factor e^g, all written in terms of cot(theta) and cot(phi) so no
// inverse trigonometric functions (and no branch choices) are needed.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "cgasym/errors.hpp"
#include "cgasym/quantum_numbers.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/region_geometry.hpp"

namespace cgasym {

/// Internal precision of the asymptotic formulas.
using real = long double;

enum class Branch { Upper, Lower };

inline const char* to_string(Branch b) { return b == Branch::Upper ? "upper" : "lower"; }

template <class Real>
using complex_t = std::complex<Real>;

/// Continuous parameters of the saddle-point problem for one set of quantum numbers.
template <class Real = real>
struct SaddleParams {
  Real j1, m1, j2, m2, j, m;
  Real a, b, c;  // j+j2-j1, j1+j2-j, j+j1-j2
  Real sum;      // j1+j2+j
  mpq_class beta2;
  complex_t<Real> beta;  // principal root of beta^2; i|beta| when beta^2 < 0
};

/// Rejects inputs for which the stationary-phase formulas are undefined.
template <class Real = real>
SaddleParams<Real> saddle_params(const QuantumNumbers& q) {
  if (!selection_allowed(q)) throw DomainError("quantum numbers outside the triangle-allowed region");
  if (sgn(alpha_squared(q.j1(), q.j2(), q.j())) == 0)
    throw DomainError("degenerate j-triangle: asymptotic formulas undefined");
  SaddleParams<Real> p;
  p.beta2 = beta_squared(q);
  if (sgn(p.beta2) == 0)
    throw BoundaryError("beta^2 = 0: the point lies on the allowed/forbidden boundary, where the quadratic "
                        "stationary-phase formulas do not apply");
  p.j1 = q.j1().value<Real>();
  p.m1 = q.m1().value<Real>();
  p.j2 = q.j2().value<Real>();
  p.m2 = q.m2().value<Real>();
  p.j = q.j().value<Real>();
  p.m = q.m().value<Real>();
  p.a = p.j + p.j2 - p.j1;
  p.b = p.j1 + p.j2 - p.j;
  p.c = p.j + p.j1 - p.j2;
  p.sum = p.j1 + p.j2 + p.j;
  const Real b2 = to_real<Real>(p.beta2);
  p.beta = b2 > 0 ? complex_t<Real>(std::sqrt(b2), 0) : complex_t<Real>(0, std::sqrt(-b2));
  return p;
}

template <class Real = real>
struct StationaryPoint {
  complex_t<Real> cot_theta;
  complex_t<Real> cot_phi;
  Branch branch = Branch::Upper;
};

template <class Real = real>
StationaryPoint<Real> stationary_point(const SaddleParams<Real>& p, Branch br) {
  const complex_t<Real> i(0, 1);
  const Real s = br == Branch::Upper ? 1 : -1;
  StationaryPoint<Real> pt;
  pt.cot_theta = (-Real(2) * i * (p.j2 * p.m + p.m2 * p.j) - s * p.beta) / (p.sum * p.a);
  pt.cot_phi = (-Real(2) * i * (p.j1 * p.m + p.m1 * p.j) + s * p.beta) / (p.sum * p.c);
  pt.branch = br;
  return pt;
}

/// Both stationary points, upper branch first.
template <class Real = real>
std::array<StationaryPoint<Real>, 2> stationary_points(const QuantumNumbers& q) {
  const auto p = saddle_params<Real>(q);
  return {stationary_point(p, Branch::Upper), stationary_point(p, Branch::Lower)};
}

template <class Real>
complex_t<Real> cot_difference(const StationaryPoint<Real>& pt) {
  // cot(theta - phi)
  return (Real(1) + pt.cot_theta * pt.cot_phi) / (pt.cot_phi - pt.cot_theta);
}

/// |dg/dtheta + dg/dphi| and |dg/dtheta| at the point, with
/// dg/dtheta = 2i m2 + a cot(theta) + b cot(theta - phi) and
/// dg/dphi = 2i m1 + c cot(phi) - b cot(theta - phi).
template <class Real = real>
std::array<Real, 2> stationarity_residuals(const StationaryPoint<Real>& pt, const SaddleParams<Real>& p) {
  const complex_t<Real> i(0, 1);
  const auto r1 = Real(2) * i * p.m + p.a * pt.cot_theta + p.c * pt.cot_phi;
  const auto r2 = Real(2) * i * p.m2 + p.a * pt.cot_theta + p.b * cot_difference(pt);
  return {std::abs(r1), std::abs(r2)};
}

template <class Real = real>
struct DerivativeBundle {
  complex_t<Real> g_tt, g_tp, g_pp;
  complex_t<Real> g_ttt, g_ttp, g_tpp, g_ppp;
  complex_t<Real> g_tttt, g_tttp, g_ttpp, g_tppp, g_pppp;

  complex_t<Real> hessian_det() const { return g_tt * g_pp - g_tp * g_tp; }
};

template <class Real = real>
DerivativeBundle<Real> derivative_bundle(const StationaryPoint<Real>& pt, const SaddleParams<Real>& p) {
  const auto ct = pt.cot_theta, cp = pt.cot_phi;
  const Real scale = 1 + std::max(std::abs(ct), std::abs(cp));
  if (std::abs(cp - ct) < Real(1e-12) * scale) throw SingularError("cot(phi) = cot(theta): theta - phi is singular");
  const auto cd = cot_difference(pt);
  const Real one = 1, two = 2, three = 3;
  const auto s2t = one + ct * ct;  // csc^2
  const auto s2p = one + cp * cp;
  const auto s2d = one + cd * cd;
  DerivativeBundle<Real> d;
  d.g_tt = -p.a * s2t - p.b * s2d;
  d.g_tp = p.b * s2d;
  d.g_pp = -p.b * s2d - p.c * s2p;
  const auto mixed3 = two * p.b * s2d * cd;
  d.g_ttt = two * p.a * s2t * ct + mixed3;
  d.g_ttp = -mixed3;
  d.g_tpp = mixed3;
  d.g_ppp = -mixed3 + two * p.c * s2p * cp;
  const auto mixed4 = two * p.b * s2d * (three * cd * cd + one);
  d.g_tttt = -two * p.a * s2t * (three * ct * ct + one) - mixed4;
  d.g_tttp = mixed4;
  d.g_ttpp = -mixed4;
  d.g_tppp = mixed4;
  d.g_pppp = -mixed4 - two * p.c * s2p * (three * cp * cp + one);
  return d;
}

/// log e^g with
/// e^g = (i+cot phi)^(m1-j1) (-i+cot phi)^-(j1+m1) (i+cot theta)^(m2-j2) (-i+cot theta)^-(j2+m2)
///       (cot phi - cot theta)^(j1+j2-j).
/// Every exponent is an integer, so the imaginary part is only defined mod 2 pi,
/// which is all that is needed.
template <class Real = real>
complex_t<Real> log_exp_g(const StationaryPoint<Real>& pt, const QuantumNumbers& q) {
  const complex_t<Real> i(0, 1);
  const std::array<complex_t<Real>, 5> bases{i + pt.cot_phi, -i + pt.cot_phi, i + pt.cot_theta, -i + pt.cot_theta,
                                             pt.cot_phi - pt.cot_theta};
  const std::array<std::int64_t, 5> exps{whole(q.m1() - q.j1()), -whole(q.j1() + q.m1()), whole(q.m2() - q.j2()),
                                         -whole(q.j2() + q.m2()), whole(q.j1() + q.j2() - q.j())};
  complex_t<Real> acc = 0;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    if (exps[k] == 0) continue;
    if (bases[k] == complex_t<Real>(0)) throw SingularError("a base of e^g vanishes");
    acc += static_cast<Real>(exps[k]) * std::log(bases[k]);
  }
  return acc;
}

template <class Real = real>
complex_t<Real> exp_g(const StationaryPoint<Real>& pt, const QuantumNumbers& q) {
  return std::exp(log_exp_g(pt, q));
}

/// log sqrt(z) on the branch whose argument lies in (-pi/4, 3pi/4].
template <class Real = real>
complex_t<Real> log_sqrt_branch(const complex_t<Real>& z) {
  if (z == complex_t<Real>(0)) throw SingularError("zero Hessian determinant");
  Real half_arg = std::arg(z) / 2;  // (-pi/2, pi/2]
  if (half_arg <= -std::numbers::pi_v<Real> / 4) half_arg += std::numbers::pi_v<Real>;
  return {std::log(std::abs(z)) / 2, half_arg};
}

template <class Real = real>
complex_t<Real> sqrt_branch(const complex_t<Real>& z) {
  return std::exp(log_sqrt_branch(z));
}

}  // namespace cgasym
