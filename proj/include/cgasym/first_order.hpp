#pragma once

// First-order stationary-phase value: each stationary point contributes
// (-1)^(j+m) (2i)^J pi^-2 N 2 pi e^g / sqrt(det), J = j1+j2+j. The allowed region
// sums both points; the forbidden region keeps the one picked by classify.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "cgasym/classify.hpp"
#include "cgasym/errors.hpp"
#include "cgasym/exact.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/stationary_phase.hpp"

namespace cgasym {

inline long double log_factorial_exact(std::int64_t n) {
  if (n < 2) return 0.0L;
  return log_integer(factorial(n));
}

/// Stirling with the next correction, log x! ~ log sqrt(2 pi x) + x log x - x + 1/(12x).
inline long double log_factorial_stirling2(std::int64_t n) {
  if (n == 0) return 0.0L;
  const long double x = static_cast<long double>(n);
  return 0.5L * std::log(2 * std::numbers::pi_v<long double> * x) + x * std::log(x) - x + 1 / (12 * x);
}

/// Below this argument the corrected-Stirling N uses exact log-factorials.
inline constexpr std::int64_t kExactFactorialBelow = 256;

inline long double log_factorial_corrected(std::int64_t n) {
  return n < kExactFactorialBelow ? log_factorial_exact(n) : log_factorial_stirling2(n);
}

/// log N from the exact rational N^2.
inline long double log_n_exact(const QuantumNumbers& q) { return log_rational(n_factor(q).radicand()) / 2; }

/// log N with every factorial replaced by log_factorial_corrected; (J+1)! is
/// written as (J+1) J!.
inline long double log_n_corrected(const QuantumNumbers& q) {
  const auto t = detail::triangle_args(q);
  if (!detail::all_nonnegative(t)) throw DomainError("N undefined outside the triangle-allowed region");
  long double s = std::log(static_cast<long double>(q.j().twice + 1));
  for (auto x : t.pm) s += log_factorial_corrected(x);
  s -= std::log(static_cast<long double>(t.sum + 1)) + log_factorial_corrected(t.sum);
  s -= log_factorial_corrected(t.a) + log_factorial_corrected(t.b) + log_factorial_corrected(t.c);
  return s / 2;
}

template <class Real = real>
struct BranchTerm {
  StationaryPoint<Real> point;
  DerivativeBundle<Real> derivatives;
  complex_t<Real> log_value;  // log of the first-order contribution

  complex_t<Real> value() const { return std::exp(log_value); }
};

template <class Real = real>
BranchTerm<Real> branch_term(const QuantumNumbers& q, const SaddleParams<Real>& p, Branch br, Real log_n) {
  BranchTerm<Real> t;
  t.point = stationary_point(p, br);
  t.derivatives = derivative_bundle(t.point, p);
  const Real pi = std::numbers::pi_v<Real>;
  const Real ln2 = std::numbers::ln2_v<Real>;
  const std::int64_t sum = q.sum_j();
  const std::int64_t jm = whole(q.j() + q.m());
  const Real phase = static_cast<Real>(sum % 4) * pi / 2 + (jm % 2 != 0 ? pi : Real(0));
  t.log_value = complex_t<Real>(static_cast<Real>(sum) * ln2 + log_n + ln2 - std::log(pi), phase) +
                log_exp_g(t.point, q) - log_sqrt_branch(t.derivatives.hessian_det());
  return t;
}

/// Both branch terms regardless of region (upper first).
template <class Real = real>
std::array<BranchTerm<Real>, 2> both_branch_terms(const QuantumNumbers& q, Real log_n) {
  const auto p = saddle_params<Real>(q);
  return {branch_term(q, p, Branch::Upper, log_n), branch_term(q, p, Branch::Lower, log_n)};
}

/// The terms that enter the approximation: both in the allowed region, the
/// classified one in the forbidden region.
template <class Real = real>
std::vector<BranchTerm<Real>> active_branch_terms(const QuantumNumbers& q, Real log_n) {
  const auto rc = classify(q);
  switch (rc.tag) {
    case RegionTag::TriangleForbidden: throw DomainError("quantum numbers outside the triangle-allowed region");
    case RegionTag::Boundary:
      throw BoundaryError("beta^2 = 0: the point lies on the allowed/forbidden boundary, where the quadratic "
                          "stationary-phase formulas do not apply");
    case RegionTag::Allowed: {
      const auto both = both_branch_terms<Real>(q, log_n);
      return {both[0], both[1]};
    }
    case RegionTag::Forbidden: {
      const auto p = saddle_params<Real>(q);
      return {branch_term(q, p, rc.forbidden->branch, log_n)};
    }
  }
  return {};
}

/// Relative size of the discarded imaginary part allowed when realifying.
inline constexpr double kResidueTolerance = 1e-9;

/// Sum of complex contributions, checked to be real relative to the sum of magnitudes.
template <class Real>
Real realify(const std::vector<complex_t<Real>>& parts) {
  complex_t<Real> total = 0;
  Real scale = 0;
  for (const auto& z : parts) {
    total += z;
    scale += std::abs(z);
  }
  if (!std::isfinite(total.real()) || !std::isfinite(total.imag())) throw OverflowError("non-finite asymptotic value");
  if (std::abs(total.imag()) > static_cast<Real>(kResidueTolerance) * scale)
    throw ResidueError("imaginary residue " + std::to_string(static_cast<double>(total.imag())) +
                       " exceeds tolerance relative to " + std::to_string(static_cast<double>(scale)));
  return total.real();
}

template <class Real = real>
Real first_order_as(const QuantumNumbers& q) {
  const auto terms = active_branch_terms<Real>(q, static_cast<Real>(log_n_exact(q)));
  std::vector<complex_t<Real>> parts;
  for (const auto& t : terms) parts.push_back(t.value());
  return realify(parts);
}

inline double first_order(const QuantumNumbers& q) { return static_cast<double>(first_order_as<real>(q)); }

}  // namespace cgasym
