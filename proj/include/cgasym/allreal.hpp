#pragma once

// Real-arithmetic forms of the first-order approximation: the cosine form with
// the angle chi in the allowed region, the decaying exponential in forbidden
// subregion VI, and the symmetry map that carries the other five forbidden
// subregions onto VI.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "cgasym/classify.hpp"
#include "cgasym/errors.hpp"
#include "cgasym/exact_radical.hpp"
#include "cgasym/first_order.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/region_geometry.hpp"

namespace cgasym {

/// sqrt(n! / (sqrt(2 pi n) n^n e^-n)); f(0) = 1.
inline double stirling_ratio_f(std::int64_t n) {
  if (n < 0) throw DomainError("stirling_ratio_f needs n >= 0");
  if (n == 0) return 1.0;
  const long double x = static_cast<long double>(n);
  const long double stirling = 0.5L * std::log(2 * std::numbers::pi_v<long double> * x) + x * std::log(x) - x;
  return static_cast<double>(std::exp((log_factorial_exact(n) - stirling) / 2));
}

namespace detail {

inline long double stirling_ratio_f_ld(std::int64_t n) {
  if (n == 0) return 1.0L;
  const long double x = static_cast<long double>(n);
  const long double stirling = 0.5L * std::log(2 * std::numbers::pi_v<long double> * x) + x * std::log(x) - x;
  return std::exp((log_factorial_exact(n) - stirling) / 2);
}

}  // namespace detail

/// sqrt((j+1/2) J / (j (J+1))) times the f-ratios of the numerator and
/// denominator factorials of N; J = j1+j2+j.
inline long double i_factor(const QuantumNumbers& q) {
  const auto t = detail::triangle_args(q);
  if (!detail::all_nonnegative(t)) throw DomainError("quantum numbers outside the triangle-allowed region");
  const long double j = q.j().value<long double>();
  const long double s = static_cast<long double>(t.sum);
  long double r = std::sqrt((j + 0.5L) * s / (j * (s + 1)));
  for (auto x : t.pm) r *= detail::stirling_ratio_f_ld(x);
  r /= detail::stirling_ratio_f_ld(t.sum) * detail::stirling_ratio_f_ld(t.a) * detail::stirling_ratio_f_ld(t.b) *
       detail::stirling_ratio_f_ld(t.c);
  return r;
}

/// Slack allowed for arc-cosine / arc-cosh arguments to stray outside their
/// domain through rounding.
inline constexpr double kArgumentSlack = 1e-12;

namespace detail {

// num / sqrt(den_sq) as long double, exactly signed.
inline long double ratio_over_root(const mpq_class& num, const mpq_class& den_sq) {
  if (sgn(den_sq) <= 0) throw DomainError("vanishing lambda or alpha in an angle argument");
  const mpq_class sq = num * num / den_sq;
  return sgn(num) * std::sqrt(to_real<long double>(sq));
}

inline long double checked_acos(long double x) {
  if (std::abs(x) > 1 + static_cast<long double>(kArgumentSlack))
    throw ArgumentRangeError("arc-cosine argument " + std::to_string(static_cast<double>(x)) + " outside [-1, 1]");
  return std::acos(std::clamp(x, -1.0L, 1.0L));
}

inline long double checked_acosh(long double x) {
  if (x < 1 - static_cast<long double>(kArgumentSlack))
    throw ArgumentRangeError("arc-cosh argument " + std::to_string(static_cast<double>(x)) + " below 1");
  return std::acosh(std::max(x, 1.0L));
}

struct AngleInputs {
  mpq_class j1, m1, j2, m2, j, m;
  mpq_class a1, a2, a3;  // j1^2, j2^2, j^2
  mpq_class alpha2;
  std::array<mpq_class, 3> l2;  // lambda^2
};

inline AngleInputs angle_inputs(const QuantumNumbers& q) {
  AngleInputs in;
  in.j1 = to_mpq(q.j1());
  in.m1 = to_mpq(q.m1());
  in.j2 = to_mpq(q.j2());
  in.m2 = to_mpq(q.m2());
  in.j = to_mpq(q.j());
  in.m = to_mpq(q.m());
  in.a1 = in.j1 * in.j1;
  in.a2 = in.j2 * in.j2;
  in.a3 = in.j * in.j;
  in.alpha2 = alpha_squared(q.j1(), q.j2(), q.j());
  in.l2 = lambda_squared(q);
  return in;
}

}  // namespace detail

struct ChiAngles {
  double chi = 0;
  std::array<double, 5> terms{};      // the five arc-cosines, each in [0, pi]
  std::array<double, 5> arguments{};  // their arguments
};

namespace detail {

struct ChiAnglesLd {
  long double chi = 0;
  std::array<long double, 5> terms{};
  std::array<long double, 5> arguments{};
};

inline ChiAnglesLd chi_allowed_ld(const QuantumNumbers& q) {
  if (classify(q).tag != RegionTag::Allowed) throw DomainError("chi is defined in the allowed region only");
  const auto in = angle_inputs(q);
  const auto& l = in.l2;
  std::array<long double, 5> x{
      ratio_over_root(-in.m * (in.a1 + in.a2 - in.a3) - in.m2 * (in.a1 + in.a3 - in.a2), in.alpha2 * l[0]),
      ratio_over_root(in.m1 * (in.a3 + in.a2 - in.a1) + in.m * (in.a2 + in.a1 - in.a3), in.alpha2 * l[1]),
      ratio_over_root(in.m2 * (in.a1 + in.a3 - in.a2) - in.m1 * (in.a3 + in.a2 - in.a1), in.alpha2 * l[2]),
      ratio_over_root(l[0] + l[2] - l[1], 4 * l[0] * l[2]),
      ratio_over_root(l[2] + l[1] - l[0], 4 * l[1] * l[2])};
  ChiAnglesLd r;
  r.arguments = x;
  for (std::size_t k = 0; k < 5; ++k) r.terms[k] = checked_acos(x[k]);
  const long double half = 0.5L;
  r.chi = (q.j1().value<long double>() + half) * r.terms[0] + (q.j2().value<long double>() + half) * r.terms[1] +
          (q.j().value<long double>() + half) * r.terms[2] - q.m1().value<long double>() * r.terms[3] +
          q.m2().value<long double>() * r.terms[4];
  return r;
}

}  // namespace detail

inline ChiAngles chi_allowed(const QuantumNumbers& q) {
  const auto r = detail::chi_allowed_ld(q);
  ChiAngles out;
  out.chi = static_cast<double>(r.chi);
  for (std::size_t k = 0; k < 5; ++k) {
    out.terms[k] = static_cast<double>(r.terms[k]);
    out.arguments[k] = static_cast<double>(r.arguments[k]);
  }
  return out;
}

/// Interior angles of the lambda-triangle, angle k opposite lambda_k.
inline std::array<double, 3> lambda_triangle_angles(const QuantumNumbers& q) {
  const auto l = lambda_squared(q);
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k) {
    const auto& li = l[(k + 1) % 3];
    const auto& lj = l[(k + 2) % 3];
    out[k] = static_cast<double>(detail::checked_acos(detail::ratio_over_root(li + lj - l[k], 4 * li * lj)));
  }
  return out;
}

/// 2 I sqrt(j / (pi beta)) cos(chi + pi/4 - pi (j+1)); I = 1 when include_i is false.
inline double allowed_allreal(const QuantumNumbers& q, bool include_i = true) {
  const auto chi = detail::chi_allowed_ld(q);
  const long double pi = std::numbers::pi_v<long double>;
  const long double beta = std::sqrt(to_real<long double>(beta_squared(q)));
  const long double j = q.j().value<long double>();
  const long double factor = include_i ? i_factor(q) : 1.0L;
  // Reduce the phase with exact half-integer arithmetic before adding chi.
  const long double shift = std::fmod(j + 1, 2.0L) * pi;
  return static_cast<double>(2 * factor * std::sqrt(j / (pi * beta)) * std::cos(chi.chi + pi / 4 - shift));
}

namespace detail {

inline std::pair<long double, std::array<long double, 5>> chi_vi_ld(const QuantumNumbers& q) {
  const auto rc = classify(q);
  if (rc.tag != RegionTag::Forbidden || rc.forbidden->subregion != Subregion::VI)
    throw DomainError("chi_vi is defined in forbidden subregion VI only");
  const auto in = angle_inputs(q);
  const auto& l = in.l2;
  std::array<long double, 5> x{
      ratio_over_root(-in.m * (in.a1 + in.a2 - in.a3) - in.m2 * (in.a1 + in.a3 - in.a2), in.alpha2 * l[0]),
      ratio_over_root(-in.m1 * (in.a3 + in.a2 - in.a1) - in.m * (in.a2 + in.a1 - in.a3), in.alpha2 * l[1]),
      ratio_over_root(-in.m2 * (in.a1 + in.a3 - in.a2) + in.m1 * (in.a3 + in.a2 - in.a1), in.alpha2 * l[2]),
      ratio_over_root(l[0] + l[2] - l[1], 4 * l[0] * l[2]),
      ratio_over_root(l[0] + l[1] - l[2], 4 * l[1] * l[0])};
  std::array<long double, 5> h{};
  for (std::size_t k = 0; k < 5; ++k) h[k] = checked_acosh(x[k]);
  const long double half = 0.5L;
  const long double chi = (q.j1().value<long double>() + half) * h[0] - (q.j2().value<long double>() + half) * h[1] -
                          (q.j().value<long double>() + half) * h[2] - q.m().value<long double>() * h[3] -
                          q.m2().value<long double>() * h[4];
  return {chi, x};
}

}  // namespace detail

inline double chi_vi(const QuantumNumbers& q) { return static_cast<double>(detail::chi_vi_ld(q).first); }

/// The five arc-cosh arguments of chi_vi (all >= 1 inside subregion VI).
inline std::array<double, 5> chi_vi_arguments(const QuantumNumbers& q) {
  const auto x = detail::chi_vi_ld(q).second;
  return {static_cast<double>(x[0]), static_cast<double>(x[1]), static_cast<double>(x[2]),
          static_cast<double>(x[3]), static_cast<double>(x[4])};
}

// ---------------------------------------------------------------------------
// Symmetries of the coefficient used to reach subregion VI

/// A 3j-symbol symmetry: permute the columns (new column i = old column perm[i])
/// and optionally negate all projections.
struct Symmetry3j {
  std::array<int, 3> perm{0, 1, 2};
  bool negate = false;

  int parity() const {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int k = i + 1; k < 3; ++k)
        if (perm[i] > perm[k]) ++inv;
    return inv % 2;
  }
};

/// All twelve column permutations with and without m-negation.
inline std::array<Symmetry3j, 12> symmetry_group() {
  std::array<Symmetry3j, 12> out;
  std::array<int, 3> p{0, 1, 2};
  std::size_t k = 0;
  do {
    out[k++] = {p, false};
    out[k++] = {p, true};
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct SymmetryImage {
  QuantumNumbers image;
  ExactRadical factor;  // coefficient(q) = factor * coefficient(image)
};

/// Uses CG(j1 m1 j2 m2 | j m) = (-1)^(j1-j2+m) sqrt(2j+1) (j1 j2 j; m1 m2 -m) and the
/// 3j phases (-1)^J for odd permutations and for m-negation.
inline SymmetryImage apply_symmetry(const QuantumNumbers& q, const Symmetry3j& g) {
  const std::array<std::pair<HalfInt, HalfInt>, 3> cols{
      {{q.j1(), q.m1()}, {q.j2(), q.m2()}, {q.j(), -q.m()}}};
  std::array<std::pair<HalfInt, HalfInt>, 3> nc;
  for (int i = 0; i < 3; ++i) {
    nc[i] = cols[g.perm[i]];
    if (g.negate) nc[i].second = -nc[i].second;
  }
  const QuantumNumbers img(nc[0].first, nc[0].second, nc[1].first, nc[1].second, nc[2].first, -nc[2].second);
  const std::int64_t sum = q.sum_j();
  int sign = parity_sign(q.j1() - q.j2() + q.m()) * parity_sign(img.j1() - img.j2() + img.m());
  if ((g.parity() + (g.negate ? 1 : 0)) % 2 == 1 && sum % 2 != 0) sign = -sign;
  mpq_class ratio(q.j().twice + 1, img.j().twice + 1);
  ratio.canonicalize();
  return {img, ExactRadical(sign, ratio)};
}

/// Which symmetry carries each forbidden subregion onto subregion VI.
inline Symmetry3j dispatch_symmetry(Subregion s) {
  switch (s) {
    case Subregion::VI: return {{0, 1, 2}, false};
    case Subregion::III: return {{0, 1, 2}, true};
    case Subregion::V: return {{1, 0, 2}, false};
    case Subregion::II: return {{1, 0, 2}, true};
    case Subregion::IV: return {{2, 0, 1}, false};
    case Subregion::I: return {{2, 0, 1}, true};
  }
  return {};
}

namespace detail {

inline long double forbidden_vi_ld(const QuantumNumbers& q) {
  const long double chi = chi_vi_ld(q).first;
  const long double pi = std::numbers::pi_v<long double>;
  const long double beta = std::sqrt(-to_real<long double>(beta_squared(q)));
  const long double j = q.j().value<long double>();
  return parity_sign(q.j2() + q.m2()) * i_factor(q) * std::sqrt(j / (pi * beta)) * std::exp(-chi);
}

}  // namespace detail

/// Forbidden-region value through the subregion-VI exponential form, mapping
/// other subregions there by symmetry.
inline double forbidden_allreal(const QuantumNumbers& q) {
  const auto rc = classify(q);
  if (rc.tag != RegionTag::Forbidden) throw DomainError("forbidden_allreal needs a forbidden-region point");
  const auto img = apply_symmetry(q, dispatch_symmetry(rc.forbidden->subregion));
  const auto rc_img = classify(img.image);
  if (rc_img.tag != RegionTag::Forbidden || rc_img.forbidden->subregion != Subregion::VI)
    throw MappingError("symmetry image of subregion " + std::string(to_string(rc.forbidden->subregion)) +
                       " is not in subregion VI");
  const long double factor = img.factor.sign() * std::sqrt(to_real<long double>(img.factor.radicand()));
  return static_cast<double>(factor * detail::forbidden_vi_ld(img.image));
}

}  // namespace cgasym
