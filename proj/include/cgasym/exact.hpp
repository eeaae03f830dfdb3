#pragma once

// Exact Clebsch-Gordan coefficients over GMP integers and rationals, by three
// independent routes: the Wigner z-sum and coefficient extraction from a
// two-variable and a one-variable polynomial.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <utility>

#include "cgasym/errors.hpp"
#include "cgasym/exact_radical.hpp"
#include "cgasym/quantum_numbers.hpp"

namespace cgasym {

inline mpz_class factorial(std::int64_t n) {
  if (n < 0) throw DomainError("factorial of negative argument " + std::to_string(n));
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace detail {

// Integer combinations shared by the exact routes. All are whole numbers for
// valid quantum numbers; negative values mean "outside the triangle".
struct TriangleArgs {
  std::int64_t a;  // j + j2 - j1
  std::int64_t b;  // j1 + j2 - j
  std::int64_t c;  // j + j1 - j2
  std::int64_t sum;  // j1 + j2 + j
  std::array<std::int64_t, 6> pm;  // j1+m1, j1-m1, j2+m2, j2-m2, j+m, j-m
};

inline TriangleArgs triangle_args(const QuantumNumbers& q) {
  TriangleArgs t{};
  t.a = whole(q.j() + q.j2() - q.j1());
  t.b = whole(q.j1() + q.j2() - q.j());
  t.c = whole(q.j() + q.j1() - q.j2());
  t.sum = q.sum_j();
  t.pm = {whole(q.j1() + q.m1()), whole(q.j1() - q.m1()), whole(q.j2() + q.m2()),
          whole(q.j2() - q.m2()), whole(q.j() + q.m()),   whole(q.j() - q.m())};
  return t;
}

inline bool all_nonnegative(const TriangleArgs& t) {
  if (t.a < 0 || t.b < 0 || t.c < 0) return false;
  return std::all_of(t.pm.begin(), t.pm.end(), [](std::int64_t x) { return x >= 0; });
}

// N^2 = (2j+1) prod (j_i +- m_i)! / [(J+1)! (J-2j)! (J-2j2)! (J-2j1)!]
inline mpq_class n_squared(const TriangleArgs& t, HalfInt j) {
  mpz_class num = j.twice + 1;
  for (auto x : t.pm) num *= factorial(x);
  mpz_class den = factorial(t.sum + 1) * factorial(t.a) * factorial(t.b) * factorial(t.c);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

inline int minus_one_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace detail

/// The normalisation N of the polynomial-coefficient representations.
inline ExactRadical n_factor(const QuantumNumbers& q) {
  const auto t = detail::triangle_args(q);
  if (!detail::all_nonnegative(t)) throw DomainError("N undefined outside the triangle-allowed region");
  return {1, detail::n_squared(t, q.j())};
}

/// Wigner's z-sum. Accumulated over a common integer denominator so no rational
/// additions are needed: T_z = C / prod(factorials) is an integer for every z.
inline ExactRadical wigner_sum(const QuantumNumbers& q) {
  if (!selection_allowed(q)) return {};
  const auto t = detail::triangle_args(q);
  const std::int64_t b = t.b;
  const std::int64_t c = t.pm[1];                        // j1 - m1
  const std::int64_t d = t.pm[2];                        // j2 + m2
  const std::int64_t e = whole(q.j() - q.j2() + q.m1());  // j - j2 + m1
  const std::int64_t f = whole(q.j() - q.j1() - q.m2());  // j - j1 - m2
  const std::int64_t zmin = std::max<std::int64_t>({0, -e, -f});
  const std::int64_t zmax = std::min({b, c, d});
  if (zmin > zmax) return {};

  const mpz_class common = factorial(zmax) * factorial(e + zmax) * factorial(f + zmax) * factorial(b - zmin) *
                           factorial(c - zmin) * factorial(d - zmin);
  mpz_class term = common / (factorial(zmin) * factorial(b - zmin) * factorial(c - zmin) * factorial(d - zmin) *
                             factorial(e + zmin) * factorial(f + zmin));
  mpz_class sum = 0;
  for (std::int64_t z = zmin;; ++z) {
    if (z % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    if (z == zmax) break;
    term *= (b - z) * mpz_class(c - z) * (d - z);
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), mpz_class(mpz_class(z + 1) * (e + z + 1) * (f + z + 1)).get_mpz_t());
  }
  if (sgn(sum) == 0) return {};

  // Prefactor (2j+1) Delta^2 prod (j_i +- m_i)!, Delta^2 = a! b! c! / (J+1)!.
  mpz_class pre_num = q.j().twice + 1;
  pre_num *= factorial(t.a) * factorial(t.b) * factorial(t.c);
  for (auto x : t.pm) pre_num *= factorial(x);
  mpq_class radicand(pre_num * sum * sum, factorial(t.sum + 1) * common * common);
  radicand.canonicalize();
  return {sgn(sum), radicand};
}

namespace detail {

// Truncated sparse polynomials: terms above the target degree can never reach
// the target coefficient, so they are dropped as soon as they appear.
using Poly1 = std::map<std::int64_t, mpz_class>;
using Poly2 = std::map<std::pair<std::int64_t, std::int64_t>, mpz_class>;

// p *= (x^k - 1) keeping degrees <= max_deg.
inline void mul_binomial_1(Poly1& p, std::int64_t k, std::int64_t max_deg) {
  Poly1 out;
  for (const auto& [deg, coeff] : p) {
    out[deg] -= coeff;
    if (deg + k <= max_deg) out[deg + k] += coeff;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  p = std::move(out);
}

// p *= (su * u + st * t + s0) with su, st, s0 in {-1, 0, 1}, degrees (u, t) truncated.
inline void mul_linear_2(Poly2& p, int su, int st, int s0, std::int64_t max_u, std::int64_t max_t) {
  Poly2 out;
  for (const auto& [deg, coeff] : p) {
    const auto [du, dt] = deg;
    if (s0 != 0) out[{du, dt}] += s0 * coeff;
    if (su != 0 && du + 1 <= max_u) out[{du + 1, dt}] += su * coeff;
    if (st != 0 && dt + 1 <= max_t) out[{du, dt + 1}] += st * coeff;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  p = std::move(out);
}

inline ExactRadical from_coefficient(const QuantumNumbers& q, const TriangleArgs& t, const mpz_class& coeff) {
  if (sgn(coeff) == 0) return {};
  const int phase = minus_one_pow(t.pm[4]);  // (-1)^(j+m)
  mpq_class radicand = n_squared(t, q.j()) * mpq_class(coeff * coeff);
  return {phase * sgn(coeff), radicand};
}

inline TriangleArgs checked_args(const QuantumNumbers& q) {
  const auto t = triangle_args(q);
  if (!all_nonnegative(t)) throw DomainError("coefficient extraction requires triangle-allowed quantum numbers");
  return t;
}

}  // namespace detail

/// Coefficient of u^(j1-m1) t^(j2-m2) in (t-1)^(j+j2-j1) (t-u)^(j1+j2-j) (u-1)^(j+j1-j2),
/// times (-1)^(j+m) N.
inline ExactRadical poly_coeff_2var(const QuantumNumbers& q) {
  const auto t = detail::checked_args(q);
  if (!conserves_m(q)) return {};
  const std::int64_t tu = t.pm[1];
  const std::int64_t tt = t.pm[3];
  detail::Poly2 p{{{0, 0}, mpz_class(1)}};
  for (std::int64_t i = 0; i < t.a; ++i) detail::mul_linear_2(p, 0, 1, -1, tu, tt);
  for (std::int64_t i = 0; i < t.b; ++i) detail::mul_linear_2(p, -1, 1, 0, tu, tt);
  for (std::int64_t i = 0; i < t.c; ++i) detail::mul_linear_2(p, 1, 0, -1, tu, tt);
  const auto it = p.find({tu, tt});
  return detail::from_coefficient(q, t, it == p.end() ? mpz_class(0) : it->second);
}

/// Coefficient of u^(j-m+2 j1 (j2-m2)) in
/// (u^(2j1+1)-1)^(j+j2-j1) (u^(2j1)-1)^(j1+j2-j) (u-1)^(j+j1-j2), times (-1)^(j+m) N.
inline ExactRadical poly_coeff_1var(const QuantumNumbers& q) {
  const auto t = detail::checked_args(q);
  if (!conserves_m(q)) return {};
  const std::int64_t two_j1 = q.j1().twice;
  const std::int64_t target = t.pm[5] + two_j1 * t.pm[3];
  detail::Poly1 p{{0, mpz_class(1)}};
  for (std::int64_t i = 0; i < t.a; ++i) detail::mul_binomial_1(p, two_j1 + 1, target);
  for (std::int64_t i = 0; i < t.b; ++i) detail::mul_binomial_1(p, two_j1, target);
  for (std::int64_t i = 0; i < t.c; ++i) detail::mul_binomial_1(p, 1, target);
  const auto it = p.find(target);
  return detail::from_coefficient(q, t, it == p.end() ? mpz_class(0) : it->second);
}

/// Closed form of the coefficient with m1 = m2 = m = 0.
inline ExactRadical exact_m0(HalfInt j1, HalfInt j2, HalfInt j) {
  if (!j1.is_integer() || !j2.is_integer() || !j.is_integer()) throw DomainError("m = 0 requires integer j's");
  if (j1.twice < 0 || j2.twice < 0 || j.twice < 0) throw DomainError("angular momenta must be nonnegative");
  const std::int64_t a = whole(j + j2 - j1), b = whole(j1 + j2 - j), c = whole(j + j1 - j2);
  if (a < 0 || b < 0 || c < 0) throw DomainError("j's violate the triangle inequalities");
  const std::int64_t sum = a + b + c;  // j1 + j2 + j
  if (sum % 2 != 0) return {};
  const std::int64_t g = sum / 2;
  const mpz_class ratio = factorial(g) / (factorial(g - whole(j1)) * factorial(g - whole(j2)) * factorial(g - whole(j)));
  mpq_class radicand(mpz_class(j.twice + 1) * factorial(a) * factorial(b) * factorial(c) * ratio * ratio,
                     factorial(sum + 1));
  radicand.canonicalize();
  return {detail::minus_one_pow(b / 2), radicand};
}

inline double exact_value(const QuantumNumbers& q) { return radical_to_float(wigner_sum(q)); }

}  // namespace cgasym
