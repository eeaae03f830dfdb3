#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "cgasym/errors.hpp"

namespace cgasym {

/// sign * sqrt(radicand) with a nonnegative rational radicand in lowest terms.
class ExactRadical {
 public:
  ExactRadical() = default;

  ExactRadical(int sign, mpq_class radicand) : radicand_(std::move(radicand)) {
    radicand_.canonicalize();
    if (sgn(radicand_) < 0) throw DomainError("radicand must be nonnegative");
    sign_ = (sign == 0 || sgn(radicand_) == 0) ? 0 : (sign > 0 ? 1 : -1);
    if (sign_ == 0) radicand_ = 0;
  }

  /// The radical whose value is the rational v.
  static ExactRadical of_rational(const mpq_class& v) { return {sgn(v), v * v}; }

  int sign() const { return sign_; }
  const mpq_class& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// Signed square: sign * radicand.
  mpq_class signed_square() const { return sign_ * radicand_; }

  friend bool operator==(const ExactRadical& a, const ExactRadical& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }

  ExactRadical operator-() const { return {-sign_, radicand_}; }

  friend ExactRadical operator*(const ExactRadical& a, const ExactRadical& b) {
    return {a.sign_ * b.sign_, a.radicand_ * b.radicand_};
  }

  /// "1*sqrt(1/2)", "-1*sqrt(3)", "0*sqrt(0)".
  std::string to_string() const { return std::to_string(sign_) + "*sqrt(" + radicand_.get_str() + ")"; }

 private:
  int sign_ = 0;
  mpq_class radicand_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExactRadical& r) { return os << r.to_string(); }

/// sqrt of a nonnegative rational as binary64, rounded to nearest for any
/// magnitude in the normal binary64 range.
inline double sqrt_rational_to_double(const mpq_class& r) {
  if (sgn(r) < 0) throw DomainError("square root of a negative rational");
  if (sgn(r) == 0) return 0.0;
  const mpz_class& p = r.get_num();
  const mpz_class& q = r.get_den();
  // Scale by 4^k so that the integer quotient carries about 220 bits.
  const long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
  const long k = (220 - e + 1) / 2;
  mpz_class scaled, rem;
  if (k >= 0) {
    mpz_class num = p;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * k));
    mpz_tdiv_qr(scaled.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
  } else {
    mpz_class den = q;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-2 * k));
    mpz_tdiv_qr(scaled.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), den.get_mpz_t());
  }
  mpz_class root, root_rem;
  mpz_sqrtrem(root.get_mpz_t(), root_rem.get_mpz_t(), scaled.get_mpz_t());
  const bool inexact = sgn(rem) != 0 || sgn(root_rem) != 0;
  // Round the ~110-bit root to 53 bits by hand; the discarded tail plus the
  // inexact flag decide the direction.
  const long shift = static_cast<long>(mpz_sizeinbase(root.get_mpz_t(), 2)) - std::numeric_limits<double>::digits;
  mpz_class mant = root;
  if (shift > 0) {
    mpz_class tail;
    mpz_fdiv_r_2exp(tail.get_mpz_t(), root.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_fdiv_q_2exp(mant.get_mpz_t(), root.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_class half = 1;
    mpz_mul_2exp(half.get_mpz_t(), half.get_mpz_t(), static_cast<mp_bitcnt_t>(shift - 1));
    const int c = cmp(tail, half);
    if (c > 0 || (c == 0 && (inexact || mpz_odd_p(mant.get_mpz_t())))) ++mant;
  }
  const long total = std::max(shift, 0L) - k;
  const long top = total + static_cast<long>(mpz_sizeinbase(mant.get_mpz_t(), 2));
  if (top > std::numeric_limits<double>::max_exponent) throw OverflowError("magnitude exceeds binary64 range");
  if (top < std::numeric_limits<double>::min_exponent - std::numeric_limits<double>::digits + 1)
    throw OverflowError("magnitude below binary64 range");
  const double v = std::ldexp(mant.get_d(), static_cast<int>(total));
  if (std::isinf(v)) throw OverflowError("magnitude exceeds binary64 range");
  return v;
}

inline double radical_to_float(const ExactRadical& x) {
  if (x.is_zero()) return 0.0;
  return x.sign() * sqrt_rational_to_double(x.radicand());
}

}  // namespace cgasym
