#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "cgasym/quantum_numbers.hpp"

namespace cgasym {

inline mpq_class to_mpq(HalfInt h) {
  mpq_class r(h.twice, 2);
  r.canonicalize();
  return r;
}

/// mpz to a floating type with about 106 correct bits before rounding, enough
/// for long double.
template <class Real>
Real to_real(const mpz_class& z) {
  const long e = static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
  if (e <= 106) {
    // Two doubles hold up to 106 bits exactly: the truncated top 53 and the rest.
    const double hi = mpz_get_d(z.get_mpz_t());
    const mpz_class rest = z - mpz_class(hi);
    return static_cast<Real>(hi) + static_cast<Real>(mpz_get_d(rest.get_mpz_t()));
  }
  // Keep the leading ~106 bits: shift down, convert exactly, scale back.
  const long shift = e - 106;
  mpz_class top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  return std::ldexp(to_real<Real>(top), static_cast<int>(shift));
}

template <class Real>
Real to_real(const mpq_class& q) {
  return to_real<Real>(q.get_num()) / to_real<Real>(q.get_den());
}

/// Natural log of a positive integer, accurate to a few ulp of long double.
inline long double log_integer(const mpz_class& z) {
  const long e = static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
  const long shift = e > 64 ? e - 64 : 0;
  mpz_class top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  return std::log(to_real<long double>(top)) + static_cast<long double>(shift) * std::log(2.0L);
}

inline long double log_rational(const mpq_class& q) { return log_integer(q.get_num()) - log_integer(q.get_den()); }

inline std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace cgasym
