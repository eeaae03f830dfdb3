#pragma once

// Independent oracles and random generators shared by the test programs.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cgasym/exact_radical.hpp"
#include "cgasym/quantum_numbers.hpp"

namespace cgtest {

using cgasym::ExactRadical;
using cgasym::HalfInt;
using cgasym::QuantumNumbers;

inline mpz_class fact(std::int64_t n) {
  mpz_class r = 1;
  for (std::int64_t k = 2; k <= n; ++k) r *= static_cast<unsigned long>(k);
  return r;
}

/// Racah's single-sum form, written from scratch with naive factorials.
inline ExactRadical racah_cg(const QuantumNumbers& q) {
  const std::int64_t j1 = q.j1().twice, m1 = q.m1().twice, j2 = q.j2().twice, m2 = q.m2().twice, j = q.j().twice,
                     m = q.m().twice;
  if (m != m1 + m2) return ExactRadical();
  auto h = [](std::int64_t twice) { return twice / 2; };
  const std::int64_t d1 = j1 + j2 - j, d2 = j1 - j2 + j, d3 = -j1 + j2 + j;
  if (d1 < 0 || d2 < 0 || d3 < 0 || std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m) > j) return ExactRadical();
  mpq_class pref = mpq_class(fact(h(d1)) * fact(h(d2)) * fact(h(d3)) * (j + 1), fact(h(j1 + j2 + j) + 1));
  pref *= fact(h(j1 + m1)) * fact(h(j1 - m1)) * fact(h(j2 + m2)) * fact(h(j2 - m2)) * fact(h(j + m)) * fact(h(j - m));
  mpq_class s = 0;
  for (std::int64_t k = 0; k <= h(d1); ++k) {
    const std::int64_t f[6] = {k, h(d1) - k, h(j1 - m1) - k, h(j2 + m2) - k, h(j - j2 + m1) + k, h(j - j1 - m2) + k};
    bool ok = true;
    for (auto x : f) ok = ok && x >= 0;
    if (!ok) continue;
    mpz_class den = 1;
    for (auto x : f) den *= fact(x);
    s += mpq_class(k % 2 == 0 ? 1 : -1, den);
  }
  s.canonicalize();
  const int sign = sgn(s);
  mpq_class sq = pref * s * s;
  sq.canonicalize();
  return ExactRadical(sign, sq);
}

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// All valid points (m = m1 + m2, triangle-allowed) with every 2j at most max_twice.
inline std::vector<QuantumNumbers> all_points(std::int64_t max_twice) {
  std::vector<QuantumNumbers> out;
  for (std::int64_t a = 0; a <= max_twice; ++a)
    for (std::int64_t b = 0; b <= max_twice; ++b)
      for (std::int64_t c = std::abs(a - b); c <= std::min(a + b, max_twice); c += 2)
        for (std::int64_t x = -a; x <= a; x += 2)
          for (std::int64_t y = -b; y <= b; y += 2)
            if (std::abs(x + y) <= c) out.push_back(QuantumNumbers::from_twice({a, x, b, y, c, x + y}));
  return out;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace cgtest
