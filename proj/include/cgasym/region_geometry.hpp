#pragma once

// Exact geometric invariants of a coefficient: beta^2, the lambda's, the
// branch-selection polynomial, the Regge array and the (m1, m2) region map.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cgasym/errors.hpp"
#include "cgasym/quantum_numbers.hpp"
#include "cgasym/rational.hpp"

namespace cgasym {

/// 4 m1 m2 j^2 - 4 m m1 j2^2 - 4 m m2 j1^2 + (j1+j2-j)(j+j2-j1)(j+j1-j2)(j1+j2+j).
inline mpq_class beta_squared(const QuantumNumbers& q) {
  const mpq_class j1 = to_mpq(q.j1()), m1 = to_mpq(q.m1()), j2 = to_mpq(q.j2()), m2 = to_mpq(q.m2());
  const mpq_class j = to_mpq(q.j()), m = to_mpq(q.m());
  mpq_class r = 4 * m1 * m2 * j * j - 4 * m * m1 * j2 * j2 - 4 * m * m2 * j1 * j1;
  r += (j1 + j2 - j) * (j + j2 - j1) * (j + j1 - j2) * (j1 + j2 + j);
  return r;
}

/// (j+j1+j2)(-j+j1+j2)(j-j1+j2)(j+j1-j2): sixteen times the squared j-triangle area.
inline mpq_class alpha_squared(HalfInt j1, HalfInt j2, HalfInt j) {
  const mpq_class a = to_mpq(j1), b = to_mpq(j2), c = to_mpq(j);
  return (c + a + b) * (-c + a + b) * (c - a + b) * (c + a - b);
}

/// lambda_i^2 = j_i^2 - m_i^2, ordered (lambda1, lambda2, lambda3) with lambda3 from (j, m).
inline std::array<mpq_class, 3> lambda_squared(const QuantumNumbers& q) {
  auto sq = [](HalfInt j, HalfInt m) {
    const mpq_class a = to_mpq(j), b = to_mpq(m);
    return mpq_class(a * a - b * b);
  };
  return {sq(q.j1(), q.m1()), sq(q.j2(), q.m2()), sq(q.j(), q.m())};
}

/// Heron form 2(l1^2 l2^2 + l2^2 l3^2 + l3^2 l1^2) - (l1^4 + l2^4 + l3^4): sixteen times
/// the squared lambda-triangle area. Equals beta^2 whenever m = m1 + m2.
inline mpq_class heron_lambda(const QuantumNumbers& q) {
  const auto l = lambda_squared(q);
  return 2 * (l[0] * l[1] + l[1] * l[2] + l[2] * l[0]) - (l[0] * l[0] + l[1] * l[1] + l[2] * l[2]);
}

struct LambdaAlpha {
  double lambda1 = 0, lambda2 = 0, lambda3 = 0;
  double alpha = 0;
};

inline LambdaAlpha lambda_alpha(const QuantumNumbers& q) {
  if (abs(q.m1()) > q.j1() || abs(q.m2()) > q.j2() || abs(q.m()) > q.j())
    throw DomainError("|m| exceeds j; lambda is not real");
  const auto l = lambda_squared(q);
  const mpq_class a2 = alpha_squared(q.j1(), q.j2(), q.j());
  LambdaAlpha r;
  r.lambda1 = std::sqrt(to_real<double>(l[0]));
  r.lambda2 = std::sqrt(to_real<double>(l[1]));
  r.lambda3 = std::sqrt(to_real<double>(l[2]));
  r.alpha = sgn(a2) > 0 ? std::sqrt(to_real<double>(a2)) : 0.0;
  return r;
}

/// Number of violated lambda-triangle inequalities lambda_k > lambda_i + lambda_j,
/// decided exactly: lambda_k > lambda_i + lambda_j iff
/// d = lambda_k^2 - lambda_i^2 - lambda_j^2 > 0 and d^2 > 4 lambda_i^2 lambda_j^2.
inline int lambda_triangle_violations(const QuantumNumbers& q) {
  const auto l = lambda_squared(q);
  int count = 0;
  for (int k = 0; k < 3; ++k) {
    const auto& li = l[(k + 1) % 3];
    const auto& lj = l[(k + 2) % 3];
    const mpq_class d = l[k] - li - lj;
    if (sgn(d) > 0 && d * d > 4 * li * lj) ++count;
  }
  return count;
}

/// The three linear factors whose product decides the stationary-point branch in
/// the forbidden region. Each is (m1, m2) . v_k for the vectors returned here.
inline std::array<std::array<mpq_class, 2>, 3> branch_factor_vectors(HalfInt j1h, HalfInt j2h, HalfInt jh) {
  const mpq_class j1 = to_mpq(j1h), j2 = to_mpq(j2h), j = to_mpq(jh);
  const mpq_class a = j1 * j1, b = j2 * j2, c = j * j;
  return {{{-2 * b, c - a - b}, {-c + a - b, c + a - b}, {-c + a + b, 2 * a}}};
}

inline mpq_class branch_polynomial(const QuantumNumbers& q) {
  const auto v = branch_factor_vectors(q.j1(), q.j2(), q.j());
  const mpq_class m1 = to_mpq(q.m1()), m2 = to_mpq(q.m2());
  mpq_class r = 1;
  for (const auto& f : v) r *= m1 * f[0] + m2 * f[1];
  return r;
}

// ---------------------------------------------------------------------------
// Regge array

/// Rows: J - 2j_k, j_k - mu_k, j_k + mu_k over the 3j columns (j1, m1), (j2, m2), (j, -m).
/// Every row and column sums to J = j1 + j2 + j.
struct ReggeArray {
  std::array<std::array<std::int64_t, 3>, 3> entries{};

  std::int64_t row_sum(int r) const { return entries[r][0] + entries[r][1] + entries[r][2]; }
  std::int64_t col_sum(int c) const { return entries[0][c] + entries[1][c] + entries[2][c]; }
  friend bool operator==(const ReggeArray&, const ReggeArray&) = default;
};

inline ReggeArray regge_array(const QuantumNumbers& q) {
  if (!conserves_m(q)) throw DomainError("Regge array requires m = m1 + m2");
  const std::int64_t sum = q.sum_j();
  const std::array<HalfInt, 3> js{q.j1(), q.j2(), q.j()};
  const std::array<HalfInt, 3> mus{q.m1(), q.m2(), -q.m()};
  ReggeArray r;
  for (int k = 0; k < 3; ++k) {
    r.entries[0][k] = sum - js[k].twice;
    r.entries[1][k] = whole(js[k] - mus[k]);
    r.entries[2][k] = whole(js[k] + mus[k]);
  }
  for (const auto& row : r.entries)
    for (auto x : row)
      if (x < 0) throw DomainError("negative Regge entry: quantum numbers are not triangle-allowed");
  return r;
}

/// Quantum numbers read back from a Regge array (inverse of regge_array).
inline QuantumNumbers from_regge_array(const ReggeArray& r) {
  std::array<HalfInt, 3> js, mus;
  for (int k = 0; k < 3; ++k) {
    js[k] = HalfInt::from_twice(r.entries[1][k] + r.entries[2][k]);
    mus[k] = HalfInt::from_twice(r.entries[2][k] - r.entries[1][k]);
  }
  return {js[0], mus[0], js[1], mus[1], js[2], -mus[2]};
}

/// The 72 images under row permutations, column permutations and transposition.
/// Duplicates are kept so the list always has 72 entries.
inline std::vector<QuantumNumbers> regge_images(const QuantumNumbers& q) {
  const ReggeArray base = regge_array(q);
  std::array<int, 3> rp{0, 1, 2};
  std::vector<QuantumNumbers> out;
  out.reserve(72);
  do {
    std::array<int, 3> cp{0, 1, 2};
    do {
      for (int transpose = 0; transpose < 2; ++transpose) {
        ReggeArray r;
        for (int i = 0; i < 3; ++i)
          for (int k = 0; k < 3; ++k)
            r.entries[i][k] = transpose ? base.entries[rp[k]][cp[i]] : base.entries[rp[i]][cp[k]];
        out.push_back(from_regge_array(r));
      }
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return out;
}

/// p_n = sum of n-th powers of the nine Regge entries, n = 1..n_max.
inline std::vector<mpz_class> regge_power_sums(const QuantumNumbers& q, int n_max) {
  if (n_max < 4) throw DomainError("n_max must be at least 4");
  const ReggeArray r = regge_array(q);
  std::vector<mpz_class> p(static_cast<std::size_t>(n_max), 0);
  for (const auto& row : r.entries) {
    for (auto x : row) {
      mpz_class pw = 1;
      for (int n = 1; n <= n_max; ++n) {
        pw *= x;
        p[static_cast<std::size_t>(n - 1)] += pw;
      }
    }
  }
  return p;
}

/// (p1^4 - 6 p2 p1^2 - 27 p2^2 + 108 p4) / 324.
inline mpq_class beta_squared_from_power_sums(const std::vector<mpz_class>& p) {
  if (p.size() < 4) throw DomainError("need p1..p4");
  const mpz_class& p1 = p[0];
  const mpz_class& p2 = p[1];
  const mpz_class& p4 = p[3];
  mpq_class r(p1 * p1 * p1 * p1 - 6 * p2 * p1 * p1 - 27 * p2 * p2 + 108 * p4, 324);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Region map in the (m1, m2) plane at fixed j1, j2, j (with m = m1 + m2)

/// a m1 + b m2 = c_twice / 2.
struct HexagonEdge {
  std::int64_t a = 0, b = 0, c_twice = 0;
};

/// beta^2 = A m1^2 + B m1 m2 + C m2^2 + F.
struct EllipseForm {
  mpq_class A, B, C, F;

  mpq_class eval(const mpq_class& m1, const mpq_class& m2) const { return A * m1 * m1 + B * m1 * m2 + C * m2 * m2 + F; }
};

struct TangencyPoint {
  int edge = 0;  // index into RegionGeometry::edges
  mpq_class m1, m2;
};

struct RegionGeometry {
  HalfInt j1, j2, j;
  std::array<HexagonEdge, 6> edges;
  EllipseForm ellipse;
  std::array<TangencyPoint, 6> tangency;
  std::array<std::array<mpq_class, 2>, 3> branch_vectors;
};

inline RegionGeometry region_map_geometry(HalfInt j1, HalfInt j2, HalfInt j) {
  if (j1.twice < 0 || j2.twice < 0 || j.twice < 0) throw DomainError("angular momenta must be nonnegative");
  if (j > j1 + j2 || j < j1 - j2 || j < j2 - j1) throw DomainError("j's violate the triangle inequalities");
  if (!(j1 + j2 + j).is_integer()) throw DomainError("j1 + j2 + j must be an integer");
  RegionGeometry g;
  g.j1 = j1;
  g.j2 = j2;
  g.j = j;
  g.edges = {{{1, 0, j1.twice}, {0, 1, j2.twice}, {1, 1, j.twice}, {-1, 0, j1.twice}, {0, -1, j2.twice}, {-1, -1, j.twice}}};
  const mpq_class a = to_mpq(j1), b = to_mpq(j2), c = to_mpq(j);
  const mpq_class a2 = a * a, b2 = b * b, c2 = c * c;
  g.ellipse = {-4 * b2, 4 * c2 - 4 * a2 - 4 * b2, -4 * a2, alpha_squared(j1, j2, j)};
  // Each edge restricted to the ellipse gives a quadratic with a double root.
  const mpq_class u = (c2 - a2 - b2);
  const bool degenerate_a = sgn(a) == 0, degenerate_b = sgn(b) == 0, degenerate_c = sgn(c) == 0;
  auto safe_div = [](const mpq_class& x, const mpq_class& y, bool zero) { return zero ? mpq_class(0) : mpq_class(x / y); };
  const mpq_class t1 = safe_div(u, 2 * a, degenerate_a);               // m2 on m1 = j1
  const mpq_class t2 = safe_div(u, 2 * b, degenerate_b);               // m1 on m2 = j2
  const mpq_class t3 = safe_div(c2 + a2 - b2, 2 * c, degenerate_c);    // m1 on m1 + m2 = j
  g.tangency = {{{0, a, t1}, {1, t2, b}, {2, t3, c - t3}, {3, -a, -t1}, {4, -t2, -b}, {5, -t3, -c + t3}}};
  g.branch_vectors = branch_factor_vectors(j1, j2, j);
  return g;
}

inline nlohmann::json to_json(const RegionGeometry& g) {
  using nlohmann::json;
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"c_twice", e.c_twice}});
  json tangency = json::array();
  for (const auto& t : g.tangency)
    tangency.push_back({{"edge", t.edge}, {"m1", to_real<double>(t.m1)}, {"m2", to_real<double>(t.m2)}});
  json vectors = json::array();
  for (const auto& v : g.branch_vectors) vectors.push_back({v[0].get_str(), v[1].get_str()});
  return {{"j1", to_string(g.j1)},
          {"j2", to_string(g.j2)},
          {"j", to_string(g.j)},
          {"hexagon_edges", edges},
          {"ellipse",
           {{"A", g.ellipse.A.get_str()},
            {"B", g.ellipse.B.get_str()},
            {"C", g.ellipse.C.get_str()},
            {"F", g.ellipse.F.get_str()}}},
          {"tangency_points", tangency},
          {"branch_vectors", vectors}};
}

}  // namespace cgasym
