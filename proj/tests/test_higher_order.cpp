#include <catch_amalgamated.hpp>

#include <chrono>
#include <cmath>

#include "cgasym/exact.hpp"
#include "cgasym/higher_order.hpp"
#include "support.hpp"

using namespace cgasym;
using C = std::complex<long double>;

namespace {

// Gaussian-moment oracle: with covariance S = -H^-1, delta4 = <g4> and
// delta6 = <g3^2>/2, expanded by Wick pairings over explicit index sums.
struct Tensors {
  C h[2][2], t3[2][2][2], t4[2][2][2][2];
};

Tensors tensors_of(const DerivativeBundle<long double>& d) {
  Tensors t{};
  const C g3[4] = {d.g_ttt, d.g_ttp, d.g_tpp, d.g_ppp};  // by number of phi indices
  const C g4[5] = {d.g_tttt, d.g_tttp, d.g_ttpp, d.g_tppp, d.g_pppp};
  t.h[0][0] = d.g_tt;
  t.h[0][1] = t.h[1][0] = d.g_tp;
  t.h[1][1] = d.g_pp;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        t.t3[i][j][k] = g3[i + j + k];
        for (int l = 0; l < 2; ++l) t.t4[i][j][k][l] = g4[i + j + k + l];
      }
  return t;
}

std::pair<C, C> wick_corrections(const DerivativeBundle<long double>& d) {
  const Tensors t = tensors_of(d);
  const C det = t.h[0][0] * t.h[1][1] - t.h[0][1] * t.h[1][0];
  C s[2][2];
  s[0][0] = -t.h[1][1] / det;
  s[1][1] = -t.h[0][0] / det;
  s[0][1] = s[1][0] = t.h[0][1] / det;
  C quartic = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          quartic += t.t4[i][j][k][l] * (s[i][j] * s[k][l] + s[i][k] * s[j][l] + s[i][l] * s[j][k]);
  quartic /= 24.0L;
  // <x_i x_j x_k x_l x_m x_n> summed over all 15 pairings
  C sextic = 0;
  int idx[6];
  for (int code = 0; code < 64; ++code) {
    for (int b = 0; b < 6; ++b) idx[b] = (code >> b) & 1;
    const C coeff = t.t3[idx[0]][idx[1]][idx[2]] * t.t3[idx[3]][idx[4]][idx[5]];
    C moment = 0;
    // enumerate perfect matchings of {0..5}
    for (int p1 = 1; p1 < 6; ++p1) {
      int rest[4], r = 0;
      for (int x = 1; x < 6; ++x)
        if (x != p1) rest[r++] = x;
      for (int p2 = 1; p2 < 4; ++p2) {
        int last[2], q = 0;
        for (int x = 1; x < 4; ++x)
          if (x != p2) last[q++] = rest[x];
        moment += s[idx[0]][idx[p1]] * s[idx[rest[0]]][idx[rest[p2]]] * s[idx[last[0]]][idx[last[1]]];
      }
    }
    sextic += coeff * moment;
  }
  sextic /= 72.0L;  // (1/6)^2 / 2
  return {quartic, sextic};
}

bool close(C a, C b, long double tol) { return std::abs(a - b) <= tol * (1e-30L + std::abs(b)); }

}  // namespace

TEST_CASE("delta4 and delta6 match the Wick-pairing oracle") {
  for (const auto& q : {QuantumNumbers(200, 100, 300, 150, 400, 250), QuantumNumbers(200, 150, 300, -250, 400, -100),
                        QuantumNumbers(2, 0, 2, 0, 2, 0), QuantumNumbers(12, 3, 9, -2, 15, 1),
                        QuantumNumbers::from_twice({41, 17, 60, -34, 77, -17})}) {
    const auto p = saddle_params<long double>(q);
    for (auto br : {Branch::Upper, Branch::Lower}) {
      const auto d = derivative_bundle(stationary_point(p, br), p);
      const auto [w4, w6] = wick_corrections(d);
      INFO(to_string(q) << ' ' << to_string(br));
      CHECK(close(delta4(d), w4, 1e-12L));
      CHECK(close(delta6(d), w6, 1e-12L));
    }
  }
}

TEST_CASE("corrections vanish with the corresponding derivatives") {
  const auto q = QuantumNumbers(12, 3, 9, -2, 15, 1);
  const auto p = saddle_params<long double>(q);
  auto d = derivative_bundle(stationary_point(p, Branch::Upper), p);
  auto no4 = d;
  no4.g_tttt = no4.g_tttp = no4.g_ttpp = no4.g_tppp = no4.g_pppp = 0;
  CHECK(delta4(no4) == C(0));
  auto no3 = d;
  no3.g_ttt = no3.g_ttp = no3.g_tpp = no3.g_ppp = 0;
  CHECK(delta6(no3) == C(0));
  auto flipped = d;
  flipped.g_ttt = -d.g_ttt;
  flipped.g_ttp = -d.g_ttp;
  flipped.g_tpp = -d.g_tpp;
  flipped.g_ppp = -d.g_ppp;
  CHECK(close(delta6(flipped), delta6(d), 1e-15L));
  DerivativeBundle<long double> zero{};
  CHECK_THROWS_AS(delta4(zero), SingularError);
  CHECK_THROWS_AS(delta6(zero), SingularError);
}

TEST_CASE("m = 0 correction sum at (2,2,2)") {
  const auto q = QuantumNumbers(2, 0, 2, 0, 2, 0);
  const auto p = saddle_params<long double>(q);
  const auto u = corrections(derivative_bundle(stationary_point(p, Branch::Upper), p));
  const auto l = corrections(derivative_bundle(stationary_point(p, Branch::Lower), p));
  CHECK(std::abs(u.sum() - C(-2.0L / 9)) < 1e-12L);
  CHECK(std::abs(l.sum() - C(-2.0L / 9)) < 1e-12L);
  CHECK(std::abs(u.delta4 - l.delta4) < 1e-12L);
  CHECK(std::abs(u.delta6 - l.delta6) < 1e-12L);
  CHECK(std::abs(m0_delta_sum(2, 2, 2) + 2.0 / 9) < 1e-12);
}

TEST_CASE("closed-form m = 0 correction sum equals the generic one") {
  cgtest::Rng rng(3);
  int done = 0;
  while (done < 50) {
    const std::int64_t a = cgtest::uniform(rng, 1, 300), b = cgtest::uniform(rng, 1, 300), c = cgtest::uniform(rng, 1, 300);
    if (c >= a + b || c <= std::abs(a - b)) continue;
    const auto p = saddle_params<long double>(QuantumNumbers(a, 0, b, 0, c, 0));
    const auto g = corrections(derivative_bundle(stationary_point(p, Branch::Upper), p)).sum();
    const double closed = m0_delta_sum(a, b, c);
    INFO(a << ',' << b << ',' << c);
    REQUIRE(std::abs(g.imag()) < 1e-12L * std::abs(g.real()));
    REQUIRE(std::abs(closed - static_cast<double>(g.real())) <= 1e-10 * std::abs(closed));
    ++done;
  }
}

TEST_CASE("m = 0 correction sum scales as 1/s") {
  for (const auto& t : {std::array<std::int64_t, 3>{3, 4, 5}, {7, 7, 7}, {10, 13, 8}}) {
    const double base = m0_delta_sum(t[0], t[1], t[2]);
    for (std::int64_t s : {2, 5, 10, 100}) CHECK(m0_delta_sum(s * t[0], s * t[1], s * t[2]) * s == Catch::Approx(base).epsilon(1e-12));
  }
  CHECK_THROWS_AS(m0_delta_sum(1, 1, 2), DomainError);
}

TEST_CASE("higher-order values at large quantum numbers") {
  const HalfInt h = HalfInt::from_twice(1);
  CHECK(higher_order(QuantumNumbers(200, 100, 300, 150, 400, 250)) == Catch::Approx(0.0703496).margin(5e-8));
  CHECK(higher_order(QuantumNumbers(200, 100, HalfInt(300) + h, HalfInt(150) + h, HalfInt(400) + h, HalfInt(250) + h)) ==
        Catch::Approx(0.0730633).margin(5e-8));
  CHECK(higher_order(QuantumNumbers(200, 150, 300, -250, 400, -100)) == Catch::Approx(3.08958e-19).epsilon(2e-5));
  CHECK_THROWS_AS(higher_order(QuantumNumbers(3, -2, 6, 4, 7, 2)), BoundaryError);
}

TEST_CASE("higher order is fast") {
  const auto q = QuantumNumbers(200, 100, 300, 150, 400, 250);
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < 100; ++k) (void)higher_order(q);
  const double per = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / 100;
  CHECK(per < 0.01);
}

TEST_CASE("m = 0 branch contributions cancel for odd sums and coincide for even sums") {
  for (const auto& t : {std::array<std::int64_t, 3>{3, 4, 6}, {10, 12, 13}, {20, 30, 40}, {21, 30, 40}}) {
    const auto q = QuantumNumbers(t[0], 0, t[1], 0, t[2], 0);
    const auto b = both_branch_terms<long double>(q, static_cast<long double>(log_n_corrected(q)));
    const C u = b[0].value() * (1.0L + corrections(b[0].derivatives).sum());
    const C l = b[1].value() * (1.0L + corrections(b[1].derivatives).sum());
    if (q.sum_j() % 2) {
      CHECK(std::abs(u + l) <= 1e-12L * std::abs(u));
    } else {
      CHECK(std::abs(u - l) <= 1e-12L * std::abs(u));
    }
  }
}

TEST_CASE("m = 0 closed forms") {
  CHECK(m0_higher(1, 1, 1) == 0.0);
  CHECK(m0_approx_of_exact(3, 4, 6) == 0.0);
  CHECK_THROWS_AS(m0_higher(1, 1, 2), DomainError);
  CHECK_THROWS_AS(m0_approx_of_exact(1, 1, 2), DomainError);
  CHECK(cgtest::rel_err(m0_approx_of_exact(2, 2, 2), radical_to_float(exact_m0(2, 2, 2))) < 0.25);
  CHECK(cgtest::rel_err(m0_approx_of_exact(40, 40, 40), radical_to_float(exact_m0(40, 40, 40))) < 0.01);
}

TEST_CASE("m0_higher agrees with the generic higher order") {
  cgtest::Rng rng(5);
  int done = 0;
  while (done < 30) {
    // The two forms differ at O(1/j^2) (see the next test), which sits below
    // 1e-10 once the j's are a few times 10^4.
    const std::int64_t a = cgtest::uniform(rng, 20000, 100000), b = cgtest::uniform(rng, 20000, 100000);
    const std::int64_t margin = std::min(a, b) / 5;
    const std::int64_t c = cgtest::uniform(rng, std::abs(a - b) + margin, a + b - margin);
    if ((a + b + c) % 2) continue;
    const double g = higher_order(QuantumNumbers(a, 0, b, 0, c, 0));
    INFO(a << ',' << b << ',' << c);
    REQUIRE(std::abs(m0_higher(a, b, c) - g) <= 1e-10 * std::abs(g));
    ++done;
  }
}

TEST_CASE("m0_higher and the generic higher order differ at O(1/j^2)") {
  std::vector<double> gaps;
  for (std::int64_t s : {1, 3, 10, 30}) {
    const std::int64_t a = 542 * s, b = 618 * s, c = 566 * s;
    const double g = higher_order(QuantumNumbers(a, 0, b, 0, c, 0));
    gaps.push_back(std::abs(m0_higher(a, b, c) - g) / std::abs(g));
  }
  const double slope = -std::log(gaps.back() / gaps.front()) / std::log(30.0);
  CHECK(slope == Catch::Approx(2.0).margin(0.15));
}

TEST_CASE("m = 0 expansions improve on first order by a full power of 1/j") {
  std::vector<double> scales, err_approx, err_higher;
  for (std::int64_t s : {8, 16, 32, 64, 128}) {
    const double ex = radical_to_float(exact_m0(3 * s, 4 * s, 5 * s));
    scales.push_back(static_cast<double>(s));
    err_approx.push_back(std::abs(m0_approx_of_exact(3 * s, 4 * s, 5 * s) / ex - 1));
    err_higher.push_back(std::abs(m0_higher(3 * s, 4 * s, 5 * s) / ex - 1));
  }
  auto slope = [&](const std::vector<double>& e) {
    return -(std::log(e.back()) - std::log(e.front())) / (std::log(scales.back()) - std::log(scales.front()));
  };
  CHECK(slope(err_approx) >= 1.9);
  CHECK(slope(err_higher) >= 1.9);
}

TEST_CASE("corrections stay perturbative away from the caustic") {
  cgtest::Rng rng(19);
  int done = 0;
  while (done < 100) {
    const std::int64_t tj = cgtest::uniform(rng, 40, 400);
    const std::int64_t tj1 = cgtest::uniform(rng, 1, tj), tj2 = cgtest::uniform(rng, 1, tj);
    if ((tj + tj1 + tj2) % 2 || tj >= tj1 + tj2 || tj <= std::abs(tj1 - tj2)) continue;
    const std::int64_t tm1 = -tj1 + 2 * cgtest::uniform(rng, 0, tj1), tm2 = -tj2 + 2 * cgtest::uniform(rng, 0, tj2);
    if (std::abs(tm1) == tj1 || std::abs(tm2) == tj2 || std::abs(tm1 + tm2) >= tj) continue;  // interior only
    const auto q = QuantumNumbers::from_twice({tj1, tm1, tj2, tm2, tj, tm1 + tm2});
    const auto rc = classify(q);
    if ((rc.tag != RegionTag::Allowed && rc.tag != RegionTag::Forbidden) || near_caustic(q)) continue;
    const auto terms = active_branch_terms<long double>(q, static_cast<long double>(log_n_corrected(q)));
    for (const auto& t : terms) {
      INFO(to_string(q));
      REQUIRE(std::abs(corrections(t.derivatives).sum()) < 0.5L);
    }
    ++done;
  }
}
