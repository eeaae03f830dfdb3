#include <catch_amalgamated.hpp>

#include <cmath>

#include "cgasym/exact.hpp"
#include "cgasym/region_geometry.hpp"
#include "support.hpp"

using namespace cgasym;

TEST_CASE("beta squared examples") {
  CHECK(beta_squared(QuantumNumbers(3, -2, 6, 4, 7, 2)) == 0);
  CHECK(beta_squared(QuantumNumbers(2, 0, 2, 0, 2, 0)) == 48);
  CHECK(beta_squared(QuantumNumbers(1, 1, 1, 1, 2, 2)) == 0);
  CHECK(beta_squared(QuantumNumbers(200, 100, 300, 150, 400, 250)) == 8100000000);
  CHECK(beta_squared(QuantumNumbers(200, 150, 300, -250, 400, -100)) == -9100000000);
}

TEST_CASE("beta squared equals the lambda Heron form when m is conserved") {
  for (const auto& q : cgtest::all_points(9)) REQUIRE(beta_squared(q) == heron_lambda(q));
}

TEST_CASE("beta squared at m = 0 is alpha squared") {
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = 1; b <= 12; ++b)
      for (std::int64_t c = std::abs(a - b); c <= a + b; ++c)
        REQUIRE(beta_squared(QuantumNumbers(a, 0, b, 0, c, 0)) == alpha_squared(a, b, c));
}

TEST_CASE("lambda and alpha examples") {
  auto la = lambda_alpha(QuantumNumbers(2, 0, 2, 0, 2, 0));
  CHECK(la.lambda1 == 2.0);
  CHECK(la.lambda2 == 2.0);
  CHECK(la.lambda3 == 2.0);
  CHECK(la.alpha == Catch::Approx(std::sqrt(48.0)));
  la = lambda_alpha(QuantumNumbers(1, 1, 1, 1, 2, 2));
  CHECK(la.lambda1 == 0.0);
  CHECK(la.lambda2 == 0.0);
  CHECK(la.lambda3 == 0.0);
  la = lambda_alpha(QuantumNumbers(3, -2, 6, 4, 7, 2));
  CHECK(la.lambda1 == Catch::Approx(std::sqrt(5.0)));
  CHECK(la.lambda2 == Catch::Approx(std::sqrt(20.0)));
  CHECK(la.lambda3 == Catch::Approx(std::sqrt(45.0)));
  CHECK(la.lambda1 + la.lambda2 == Catch::Approx(la.lambda3));
  CHECK_THROWS_AS(lambda_alpha(QuantumNumbers(1, 2, 1, 0, 2, 2)), DomainError);
}

TEST_CASE("lambda triangle is violated exactly in the forbidden region") {
  for (const auto& q : cgtest::all_points(9)) {
    const int s = sgn(beta_squared(q));
    const int v = lambda_triangle_violations(q);
    if (s > 0) REQUIRE(v == 0);
    if (s < 0) REQUIRE(v == 1);
  }
}

TEST_CASE("branch polynomial vanishes at m1 = m2 = 0") {
  for (std::int64_t a = 0; a <= 8; ++a)
    for (std::int64_t b = 0; b <= 8; ++b)
      for (std::int64_t c = std::abs(a - b); c <= a + b; ++c) REQUIRE(branch_polynomial(QuantumNumbers(a, 0, b, 0, c, 0)) == 0);
  CHECK(sgn(branch_polynomial(QuantumNumbers(200, 150, 300, -250, 400, -100))) < 0);
}

TEST_CASE("Regge array round-trips and has constant line sums") {
  for (const auto& q : cgtest::all_points(6)) {
    const auto r = regge_array(q);
    for (int k = 0; k < 3; ++k) {
      REQUIRE(r.row_sum(k) == q.sum_j());
      REQUIRE(r.col_sum(k) == q.sum_j());
    }
    REQUIRE(from_regge_array(r) == q);
  }
  CHECK_THROWS_AS(regge_array(QuantumNumbers(1, 1, 1, 1, 1, 1)), DomainError);
}

TEST_CASE("Regge images keep beta squared and the 3j magnitude") {
  for (const auto& q : cgtest::all_points(5)) {
    const auto images = regge_images(q);
    REQUIRE(images.size() == 72);
    const mpq_class b2 = beta_squared(q);
    const mpq_class w3 = wigner_sum(q).radicand() / (q.j().twice + 1);
    for (const auto& img : images) {
      REQUIRE(beta_squared(img) == b2);
      REQUIRE(wigner_sum(img).radicand() / (img.j().twice + 1) == w3);
    }
  }
}

TEST_CASE("power-sum identity") {
  const auto z = regge_power_sums(QuantumNumbers(0, 0, 0, 0, 0, 0), 4);
  for (const auto& p : z) CHECK(p == 0);
  CHECK(regge_power_sums(QuantumNumbers(2, 0, 2, 0, 2, 0), 4)[0] == 18);
  for (const auto& q : cgtest::all_points(7)) REQUIRE(beta_squared_from_power_sums(regge_power_sums(q, 4)) == beta_squared(q));
  CHECK_THROWS_AS(regge_power_sums(QuantumNumbers(1, 0, 1, 0, 2, 0), 3), DomainError);
}

TEST_CASE("region map geometry: tangency points") {
  for (const auto& t : {std::array<std::int64_t, 3>{2, 3, 4}, {20, 30, 40}, {5, 5, 7}, {7, 3, 5}, {4, 9, 6}}) {
    const auto g = region_map_geometry(t[0], t[1], t[2]);
    for (const auto& tp : g.tangency) {
      const auto& e = g.edges[static_cast<std::size_t>(tp.edge)];
      // on the edge, exactly
      REQUIRE(2 * (e.a * tp.m1 + e.b * tp.m2) == e.c_twice);
      // on the ellipse, exactly
      REQUIRE(g.ellipse.eval(tp.m1, tp.m2) == 0);
      // tangent: the ellipse does not cross the edge, so beta^2 <= 0 at nearby edge points
      const mpq_class step(1, 1000);
      const mpq_class dm1 = e.b, dm2 = -e.a;  // along the edge
      REQUIRE(sgn(g.ellipse.eval(tp.m1 + step * dm1, tp.m2 + step * dm2)) < 0);
      REQUIRE(sgn(g.ellipse.eval(tp.m1 - step * dm1, tp.m2 - step * dm2)) < 0);
    }
  }
}

TEST_CASE("each branch-factor line joins a pair of opposite tangency points") {
  for (const auto& t : {std::array<std::int64_t, 3>{2, 3, 4}, {20, 30, 40}, {5, 5, 7}, {7, 3, 5}}) {
    const auto g = region_map_geometry(t[0], t[1], t[2]);
    for (const auto& v : g.branch_vectors) {
      int hits = 0;
      for (const auto& tp : g.tangency)
        if (tp.m1 * v[0] + tp.m2 * v[1] == 0) ++hits;
      REQUIRE(hits == 2);
    }
  }
}

TEST_CASE("ellipse form agrees with beta squared on lattice points") {
  const auto g = region_map_geometry(20, 30, 40);
  for (std::int64_t m1 = -20; m1 <= 20; m1 += 3)
    for (std::int64_t m2 = -30; m2 <= 30; m2 += 4)
      REQUIRE(g.ellipse.eval(m1, m2) == beta_squared(QuantumNumbers(20, m1, 30, m2, 40, m1 + m2)));
  CHECK_THROWS_AS(region_map_geometry(1, 1, 3), DomainError);
  const auto js = to_json(g);
  CHECK(js["hexagon_edges"].size() == 6);
  CHECK(js["tangency_points"].size() == 6);
}
