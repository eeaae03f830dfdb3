// Randomised property checks with a fixed-seed generator.
#include <catch_amalgamated.hpp>

#include <cmath>

#include "cgasym/allreal.hpp"
#include "cgasym/exact.hpp"
#include "cgasym/first_order.hpp"
#include "cgasym/higher_order.hpp"
#include "cgasym/region_geometry.hpp"
#include "support.hpp"

using namespace cgasym;
using cgtest::rel_err;

namespace {

// Interior point (off the hexagon edges, nondegenerate triangle) with 2j in [lo, hi].
QuantumNumbers interior_point(cgtest::Rng& rng, std::int64_t lo, std::int64_t hi) {
  while (true) {
    const std::int64_t tj = cgtest::uniform(rng, lo, hi);
    const std::int64_t tj1 = cgtest::uniform(rng, 2, tj), tj2 = cgtest::uniform(rng, 2, tj);
    if ((tj + tj1 + tj2) % 2 || tj >= tj1 + tj2 || tj <= std::abs(tj1 - tj2)) continue;
    const std::int64_t tm1 = -tj1 + 2 * cgtest::uniform(rng, 1, tj1 - 1);
    const std::int64_t tm2 = -tj2 + 2 * cgtest::uniform(rng, 1, tj2 - 1);
    if (std::abs(tm1 + tm2) >= tj) continue;
    const auto q = QuantumNumbers::from_twice({tj1, tm1, tj2, tm2, tj, tm1 + tm2});
    const auto tag = classify(q).tag;
    if (tag == RegionTag::Allowed || tag == RegionTag::Forbidden) return q;
  }
}

QuantumNumbers negated(const QuantumNumbers& q) { return {q.j1(), -q.m1(), q.j2(), -q.m2(), q.j(), -q.m()}; }
QuantumNumbers exchanged(const QuantumNumbers& q) { return {q.j2(), q.m2(), q.j1(), q.m1(), q.j(), q.m()}; }

}  // namespace

TEST_CASE("half-integer text round-trips") {
  cgtest::Rng rng(101);
  for (int k = 0; k < 5000; ++k) {
    const auto h = HalfInt::from_twice(cgtest::uniform(rng, -1000000, 1000000));
    REQUIRE(parse_half_int(to_string(h)) == h);
    const std::string dec = (h.twice < 0 ? "-" : "") + std::to_string(std::abs(h.twice) / 2) + (h.is_integer() ? ".0" : ".5");
    REQUIRE(parse_half_int(dec) == h);
    REQUIRE(to_string(parse_half_int(std::to_string(h.twice) + "/2")) == to_string(h));
  }
}

TEST_CASE("quantum-number text round-trips") {
  cgtest::Rng rng(103);
  for (int k = 0; k < 500; ++k) {
    const auto q = interior_point(rng, 2, 200);
    REQUIRE(parse_quantum_numbers(to_string(q).substr(1, to_string(q).size() - 2)) == q);
  }
}

TEST_CASE("exact symmetry laws on random points") {
  cgtest::Rng rng(107);
  for (int k = 0; k < 150; ++k) {
    const auto q = interior_point(rng, 2, 60);
    const auto v = wigner_sum(q);
    const int phase = parity_sign(q.j1() + q.j2() - q.j());
    INFO(to_string(q));
    REQUIRE(v == ExactRadical(phase, 1) * wigner_sum(negated(q)));
    REQUIRE(v == ExactRadical(phase, 1) * wigner_sum(exchanged(q)));
    REQUIRE(v == cgtest::racah_cg(q));
  }
}

TEST_CASE("asymptotic forms obey the same symmetry laws") {
  cgtest::Rng rng(109);
  for (int k = 0; k < 200; ++k) {
    const auto q = interior_point(rng, 20, 600);
    if (wigner_sum(q).sign() == 0) continue;
    const double phase = parity_sign(q.j1() + q.j2() - q.j());
    INFO(to_string(q));
    const double f = first_order(q);
    REQUIRE(rel_err(phase * first_order(negated(q)), f) < 1e-9);
    REQUIRE(rel_err(phase * first_order(exchanged(q)), f) < 1e-9);
    const double h = higher_order(q);
    REQUIRE(rel_err(phase * higher_order(negated(q)), h) < 1e-9);
    REQUIRE(rel_err(phase * higher_order(exchanged(q)), h) < 1e-9);
  }
}

TEST_CASE("region data is invariant under exchange and negation") {
  cgtest::Rng rng(113);
  for (int k = 0; k < 500; ++k) {
    const auto q = interior_point(rng, 2, 400);
    REQUIRE(beta_squared(q) == beta_squared(negated(q)));
    REQUIRE(beta_squared(q) == beta_squared(exchanged(q)));
    REQUIRE(classify(q).tag == classify(negated(q)).tag);
    REQUIRE(classify(q).tag == classify(exchanged(q)).tag);
  }
}

TEST_CASE("column orthogonality on random j1, j2") {
  cgtest::Rng rng(127);
  for (int k = 0; k < 20; ++k) {
    const std::int64_t t1 = cgtest::uniform(rng, 1, 24), t2 = cgtest::uniform(rng, 1, 24);
    const std::int64_t ta = std::abs(t1 - t2) + 2 * cgtest::uniform(rng, 0, std::min(t1, t2));
    const std::int64_t tb = std::abs(t1 - t2) + 2 * cgtest::uniform(rng, 0, std::min(t1, t2));
    const std::int64_t tm = -std::min(ta, tb) + 2 * cgtest::uniform(rng, 0, std::min(ta, tb));
    mpq_class norm = 0;
    double dot = 0;
    for (std::int64_t m1 = -t1; m1 <= t1; m1 += 2) {
      const std::int64_t m2 = tm - m1;
      if (std::abs(m2) > t2) continue;
      const auto a = wigner_sum(QuantumNumbers::from_twice({t1, m1, t2, m2, ta, tm}));
      const auto b = wigner_sum(QuantumNumbers::from_twice({t1, m1, t2, m2, tb, tm}));
      norm += a.radicand();
      dot += radical_to_float(a) * radical_to_float(b);
    }
    INFO(t1 << " " << t2 << " " << ta << " " << tb << " " << tm);
    REQUIRE(norm == 1);
    REQUIRE(std::abs(dot - (ta == tb ? 1.0 : 0.0)) < 1e-14);
  }
}

TEST_CASE("first order follows exact magnitudes deep in the forbidden region") {
  cgtest::Rng rng(131);
  int done = 0;
  while (done < 30) {
    const auto q = interior_point(rng, 200, 500);
    const auto rc = classify(q);
    if (rc.tag != RegionTag::Forbidden || near_caustic(q)) continue;
    const auto ex = wigner_sum(q);
    if (ex.sign() == 0) continue;
    const auto& l = lambda_alpha(q);
    if (std::min({l.lambda1, l.lambda2, l.lambda3}) < 0.05 * std::max({l.lambda1, l.lambda2, l.lambda3})) continue;
    INFO(to_string(q));
    REQUIRE(ex.sign() == (first_order(q) > 0 ? 1 : -1));
    REQUIRE(rel_err(higher_order(q), radical_to_float(ex)) < rel_err(first_order(q), radical_to_float(ex)) + 1e-3);
    ++done;
  }
}
