#pragma once

// Self-verification suites behind `cgasym verify`.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cgasym/allreal.hpp"
#include "cgasym/classify.hpp"
#include "cgasym/exact.hpp"
#include "cgasym/first_order.hpp"
#include "cgasym/higher_order.hpp"
#include "cgasym/model1d.hpp"
#include "cgasym/region_geometry.hpp"

namespace cgasym {

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
  std::uint64_t seed = 1;
  VerifyLevel level = VerifyLevel::Quick;
  int samples = 0;  // random points per sampled suite; 0 picks the level default
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace verify_detail {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random triangle-allowed point with m = m1 + m2, nondegenerate j-triangle,
/// 2j in [lo2j, hi2j], and off the hexagon edges (where the Hessian is singular).
inline QuantumNumbers random_point(Rng& rng, std::int64_t lo2j, std::int64_t hi2j) {
  while (true) {
    const std::int64_t tj = uniform(rng, lo2j, hi2j);
    const std::int64_t tj1 = uniform(rng, 1, tj);
    const std::int64_t tj2 = uniform(rng, 1, tj);
    if ((tj1 + tj2 + tj) % 2 != 0) continue;
    if (tj >= tj1 + tj2 || tj <= std::abs(tj1 - tj2)) continue;
    const std::int64_t tm1 = -tj1 + 2 * uniform(rng, 0, tj1);
    const std::int64_t tm2 = -tj2 + 2 * uniform(rng, 0, tj2);
    if (std::abs(tm1) == tj1 || std::abs(tm2) == tj2 || std::abs(tm1 + tm2) >= tj) continue;
    return QuantumNumbers::from_twice({tj1, tm1, tj2, tm2, tj, tm1 + tm2});
  }
}

inline QuantumNumbers random_in(Rng& rng, RegionTag tag, std::int64_t lo2j, std::int64_t hi2j) {
  while (true) {
    const auto q = random_point(rng, lo2j, hi2j);
    if (classify(q).tag == tag) return q;
  }
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline double fitted_decay(const std::vector<double>& scales, const std::vector<double>& errors) {
  double mx = 0, my = 0;
  const double n = static_cast<double>(scales.size());
  for (std::size_t i = 0; i < scales.size(); ++i) {
    mx += std::log(scales[i]);
    my += std::log(errors[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    sxy += (std::log(scales[i]) - mx) * (std::log(errors[i]) - my);
    sxx += (std::log(scales[i]) - mx) * (std::log(scales[i]) - mx);
  }
  return -sxy / sxx;
}

/// value rounded to six significant figures reads as reference.
inline bool same_6sf(double value, double reference) {
  char a[32], b[32];
  std::snprintf(a, sizeof(a), "%.5e", value);
  std::snprintf(b, sizeof(b), "%.5e", reference);
  return std::string(a) == b;
}

}  // namespace verify_detail

/// Decay exponents of the first- and higher-order relative errors along a direction
/// (given in doubled units) scaled by s. The direction itself need not be a valid
/// state; every scaled point must be.
inline std::pair<double, double> scaling_exponents(const std::array<std::int64_t, 6>& twice_direction,
                                                   const std::vector<std::int64_t>& scales) {
  std::vector<double> s, e1, e2;
  for (auto k : scales) {
    std::array<std::int64_t, 6> t;
    for (std::size_t i = 0; i < 6; ++i) t[i] = twice_direction[i] * k;
    const QuantumNumbers q = QuantumNumbers::from_twice(t);
    const double ex = exact_value(q);
    s.push_back(static_cast<double>(k));
    e1.push_back(std::abs(first_order(q) / ex - 1));
    e2.push_back(std::abs(higher_order(q) / ex - 1));
  }
  return {verify_detail::fitted_decay(s, e1), verify_detail::fitted_decay(s, e2)};
}

inline std::vector<SuiteResult> run_verify(const VerifyOptions& opt) {
  using namespace verify_detail;
  const bool full = opt.level == VerifyLevel::Full;
  const int samples = opt.samples > 0 ? opt.samples : (full ? 200 : 40);
  Rng rng(opt.seed);
  std::vector<SuiteResult> out;
  auto run = [&](const std::string& name, const std::function<std::string(bool&)>& body) {
    SuiteResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      bool ok = true;
      r.detail = body(ok);
      r.passed = ok;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(r);
  };

  run("reference values (exact and higher order, 6 s.f.)", [&](bool& ok) {
    struct Case {
      std::array<std::int64_t, 6> twice;
      double exact, higher;
    };
    const std::vector<Case> cases{{{400, 200, 600, 300, 800, 500}, 0.0703499, 0.0703496},
                                  {{400, 200, 601, 301, 801, 501}, 0.0730636, 0.0730633},
                                  {{400, 300, 600, -500, 800, -200}, 3.08961e-19, 3.08958e-19},
                                  {{400, 300, 601, -499, 801, -199}, 5.32718e-19, 5.32712e-19}};
    int bad = 0;
    for (const auto& c : cases) {
      const auto q = QuantumNumbers::from_twice(c.twice);
      if (!same_6sf(exact_value(q), c.exact) || !same_6sf(higher_order(q), c.higher)) ++bad;
    }
    ok = bad == 0;
    return std::to_string(cases.size() - bad) + "/" + std::to_string(cases.size()) + " cases";
  });

  run("representation equivalence", [&](bool& ok) {
    const std::int64_t max2 = full ? 8 : 6;
    long checked = 0, bad = 0;
    for (std::int64_t t1 = 0; t1 <= max2; ++t1)
      for (std::int64_t t2 = 0; t2 <= max2; ++t2)
        for (std::int64_t t = std::abs(t1 - t2); t <= t1 + t2; t += 2)
          for (std::int64_t m1 = -t1; m1 <= t1; m1 += 2)
            for (std::int64_t m2 = -t2; m2 <= t2; m2 += 2) {
              if (std::abs(m1 + m2) > t) continue;
              const auto q = QuantumNumbers::from_twice({t1, m1, t2, m2, t, m1 + m2});
              const auto w = wigner_sum(q);
              ++checked;
              if (!(w == poly_coeff_2var(q)) || !(w == poly_coeff_1var(q))) ++bad;
            }
    ok = bad == 0;
    return std::to_string(checked) + " points, " + std::to_string(bad) + " mismatches";
  });

  run("orthogonality", [&](bool& ok) {
    const std::int64_t max2 = full ? 12 : 8;
    long sums = 0, bad = 0;
    for (std::int64_t t1 = 0; t1 <= max2; ++t1)
      for (std::int64_t t2 = 0; t2 <= max2; ++t2)
        for (std::int64_t t = std::abs(t1 - t2); t <= std::min(t1 + t2, max2); t += 2)
          for (std::int64_t m = -t; m <= t; m += 2) {
            mpq_class s = 0;
            for (std::int64_t m1 = -t1; m1 <= t1; m1 += 2) {
              const std::int64_t m2 = m - m1;
              if (std::abs(m2) > t2) continue;
              s += wigner_sum(QuantumNumbers::from_twice({t1, m1, t2, m2, t, m})).radicand();
            }
            ++sums;
            if (s != 1) ++bad;
          }
    ok = bad == 0;
    return std::to_string(sums) + " sums, " + std::to_string(bad) + " not equal to 1";
  });

  run("all-real forms equal complex forms (1e-9)", [&](bool& ok) {
    double worst = 0;
    int nodes = 0;
    for (int i = 0; i < samples; ++i) {
      const auto qa = random_in(rng, RegionTag::Allowed, 20, 800);
      const double a = allowed_allreal(qa, true), b = first_order(qa);
      // on a shared cosine node both forms are rounding noise; draw again
      const double amp = 2 * std::sqrt(qa.j().value() / (std::numbers::pi * std::sqrt(to_real<double>(beta_squared(qa)))));
      if (std::abs(a) <= 1e-12 * amp && std::abs(b) <= 1e-12 * amp) {
        ++nodes;
        --i;
        continue;
      }
      worst = std::max(worst, rel(a, b));
      const auto qf = random_in(rng, RegionTag::Forbidden, 20, 800);
      worst = std::max(worst, rel(forbidden_allreal(qf), first_order(qf)));
    }
    ok = worst <= 1e-9;
    return "worst relative difference " + std::to_string(worst) + ", " + std::to_string(nodes) + " shared nodes";
  });

  run("symmetry closure onto subregion VI", [&](bool& ok) {
    std::map<Subregion, int> seen;
    int attempts = 0;
    while (seen.size() < 6 && attempts < 200000) {
      ++attempts;
      const auto q = random_point(rng, 20, 120);
      const auto rc = classify(q);
      if (rc.tag != RegionTag::Forbidden || seen.count(rc.forbidden->subregion)) continue;
      const auto img = apply_symmetry(q, dispatch_symmetry(rc.forbidden->subregion));
      const auto ri = classify(img.image);
      const bool lands = ri.tag == RegionTag::Forbidden && ri.forbidden->subregion == Subregion::VI;
      const bool exact_ok = wigner_sum(q) == img.factor * wigner_sum(img.image);
      seen[rc.forbidden->subregion] = (lands && exact_ok) ? 1 : 0;
    }
    int good = 0;
    for (const auto& [s, v] : seen) good += v;
    ok = seen.size() == 6 && good == 6;
    return std::to_string(good) + "/6 subregions mapped";
  });

  run("scaling decay (exponents near 1 and 2)", [&](bool& ok) {
    const auto [a, b] = scaling_exponents({28, 10, 16, -2, 22, 8}, {1, 2, 4, 8});
    ok = std::abs(a - 1) <= 0.4 && std::abs(b - 2) <= 0.4;
    return "first " + std::to_string(a) + ", higher " + std::to_string(b);
  });

  run("beta^2 power-sum identity", [&](bool& ok) {
    int bad = 0;
    const int n = 100;
    for (int i = 0; i < n; ++i) {
      const auto q = random_point(rng, 2, 40);
      if (beta_squared_from_power_sums(regge_power_sums(q, 4)) != beta_squared(q)) ++bad;
    }
    ok = bad == 0;
    return std::to_string(n - bad) + "/" + std::to_string(n) + " points";
  });

  run("sign functions at exact scale", [&](bool& ok) {
    const std::vector<std::array<std::int64_t, 3>> triples =
        full ? std::vector<std::array<std::int64_t, 3>>{{16, 24, 32}, {20, 20, 20}, {12, 18, 24}, {19, 21, 32}}
             : std::vector<std::array<std::int64_t, 3>>{{16, 24, 32}, {19, 21, 32}};
    long n = 0, bad = 0;
    for (const auto& t : triples)
      for (std::int64_t m1 = -t[0]; m1 <= t[0]; m1 += 2)
        for (std::int64_t m2 = -t[1]; m2 <= t[1]; m2 += 2) {
          if (std::abs(m1 + m2) > t[2]) continue;
          const auto q = QuantumNumbers::from_twice({t[0], m1, t[1], m2, t[2], m1 + m2});
          const auto rc = classify(q);
          if (rc.tag != RegionTag::Forbidden) continue;
          ++n;
          const int s = wigner_sum(q).sign();
          if (s != 0 && s != rc.forbidden->sign_function) ++bad;
        }
    ok = bad == 0;
    return std::to_string(n) + " forbidden points, " + std::to_string(bad) + " violations";
  });

  run("model1d oracle triangle", [&](bool& ok) {
    const std::int64_t max = full ? 40 : 20;
    double worst = 0;
    for (std::int64_t m = 1; m <= max; ++m)
      for (std::int64_t n = 1; n <= max; ++n) {
        const auto quad = f_quadrature({m, n}, 1e-12);
        worst = std::max({worst, std::abs(quad.real() - f_exact({m, n}).value()), std::abs(quad.imag())});
      }
    const double r1 = std::abs(f_asymptotic({20, 40}) / f_exact({20, 40}).value() - 1);
    const double r2 = std::abs(f_asymptotic({79, 40}) / f_exact({79, 40}).value() - 1);
    ok = worst <= 1e-9 && r1 < 0.05 && r2 < 0.05;
    return "quadrature worst " + std::to_string(worst) + ", asymptotic ratios " + std::to_string(r1) + " " +
           std::to_string(r2);
  });

  return out;
}

inline void print_verify_table(const std::vector<SuiteResult>& results, std::ostream& os) {
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof(secs), "%.2fs", r.seconds);
    os << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  [" << r.detail << "]  " << secs << '\n';
  }
}

}  // namespace cgasym
