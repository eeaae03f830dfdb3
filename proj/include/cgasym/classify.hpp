#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>

#include "cgasym/quantum_numbers.hpp"
#include "cgasym/rational.hpp"
#include "cgasym/region_geometry.hpp"
#include "cgasym/stationary_phase.hpp"

namespace cgasym {

enum class RegionTag { TriangleForbidden, Boundary, Allowed, Forbidden };
enum class Subregion { I = 1, II, III, IV, V, VI };
enum class LambdaIndex { L1 = 1, L2, L3 };

inline const char* to_string(RegionTag t) {
  switch (t) {
    case RegionTag::TriangleForbidden: return "TriangleForbidden";
    case RegionTag::Boundary: return "Boundary";
    case RegionTag::Allowed: return "Allowed";
    case RegionTag::Forbidden: return "Forbidden";
  }
  return "?";
}

inline const char* to_string(Subregion s) {
  static constexpr std::array<const char*, 6> names{"I", "II", "III", "IV", "V", "VI"};
  return names[static_cast<int>(s) - 1];
}

inline const char* to_string(LambdaIndex l) {
  static constexpr std::array<const char*, 3> names{"lambda1", "lambda2", "lambda3"};
  return names[static_cast<int>(l) - 1];
}

struct ForbiddenDetail {
  Subregion subregion = Subregion::I;
  Branch branch = Branch::Lower;
  int sign_function = 1;
  LambdaIndex largest_lambda = LambdaIndex::L3;
  /// The branch polynomial vanished and the branch was chosen as the
  /// stationary point with the smaller |e^g|.
  bool branch_tie = false;
};

struct RegionClass {
  RegionTag tag = RegionTag::TriangleForbidden;
  std::optional<ForbiddenDetail> forbidden;  // present iff tag == Forbidden
};

/// Row of the subregion table: which root, which lambda is largest.
inline Subregion subregion_for(LambdaIndex largest, Branch br) {
  switch (largest) {
    case LambdaIndex::L3: return br == Branch::Lower ? Subregion::I : Subregion::IV;
    case LambdaIndex::L2: return br == Branch::Upper ? Subregion::II : Subregion::V;
    case LambdaIndex::L1: return br == Branch::Lower ? Subregion::III : Subregion::VI;
  }
  return Subregion::I;
}

/// Sign function of a forbidden subregion, evaluated at q:
/// I: 1, II: (-1)^(j1-m1), III: (-1)^(j1-j+m2), IV: (-1)^(j1+j2-j), V: (-1)^(j2-j-m1), VI: (-1)^(j2+m2).
inline int sign_function(Subregion s, const QuantumNumbers& q) {
  switch (s) {
    case Subregion::I: return 1;
    case Subregion::II: return parity_sign(q.j1() - q.m1());
    case Subregion::III: return parity_sign(q.j1() - q.j() + q.m2());
    case Subregion::IV: return parity_sign(q.j1() + q.j2() - q.j());
    case Subregion::V: return parity_sign(q.j2() - q.j() - q.m1());
    case Subregion::VI: return parity_sign(q.j2() + q.m2());
  }
  return 1;
}

inline LambdaIndex largest_lambda(const QuantumNumbers& q) {
  const auto l = lambda_squared(q);
  if (l[0] >= l[1] && l[0] >= l[2]) return LambdaIndex::L1;
  if (l[1] >= l[2]) return LambdaIndex::L2;
  return LambdaIndex::L3;
}

inline RegionClass classify(const QuantumNumbers& q) {
  RegionClass rc;
  if (!selection_allowed(q)) return rc;
  const mpq_class b2 = beta_squared(q);
  if (sgn(b2) == 0) {
    rc.tag = RegionTag::Boundary;
    return rc;
  }
  if (sgn(b2) > 0) {
    rc.tag = RegionTag::Allowed;
    return rc;
  }
  rc.tag = RegionTag::Forbidden;
  ForbiddenDetail d;
  const int bp = sgn(branch_polynomial(q));
  if (bp != 0) {
    d.branch = bp > 0 ? Branch::Upper : Branch::Lower;
  } else {
    // Pick the subdominant saddle.
    const auto pts = stationary_points<real>(q);
    const real up = std::real(log_exp_g(pts[0], q));
    const real lo = std::real(log_exp_g(pts[1], q));
    d.branch = up < lo ? Branch::Upper : Branch::Lower;
    d.branch_tie = true;
  }
  d.largest_lambda = largest_lambda(q);
  d.subregion = subregion_for(d.largest_lambda, d.branch);
  d.sign_function = sign_function(d.subregion, q);
  rc.forbidden = d;
  return rc;
}

/// True when |beta^2| < factor (j1+j2+j)^3, where the quadratic approximation
/// degrades. beta^2 is homogeneous of degree four, so the ratio shrinks like 1/j.
inline bool near_caustic(const QuantumNumbers& q, double factor = 1.0) {
  const mpq_class b2 = beta_squared(q);
  const mpz_class s = q.sum_j();
  return to_real<long double>(mpq_class(abs(b2))) < static_cast<long double>(factor) * to_real<long double>(mpz_class(s * s * s));
}

}  // namespace cgasym
