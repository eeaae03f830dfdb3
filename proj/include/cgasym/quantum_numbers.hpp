#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>

#include "cgasym/errors.hpp"

namespace cgasym {

/// A half-integer stored as twice its value.
struct HalfInt {
  std::int64_t twice = 0;

  constexpr HalfInt() = default;
  // Implicit so that integer quantum numbers can be written naturally.
  constexpr HalfInt(std::int64_t whole_value) : twice(2 * whole_value) {}  // NOLINT

  static constexpr HalfInt from_twice(std::int64_t t) {
    HalfInt h;
    h.twice = t;
    return h;
  }

  constexpr bool is_integer() const { return twice % 2 == 0; }

  template <class Real = double>
  constexpr Real value() const {
    return static_cast<Real>(twice) / Real(2);
  }

  constexpr HalfInt operator-() const { return from_twice(-twice); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice + b.twice); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice - b.twice); }
  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

constexpr HalfInt abs(HalfInt h) { return HalfInt::from_twice(h.twice < 0 ? -h.twice : h.twice); }

/// Integer value of a half-integer that must be whole.
inline std::int64_t whole(HalfInt h) {
  if (!h.is_integer()) throw DomainError("expected an integer, got half-odd value " + std::to_string(h.twice) + "/2");
  return h.twice / 2;
}

/// (-1)^h for integral h.
inline int parity_sign(HalfInt h) { return (whole(h) % 2 == 0) ? 1 : -1; }

/// Canonical text: "7" or "7/2".
inline std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << to_string(h); }

/// Accepts "3", "-3", "+3", "401/2", "4/1", "200.5", "-0.5", "7.0".
inline HalfInt parse_half_int(std::string_view s) {
  auto fail = [&]() -> HalfInt { throw ParseError("not a half-integer: '" + std::string(s) + "'"); };
  if (s.empty()) return fail();
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  auto read_digits = [&](std::size_t& p) -> std::int64_t {
    std::size_t start = p;
    std::int64_t v = 0;
    while (p < s.size() && s[p] >= '0' && s[p] <= '9') {
      if (v > (INT64_MAX / 4 - 9) / 10) fail();
      v = v * 10 + (s[p] - '0');
      ++p;
    }
    if (p == start) fail();
    return v;
  };
  std::int64_t lead = read_digits(pos);
  std::int64_t twice = 0;
  if (pos == s.size()) {
    twice = 2 * lead;
  } else if (s[pos] == '/') {
    ++pos;
    std::int64_t den = read_digits(pos);
    if (pos != s.size()) fail();
    if (den == 1) {
      twice = 2 * lead;
    } else if (den == 2) {
      twice = lead;
    } else {
      fail();
    }
  } else if (s[pos] == '.') {
    ++pos;
    if (pos + 1 != s.size()) fail();
    if (s[pos] == '0') {
      twice = 2 * lead;
    } else if (s[pos] == '5') {
      twice = 2 * lead + 1;
    } else {
      fail();
    }
  } else {
    fail();
  }
  return HalfInt::from_twice(negative ? -twice : twice);
}

/// The six quantum numbers (j1, m1, j2, m2, j, m) of a coupling coefficient.
///
/// Construction enforces 2j1, 2j2, 2j >= 0, integral j_i - m_i and an
/// integral j1 + j2 + j. m = m1 + m2 is deliberately not enforced; the
/// coefficient simply vanishes when it fails.
class QuantumNumbers {
 public:
  QuantumNumbers(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m)
      : j1_(j1), m1_(m1), j2_(j2), m2_(m2), j_(j), m_(m) {
    if (j1.twice < 0 || j2.twice < 0 || j.twice < 0) throw DomainError("angular momenta must be nonnegative");
    if (!(j1 - m1).is_integer() || !(j2 - m2).is_integer() || !(j - m).is_integer())
      throw DomainError("j - m must be an integer for every pair");
    if (!(j1 + j2 + j).is_integer()) throw DomainError("j1 + j2 + j must be an integer");
  }

  static QuantumNumbers from_twice(const std::array<std::int64_t, 6>& t) {
    return {HalfInt::from_twice(t[0]), HalfInt::from_twice(t[1]), HalfInt::from_twice(t[2]),
            HalfInt::from_twice(t[3]), HalfInt::from_twice(t[4]), HalfInt::from_twice(t[5])};
  }

  HalfInt j1() const { return j1_; }
  HalfInt m1() const { return m1_; }
  HalfInt j2() const { return j2_; }
  HalfInt m2() const { return m2_; }
  HalfInt j() const { return j_; }
  HalfInt m() const { return m_; }

  /// j1 + j2 + j (always integral).
  std::int64_t sum_j() const { return whole(j1_ + j2_ + j_); }

  std::array<HalfInt, 6> as_array() const { return {j1_, m1_, j2_, m2_, j_, m_}; }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

 private:
  HalfInt j1_, m1_, j2_, m2_, j_, m_;
};

inline bool conserves_m(const QuantumNumbers& q) { return q.m() == q.m1() + q.m2(); }

/// Triangle inequalities on the j's plus |m_i| <= j_i and |m| <= j.
inline bool triangle_allowed(const QuantumNumbers& q) {
  const auto j1 = q.j1(), j2 = q.j2(), j = q.j();
  if (j > j1 + j2 || j < j1 - j2 || j < j2 - j1) return false;
  return abs(q.m1()) <= j1 && abs(q.m2()) <= j2 && abs(q.m()) <= j;
}

/// Triangle-allowed with m = m1 + m2; the only points with a nonzero coefficient.
inline bool selection_allowed(const QuantumNumbers& q) { return conserves_m(q) && triangle_allowed(q); }

inline std::string to_string(const QuantumNumbers& q) {
  std::string s = "(";
  const auto a = q.as_array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += to_string(a[i]);
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const QuantumNumbers& q) { return os << to_string(q); }

/// Parses "J1,M1,J2,M2,J,M" with half-integer entries.
inline QuantumNumbers parse_quantum_numbers(std::string_view s) {
  std::array<HalfInt, 6> v{};
  std::size_t idx = 0;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    const auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (idx >= 6) throw ParseError("expected six comma-separated quantum numbers");
    v[idx++] = parse_half_int(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (idx != 6) throw ParseError("expected six comma-separated quantum numbers");
  try {
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid quantum numbers: ") + e.what());
  }
}

}  // namespace cgasym
