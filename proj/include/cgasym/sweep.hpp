#pragma once

// Grid sweeps over (m1, m2) at fixed j1, j2, j, emitted as CSV.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cgasym/allreal.hpp"
#include "cgasym/classify.hpp"
#include "cgasym/errors.hpp"
#include "cgasym/exact.hpp"
#include "cgasym/first_order.hpp"
#include "cgasym/higher_order.hpp"
#include "cgasym/quantum_numbers.hpp"

namespace cgasym {

/// Shortest text that reads back to the same binary64.
inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

struct HalfIntRange {
  HalfInt lo, hi, step = 1;
};

/// "lo:hi" or "lo:hi:step", entries as half-integers.
inline HalfIntRange parse_range(std::string_view s) {
  HalfIntRange r;
  const auto c1 = s.find(':');
  if (c1 == std::string_view::npos) throw ParseError("range must be lo:hi or lo:hi:step, got '" + std::string(s) + "'");
  const auto c2 = s.find(':', c1 + 1);
  r.lo = parse_half_int(s.substr(0, c1));
  if (c2 == std::string_view::npos) {
    r.hi = parse_half_int(s.substr(c1 + 1));
  } else {
    r.hi = parse_half_int(s.substr(c1 + 1, c2 - c1 - 1));
    r.step = parse_half_int(s.substr(c2 + 1));
  }
  return r;
}

enum class SweepOutput { Exact, First, Higher, AllReal, Region };

struct SweepSpec {
  HalfInt j1, j2, j;
  std::optional<HalfIntRange> m1_range, m2_range;  // default: the full -j..j range
  std::set<SweepOutput> outputs{SweepOutput::Exact, SweepOutput::First, SweepOutput::Higher, SweepOutput::Region};
  std::int64_t exact_cap_twice_j = 1200;
  unsigned threads = 1;
};

inline std::set<SweepOutput> parse_outputs(std::string_view s) {
  std::set<SweepOutput> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto tok = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (tok == "exact") out.insert(SweepOutput::Exact);
    else if (tok == "first" || tok == "first_order") out.insert(SweepOutput::First);
    else if (tok == "higher") out.insert(SweepOutput::Higher);
    else if (tok == "allreal") out.insert(SweepOutput::AllReal);
    else if (tok == "region") out.insert(SweepOutput::Region);
    else throw ParseError("unknown sweep output '" + std::string(tok) + "'");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace detail {

inline std::vector<HalfInt> expand_range(const std::optional<HalfIntRange>& r, HalfInt j, const char* name) {
  const HalfIntRange range = r.value_or(HalfIntRange{-j, j, 1});
  if (range.step.twice <= 0) throw DomainError(std::string(name) + " step must be positive");
  if (!(range.lo - j).is_integer() || !range.step.is_integer())
    throw DomainError(std::string(name) + " range does not respect the parity of its j");
  std::vector<HalfInt> v;
  for (HalfInt x = range.lo; x <= range.hi; x = x + range.step)
    if (abs(x) <= j) v.push_back(x);
  return v;
}

inline std::string relative_error(double approx, double exact) {
  if (exact == 0.0 || !std::isfinite(approx)) return "";
  return format_double(std::abs(approx / exact - 1));
}

inline std::string sweep_row(const QuantumNumbers& q, const SweepSpec& spec) {
  const auto has = [&](SweepOutput o) { return spec.outputs.count(o) != 0; };
  const auto rc = classify(q);
  std::string region, subregion, sign;
  if (has(SweepOutput::Region)) {
    region = to_string(rc.tag);
    if (rc.forbidden) {
      subregion = to_string(rc.forbidden->subregion);
      sign = std::to_string(rc.forbidden->sign_function);
    }
  }
  const std::string beta2 = format_double(to_real<double>(beta_squared(q)));
  std::optional<double> exact, first, higher, allreal;
  std::string exact_text;
  if (has(SweepOutput::Exact) && rc.tag != RegionTag::TriangleForbidden) {
    const ExactRadical r = wigner_sum(q);
    exact_text = r.to_string();
    try {
      exact = radical_to_float(r);
    } catch (const OverflowError&) {
      // Outside the binary64 range; the radical still goes out, the error columns stay empty.
    }
  }
  const bool asymptotic_ok = rc.tag == RegionTag::Allowed || rc.tag == RegionTag::Forbidden;
  auto attempt = [&](auto f) -> std::optional<double> {
    if (!asymptotic_ok) return std::nullopt;
    try {
      return f();
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  if (has(SweepOutput::First)) first = attempt([&] { return first_order(q); });
  if (has(SweepOutput::Higher)) higher = attempt([&] { return higher_order(q); });
  if (has(SweepOutput::AllReal))
    allreal = attempt([&] { return rc.tag == RegionTag::Allowed ? allowed_allreal(q) : forbidden_allreal(q); });
  auto cell = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  std::string row = to_string(q.m1()) + "," + to_string(q.m2()) + "," + region + "," + subregion + "," + sign + "," +
                    beta2 + "," + exact_text + "," + cell(first) + "," + cell(higher) + ",";
  row += (exact && first) ? relative_error(*first, *exact) : "";
  row += ",";
  row += (exact && higher) ? relative_error(*higher, *exact) : "";
  if (has(SweepOutput::AllReal)) row += "," + cell(allreal);
  return row;
}

}  // namespace detail

inline std::string sweep_header(const SweepSpec& spec) {
  std::string h = "m1,m2,region,subregion,sign_function,beta2,exact,first,higher,rel_err_first,rel_err_higher";
  if (spec.outputs.count(SweepOutput::AllReal)) h += ",allreal";
  return h;
}

/// Writes the CSV. Rows are m1-major, ascending, and skip points with |m1+m2| > j.
/// Rows may be computed on several threads; output order does not depend on it.
inline void run_sweep(const SweepSpec& spec, std::ostream& out) {
  if (spec.j1.twice < 0 || spec.j2.twice < 0 || spec.j.twice < 0) throw DomainError("angular momenta must be nonnegative");
  if (!(spec.j1 + spec.j2 + spec.j).is_integer()) throw DomainError("j1 + j2 + j must be an integer");
  if (spec.j > spec.j1 + spec.j2 || spec.j < spec.j1 - spec.j2 || spec.j < spec.j2 - spec.j1)
    throw DomainError("j's violate the triangle inequalities");
  if (spec.outputs.count(SweepOutput::Exact) && spec.j.twice > spec.exact_cap_twice_j)
    throw DomainError("exact output requested with 2j = " + std::to_string(spec.j.twice) + " above the cap " +
                      std::to_string(spec.exact_cap_twice_j));
  const auto m1s = detail::expand_range(spec.m1_range, spec.j1, "m1");
  const auto m2s = detail::expand_range(spec.m2_range, spec.j2, "m2");
  std::vector<QuantumNumbers> points;
  for (auto m1 : m1s)
    for (auto m2 : m2s)
      if (abs(m1 + m2) <= spec.j) points.emplace_back(spec.j1, m1, spec.j2, m2, spec.j, m1 + m2);

  std::vector<std::string> rows(points.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(points.size())));
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < points.size(); i += workers) rows[i] = detail::sweep_row(points[i], spec);
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  out << sweep_header(spec) << '\n';
  for (const auto& r : rows) out << r << '\n';
}

}  // namespace cgasym
