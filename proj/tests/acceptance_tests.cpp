// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "lehmer/lehmer.hpp"
#include "oracle_support.hpp"

namespace {

using lehmer::cdouble;
constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %2d [%s]: %s%s%s\n", criterion, name.c_str(), pass ? "PASS" : "FAIL",
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// 1: the three pipelines each hit 1 + pi/2 at (s=2, k=2, z=2) within 1e-10,
// in under a second.
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const double want = 1.0 + kPi / 2.0;
  const double direct = lehmer::sum_direct({2, 2, 2.0, 1}).value.real();
  const double weighted = lehmer::weighted_integral(2, 2, 2.0).real();
  const double euler = lehmer::euler_apply(2, 2.0, 2);
  const double elapsed = ms_since(start);
  const bool pass = std::fabs(direct - want) <= 1e-10 && std::fabs(weighted - want) <= 1e-10 &&
                    std::fabs(euler - want) <= 1e-10 && elapsed < 1000.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "direct %.3e, weighted %.3e, euler %.3e off; %.1f ms",
                direct - want, weighted - want, euler - want, elapsed);
  report(1, "triple pipeline at s=2 k=2 z=2", pass, detail);
}

// 2: 12x the s=2, k=2, z=1/2 sum against its closed form, 1e-9.
void criterion_2() {
  const double lhs = 12.0 * lehmer::sum_direct({2, 2, 0.5, 1}).value.real();
  const double s7 = std::sqrt(7.0);
  const double rhs = (12.0 / 343.0) * (-56.0 + 26.0 * s7 * kPi - 52.0 * s7 * std::atan(3.0 / s7));
  char detail[80];
  std::snprintf(detail, sizeof(detail), "|diff| = %.3e", std::fabs(lhs - rhs));
  report(2, "scaled sum at s=2 k=2 z=1/2", std::fabs(lhs - rhs) <= 1e-9, detail);
}

// 3: s=3, k=3, z=1/2 from n=0 against (1335 - 22 pi - 351 log 2)/15625, 1e-10.
void criterion_3() {
  const double lhs = lehmer::sum_direct({3, 3, 0.5, 0}).value.real();
  const double rhs = (1335.0 - 22.0 * kPi - 351.0 * std::log(2.0)) / 15625.0;
  char detail[80];
  std::snprintf(detail, sizeof(detail), "|diff| = %.3e", std::fabs(lhs - rhs));
  report(3, "cubic-weight sum at s=3 z=1/2", std::fabs(lhs - rhs) <= 1e-10, detail);
}

// 4: s=2, k=1, z=1 against -(2/27)(-9 + sqrt(3) pi), 1e-10.
void criterion_4() {
  const double lhs = lehmer::sum_direct({2, 1, 1.0, 1}).value.real();
  const double rhs = -(2.0 / 27.0) * (-9.0 + std::sqrt(3.0) * kPi);
  char detail[80];
  std::snprintf(detail, sizeof(detail), "|diff| = %.3e", std::fabs(lhs - rhs));
  report(4, "linear-weight sum at s=2 z=1", std::fabs(lhs - rhs) <= 1e-10, detail);
}

// 5: the alternating-sum record is an ERRATUM as printed (deviation ~0.92)
// and CONFIRMED once the first term's sign is flipped (< 1e-9).
void criterion_5() {
  const auto report_all = lehmer::run_registry(lehmer::bundled_registry());
  bool printed_ok = false, corrected_ok = false;
  double printed_dev = 0.0, corrected_dev = 0.0;
  for (const auto& e : report_all.entries) {
    if (e.id == "series-s3-alt-quarter" && e.abs_diff) {
      printed_dev = *e.abs_diff;
      printed_ok = e.status == lehmer::Status::Erratum && std::fabs(printed_dev - 0.92) < 0.01;
    }
    if (e.id == "series-s3-alt-quarter-corrected" && e.abs_diff) {
      corrected_dev = *e.abs_diff;
      corrected_ok = e.status == lehmer::Status::Confirmed && corrected_dev < 1e-9;
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail), "printed deviation %.6f, corrected deviation %.3e",
                printed_dev, corrected_dev);
  report(5, "alternating-sum sign erratum", printed_ok && corrected_ok, detail);
}

// 6: root_sum - direct sum == 1 on the whole admissible grid (1e-10), and
// root_sum(2,2) = pi/2 to 1e-12.
void criterion_6() {
  double worst = 0.0;
  int points = 0;
  for (int s : {2, 3, 4, 5}) {
    const double r = lehmer::radius(s);
    for (double f : {-0.9, -0.5, -0.25, 0.25, 0.5, 0.9}) {
      const double z = f * r;
      const double gap = lehmer::root_sum(s, z).real() -
                         lehmer::sum_direct({s, 0, z, 1}).value.real() - 1.0;
      worst = std::max(worst, std::fabs(gap));
      ++points;
    }
  }
  const double at_two = std::fabs(lehmer::root_sum(2, 2.0).real() - kPi / 2.0);
  char detail[120];
  std::snprintf(detail, sizeof(detail), "%d grid points, worst |gap - 1| = %.3e; pi/2 off %.3e",
                points, worst, at_two);
  report(6, "root-sum off-by-one grid", worst <= 1e-10 && at_two <= 1e-12, detail);
}

// 7: weighted integral vs direct sum for k in {1,2,3} on 12 grid points, 1e-9.
void criterion_7() {
  double worst = 0.0;
  int points = 0;
  for (int s : {2, 3, 4}) {
    const double r = lehmer::radius(s);
    for (double f : {-0.5, -0.25, 0.25, 0.5}) {
      const double x = f * r;
      ++points;
      for (int k : {1, 2, 3}) {
        const double gap = lehmer::weighted_integral(s, k, x).real() -
                           lehmer::sum_direct({s, k, x, 1}).value.real();
        worst = std::max(worst, std::fabs(gap));
      }
    }
  }
  char detail[100];
  std::snprintf(detail, sizeof(detail), "%d points x k in {1,2,3}, worst |gap| = %.3e", points,
                worst);
  report(7, "weighted integral vs series", points == 12 && worst < 1e-9, detail);
}

// 8: structural oracles: residue identities (1e-10), Eulerian row sums equal
// n! exactly for n <= 20, polylog vs truncated series (1e-12, |x| <= 0.5,
// k <= 8), jet first derivatives vs central differences (1e-7).
void criterion_8() {
  bool residues_ok = true;
  for (int s : {2, 3, 4, 5}) {
    const auto poly = lehmer::lehmer_polynomial(s, cdouble(1.5, 0.4));
    const auto roots = lehmer::find_roots(poly);
    const auto parts = lehmer::residues(poly, roots);
    double scale = 0.0;
    for (const auto& [root, residue] : parts) scale = std::max(scale, std::abs(residue));
    for (int j = 0; j <= s - 1; ++j) {
      cdouble acc = 0.0;
      for (const auto& [root, residue] : parts) acc += lehmer::cpow_int(root, j) * residue;
      const cdouble want = j == s - 1 ? 1.0 / poly.leading() : cdouble(0.0);
      if (std::abs(acc - want) / scale > 1e-10) residues_ok = false;
    }
  }

  bool eulerian_ok = true;
  for (int n = 1; n <= 20; ++n) {
    lehmer::BigInt sum = 0;
    for (const auto& v : lehmer::eulerian_row(n)) sum += v;
    if (sum != oracle::factorial(static_cast<unsigned>(n))) eulerian_ok = false;
  }

  // The 1e-12 closed-form-vs-truncated-series bound is checked in exact
  // rational arithmetic on 64 disk points (|x| <= 0.5; the difference is the
  // truncation tail, ~1e-42). An absolute 1e-12 between double-computed
  // values is not representable where |Li| ~ 1e6 (ulp 1.2e-10), so the
  // double path is held to 1e-12 scaled by the value's magnitude.
  bool polylog_ok = true;
  for (int k = 0; k <= 8 && polylog_ok; ++k)
    for (int p = -64; p <= 64; p += 2) {
      if (p == 0) continue;
      const oracle::BigRational x(p, 128);
      oracle::BigRational closed;
      if (k == 0) {
        closed = x / (1 - x);
      } else {
        const auto& row = lehmer::eulerian_row(k);
        oracle::BigRational numerator = 0;
        for (int i = 0; i < k; ++i)
          numerator = numerator * x + oracle::BigRational(row[static_cast<std::size_t>(i)]);
        numerator *= x;
        oracle::BigRational denominator = 1;
        for (int i = 0; i <= k; ++i) denominator *= (1 - x);
        closed = numerator / denominator;
      }
      const auto gap = closed - oracle::polylog_series_exact(k, x);
      if (std::fabs(gap.convert_to<double>()) >= 1e-12) {
        polylog_ok = false;
        break;
      }
    }
  for (int k = 0; k <= 8 && polylog_ok; ++k)
    for (int i = 0; i < 64; ++i) {
      const cdouble x = std::polar(0.5 * (i % 8 + 1) / 8.0, 2.0 * kPi * i / 64.0);
      const cdouble series = oracle::polylog_series(k, x);
      if (std::abs(lehmer::polylog_neg(k, x) - series) >=
          1e-12 * std::max(1.0, std::abs(series))) {
        polylog_ok = false;
        break;
      }
    }

  bool jets_ok = true;
  const double h = 1e-5;
  for (int s : {2, 3}) {
    for (double z : {1.5, -2.5}) {
      const auto jets = lehmer::root_jets(s, cdouble(z, 0.0), 1);
      const auto plus = lehmer::find_roots(lehmer::lehmer_polynomial(s, z + h));
      const auto minus = lehmer::find_roots(lehmer::lehmer_polynomial(s, z - h));
      for (const auto& jet : jets) {
        cdouble rp = plus.roots[0], rm = minus.roots[0];
        for (const auto& c : plus.roots)
          if (std::abs(c - jet.value()) < std::abs(rp - jet.value())) rp = c;
        for (const auto& c : minus.roots)
          if (std::abs(c - jet.value()) < std::abs(rm - jet.value())) rm = c;
        if (std::abs(jet.coeff(1) - (rp - rm) / (2.0 * h)) > 1e-7) jets_ok = false;
      }
    }
  }

  char detail[120];
  std::snprintf(detail, sizeof(detail), "residues %s, eulerian %s, polylog %s, jets %s",
                residues_ok ? "ok" : "FAIL", eulerian_ok ? "ok" : "FAIL",
                polylog_ok ? "ok" : "FAIL", jets_ok ? "ok" : "FAIL");
  report(8, "structural oracles", residues_ok && eulerian_ok && polylog_ok && jets_ok, detail);
}

// 9: both printed sides of the cubic root-expression identity evaluate,
// each internally stable to 1e-9, and the registry reports a definitive
// status with both values.
void criterion_9() {
  bool ok = false;
  double lhs = 0.0, rhs = 0.0;
  std::string status = "missing";
  const auto report_all = lehmer::run_registry(lehmer::bundled_registry());
  for (const auto& e : report_all.entries) {
    if (e.id != "cubic-rootsum-5f4") continue;
    status = lehmer::to_string(e.status);
    if (e.lhs && e.rhs && e.status != lehmer::Status::Unresolved) {
      lhs = *e.lhs;
      rhs = *e.rhs;
      ok = true;
    }
  }
  // stability of the two independent evaluations, measured directly
  lehmer::Hypergeometric5F4Request series_side;
  series_side.scale = {1, 36};
  const auto series_eval = lehmer::detail::evaluate_5f4(series_side);
  lehmer::RootExpressionRequest root_side;
  root_side.h = {3.0, 0.0, -1.0, 1.0};
  root_side.p = {-13897.0, 2738.0};
  root_side.q = {0.0, -2.0, 3.0};
  root_side.scale = {3, 456533};
  root_side.offset = {30033, 456533};
  const auto root_eval = lehmer::detail::evaluate_root_expression(root_side, {});
  const bool stable = series_eval.stability <= 1e-9 && root_eval.stability <= 1e-9;

  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "series side %.17g, root side %.17g, status %s, stabilities %.1e / %.1e", lhs,
                rhs, status.c_str(), series_eval.stability, root_eval.stability);
  report(9, "cubic root-expression identity", ok && stable, detail);
}

// 10: the whole registry finishes in under 10 s with every status equal to
// its expectation (the CLI turns this into exit code 0).
void criterion_10() {
  const auto start = std::chrono::steady_clock::now();
  const auto report_all = lehmer::run_registry(lehmer::bundled_registry());
  const double elapsed = ms_since(start);
  const bool pass = report_all.all_expected() && elapsed < 10000.0;
  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "confirmed %d, erratum %d, unresolved %d, %.1f ms, expectations %s",
                report_all.confirmed, report_all.erratum, report_all.unresolved, elapsed,
                report_all.all_expected() ? "met" : "VIOLATED");
  report(10, "full registry run", pass, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
