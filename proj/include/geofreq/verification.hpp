#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "geofreq/asymptotics.hpp"
#include "geofreq/experiments.hpp"
#include "geofreq/volumes.hpp"

namespace geofreq {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured margin / extremal value
};

namespace detail {

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace detail

/// log 2 - x^2/2 - H(1/2 + x/2) >= 0 on a 10^4-point grid in (-0.999, 0.999),
/// up to double rounding (slack 1e-15).
inline CheckResult check_entropy_inequality() {
  double min_gap = 1e300;
  const int points = 10000;
  for (int i = 0; i < points; ++i) {
    double x = -0.999 + 1.998 * i / (points - 1);
    min_gap = std::min(min_gap, entropy_quadratic_gap(x));
  }
  return CheckResult{"entropy quadratic bound on 10^4-point grid", min_gap >= -1e-15,
                     "min gap = " + detail::fmt(min_gap)};
}

/// Equality case of the entropy bound at x = 0.
inline CheckResult check_entropy_equality_at_zero() {
  double gap0 = std::fabs(entropy_quadratic_gap(0.0));
  return CheckResult{"entropy bound equality at x = 0", gap0 < 1e-12,
                     "|gap(0)| = " + detail::fmt(gap0)};
}

/// Strict geometric-sum tail bound, exact arithmetic, both tail regions,
/// y in {50,100,500,1000,2000} x s in {1/10,1/5,1/4,3/10,2/5}.
inline CheckResult check_tail_bounds() {
  bool all = true;
  double min_rel_margin = 1e300;
  for (long y : {50L, 100L, 500L, 1000L, 2000L}) {
    for (const Rational& s :
         {Rational(1, 10), Rational(1, 5), Rational(1, 4), Rational(3, 10), Rational(2, 5)}) {
      TailBoundReport rep = tail_bound_check(y, s);
      all = all && rep.holds && rep.margin.sign() > 0;
      min_rel_margin = std::min(min_rel_margin, (rep.margin / rep.geometric_bound).to_double());
    }
  }
  return CheckResult{"tail bound, 25 (y, s) pairs + mirrored regions", all,
                     "min margin/bound = " + detail::fmt(min_rel_margin)};
}

/// |C(y, py) / stirling_binom_approx(y, p) - 1| <= 1/(2y) for p in 0.2..0.8.
inline CheckResult check_stirling_accuracy(int digits) {
  bool all = true;
  double worst = 0.0;
  for (long y : {100L, 1000L}) {
    for (int ip = 2; ip <= 8; ++ip) {
      double p = ip / 10.0;
      long b = std::lround(p * static_cast<double>(y));
      Rational exact = binom_int(y, b);
      LogReal approx = stirling_binom_approx(static_cast<double>(y), p, digits);
      LogReal rel = log2_of_exact(exact, digits) / approx;
      double err = std::fabs(rel.linear().to_double() - 1.0);
      worst = std::max(worst, err * 2.0 * static_cast<double>(y));
      all = all && err <= 1.0 / (2.0 * static_cast<double>(y));
    }
  }
  return CheckResult{"Stirling binomial estimate within 1/(2y)", all,
                     "max |rel err| * 2y = " + detail::fmt(worst)};
}

/// f(0) = 1 exactly; strictly increasing on a 10^3-point grid in [0, 100];
/// f(10^8) within 1e-7 of sqrt(2).
inline CheckResult check_f_properties() {
  bool pass = f_lambda(0.0) == 1.0;
  const int points = 1000;
  double prev = f_lambda(0.0);
  double sqrt2 = std::sqrt(2.0);
  for (int i = 1; i < points; ++i) {
    double lam = 100.0 * i / (points - 1);
    double v = f_lambda(lam);
    pass = pass && v > prev && v < sqrt2;
    prev = v;
  }
  double limit_err = std::fabs(f_lambda(1e8) - sqrt2);
  pass = pass && limit_err < 1e-7;
  return CheckResult{"f(0) = 1, strict increase on [0,100], f -> sqrt(2)", pass,
                     "|f(1e8) - sqrt2| = " + detail::fmt(limit_err)};
}

/// The correlator route and the binomial-ratio route to the nonseparating
/// cylinder contribution agree as exact rationals, g in [2,12] x n in [0,6].
inline CheckResult check_exact_identity() {
  int cases = 0, equal = 0;
  for (long g = 2; g <= 12; ++g) {
    for (long n = 0; n <= 6; ++n) {
      SurfaceClass s(g, n);
      ++cases;
      if (cyl1_single_band(s) == cyl1_nonsep_main(s)) ++equal;
    }
  }
  return CheckResult{"exact identity: correlator route = binomial-ratio route",
                     equal == cases,
                     std::to_string(equal) + "/" + std::to_string(cases) + " exact equalities"};
}

/// (1/4) A_num / A_den matches the conjectured prediction to working
/// precision on a 20x20 grid (g, lambda) in [2,100] x [0,10].
inline CheckResult check_algebraic_consistency(int digits) {
  double tol = std::pow(10.0, -(digits - 5));
  double worst = 0.0;
  int points = 0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      double g = 2.0 + 98.0 * i / 19.0;
      double lam = 10.0 * j / 19.0;
      worst = std::max(worst, algebraic_consistency_check(g, lam, digits));
      ++points;
    }
  }
  return CheckResult{"closed-form consistency on " + std::to_string(points) + " grid points",
                     worst < tol, "max deviation = " + detail::fmt(worst) +
                     " (tol " + detail::fmt(tol) + ")"};
}

/// Reproduction grid: g in {4,...,128} geometric, lambda in {0,1/2,1,2,5,10}.
inline SweepSpec default_sweep_spec(int digits) {
  SweepSpec spec;
  spec.g_values = {4, 8, 16, 32, 64, 128};
  spec.lambda_values = {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(5),
                        Rational(10)};
  spec.precision_digits = digits;
  return spec;
}

/// Certification grid for the uniform-convergence thresholds.
inline SweepSpec convergence_certification_spec(int digits) {
  SweepSpec spec;
  spec.g_values = {4, 8, 16, 32, 64};
  spec.lambda_values = {Rational(0), Rational(1), Rational(2), Rational(5)};
  spec.precision_digits = digits;
  return spec;
}

/// Per-series thresholds: |epsilon| weakly decreasing in g (at most one
/// non-strict step), |epsilon| < 0.05 at the largest g, and a decay of at
/// least 4x from the smallest to the largest g.
inline std::vector<CheckResult> check_convergence_thresholds(const SweepSpec& spec) {
  std::vector<SweepRecord> records = run_sweep(spec);
  ConvergenceReport report = analyze_convergence(records);

  std::vector<CheckResult> out;
  for (const ConvergenceSeries& s : report.series) {
    if (!s.analyzable) {
      out.push_back(CheckResult{"epsilon series lambda = " + s.lambda.to_string(), false,
                                "unanalyzable: fewer than 2 genera"});
      continue;
    }
    double last = s.abs_epsilon.back().second;
    double first = s.abs_epsilon.front().second;
    bool pass = s.nonstrict_steps <= 1 && last < 0.05 && last <= first / 4.0;
    out.push_back(CheckResult{
        "epsilon series lambda = " + s.lambda.to_string(), pass,
        "|eps|(g_max) = " + detail::fmt(last) + ", decay = " +
            detail::fmt(s.decay_defined ? s.decay_ratio : 0.0) + ", nonstrict steps = " +
            std::to_string(s.nonstrict_steps)});
  }
  out.push_back(CheckResult{"uniformity gap across lambda", report.uniformity_gap < 0.05,
                            "max |eps|(g_max) = " + detail::fmt(report.uniformity_gap)});
  return out;
}

inline std::vector<CheckResult> verify_lemmas(int digits) {
  return {check_entropy_inequality(), check_entropy_equality_at_zero(), check_tail_bounds(),
          check_stirling_accuracy(digits), check_f_properties()};
}

inline std::vector<CheckResult> verify_identities(int digits) {
  return {check_exact_identity(), check_algebraic_consistency(digits)};
}

inline std::vector<CheckResult> verify_convergence(int digits) {
  return check_convergence_thresholds(default_sweep_spec(digits));
}

}  // namespace geofreq
