#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "geofreq/exactmath.hpp"
#include "geofreq/log_real.hpp"
#include "geofreq/rational.hpp"
#include "geofreq/real.hpp"

namespace geofreq {

/// Binary-sum entropy H(p) = -p ln p - (1-p) ln(1-p), natural-log units,
/// extended continuously to H(0) = H(1) = 0.
inline double entropy(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::domain_error("entropy: argument outside [0, 1], p = " + std::to_string(p));
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

/// Slack of the quadratic entropy bound: log 2 - x^2/2 - H(1/2 + x/2).
/// Nonnegative for every x in (-1, 1), zero exactly at x = 0.
inline double entropy_quadratic_gap(double x) {
  if (x <= -1.0 || x >= 1.0)
    throw std::domain_error("entropy_quadratic_gap: |x| must be < 1, x = " + std::to_string(x));
  return std::log(2.0) - x * x / 2.0 - entropy(0.5 + x / 2.0);
}

/// Stirling estimate of a binomial coefficient: e^(y H(p)) / sqrt(2 pi y p(1-p)),
/// log-scale. Accurate to a relative O(1/y) against C(y, py).
inline LogReal stirling_binom_approx(double y, double p, int digits) {
  if (y <= 0.0) throw std::domain_error("stirling_binom_approx: y must be positive");
  if (p <= 0.0 || p >= 1.0)
    throw std::domain_error("stirling_binom_approx: p must lie strictly inside (0, 1), p = " +
                            std::to_string(p));
  mpfr_prec_t prec = bits_for_digits(digits);
  Real yp(y, prec), pp(p, prec);
  Real one(1, prec), two(2, prec);
  Real h = -(pp * pp.log()) - (one - pp) * (one - pp).log();
  Real log2_main = yp * h / Real::ln2(prec);
  Real log2_norm = (two * Real::pi(prec) * yp * pp * (one - pp)).log2() / two;
  return LogReal::from_log2(1, log2_main - log2_norm, digits);
}

/// Exact two-sided tail-bound check: is sum_{k<=floor(sy)} C(y,k) strictly
/// below the geometric-series bound (1-s)/(1-2s) * C(y, floor(sy))?
/// The mirrored region k in [y - floor(sy), y] is verified as well; by the
/// symmetry C(y,k) = C(y,y-k) both regions share the same sum and bound.
struct TailBoundReport {
  long y;
  Rational s;
  Rational exact_tail;
  Rational geometric_bound;
  bool holds;
  Rational margin;
};

inline TailBoundReport tail_bound_check(long y, const Rational& s) {
  if (y < 1) throw std::domain_error("tail_bound_check: y must be >= 1");
  if (s.sign() <= 0 || s >= Rational(1, 2))
    throw std::domain_error("tail_bound_check: s must lie in (0, 1/2), got s = " + s.to_string());

  Rational sy = s * Rational(y);
  mpz_t cut_z;
  mpz_init(cut_z);
  mpz_fdiv_q(cut_z, mpq_numref(sy.raw()), mpq_denref(sy.raw()));
  long cut = mpz_get_si(cut_z);
  mpz_clear(cut_z);

  Rational tail(0), mirrored(0);
  for (long k = 0; k <= cut; ++k) {
    tail += binom_int(y, k);
    mirrored += binom_int(y, y - k);
  }
  Rational bound = (Rational(1) - s) / (Rational(1) - Rational(2) * s) * binom_int(y, cut);
  bool holds = tail < bound && mirrored < bound;
  return TailBoundReport{y, s, tail, bound, holds, bound - tail};
}

/// Limiting ratio profile f(lambda) = sqrt((6+2*lambda)/(6+lambda)):
/// continuous, increasing from f(0) = 1 toward f(inf) = sqrt(2).
inline double f_lambda(double lambda) {
  if (lambda < 0.0)
    throw std::domain_error("f_lambda: lambda must be nonnegative, got " + std::to_string(lambda));
  return std::sqrt((6.0 + 2.0 * lambda) / (6.0 + lambda));
}

/// f(lambda) at working precision (for the exact-pipeline error terms).
inline Real f_lambda_real(const Real& lambda, mpfr_prec_t prec) {
  if (lambda.sign() < 0) throw std::domain_error("f_lambda_real: lambda must be nonnegative");
  Real six(6, prec), two(2, prec);
  return ((six + two * lambda) / (six + lambda)).sqrt();
}

/// Gaussian-integral closed form for the separating-side sum:
/// 2^((2*lambda+4)g - 4) / sqrt(pi g (lambda+6)), log-scale.
inline LogReal gaussian_num_asym(double g, double lambda, int digits) {
  if (g <= 0.0) throw std::domain_error("gaussian_num_asym: g must be positive");
  if (lambda < 0.0) throw std::domain_error("gaussian_num_asym: lambda must be nonnegative");
  mpfr_prec_t prec = bits_for_digits(digits);
  Real gr(g, prec), lr(lambda, prec);
  Real exponent = (Real(2, prec) * lr + Real(4, prec)) * gr - Real(4, prec);
  Real norm = (Real::pi(prec) * gr * (lr + Real(6, prec))).log2() / Real(2, prec);
  return LogReal::from_log2(1, exponent - norm, digits);
}

/// Gaussian-integral closed form for the nonseparating-side sum:
/// sqrt(3/(3+lambda)) * 2^((2*lambda+6)g - 7), log-scale.
inline LogReal gaussian_den_asym(double g, double lambda, int digits) {
  if (g <= 0.0) throw std::domain_error("gaussian_den_asym: g must be positive");
  if (lambda < 0.0) throw std::domain_error("gaussian_den_asym: lambda must be nonnegative");
  mpfr_prec_t prec = bits_for_digits(digits);
  Real gr(g, prec), lr(lambda, prec);
  Real exponent = (Real(2, prec) * lr + Real(6, prec)) * gr - Real(7, prec);
  Real prefactor = (Real(3, prec) / (Real(3, prec) + lr)).log2() / Real(2, prec);
  return LogReal::from_log2(1, exponent + prefactor, digits);
}

namespace detail {

/// log2 of sqrt(2/(3 pi g)) * 4^-g * f(lambda).
inline Real prediction_log2(const Real& g, const Real& lambda, mpfr_prec_t prec) {
  Real two(2, prec), three(3, prec);
  Real envelope = (two / (three * Real::pi(prec) * g)).log2() / two;
  return envelope - two * g + f_lambda_real(lambda, prec).log2();
}

}  // namespace detail

/// The conjectured uniform asymptotic of the frequency ratio:
/// sqrt(2/(3 pi g)) * 4^-g * f(n/g), log-scale.
inline LogReal conjecture_prediction(long g, long n, int digits) {
  if (g < 1) throw std::domain_error("conjecture_prediction: requires g >= 1");
  if (n < 0) throw std::domain_error("conjecture_prediction: requires n >= 0");
  mpfr_prec_t prec = bits_for_digits(digits);
  Real lambda = Real(Rational(n, g), prec);
  return LogReal::from_log2(1, detail::prediction_log2(Real(g, prec), lambda, prec), digits);
}

/// |(1/4) A_num / A_den / prediction - 1|: the two Gaussian closed forms and
/// the conjectured prediction are one algebraic identity, so this must vanish
/// to working precision for every g > 0, lambda >= 0.
inline double algebraic_consistency_check(double g, double lambda, int digits) {
  if (g <= 0.0) throw std::domain_error("algebraic_consistency_check: g must be positive");
  if (lambda < 0.0) throw std::domain_error("algebraic_consistency_check: lambda must be nonnegative");
  mpfr_prec_t prec = bits_for_digits(digits);
  LogReal lhs = gaussian_num_asym(g, lambda, digits) / gaussian_den_asym(g, lambda, digits) /
                LogReal::from_rational(Rational(4), digits);
  Real rhs_log2 = detail::prediction_log2(Real(g, prec), Real(lambda, prec), prec);
  Real ratio = (lhs.log2_magnitude() - rhs_log2).exp2();
  return (ratio - Real(1, prec)).abs().to_double();
}

}  // namespace geofreq
