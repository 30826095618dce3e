#pragma once

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "geofreq/log_real.hpp"
#include "geofreq/rational.hpp"
#include "geofreq/real.hpp"

namespace geofreq {

/// Integer binomial coefficient, exact. Out-of-range lower index yields 0 so
/// that sums written over formal index ranges evaluate as printed.
inline Rational binom_int(long a, long b) {
  if (a < 0) throw std::domain_error("binom_int: negative upper index a = " + std::to_string(a));
  if (b < 0 || b > a) return Rational(0);
  Rational r;
  mpz_bin_uiui(mpq_numref(r.raw()), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

inline Rational factorial(long m) {
  if (m < 0) throw std::domain_error("factorial: negative argument m = " + std::to_string(m));
  Rational r;
  mpz_fac_ui(mpq_numref(r.raw()), static_cast<unsigned long>(m));
  return r;
}

/// m!! with the empty-product convention (-1)!! = 0!! = 1.
inline Rational double_factorial(long m) {
  if (m < -1) throw std::domain_error("double_factorial: argument below -1: m = " + std::to_string(m));
  if (m <= 0) return Rational(1);
  Rational r;
  mpz_2fac_ui(mpq_numref(r.raw()), static_cast<unsigned long>(m));
  return r;
}

/// Exact Bernoulli number B_n (B_1 = -1/2). Cached; thread-safe.
inline Rational bernoulli(unsigned n) {
  static std::vector<Rational> cache;  // cache[m] = B_m
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.emplace_back(1);        // B_0
    cache.emplace_back(-1, 2);    // B_1
  }
  // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
  while (cache.size() <= n) {
    unsigned m = static_cast<unsigned>(cache.size());
    if (m % 2 == 1) {
      cache.emplace_back(0);
      continue;
    }
    Rational sum(0);
    for (unsigned j = 0; j < m; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      sum += binom_int(m + 1, j) * cache[j];
    }
    cache.push_back(-sum / Rational(m + 1));
  }
  return cache[n];
}

/// ln Gamma(z) for z > 0 to `digits` decimal accuracy.
///
/// Stirling's asymptotic series with argument shift: the series remainder
/// after truncation is bounded by the first omitted term (valid for positive
/// real argument), and its smallest achievable term at argument w is about
/// e^(-2*pi*w). Shifting until w >= max(20, 0.45*(digits+10)) guarantees the
/// series bottoms out below the target before it starts diverging.
inline Real log_gamma(const Real& z, int digits) {
  if (z.sign() <= 0) throw std::domain_error("log_gamma: nonpositive argument");
  mpfr_prec_t prec = std::max(z.precision(), bits_for_digits(digits)) + 64;

  double threshold = std::max(20.0, 0.45 * (digits + 10));
  double zd = z.to_double();
  long shift = zd < threshold ? static_cast<long>(std::ceil(threshold - zd)) : 0;

  Real w = z + Real(shift, prec);
  Real half(1, prec);
  half = half / Real(2, prec);

  Real ln_w = w.log();
  Real result = (w - half) * ln_w - w + (Real::pi(prec) * Real(2, prec)).log() * half;

  Real tol = result.abs() * Real(10.0, prec).pow_si(-(digits + 8));
  Real w_inv2 = (Real(1, prec) / w).pow_si(2);
  Real w_pow = Real(1, prec) / w;  // w^-(2j-1), starts at j = 1
  for (unsigned j = 1;; ++j) {
    Rational coeff = bernoulli(2 * j) / Rational(2 * j) / Rational(2 * j - 1);
    Real term = Real(coeff, prec) * w_pow;
    result += term;
    if (term.abs() < tol) break;
    if (j > 10000) throw std::runtime_error("log_gamma: series failed to converge");
    w_pow *= w_inv2;
  }

  for (long i = 0; i < shift; ++i) result -= (z + Real(i, prec)).log();
  return result;
}

namespace detail {

inline void check_gamma_argument(double t, const char* name) {
  if (t > 0) return;
  if (t == std::nearbyint(t))
    throw std::domain_error(std::string("binom_real: Gamma pole at ") + name + " = " +
                            std::to_string(t));
  throw std::domain_error(std::string("binom_real: nonpositive Gamma argument ") + name + " = " +
                          std::to_string(t) + " (outside supported domain)");
}

}  // namespace detail

/// Gamma-extended binomial Gamma(a+1) / (Gamma(b+1) Gamma(a-b+1)), log-scale.
inline LogReal binom_real(double a, double b, int digits) {
  detail::check_gamma_argument(a + 1, "a+1");
  detail::check_gamma_argument(b + 1, "b+1");
  detail::check_gamma_argument(a - b + 1, "a-b+1");
  mpfr_prec_t prec = bits_for_digits(digits) + 64;
  int work_digits = digits + 6;
  Real lg = log_gamma(Real(a + 1, prec), work_digits) -
            log_gamma(Real(b + 1, prec), work_digits) -
            log_gamma(Real(a - b + 1, prec), work_digits);
  return LogReal::from_log2(1, lg / Real::ln2(prec), digits);
}

/// zeta(s) for integer s >= 2 with relative accuracy 10^-digits.
///
/// Truncates at M, bounds/represents the tail m > M through the integral
/// estimate M^(1-s)/(s-1) refined by Euler-Maclaurin corrections; the
/// remainder after the last added correction is bounded by the first omitted
/// term. M is picked so that for large s the bare integral bound already
/// meets the target (the corrections loop then exits immediately), and for
/// small s the correction terms provably shrink below target before their
/// eventual divergence.
inline LogReal zeta_numeric(long s, int digits) {
  if (s < 2) throw std::domain_error("zeta_numeric: requires s >= 2, got s = " + std::to_string(s));
  mpfr_prec_t prec = bits_for_digits(digits) + 32;
  double log_inv_tol = (digits + 6) * std::log(10.0);

  long M;
  double md_log = (log_inv_tol - std::log(static_cast<double>(s - 1))) / (s - 1);
  if (md_log < std::log(1e4)) {
    M = std::max(2L, static_cast<long>(std::ceil(std::exp(md_log))) + 1);
  } else {
    M = std::max({16L, 2L * digits, (s + 5 * digits / 2) / 3 + 1});
  }

  Real tol = Real(10.0, prec).pow_si(-(digits + 6));
  for (int attempt = 0; attempt < 8; ++attempt, M *= 2) {
    Real sum(0, prec);
    for (long m = 1; m <= M; ++m) sum += Real(m, prec).pow_si(-s);

    Real m_real(M, prec);
    sum += m_real.pow_si(1 - s) / Real(s - 1, prec);
    sum -= m_real.pow_si(-s) / Real(2, prec);

    Rational rising(s);                  // s(s+1)...(s+2k-2)
    Real m_pow = m_real.pow_si(-s - 1);  // M^(-s-2k+1)
    Real m_inv2 = m_real.pow_si(-2);
    Real prev_abs(0, prec);
    bool diverged = false;
    for (unsigned k = 1; !diverged; ++k) {
      Rational coeff = bernoulli(2 * k) / factorial(2 * k) * rising;
      Real term = Real(coeff, prec) * m_pow;
      Real ta = term.abs();
      if (k > 1 && ta > prev_abs) {
        // Correction terms started growing before reaching the target: M was
        // too small for this s. Retry with a larger truncation point.
        diverged = true;
        break;
      }
      sum += term;
      if (ta < tol) return LogReal::from_linear(sum, 1, digits);
      prev_abs = ta;
      rising *= Rational(s + 2 * static_cast<long>(k) - 1) * Rational(s + 2 * static_cast<long>(k));
      m_pow *= m_inv2;
    }
  }
  throw std::runtime_error("zeta_numeric: tail corrections failed to converge");
}

/// Sign and log2 magnitude of a nonzero exact rational.
inline LogReal log2_of_exact(const Rational& x, int digits) {
  if (x.is_zero()) throw std::domain_error("log2_of_exact: zero has no logarithm");
  return LogReal::from_rational(x, digits);
}

}  // namespace geofreq
