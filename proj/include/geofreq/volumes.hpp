#pragma once

#include <stdexcept>
#include <string>

#include "geofreq/exactmath.hpp"
#include "geofreq/log_real.hpp"
#include "geofreq/surface.hpp"

namespace geofreq {

/// Main term of the large-genus 2-correlator asymptotic:
///   <tau_k tau_{3g-1-k}>_g ~ (6g-1)!! / (24^g g! (2k+1)!! (6g-1-2k)!!)
/// returned exactly as a rational.
inline Rational corr2_asym(long g, long k) {
  if (g < 1) throw std::domain_error("corr2_asym: requires g >= 1, got g = " + std::to_string(g));
  if (k < 0 || k > 3 * g - 1)
    throw std::domain_error("corr2_asym: index k = " + std::to_string(k) +
                            " outside [0, " + std::to_string(3 * g - 1) + "]");
  Rational pow24;
  mpz_ui_pow_ui(mpq_numref(pow24.raw()), 24, static_cast<unsigned long>(g));
  Rational den = pow24 * factorial(g) * double_factorial(2 * k + 1) * double_factorial(6 * g - 1 - 2 * k);
  return double_factorial(6 * g - 1) / den;
}

/// sum_{g1=0}^{g} C(g, g1) C(3g-4+2n, 3g1-2+n); separating-side binomial sum.
/// Edge summands fall out of range and contribute 0 by the zero convention.
inline Rational numerator_sum(const SurfaceClass& s) {
  Rational total(0);
  for (long g1 = 0; g1 <= s.g; ++g1)
    total += binom_int(s.g, g1) * binom_int(3 * s.g - 4 + 2 * s.n, 3 * g1 - 2 + s.n);
  return total;
}

/// sum_{k=0}^{3g-4} C(3g-4+2n, n+k) C(6g-6, 2k+1) / C(3g-4, k);
/// nonseparating-side binomial sum.
inline Rational denominator_sum(const SurfaceClass& s) {
  Rational total(0);
  for (long k = 0; k <= 3 * s.g - 4; ++k)
    total += binom_int(3 * s.g - 4 + 2 * s.n, s.n + k) * binom_int(6 * s.g - 6, 2 * k + 1) /
             binom_int(3 * s.g - 4, k);
  return total;
}

/// Total single-band cylinder contribution over all separating stable graphs:
/// (2^(g+1) / 24^g) C(4g-4+n, g) * numerator_sum.
inline Rational cyl1_separating_total(const SurfaceClass& s) {
  Rational pow24;
  mpz_ui_pow_ui(mpq_numref(pow24.raw()), 24, static_cast<unsigned long>(s.g));
  return Rational::pow2(s.g + 1) / pow24 * binom_int(4 * s.g - 4 + s.n, s.g) * numerator_sum(s);
}

/// Single-band cylinder contribution of the nonseparating graph via the
/// 2-correlator route: 2^(g+1) C(4g-4+n, g) g! sum_k C(3g-4+2n, n+k) <tau_k tau_{3g-4-k}>_{g-1}.
/// The correlator pairing k + (3g-4-k) = 3(g-1)-1 is the unique one that makes
/// every summand a valid genus-(g-1) 2-correlator; with it this equals
/// cyl1_nonsep_main exactly, not merely asymptotically.
inline Rational cyl1_single_band(const SurfaceClass& s) {
  Rational sum(0);
  for (long k = 0; k <= 3 * s.g - 4; ++k)
    sum += binom_int(3 * s.g - 4 + 2 * s.n, s.n + k) * corr2_asym(s.g - 1, k);
  return Rational::pow2(s.g + 1) * binom_int(4 * s.g - 4 + s.n, s.g) * factorial(s.g) * sum;
}

/// Main term of the nonseparating volume contribution:
/// (2^(g+3) g / (24^g (g-1))) C(4g-4+n, g) * denominator_sum.
inline Rational cyl1_nonsep_main(const SurfaceClass& s) {
  Rational pow24;
  mpz_ui_pow_ui(mpq_numref(pow24.raw()), 24, static_cast<unsigned long>(s.g));
  return Rational::pow2(s.g + 3) * Rational(s.g) / (pow24 * Rational(s.g - 1)) *
         binom_int(4 * s.g - 4 + s.n, s.g) * denominator_sum(s);
}

/// Volume of a single-edge stable graph from its cylinder contribution:
/// Vol = cyl1 * zeta(6g-6+2n).
inline LogReal volume_from_cyl(const Rational& c, const SurfaceClass& s, int digits) {
  if (c.is_zero()) return LogReal::zero(digits);
  return log2_of_exact(c, digits) * zeta_numeric(6 * s.g - 6 + 2 * s.n, digits);
}

/// Cylinder contribution of the nonseparating graph together with its
/// zeta-corrected volume.
struct VolumeContribution {
  Rational cyl1;
  LogReal zeta_corrected;
  SurfaceClass surface;
};

inline VolumeContribution make_volume_contribution(const Rational& cyl1, const SurfaceClass& s,
                                                   int digits) {
  if (cyl1.sign() <= 0) throw std::domain_error("VolumeContribution: cyl1 must be positive");
  return VolumeContribution{cyl1, volume_from_cyl(cyl1, s, digits), s};
}

/// Normalization 2(6g-6+2n) (4g-4+n)! 2^(4g-3+n) relating a stable-graph
/// volume contribution to Mirzakhani's asymptotic frequency. The relation's
/// hypothesis excludes (g, n) = (2, 0); the factor is still computed there
/// but flagged.
struct MirzakhaniFactor {
  Rational value;
  bool hypothesis_met;
};

inline MirzakhaniFactor mirzakhani_factor(const SurfaceClass& s) {
  bool ok = (2 * s.g + s.n > 3) && !(s.g == 2 && s.n == 0);
  Rational v = Rational(2) * Rational(6 * s.g - 6 + 2 * s.n) * factorial(4 * s.g - 4 + s.n) *
               Rational::pow2(4 * s.g - 3 + s.n);
  return MirzakhaniFactor{v, ok};
}

struct Frequency {
  LogReal value;
  bool hypothesis_met;
};

/// Mirzakhani's asymptotic frequency recovered from a volume contribution.
inline Frequency frequency_from_volume(const LogReal& vol, const SurfaceClass& s) {
  MirzakhaniFactor f = mirzakhani_factor(s);
  if (vol.is_zero()) return Frequency{LogReal::zero(vol.precision_digits()), f.hypothesis_met};
  return Frequency{vol / log2_of_exact(f.value, vol.precision_digits()), f.hypothesis_met};
}

/// Exact main term of the frequency ratio separating/nonseparating:
/// (1/4) numerator_sum / denominator_sum.
inline Rational ratio_exact(const SurfaceClass& s) {
  return Rational(1, 4) * numerator_sum(s) / denominator_sum(s);
}

/// Same ratio with the first-principles prefactor (g-1)/(4g) kept instead of
/// absorbed into the error term; equals cyl1_separating_total / cyl1_nonsep_main.
inline Rational ratio_refined(const SurfaceClass& s) {
  return Rational(s.g - 1, 4 * s.g) * numerator_sum(s) / denominator_sum(s);
}

}  // namespace geofreq
