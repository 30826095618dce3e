#pragma once

#include <cmath>
#include <string>

#include "geofreq/log_real.hpp"
#include "geofreq/rational.hpp"
#include "geofreq/real.hpp"

namespace testutil {

inline geofreq::Real real_from_decimal(const std::string& s, mpfr_prec_t prec = 256) {
  geofreq::Real r(prec);
  if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("bad decimal literal: " + s);
  return r;
}

/// |value/expected - 1| where expected is a decimal literal.
inline double rel_error(const geofreq::Real& value, const std::string& expected) {
  geofreq::Real e = real_from_decimal(expected);
  return ((value - e) / e).abs().to_double();
}

/// |value/expected - 1| for a log-scale value against an exact rational.
inline double rel_error(const geofreq::LogReal& value, const geofreq::Rational& expected) {
  geofreq::LogReal ref = geofreq::LogReal::from_rational(expected, value.precision_digits());
  geofreq::Real ratio = (value.log2_magnitude() - ref.log2_magnitude()).exp2();
  double sign_match = value.sign() == expected.sign() ? 1.0 : -1.0;
  return std::fabs(sign_match * ratio.to_double() - 1.0);
}

/// |value/expected - 1| for a log-scale value against a decimal literal.
inline double rel_error(const geofreq::LogReal& value, const std::string& expected) {
  return rel_error(value.linear(), expected);
}

}  // namespace testutil
