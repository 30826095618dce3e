#pragma once

#include <stdexcept>
#include <string>

#include "geofreq/rational.hpp"
#include "geofreq/real.hpp"

namespace geofreq {

/// A real number held as sign + log2 of its magnitude, so that quantities like
/// 2^(c*g) remain representable and composable for arbitrarily large exponents.
/// `precision_digits` is the decimal working precision every derived value is
/// computed to. Sign 0 means exact zero; the stored magnitude is then ignored.
class LogReal {
 public:
  static LogReal zero(int digits) { return LogReal(0, Real(bits_for_digits(digits)), digits); }

  static LogReal from_log2(int sign, Real log2_magnitude, int digits) {
    if (sign < -1 || sign > 1) throw std::domain_error("LogReal: sign must be -1, 0 or 1");
    if (sign == 0) return zero(digits);
    return LogReal(sign, std::move(log2_magnitude), digits);
  }

  /// Log-scale conversion of an exact rational: sign(x) plus
  /// log2|x| = log2(|num|) - log2(den), each factor taken from its bit length
  /// and a mantissa correction at working precision.
  static LogReal from_rational(const Rational& x, int digits) {
    if (x.is_zero()) throw std::domain_error("LogReal: log of zero");
    mpfr_prec_t prec = bits_for_digits(digits);
    Real num = Real::from_mpz(mpq_numref(x.raw()), prec).abs();
    Real den = Real::from_mpz(mpq_denref(x.raw()), prec);
    return LogReal(x.sign(), num.log2() - den.log2(), digits);
  }

  /// Wraps an already-computed linear-scale positive real (sign supplied).
  static LogReal from_linear(const Real& magnitude, int sign, int digits) {
    if (sign == 0 || magnitude.is_zero()) return zero(digits);
    return LogReal(sign, magnitude.abs().log2(), digits);
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  int precision_digits() const { return digits_; }

  /// log2 of the magnitude. Meaningless (zero by convention) when sign() == 0.
  const Real& log2_magnitude() const { return log2_mag_; }

  LogReal operator*(const LogReal& o) const {
    if (sign_ == 0 || o.sign_ == 0) return zero(std::max(digits_, o.digits_));
    return LogReal(sign_ * o.sign_, log2_mag_ + o.log2_mag_, std::max(digits_, o.digits_));
  }

  LogReal operator/(const LogReal& o) const {
    if (o.sign_ == 0) throw std::domain_error("LogReal: division by zero");
    if (sign_ == 0) return zero(std::max(digits_, o.digits_));
    return LogReal(sign_ * o.sign_, log2_mag_ - o.log2_mag_, std::max(digits_, o.digits_));
  }

  LogReal operator-() const { return LogReal(-sign_, log2_mag_, digits_); }

  /// Linear-scale value at working precision. Only safe when the exponent is
  /// within mpfr range; fine for everything this library prints or compares.
  Real linear() const {
    if (sign_ == 0) return Real(bits_for_digits(digits_));
    Real mag = log2_mag_.exp2();
    return sign_ > 0 ? mag : -mag;
  }

  /// Shortest decimal of the linear value with precision_digits significant digits.
  std::string to_decimal_string() const {
    if (sign_ == 0) return "0";
    return linear().to_string(digits_);
  }

  friend bool operator<(const LogReal& a, const LogReal& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    if (a.sign_ == 0) return false;
    int c = a.sign_ > 0 ? 1 : -1;
    return c > 0 ? a.log2_mag_ < b.log2_mag_ : b.log2_mag_ < a.log2_mag_;
  }
  friend bool operator>(const LogReal& a, const LogReal& b) { return b < a; }
  friend bool operator<=(const LogReal& a, const LogReal& b) { return !(b < a); }
  friend bool operator>=(const LogReal& a, const LogReal& b) { return !(a < b); }

 private:
  LogReal(int sign, Real log2_magnitude, int digits)
      : sign_(sign), log2_mag_(std::move(log2_magnitude)), digits_(digits) {
    if (sign_ == 0) log2_mag_ = Real(bits_for_digits(digits_));
  }

  int sign_;
  Real log2_mag_;
  int digits_;
};

}  // namespace geofreq
