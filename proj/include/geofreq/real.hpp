#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "geofreq/rational.hpp"

namespace geofreq {

/// Binary precision that comfortably covers `digits` decimal digits.
/// 32 guard bits absorb accumulated rounding across a pipeline of operations.
inline mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw std::domain_error("bits_for_digits: digits must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

/// Arbitrary-precision real. Thin value-semantic wrapper over mpfr_t with an
/// explicit precision in bits; every operation rounds to nearest. Binary
/// operations produce the wider of the two operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }

  Real(long v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_si(x_, v, MPFR_RNDN);
  }

  Real(int v, mpfr_prec_t prec) : Real(static_cast<long>(v), prec) {}

  Real(double v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_d(x_, v, MPFR_RNDN);
  }

  Real(const Rational& v, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_q(x_, v.raw(), MPFR_RNDN);
  }

  Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }

  Real(Real&& o) noexcept {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_swap(x_, o.x_);
  }

  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }

  ~Real() { mpfr_clear(x_); }

  static Real from_mpz(mpz_srcptr z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.x_, z, MPFR_RNDN);
    return r;
  }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
  }

  static Real ln2(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_log2(r.x_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }

  Real operator-() const {
    Real r(*this);
    mpfr_neg(r.x_, r.x_, MPFR_RNDN);
    return r;
  }

  Real abs() const {
    Real r(*this);
    mpfr_abs(r.x_, r.x_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw std::domain_error("Real: division by zero");
    Real r(std::max(a.precision(), b.precision()));
    mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

  Real sqrt() const {
    if (sign() < 0) throw std::domain_error("Real: sqrt of negative value");
    Real r(precision());
    mpfr_sqrt(r.x_, x_, MPFR_RNDN);
    return r;
  }

  Real log() const {
    if (sign() <= 0) throw std::domain_error("Real: log of nonpositive value");
    Real r(precision());
    mpfr_log(r.x_, x_, MPFR_RNDN);
    return r;
  }

  Real log2() const {
    if (sign() <= 0) throw std::domain_error("Real: log2 of nonpositive value");
    Real r(precision());
    mpfr_log2(r.x_, x_, MPFR_RNDN);
    return r;
  }

  Real exp() const {
    Real r(precision());
    mpfr_exp(r.x_, x_, MPFR_RNDN);
    return r;
  }

  Real exp2() const {
    Real r(precision());
    mpfr_exp2(r.x_, x_, MPFR_RNDN);
    return r;
  }

  Real pow_si(long e) const {
    Real r(precision());
    mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

  /// Shortest decimal with at most `digits` significant digits ('%g' style).
  std::string to_string(int digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", digits, x_) < 0)
      throw std::runtime_error("Real: formatting failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

 private:
  mpfr_t x_;
};

}  // namespace geofreq
