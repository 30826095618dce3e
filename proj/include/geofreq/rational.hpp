#pragma once

#include <gmp.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace geofreq {

namespace detail {

inline std::string take_gmp_string(char* s) {
  std::string out(s);
  void (*free_fn)(void*, std::size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(s, out.size() + 1);
  return out;
}

}  // namespace detail

/// Exact rational number. Always canonical: lowest terms, positive denominator.
/// Arithmetic never rounds.
class Rational {
 public:
  Rational() { mpq_init(q_); }

  Rational(long num) {  // NOLINT(google-explicit-constructor): numeric literal convenience
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
  }

  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
  }

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }

  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }

  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  ~Rational() { mpq_clear(q_); }

  static Rational from_mpz(mpz_srcptr z) {
    Rational r;
    mpq_set_z(r.q_, z);
    return r;
  }

  /// Parses "p", "-p" or "p/q" in base 10. Canonicalizes.
  static Rational from_string(const std::string& s) {
    Rational r;
    if (s.empty() || mpq_set_str(r.q_, s.c_str(), 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
      throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    mpq_canonicalize(r.q_);
    return r;
  }

  /// 2^e as an exact rational (e may be negative).
  static Rational pow2(long e) {
    Rational r(1);
    if (e >= 0)
      mpq_mul_2exp(r.q_, r.q_, static_cast<mp_bitcnt_t>(e));
    else
      mpq_div_2exp(r.q_, r.q_, static_cast<mp_bitcnt_t>(-e));
    return r;
  }

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }

  Rational abs() const {
    Rational r(*this);
    mpq_abs(r.q_, r.q_);
    return r;
  }

  Rational operator-() const {
    Rational r(*this);
    mpq_neg(r.q_, r.q_);
    return r;
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

  /// Canonical "p/q" (denominator omitted when 1). Round-trips through from_string.
  std::string to_string() const { return detail::take_gmp_string(mpq_get_str(nullptr, 10, q_)); }

  double to_double() const { return mpq_get_d(q_); }

  /// Nearest integer, ties to even. Requires the value to fit in long.
  long round_half_even() const {
    mpz_t quo, rem, twice;
    mpz_inits(quo, rem, twice, nullptr);
    mpz_fdiv_qr(quo, rem, mpq_numref(q_), mpq_denref(q_));
    mpz_mul_2exp(twice, rem, 1);
    int c = mpz_cmp(twice, mpq_denref(q_));
    bool up = c > 0 || (c == 0 && mpz_odd_p(quo));
    long result = mpz_get_si(quo) + (up ? 1 : 0);
    mpz_clears(quo, rem, twice, nullptr);
    return result;
  }

  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

 private:
  mpq_t q_;
};

}  // namespace geofreq
