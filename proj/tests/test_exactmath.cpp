#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "geofreq/exactmath.hpp"
#include "test_helpers.hpp"

using geofreq::binom_int;
using geofreq::binom_real;
using geofreq::bits_for_digits;
using geofreq::double_factorial;
using geofreq::factorial;
using geofreq::log2_of_exact;
using geofreq::LogReal;
using geofreq::Rational;
using geofreq::Real;
using geofreq::zeta_numeric;
using testutil::rel_error;

TEST_CASE("binom_int small values and zero convention") {
  CHECK(binom_int(5, 2) == Rational(10));
  CHECK(binom_int(12, 7) == Rational(792));
  CHECK(binom_int(2, -2) == Rational(0));
  CHECK(binom_int(2, 4) == Rational(0));
  CHECK(binom_int(0, 0) == Rational(1));
  CHECK_THROWS_AS(binom_int(-1, 0), std::domain_error);
}

TEST_CASE("binom_int Pascal recurrence and symmetry, random a <= 500") {
  std::mt19937 rng(987654321u);
  std::uniform_int_distribution<long> adist(2, 500);
  for (int trial = 0; trial < 50; ++trial) {
    long a = adist(rng);
    std::uniform_int_distribution<long> bdist(1, a - 1);
    long b = bdist(rng);
    CHECK(binom_int(a, b) == binom_int(a - 1, b - 1) + binom_int(a - 1, b));
    CHECK(binom_int(a, b) == binom_int(a, a - b));
  }
}

TEST_CASE("binomial row sums are powers of two") {
  for (long a = 1; a <= 200; ++a) {
    Rational sum(0);
    for (long b = 0; b <= a; ++b) sum += binom_int(a, b);
    CHECK(sum == Rational::pow2(a));
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(5) == Rational(120));
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(20) == Rational::from_string("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("double factorial and its empty-product edge") {
  CHECK(double_factorial(7) == Rational(105));
  CHECK(double_factorial(10) == Rational(3840));
  CHECK(double_factorial(-1) == Rational(1));
  CHECK(double_factorial(0) == Rational(1));
  CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
  for (long k = 0; k <= 50; ++k)
    CHECK(double_factorial(2 * k + 1) * double_factorial(2 * k) == factorial(2 * k + 1));
}

TEST_CASE("bernoulli numbers") {
  CHECK(geofreq::bernoulli(0) == Rational(1));
  CHECK(geofreq::bernoulli(1) == Rational(-1, 2));
  CHECK(geofreq::bernoulli(2) == Rational(1, 6));
  CHECK(geofreq::bernoulli(3) == Rational(0));
  CHECK(geofreq::bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("binom_real on integer arguments matches binom_int") {
  CHECK(rel_error(binom_real(4.0, 2.0, 30), Rational(6)) < 1e-20);
  CHECK(rel_error(binom_real(200.0, 60.0, 30), binom_int(200, 60)) < 1e-25);
  for (long a : {1L, 2L, 17L, 100L, 999L, 2000L}) {
    for (long b : {0L, 1L, a / 3, a / 2, a - 1, a}) {
      if (b < 0 || b > a) continue;
      CHECK(rel_error(binom_real(static_cast<double>(a), static_cast<double>(b), 30),
                      binom_int(a, b)) < 1e-25);
    }
  }
}

TEST_CASE("binom_real holds up at high working precision") {
  for (int digits : {60, 150, 200}) {
    double tol = std::pow(10.0, -(digits - 5));
    CHECK(rel_error(binom_real(2000.0, 700.0, digits), binom_int(2000, 700)) < tol);
    CHECK(rel_error(binom_real(137.0, 68.0, digits), binom_int(137, 68)) < tol);
  }
}

TEST_CASE("binom_real at half-integer arguments") {
  // Gamma(2) / Gamma(3/2)^2 = 4/pi
  LogReal v = binom_real(1.0, 0.5, 30);
  Real expected = Real(4, bits_for_digits(30)) / Real::pi(bits_for_digits(30));
  CHECK(((v.linear() - expected) / expected).abs().to_double() < 1e-28);
}

TEST_CASE("binom_real rejects Gamma poles, naming the argument") {
  CHECK_THROWS_WITH(binom_real(-1.0, 0.5, 30), Catch::Matchers::ContainsSubstring("a+1"));
  CHECK_THROWS_WITH(binom_real(0.5, -1.0, 30), Catch::Matchers::ContainsSubstring("b+1"));
  CHECK_THROWS_WITH(binom_real(1.0, 3.0, 30), Catch::Matchers::ContainsSubstring("a-b+1"));
  CHECK_THROWS_AS(binom_real(0.5, -1.2, 30), std::domain_error);
}

TEST_CASE("log_gamma against mpfr lngamma oracle") {
  for (int digits : {30, 100}) {
    mpfr_prec_t prec = bits_for_digits(digits) + 64;
    for (double z : {0.5, 1.0, 3.25, 19.99, 20.25, 147.5, 5000.0}) {
      Real mine = geofreq::log_gamma(Real(z, prec), digits);
      Real oracle(prec);
      int sign = 0;
      mpfr_lgamma(oracle.raw(), &sign, Real(z, prec).raw(), MPFR_RNDN);
      REQUIRE(sign == 1);
      double err = (mine - oracle).abs().to_double();
      double scale = std::max(1.0, std::fabs(oracle.to_double()));
      CHECK(err / scale < std::pow(10.0, -(digits + 2)));
    }
  }
}

TEST_CASE("zeta known constants") {
  CHECK(rel_error(zeta_numeric(2, 30), "1.6449340668482264364724151666460252") < 2e-30);
  CHECK(rel_error(zeta_numeric(6, 30), "1.0173430619844491397145179297909205") < 2e-30);
}

TEST_CASE("zeta large s against two-term truncation") {
  Real v = zeta_numeric(100, 30).linear();
  Real expected = Real(1, 256) + Real(2, 256).pow_si(-100);
  CHECK((v - expected).abs().to_double() < 1e-40);
}

TEST_CASE("zeta against mpfr oracle across s and precision") {
  for (int digits : {15, 30, 60, 120}) {
    for (long s : {2L, 3L, 5L, 9L, 27L, 54L, 200L, 762L}) {
      Real mine = zeta_numeric(s, digits).linear();
      Real oracle(bits_for_digits(digits) + 32);
      mpfr_zeta_ui(oracle.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
      CHECK(((mine - oracle) / oracle).abs().to_double() < std::pow(10.0, -digits));
    }
  }
}

TEST_CASE("zeta monotone decreasing and above 1") {
  Real prev = zeta_numeric(2, 30).linear();
  for (long s = 3; s <= 50; ++s) {
    Real cur = zeta_numeric(s, 30).linear();
    CHECK(cur < prev);
    CHECK(cur > Real(1, 64));
    prev = cur;
  }
  CHECK_THROWS_AS(zeta_numeric(1, 30), std::domain_error);
}

TEST_CASE("log2_of_exact") {
  CHECK(rel_error(log2_of_exact(Rational(1024, 3), 30).log2_magnitude(),
                  "8.41503749927884381854626105605") < 1e-25);
  CHECK(log2_of_exact(Rational(1), 30).log2_magnitude().to_double() == 0.0);
  Rational huge = Rational::pow2(500);
  CHECK(log2_of_exact(huge, 30).log2_magnitude() == Real(500, 64));
  CHECK(log2_of_exact(Rational(-8), 30).sign() == -1);
  CHECK(log2_of_exact(Rational(-8), 30).log2_magnitude().to_double() == 3.0);
  CHECK_THROWS_AS(log2_of_exact(Rational(0), 30), std::domain_error);
}

TEST_CASE("log-scale round trip preserves relative accuracy at huge exponents") {
  for (int digits : {15, 30, 60}) {
    Rational x = Rational::pow2(999983) * Rational(355, 113);
    LogReal lg = log2_of_exact(x, digits);
    Real back = lg.linear();
    Real direct(x, geofreq::bits_for_digits(digits));
    double rel = ((back - direct) / direct).abs().to_double();
    CHECK(rel < std::pow(10.0, -(digits - 2)));
  }
}
