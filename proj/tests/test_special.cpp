#include <doctest.h>

#include "hyperlap/special.hpp"
#include "support.hpp"

using namespace hyperlap;
using test::rel_err;

TEST_SUITE("special") {

TEST_CASE("gamma at known points") {
  CHECK(rel_err(hyperlap::gamma(5.0), 24.0) < 1e-14);
  CHECK(rel_err(hyperlap::gamma(0.5), std::sqrt(kPi)) < 1e-14);
  CHECK(rel_err(hyperlap::gamma(-0.5), -2.0 * std::sqrt(kPi)) < 1e-14);
  CHECK(rel_err(hyperlap::gamma(Complex(1, 1)), Complex(0.49801566811835604, -0.15494982830181069)) < 1e-13);
  CHECK(rel_err(hyperlap::gamma(171.5), std::exp(std::lgamma(171.5))) < 1e-11);
}

TEST_CASE("gamma poles throw") {
  CHECK_THROWS_AS(hyperlap::gamma(0.0), PoleError);
  CHECK_THROWS_AS(hyperlap::gamma(-3.0), PoleError);
  CHECK_THROWS_AS(hyperlap::gamma(Complex(-2.0 + 5e-13, 0.0)), PoleError);
  CHECK_NOTHROW(hyperlap::gamma(Complex(-2.0, 1e-6)));
  try {
    hyperlap::gamma(-4.0);
  } catch (const PoleError& e) {
    CHECK(e.location() == Complex(-4.0));
  }
}

TEST_CASE("log_gamma is the principal branch") {
  test::Draw draw(11);
  for (int i = 0; i < 500; ++i) {
    const Complex z = draw.complex(-8.0, 12.0, 6.0);
    if (is_nonpositive_integer(z, 1e-3)) continue;
    const Complex lg = log_gamma(z);
    CHECK(lg.imag() > -kPi);
    CHECK(lg.imag() <= kPi);
    CHECK(rel_err(std::exp(lg), gamma(z)) < 1e-11);
  }
  CHECK(std::abs(log_gamma(10.0) - std::log(362880.0)) < 1e-13);
}

TEST_CASE("recurrence and reflection") {
  test::Draw draw(12);
  for (int i = 0; i < 1000; ++i) {
    const Complex z = draw.complex(-10.0, 10.0, 5.0);
    if (is_nonpositive_integer(z, 1e-3) || is_nonpositive_integer(1.0 - z, 1e-3)) continue;
    CHECK(rel_err(gamma(z + 1.0), z * gamma(z)) < 1e-11);
    CHECK(rel_err(gamma(z) * gamma(1.0 - z), kPi / std::sin(kPi * z)) < 1e-10);
  }
}

TEST_CASE("sin_pi reduces exactly") {
  CHECK(sin_pi(1e6).real() == 0.0);
  CHECK(std::abs(sin_pi(0.5) - 1.0) < 1e-16);
  CHECK(std::abs(sin_pi(-2.5) + 1.0) < 1e-15);
}

TEST_CASE("beta") {
  CHECK(rel_err(beta(2.0, 3.0), 1.0 / 12.0) < 1e-14);
  CHECK(rel_err(beta(0.5, 0.5), kPi) < 1e-14);
  const Complex a(0.3, 0.7), b(2.1, -0.4);
  CHECK(rel_err(beta(a, b), beta(b, a)) < 1e-14);
  CHECK(rel_err(beta(a, b), gamma(a) * gamma(b) / gamma(a + b)) < 1e-12);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(1.0, 5.0) == 120.0);
  CHECK(pochhammer(3.5, 0.0) == 1.0);
  // Integer upsilon uses the finite product, also at Gamma poles.
  CHECK(pochhammer(-3.0, 2.0) == 6.0);
  CHECK(pochhammer(-3.0, 5.0) == 0.0);
  CHECK(rel_err(pochhammer(0.5, 2.5), hyperlap::gamma(3.0) / hyperlap::gamma(0.5)) < 1e-14);
  // 1/Gamma(lambda) vanishes at a pole of lambda alone.
  CHECK(pochhammer(-2.0, 0.5) == 0.0);
  CHECK_THROWS_AS(pochhammer(0.5, -2.5), PoleError);
}

TEST_CASE("gamma_ratio") {
  CHECK(rel_err(gamma_ratio({5.0, 0.5}, {3.0}), 24.0 * std::sqrt(kPi) / 2.0) < 1e-14);
  CHECK(gamma_ratio({2.0}, {-1.0}) == 0.0);
  CHECK_THROWS_AS(gamma_ratio({-1.0}, {2.0}), PoleError);
  // Large arguments that overflow Gamma individually.
  CHECK(rel_err(gamma_ratio({200.5}, {200.0}), std::exp(std::lgamma(200.5) - std::lgamma(200.0))) < 1e-12);
}

TEST_CASE("binomial") {
  CHECK(binomial(10, 3) == 120.0);
  CHECK(binomial(7, 0) == 1.0);
  CHECK(binomial(7, 8) == 0.0);
  CHECK(binomial(60, 30) == 118264581564861424.0);
}

TEST_CASE("integer tests") {
  CHECK(is_nonpositive_integer(0.0));
  CHECK(is_nonpositive_integer(-7.0));
  CHECK_FALSE(is_nonpositive_integer(1.0));
  CHECK_FALSE(is_nonpositive_integer(Complex(-1.0, 1e-6)));
  CHECK(is_nonnegative_integer(3.0));
  CHECK_FALSE(is_nonnegative_integer(-1.0));
  CHECK_FALSE(is_nonnegative_integer(2.5));
}

}
