#include <doctest.h>

#include <cmath>
#include <vector>

#include "hyperlap/quadrature.hpp"
#include "hyperlap/special.hpp"
#include "hyperlap/transforms.hpp"
#include "support.hpp"

using namespace hyperlap;
using test::rel_err;

namespace {

Complex quad(const Integrand& f, double decay, double freq = 0.0) {
  QuadratureOptions o;
  o.decay_rate = decay;
  o.max_frequency = freq;
  o.tol = 1e-12;
  return integrate_semi_infinite(f, o).value;
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("entries I-IV at terminating points") {
  CHECK(rel_err(entry_I(4.0, 1.0, 1.0, 1), 7.0 / 12.0) < 1e-13);
  CHECK(rel_err(entry_I(4.0, 1.0, 0.0, 1), 0.25) < 1e-14);
  CHECK(rel_err(entry_II(5.0, 1.0, 1.0, 1), 4.0 / 105.0) < 1e-13);
  CHECK(rel_err(entry_II_series(5.0, 1.0, 1.0, 1), 4.0 / 105.0) < 1e-13);
  CHECK(rel_err(entry_III(3.0, 1.0, 1.0, 0), 1.0 / 8.0) < 1e-13);
  CHECK(rel_err(entry_III_series(3.0, 1.0, 1.0, 0), 1.0 / 8.0) < 1e-13);
  CHECK(rel_err(entry_IV(4.0, 1.0, 2.0, 0), 7.0 / 24.0) < 1e-13);
}

TEST_CASE("Beta and Gauss-sum routes agree for non-integer powers") {
  test::Draw draw(21);
  for (int i = 0; i < 40; ++i) {
    const int n = draw.integer(1, 3);
    const Complex nu(draw.uniform(0.1, 2.0), draw.uniform(-0.5, 0.5));
    const Complex s = 2.0 * n * nu.real() + draw.uniform(0.5, 3.0);
    CHECK(rel_err(entry_II(s, 1.0, nu, n), entry_II_series(s, 1.0, nu, n)) < 1e-9);
    CHECK(rel_err(entry_III(s, 1.0, nu, n - 1), entry_III_series(s, 1.0, nu, n - 1)) < 1e-9);
  }
}

TEST_CASE("entry I is continuous across terminating exponents") {
  for (double nu0 : {1.0, 2.0}) {
    const Complex at = entry_I(6.0, 1.0, nu0, 1);
    CHECK(std::abs(entry_I(6.0, 1.0, nu0 + 1e-6, 1) - at) <= 1e-4);
    CHECK(std::abs(entry_I(6.0, 1.0, nu0 - 1e-6, 1) - at) <= 1e-4);
  }
}

TEST_CASE("reductions to the known Beta forms") {
  test::Draw draw(22);
  for (int i = 0; i < 50; ++i) {
    const Complex nu(draw.uniform(-0.4, 2.5), draw.uniform(-0.3, 0.3));
    const Complex g = draw.uniform(0.3, 2.0);
    const Complex s = nu.real() * g.real() + draw.uniform(0.2, 3.0);
    CHECK(rel_err(entry_II(s, g / 2.0, nu, 1), cosh_minus_one_beta(s, g, nu)) < 1e-12);
    CHECK(rel_err(cosh_minus_one_beta(s, g, nu), cosh_minus_one_beta_shifted(s, g, nu)) < 1e-12);
    const Complex nu3(draw.uniform(-0.9, 2.5), draw.uniform(-0.3, 0.3));
    const Complex s3 = nu3.real() * g.real() + draw.uniform(0.2, 3.0);
    CHECK(rel_err(entry_III(s3, g, nu3, 0), sinh_power_beta(s3, g, nu3)) < 1e-12);
    CHECK(rel_err(sinh_power_beta(s3, g, nu3), sinh_power_beta_shifted(s3, g, nu3)) < 1e-12);
  }
}

TEST_CASE("novel integrals at golden points") {
  CHECK(rel_err(novel_V(0.0, 1.0, 1.0), 1.0) < 1e-12);
  CHECK(rel_err(novel_V(0.0, 0.5, 2.0), kPi / 4.0) < 1e-12);
  CHECK(rel_err(novel_V(0.25, 0.5, 1.0), kPi / std::sqrt(2.0)) < 1e-12);
  CHECK(rel_err(novel_VI(0.0, 2.0), 1.0) < 1e-12);
  CHECK(rel_err(novel_VI(1.0, 3.0), 0.5) < 1e-12);
  CHECK(rel_err(novel_VII(0.0, 1.0, 2.0), 1.0) < 1e-12);
  CHECK(rel_err(novel_VII(1.0, 1.0, 2.0), kPi / (2.0 * std::sinh(kPi / 2.0))) < 1e-12);
  CHECK(rel_err(novel_VII(1.0, 1.0, 1.0), (kPi / 2.0) / std::cosh(kPi / 2.0)) < 1e-12);
}

TEST_CASE("derivation-only conditions are reported, not enforced") {
  const Conditions c = novel_V_conditions(0.0, 1.5, 1.0);
  bool saw = false;
  for (const auto& r : c)
    if (r.text == "Re(β) < 1") {
      saw = true;
      CHECK_FALSE(r.enforced);
      CHECK_FALSE(r.holds);
    }
  CHECK(saw);
  CHECK(rel_err(novel_V(0.0, 1.5, 1.0), kPi / 4.0) < 1e-12);
}

TEST_CASE("strict and relaxed checking") {
  CHECK_THROWS_AS(novel_V(0.0, 1.0, -1.0), DomainError);
  CHECK_THROWS_AS(entry_I(1.0, 1.0, 1.0, 1), DomainError);  // Re(s - 2mβν) = -1
  CHECK_NOTHROW(entry_I(1.0, 1.0, 1.0, 1, Check::Relaxed));
  try {
    novel_VII(0.0, -1.0, 1.0);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("Re(β) > 0") != std::string::npos);
  }
}

TEST_CASE("printed Beta-only form disagrees with the integral") {
  const Complex a = 1.0, b = 2.0, nu = 1.0;
  const Complex oracle = quad([](double x) { return Complex(std::cos(x) / std::cosh(2.0 * x)); }, 2.0, 1.0);
  const Complex with_prefactor = novel_VII(a, b, nu);
  const Complex beta_only = novel_VII_beta_only(a, b, nu);
  CHECK(rel_err(with_prefactor, oracle) < 1e-10);
  CHECK(rel_err(beta_only, oracle) > 10 * 1e-8);
  CHECK(rel_err(beta_only / with_prefactor, b / std::pow(2.0, nu - 2.0)) < 1e-12);
}

TEST_CASE("printed cosecant form for cosh(2αt)/cosh²(pt) misses a factor α/p") {
  const double alpha = 0.3, p = 1.2;
  const Complex oracle = quad(
      [=](double t) { return Complex(std::cosh(2.0 * alpha * t) / std::pow(std::cosh(p * t), 2)); },
      2.0 * (p - alpha));
  const Complex general = novel_V(alpha, 1.0, p);
  const double printed = (kPi / p) / std::sin(kPi * alpha / p);
  CHECK(rel_err(general, oracle) < 1e-10);
  CHECK(rel_err(general, kPi * alpha / (p * p * std::sin(kPi * alpha / p))) < 1e-12);
  CHECK(rel_err(printed, oracle) > 1.0);
}

TEST_CASE("derivative of ∫cos(ax)/cosh²x carries a minus sign") {
  const double a = 1.0;
  const Complex closed = cos_over_cosh2_derivative(a);
  const Complex minus_x_sin =
      quad([=](double x) { return Complex(-x * std::sin(a * x) / std::pow(std::cosh(x), 2)); }, 1.5, a);
  CHECK(rel_err(closed, minus_x_sin) < 1e-10);
  CHECK(rel_err(closed, -0.48645944886729) < 1e-12);
  // The unsigned integral ∫x sin(ax)/cosh²x is positive.
  CHECK(minus_x_sin.real() < 0.0);
  // Central difference of novel_VII in a.
  const double h = 1e-5;
  const Complex fd = (novel_VII(a + h, 1.0, 2.0) - novel_VII(a - h, 1.0, 2.0)) / (2 * h);
  CHECK(rel_err(fd, closed) < 1e-6);
  // The integral is even in a, so the derivative vanishes linearly at 0.
  CHECK(std::abs(cos_over_cosh2_derivative(1e-9)) < 1e-8);
}

TEST_CASE("Laplace transforms of spectral forms") {
  CHECK(rel_err(laplace_spectral(expand_power(TermKind::Sin, 1, 2.0), 1.0), 0.4) < 1e-15);
  CHECK(rel_err(integer_power_transform(TermKind::Cos, 1, 2.0, 1.0), 0.2) < 1e-15);
  CHECK(rel_err(integer_power_transform(TermKind::Sin, 3, 1.0, 2.0), 6.0 / 65.0) < 1e-14);
  CHECK(rel_err(laplace_spectral(expand_power(TermKind::Cosh, 2, 1.0), 3.0), 0.5 * (3.0 / 5.0 + 1.0 / 3.0)) < 1e-14);
  CHECK_THROWS_AS(laplace_spectral(expand_power(TermKind::Cosh, 2, 1.0), 1.0), DomainError);
  // sin^2 via complex frequency: damping bound includes 2|Im f|.
  CHECK_THROWS_AS(integer_power_transform(TermKind::Sin, 2, Complex(1.0, 1.0), 1.5), DomainError);
}

TEST_CASE("finite sums against closed hypergeometric and Pochhammer forms") {
  CHECK(rel_err(cos_even_power_sum(2.0, 1.0, 1), 3.0 / 8.0) < 1e-14);
  CHECK(rel_err(sin_even_power_pochhammer(1.0, 1.0, 1), 0.4) < 1e-14);
  CHECK(rel_err(sin_odd_power_pochhammer(2.0, 1.0, 1), 6.0 / 65.0) < 1e-14);
  CHECK(rel_err(cos_odd_power_2f1(1.0, 2.0, 0), 0.2) < 1e-14);
  test::Draw draw(23);
  for (int i = 0; i < 60; ++i) {
    const int m = draw.integer(1, 4);
    const Complex s(draw.uniform(0.1, 4.0), draw.uniform(-2.0, 2.0));
    const double f = draw.uniform(0.2, 2.5);
    const Complex sum = cos_even_power_sum(s.real(), f, m);
    const Complex hyp = cos_even_power_2f1(s.real(), f, m);
    CHECK(rel_err(hyp, sum) < 1e-10);
    CHECK(std::fabs(hyp.imag()) <= 1e-10);
    CHECK(rel_err(sin_even_power_pochhammer(s, f, m), sin_even_power_sum(s, f, m)) < 1e-10);
    CHECK(rel_err(sin_odd_power_pochhammer(s, f, m), sin_odd_power_sum(s, f, m)) < 1e-10);
    CHECK(rel_err(cos_odd_power_2f1(s, f, m), cos_odd_power_sum(s, f, m)) < 1e-10);
    CHECK(rel_err(cos_even_power_sum(s, f, m), integer_power_transform(TermKind::Cos, 2 * m, f, s)) < 1e-12);
  }
}

TEST_CASE("products of powers") {
  const std::vector<PowerFactor> sc{{TermKind::Sin, 1, 1.0}, {TermKind::Cos, 1, 1.0}};
  CHECK(rel_err(product_transform(sc, 1.0), 0.2) < 1e-15);
  const std::vector<PowerFactor> one{{TermKind::Sin, 2, 0.7}};
  CHECK(rel_err(product_transform(one, 1.3), integer_power_transform(TermKind::Sin, 2, 0.7, 1.3)) < 1e-14);
  const std::vector<PowerFactor> two{{TermKind::Sin, 2, 1.0}, {TermKind::Cos, 2, 2.0}};
  const Complex oracle = quad(
      [](double x) { return Complex(std::pow(std::sin(x), 2) * std::pow(std::cos(2 * x), 2) * std::exp(-3 * x)); },
      3.0, 6.0);
  CHECK(rel_err(product_transform(two, 3.0), oracle) < 1e-10);
  const std::vector<PowerFactor> bad{{TermKind::Sinh, 1, 1.0}};
  CHECK_THROWS_AS(product_transform(bad, 2.0), FamilyMismatch);
}

}
