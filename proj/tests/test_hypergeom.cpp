#include <doctest.h>

#include "hyperlap/hypergeom.hpp"
#include "hyperlap/special.hpp"
#include "support.hpp"

using namespace hyperlap;
using test::rel_err;

TEST_SUITE("hypergeom") {

TEST_CASE("classify") {
  CHECK(classify({{}, {}, 5.0}).kind == ConvergenceKind::AllZ);
  CHECK(classify({{1.0, 1.0}, {2.0}, 0.5}).kind == ConvergenceKind::UnitDisk);
  CHECK(classify({{-3.0, 1.5}, {2.0}, 7.0}).kind == ConvergenceKind::Terminating);
  const auto abs = classify({{0.3, 0.4}, {2.1}, 1.0});
  CHECK(abs.kind == ConvergenceKind::UnitCircleAbsolute);
  CHECK(rel_err(abs.balance, 1.4) < 1e-15);
  CHECK(classify({{0.5, 0.5}, {0.5}, -1.0}).kind == ConvergenceKind::UnitCircleConditional);
  CHECK(classify({{0.5, 0.5}, {0.5}, 1.0}).kind == ConvergenceKind::Divergent);
  CHECK(classify({{1.0, 2.0}, {0.5}, -1.0}).kind == ConvergenceKind::Divergent);
  CHECK(classify({{1.0}, {}, 2.0}).kind == ConvergenceKind::Divergent);
  CHECK_THROWS_AS(classify({{1.0}, {-2.0}, 0.5}), PoleError);
  // The series stops before reaching the bad denominator.
  CHECK(classify({{-1.0}, {-2.0}, 0.5}).kind == ConvergenceKind::Terminating);
}

TEST_CASE("elementary sums") {
  CHECK(rel_err(sum_series({{}, {}, Complex(1.5, -2.0)}), std::exp(Complex(1.5, -2.0))) < 1e-14);
  CHECK(rel_err(sum_series({{0.7}, {}, 0.3}), std::pow(0.7, -0.7)) < 1e-13);
  CHECK(rel_err(sum_series({{1.0, 1.0}, {2.0}, 0.5}), -std::log(0.5) / 0.5) < 1e-13);
  // Terminating: (1 + z)^3 = 1F0(-3;;-z).
  CHECK(sum_series({{-3.0}, {}, -2.0}) == Complex(27.0));
  // ln 2 = 2F1(1,1;2;-1), conditionally convergent on the circle.
  CHECK(rel_err(sum_series({{1.0, 1.0}, {2.0}, -1.0}), std::log(2.0)) < 1e-11);
}

TEST_CASE("divergent series throw") {
  CHECK_THROWS_AS(sum_series({{1.0}, {}, 2.0}), DivergentSeries);
  CHECK_THROWS_AS(sum_series({{0.5, 0.5}, {0.5}, 1.0}), DivergentSeries);
}

TEST_CASE("Gauss sum") {
  const Complex a(0.3), b(0.4), d(2.1);
  const Complex closed = gauss_sum_2f1_unit(a, b, d);
  CHECK(rel_err(closed, gamma(d) * gamma(d - a - b) / (gamma(d - a) * gamma(d - b))) < 1e-13);
  CHECK(rel_err(sum_series(gauss_spec(a, b, d)), closed) < 1e-9);
  // Terminating case: Chu-Vandermonde, 2F1(-2, b; d; 1) exactly.
  const Complex dv = 3.5, bv = 1.25;
  CHECK(rel_err(sum_series(gauss_spec(-2.0, bv, dv)), gauss_sum_2f1_unit(-2.0, bv, dv)) < 1e-14);
  CHECK_THROWS_AS(gauss_sum_2f1_unit(1.0, 1.0, 1.5), DomainError);
}

TEST_CASE("Kummer sum") {
  const Complex a(1.3), b(0.2);
  CHECK(rel_err(sum_series(kummer_spec(a, b)), kummer_sum_2f1_neg1(a, b)) < 1e-9);
  // 2F1(a, b; 1+a-b; -1) at b = 0 is 1.
  CHECK(rel_err(kummer_sum_2f1_neg1(Complex(0.7, 0.2), 0.0), 1.0) < 1e-14);
  CHECK_THROWS_AS(kummer_sum_2f1_neg1(0.5, 1.5), DomainError);
}

TEST_CASE("well-poised 4F3 at -1") {
  const Complex a(0.9), b(0.3), c(0.2);
  CHECK(rel_err(sum_series(well_poised_4f3_spec(a, b, c)), sum_4f3_neg1(a, b, c)) < 1e-9);
  CHECK_THROWS_AS(sum_4f3_neg1(0.5, 1.5, 1.5), DomainError);
}

TEST_CASE("tolerance is respected") {
  const SeriesSpec s{{0.5, 1.0}, {1.5}, 0.9};
  const Complex tight = sum_series(s, 1e-15);
  CHECK(rel_err(sum_series(s, 1e-8), tight) < 1e-7);
  CHECK(rel_err(tight, std::atanh(std::sqrt(0.9)) / std::sqrt(0.9)) < 1e-13);
}

}
