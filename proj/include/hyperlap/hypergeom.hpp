#pragma once

// Generalized hypergeometric series pFq and the classical closed-form
// summations of 2F1(1), 2F1(-1) and the well-poised 4F3(-1).

#include <string>
#include <vector>

#include "hyperlap/errors.hpp"

namespace hyperlap {

struct SeriesSpec {
  std::vector<Complex> numerator;    // alpha_1 .. alpha_p
  std::vector<Complex> denominator;  // beta_1 .. beta_q
  Complex argument;                  // z
};

enum class ConvergenceKind {
  AllZ,                   // p <= q
  UnitDisk,               // p = q + 1, |z| < 1
  UnitCircleAbsolute,     // p = q + 1, |z| = 1, Re(balance) > 0
  UnitCircleConditional,  // p = q + 1, |z| = 1, z != 1, -1 < Re(balance) <= 0
  Divergent,
  Terminating,            // some numerator parameter in {0, -1, -2, ...}
};

struct ConvergenceClass {
  ConvergenceKind kind;
  Complex balance;  // sum(denominator) - sum(numerator)
};

std::string to_string(ConvergenceKind kind);

/// Classifies convergence of the series. Throws PoleError when a
/// denominator parameter is a non-positive integer that the series reaches
/// before terminating.
ConvergenceClass classify(const SeriesSpec& spec);

inline constexpr double kSeriesTolerance = 1e-13;
inline constexpr double kAccelerationTolerance = 1e-11;
inline constexpr int kMaxSeriesTerms = 100000;
inline constexpr int kMaxLevinOrder = 30;

/// Sums the series. Terminating series are summed exactly; |z| < 1 and p <= q
/// by direct summation (stop once 3 consecutive terms are below tol relative
/// to the running sum); unit-circle cases by Levin u acceleration.
Complex sum_series(const SeriesSpec& spec, double tol = kSeriesTolerance);

/// Gauss: 2F1(a, b; d; 1) = G(d)G(d-a-b) / (G(d-a)G(d-b)), Re(d-a-b) > 0.
Complex gauss_sum_2f1_unit(Complex a, Complex b, Complex d);

/// Kummer: 2F1(a, b; 1+a-b; -1), Re(b) < 1.
Complex kummer_sum_2f1_neg1(Complex a, Complex b);

/// 4F3(a, 1+a/2, b, c; a/2, 1+a-b, 1+a-c; -1)
///   = G(1+a-b)G(1+a-c) / (G(1+a)G(1+a-b-c)),  Re(a-2b-2c) > -2.
Complex sum_4f3_neg1(Complex a, Complex b, Complex c);

/// The explicit series specs the three theorems sum, for cross-checking.
SeriesSpec gauss_spec(Complex a, Complex b, Complex d);
SeriesSpec kummer_spec(Complex a, Complex b);
SeriesSpec well_poised_4f3_spec(Complex a, Complex b, Complex c);

}  // namespace hyperlap
