#pragma once

// Adaptive Gauss-Kronrod quadrature of exponentially damped integrands
// over (0, inf).

#include <cstddef>
#include <functional>
#include <optional>

#include "hyperlap/errors.hpp"

namespace hyperlap {

struct IntegralResult {
  Complex value;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double decay_rate = 1.0;  // |f(x)| <= C exp(-decay_rate x) for large x
  double tol = 1e-10;
  double max_frequency = 0.0;                // largest oscillation frequency of f
  std::optional<double> endpoint_exponent;   // f(x) ~ x^sigma as x -> 0, sigma > -1
  std::size_t max_evaluations = 1'000'000;
  double magnitude_floor = 1e-6;  // error target is tol * max(|value|, floor)
  bool throw_on_failure = true;
};

using Integrand = std::function<Complex(double)>;

/// Integrates f over (0, T] with T = (ln(1/tol) + 40) / decay_rate. The range
/// is cut into panels no wider than min(1, pi / (2 max_frequency)) and the
/// intervals are refined globally, largest error first, with a 7/15-point
/// Gauss-Kronrod pair. With an endpoint exponent the first panel is mapped by
/// x = h u^k, k = 2 / (sigma + 1).
///
/// Throws DomainError if decay_rate <= 0 and NoConvergence when the
/// evaluation budget runs out (unless throw_on_failure is false, in which
/// case the best estimate is returned with converged = false).
IntegralResult integrate_semi_infinite(const Integrand& f, const QuadratureOptions& options);

}  // namespace hyperlap
