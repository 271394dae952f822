#pragma once

// Complex Gamma, Beta and Pochhammer primitives.
//
// All functions are pure. Poles are the points of {0, -1, -2, ...}; an
// argument within kPoleTolerance of one of them is treated as the pole.

#include <initializer_list>
#include <span>

#include "hyperlap/errors.hpp"

namespace hyperlap {

inline constexpr double kPoleTolerance = 1e-12;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// True when z lies within kPoleTolerance of a non-positive integer.
bool is_nonpositive_integer(Complex z, double tol = kPoleTolerance);

/// True when z is (to within tol) a non-negative integer with zero imaginary part.
bool is_nonnegative_integer(Complex z, double tol = 0.0);

/// sin(pi z) with exact argument reduction of the real part.
Complex sin_pi(Complex z);

/// Gamma function. Lanczos (g = 7, 9 terms) for Re(z) >= 1/2 and the
/// reflection formula Gamma(z)Gamma(1-z) = pi/sin(pi z) below that.
Complex gamma(Complex z);

/// Principal-branch logarithm of Gamma(z) (imaginary part in (-pi, pi]).
/// exp(log_gamma(z)) == gamma(z) wherever the latter is representable.
Complex log_gamma(Complex z);

/// Gamma(a)Gamma(b)/Gamma(a+b), evaluated through log_gamma.
Complex beta(Complex a, Complex b);

/// Pochhammer symbol (lambda)_upsilon = Gamma(lambda+upsilon)/Gamma(lambda).
///
/// A non-negative integer upsilon always uses the finite product
/// lambda(lambda+1)...(lambda+n-1), which stays valid when lambda is a pole.
/// For other upsilon the Gamma ratio is used: a pole at lambda+upsilon throws,
/// a pole at lambda alone gives 0.
Complex pochhammer(Complex lambda, Complex upsilon);

/// prod Gamma(numerator) / prod Gamma(denominator) through log_gamma.
/// A pole among the denominator arguments yields exactly zero (1/Gamma
/// vanishes there); a pole among the numerator arguments throws PoleError.
Complex gamma_ratio(std::span<const Complex> numerator, std::span<const Complex> denominator,
                    const char* context = "gamma_ratio");

inline Complex gamma_ratio(std::initializer_list<Complex> numerator,
                           std::initializer_list<Complex> denominator,
                           const char* context = "gamma_ratio") {
  return gamma_ratio(std::span<const Complex>(numerator.begin(), numerator.size()),
                     std::span<const Complex>(denominator.begin(), denominator.size()), context);
}

/// Binomial coefficient C(n, k) as a double; exact while C(n, k) < 2^53.
double binomial(int n, int k);

}  // namespace hyperlap
