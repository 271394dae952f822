#pragma once

// Closed-form Laplace transforms and definite integrals of powers of
// hyperbolic and circular functions.
//
// Every transform checks its convergence conditions first. Conditions that
// only come from the summation route used to derive a formula (not from the
// integral itself) are reported but never enforced. Check::Relaxed skips the
// checks entirely and evaluates the formula anyway.

#include <span>
#include <string>
#include <vector>

#include "hyperlap/errors.hpp"
#include "hyperlap/spectral.hpp"

namespace hyperlap {

enum class Check { Strict, Relaxed };

struct ConditionResult {
  std::string text;
  bool enforced = true;
  bool holds = true;
};
using Conditions = std::vector<ConditionResult>;

/// Throws DomainError naming every enforced condition that fails.
void require(const Conditions& conditions, const std::string& what);

/// Laplace transform of a spectral form whose term frequencies are scaled
/// by `scale` (a complex scale lets circular forms take complex frequencies).
/// Damping bounds: Re s > |Im f| for sin/cos, Re s > |Re f| for sinh/cosh,
/// Re s > 0 for constants.
Complex laplace_spectral(const SpectralForm& form, Complex s, Complex scale = 1.0);

// ∫ e^{-sx} [sum_{i<m} C(2m,i) cosh((2m-2i)βx) + C(2m,m)/2]^ν dx
Conditions entry_I_conditions(Complex s, Complex beta, Complex nu, int m);
Complex entry_I(Complex s, Complex beta, Complex nu, int m, Check check = Check::Strict);

// ∫ e^{-sx} [sum_{j<n} (-1)^j C(2n,j) cosh((2n-2j)γx) + (-1)^n C(2n,n)/2]^ν dx
Conditions entry_II_conditions(Complex s, Complex gamma, Complex nu, int n);
Complex entry_II(Complex s, Complex gamma, Complex nu, int n, Check check = Check::Strict);
/// The same integral through Gauss's 2F1(1) summation of the series form.
Complex entry_II_series(Complex s, Complex gamma, Complex nu, int n);

// ∫ e^{-sx} [sum_{k<=p} (-1)^k C(2p+1,k) sinh((2p+1-2k)λx)]^ν dx
Conditions entry_III_conditions(Complex s, Complex lambda, Complex nu, int p);
Complex entry_III(Complex s, Complex lambda, Complex nu, int p, Check check = Check::Strict);
Complex entry_III_series(Complex s, Complex lambda, Complex nu, int p);

// ∫ e^{-sx} [sum_{l<=q} C(2q+1,l) cosh((2q+1-2l)μx)]^ν dx
Conditions entry_IV_conditions(Complex s, Complex mu, Complex nu, int q);
Complex entry_IV(Complex s, Complex mu, Complex nu, int q, Check check = Check::Strict);

// ∫ e^{-sx} [cosh(γx) - 1]^ν dx in its two Beta forms.
Conditions cosh_minus_one_conditions(Complex s, Complex gamma, Complex nu);
Complex cosh_minus_one_beta(Complex s, Complex gamma, Complex nu, Check check = Check::Strict);
Complex cosh_minus_one_beta_shifted(Complex s, Complex gamma, Complex nu, Check check = Check::Strict);

// ∫ e^{-sx} sinh^ν(λx) dx in its two Beta forms.
Conditions sinh_power_conditions(Complex s, Complex lambda, Complex nu);
Complex sinh_power_beta(Complex s, Complex lambda, Complex nu, Check check = Check::Strict);
Complex sinh_power_beta_shifted(Complex s, Complex lambda, Complex nu, Check check = Check::Strict);

// ∫_0^∞ cosh(2αt) / cosh^{2β}(pt) dt = 4^{β-1} B(β+α/p, β-α/p) / p
Conditions novel_V_conditions(Complex alpha, Complex beta, Complex p);
Complex novel_V(Complex alpha, Complex beta, Complex p, Check check = Check::Strict);

// ∫_0^∞ sinh^α(x) / cosh^β(x) dx = B((1+α)/2, (β-α)/2) / 2
Conditions novel_VI_conditions(Complex alpha, Complex beta);
Complex novel_VI(Complex alpha, Complex beta, Check check = Check::Strict);

// ∫_0^∞ cos(ax) / cosh^ν(βx) dx = 2^{ν-2} Γ(ν/2 + ia/2β) Γ(ν/2 - ia/2β) / (β Γ(ν))
Conditions novel_VII_conditions(Complex a, Complex beta, Complex nu);
Complex novel_VII(Complex a, Complex beta, Complex nu, Check check = Check::Strict);
/// B(ν/2 + ia/2β, ν/2 - ia/2β) alone, without the 2^{ν-2}/β factor. Kept
/// only to show that it does not equal the integral.
Complex novel_VII_beta_only(Complex a, Complex beta, Complex nu);

/// (2π sinh(πa/2) - aπ² cosh(πa/2)) / (4 sinh²(πa/2)), the a-derivative of
/// ∫ cos(ax)/cosh²x dx.
Complex cos_over_cosh2_derivative(Complex a);

/// Laplace transform of kind^exponent(frequency x); a complex frequency is
/// allowed for sin/cos.
Conditions integer_power_conditions(TermKind kind, int exponent, Complex frequency, Complex s);
Complex integer_power_transform(TermKind kind, int exponent, Complex frequency, Complex s,
                                Check check = Check::Strict);

// Explicit finite sums and closed hypergeometric/Pochhammer forms for the
// Laplace transforms of cos^{2m}, sin^{2n}, sin^{2p+1}, cos^{2q+1}.
Complex cos_even_power_sum(Complex s, Complex beta, int m);
Complex cos_even_power_2f1(Complex s, Complex beta, int m);
Complex sin_even_power_sum(Complex s, Complex gamma, int n);
Complex sin_even_power_pochhammer(Complex s, Complex gamma, int n);
Complex sin_odd_power_sum(Complex s, Complex lambda, int p);
Complex sin_odd_power_pochhammer(Complex s, Complex lambda, int p);
Complex cos_odd_power_sum(Complex s, Complex mu, int q);
Complex cos_odd_power_2f1(Complex s, Complex mu, int q);

struct PowerFactor {
  TermKind kind;  // Sin or Cos
  int exponent;   // >= 0; a zero exponent contributes the factor 1
  double frequency;
};

/// Laplace transform of a product of powers of sines and cosines: expand,
/// multiply out to a sum, transform termwise. Throws FamilyMismatch for
/// hyperbolic factors.
Complex product_transform(std::span<const PowerFactor> factors, Complex s);
SpectralForm product_form(std::span<const PowerFactor> factors);

}  // namespace hyperlap
