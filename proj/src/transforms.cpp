#include "hyperlap/transforms.hpp"

#include <cmath>
#include <sstream>

#include "hyperlap/hypergeom.hpp"
#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

constexpr Complex kI{0.0, 1.0};

ConditionResult cond(std::string text, bool holds, bool enforced = true) {
  return {std::move(text), enforced, holds};
}

ConditionResult not_pole(std::string expr, Complex value) {
  return cond(expr + " ∉ {0, -1, -2, ...}", !is_nonpositive_integer(value));
}

// base^e; real exponents go through std::pow so that exact powers stay exact.
Complex pow_real_base(double base, Complex e) {
  if (e.imag() == 0.0) return std::pow(base, e.real());
  return std::exp(e * std::log(base));
}

Complex pow2(Complex e) { return pow_real_base(2.0, e); }

void check_or_skip(const Conditions& c, Check check, const char* what) {
  if (check == Check::Strict) require(c, what);
}

Complex hyp2f1(Complex a, Complex b, Complex d, Complex z) {
  return sum_series(SeriesSpec{{a, b}, {d}, z});
}

}  // namespace

void require(const Conditions& conditions, const std::string& what) {
  std::string failed;
  for (const auto& c : conditions) {
    if (c.enforced && !c.holds) {
      if (!failed.empty()) failed += "; ";
      failed += c.text;
    }
  }
  if (!failed.empty()) throw DomainError(what + ": condition violated: " + failed);
}

Complex laplace_spectral(const SpectralForm& form, Complex s, Complex scale) {
  Complex sum = 0.0;
  for (const auto& t : form.terms()) {
    const Complex f = t.frequency * scale;
    double bound = 0.0;
    std::string rule;
    switch (t.kind) {
      case TermKind::Sin:
      case TermKind::Cos:
        bound = std::fabs(f.imag());
        rule = "Re(s) > |Im(f)|";
        break;
      case TermKind::Sinh:
      case TermKind::Cosh:
        bound = std::fabs(f.real());
        rule = "Re(s) > |Re(f)|";
        break;
      case TermKind::Const:
        rule = "Re(s) > 0";
        break;
    }
    if (!(s.real() > bound)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "laplace_spectral: damping bound violated for " << to_string(t.kind) << " term with f = " << f
          << ": " << rule << " requires Re(s) > " << bound << ", got Re(s) = " << s.real();
      throw DomainError(msg.str());
    }
    Complex value;
    switch (t.kind) {
      case TermKind::Sin: value = f / (f * f + s * s); break;
      case TermKind::Cos: value = s / (f * f + s * s); break;
      case TermKind::Sinh: value = f / (s * s - f * f); break;
      case TermKind::Cosh: value = s / (s * s - f * f); break;
      case TermKind::Const: value = 1.0 / s; break;
    }
    sum += t.coefficient * value;
  }
  return sum;
}

// --- arbitrary powers of finite hyperbolic series -------------------------

Conditions entry_I_conditions(Complex s, Complex beta, Complex nu, int m) {
  const Complex b1 = s / (2.0 * beta) - double(m) * nu + 1.0;
  return {cond("m >= 1", m >= 1),
          cond("Re(mν) > -1", (double(m) * nu).real() > -1.0),
          cond("Re(s - 2mβν) > 0", (s - 2.0 * double(m) * beta * nu).real() > 0.0),
          cond("Re(β) > 0", beta.real() > 0.0),
          not_pole("s/(2β) - mν + 1", b1)};
}

Complex entry_I(Complex s, Complex beta, Complex nu, int m, Check check) {
  check_or_skip(entry_I_conditions(s, beta, nu, m), check, "entry-I");
  const Complex mn = double(m) * nu;
  const Complex b = s / (2.0 * beta) - mn;
  return hyp2f1(-2.0 * mn, b, b + 1.0, -1.0) / (pow2(nu) * (s - 2.0 * mn * beta));
}

Conditions entry_II_conditions(Complex s, Complex gamma, Complex nu, int n) {
  const Complex b1 = s / (2.0 * gamma) - double(n) * nu + 1.0;
  return {cond("n >= 1", n >= 1),
          cond("Re(2nν) > -1", (2.0 * double(n) * nu).real() > -1.0),
          cond("Re(s - 2nγν) > 0", (s - 2.0 * double(n) * gamma * nu).real() > 0.0),
          cond("Re(γ) > 0", gamma.real() > 0.0),
          not_pole("s/(2γ) - nν + 1", b1)};
}

Complex entry_II(Complex s, Complex gamma, Complex nu, int n, Check check) {
  check_or_skip(entry_II_conditions(s, gamma, nu, n), check, "entry-II");
  // 2^{1-ν} nν B(x, 2nν) / (s + 2nνγ) with nν Γ(2nν) = Γ(1 + 2nν) / 2, which
  // stays finite at ν = 0.
  const Complex k = 2.0 * double(n) * nu;
  const Complex x = s / (2.0 * gamma) - double(n) * nu;
  return gamma_ratio({x, 1.0 + k}, {x + k}, "entry-II") / (pow2(nu) * (s + k * gamma));
}

Complex entry_II_series(Complex s, Complex gamma, Complex nu, int n) {
  const Complex k = 2.0 * double(n) * nu;
  const Complex x = s / (2.0 * gamma) - double(n) * nu;
  return gauss_sum_2f1_unit(-k, x, x + 1.0) / (pow2(nu) * (s - k * gamma));
}

Conditions entry_III_conditions(Complex s, Complex lambda, Complex nu, int p) {
  const Complex k = double(2 * p + 1) * nu;
  const Complex b1 = s / (2.0 * lambda) - double(p) * nu - nu / 2.0 + 1.0;
  return {cond("p >= 0", p >= 0),
          cond("Re(2pν + ν) > -1", k.real() > -1.0),
          cond("Re(s - 2pλν - λν) > 0", (s - k * lambda).real() > 0.0),
          cond("Re(λ) > 0", lambda.real() > 0.0),
          not_pole("s/(2λ) - pν - ν/2 + 1", b1)};
}

Complex entry_III(Complex s, Complex lambda, Complex nu, int p, Check check) {
  check_or_skip(entry_III_conditions(s, lambda, nu, p), check, "entry-III");
  const Complex k = double(2 * p + 1) * nu;
  const Complex x = s / (2.0 * lambda) - k / 2.0;
  return gamma_ratio({x, 1.0 + k}, {x + k}, "entry-III") / (pow2(nu) * (s + k * lambda));
}

Complex entry_III_series(Complex s, Complex lambda, Complex nu, int p) {
  const Complex k = double(2 * p + 1) * nu;
  const Complex x = s / (2.0 * lambda) - k / 2.0;
  return gauss_sum_2f1_unit(-k, x, x + 1.0) / (pow2(nu) * (s - k * lambda));
}

Conditions entry_IV_conditions(Complex s, Complex mu, Complex nu, int q) {
  const Complex k = double(2 * q + 1) * nu;
  const Complex b1 = s / (2.0 * mu) - double(q) * nu - nu / 2.0 + 1.0;
  return {cond("q >= 0", q >= 0),
          cond("Re(2qν + ν) > -2", k.real() > -2.0),
          cond("Re(s - 2qμν - μν) > 0", (s - k * mu).real() > 0.0),
          cond("Re(μ) > 0", mu.real() > 0.0),
          not_pole("s/(2μ) - qν - ν/2 + 1", b1)};
}

Complex entry_IV(Complex s, Complex mu, Complex nu, int q, Check check) {
  check_or_skip(entry_IV_conditions(s, mu, nu, q), check, "entry-IV");
  const Complex k = double(2 * q + 1) * nu;
  const Complex b = s / (2.0 * mu) - k / 2.0;
  return hyp2f1(-k, b, b + 1.0, -1.0) / (pow2(nu) * (s - k * mu));
}

Conditions cosh_minus_one_conditions(Complex s, Complex gamma, Complex nu) {
  return {cond("Re(γ) > 0", gamma.real() > 0.0),
          cond("Re(ν) > -1/2", nu.real() > -0.5),
          cond("Re(s) > Re(γν)", s.real() > (gamma * nu).real()),
          not_pole("s/γ - ν + 1", s / gamma - nu + 1.0)};
}

Complex cosh_minus_one_beta(Complex s, Complex gamma, Complex nu, Check check) {
  check_or_skip(cosh_minus_one_conditions(s, gamma, nu), check, "cosh-minus-one");
  const Complex x = s / gamma - nu;
  return gamma_ratio({x, 1.0 + 2.0 * nu}, {x + 2.0 * nu}, "cosh-minus-one") / (pow2(nu) * (s + nu * gamma));
}

Complex cosh_minus_one_beta_shifted(Complex s, Complex gamma, Complex nu, Check check) {
  check_or_skip(cosh_minus_one_conditions(s, gamma, nu), check, "cosh-minus-one");
  return beta(s / gamma - nu, 2.0 * nu + 1.0) / (pow2(nu) * gamma);
}

Conditions sinh_power_conditions(Complex s, Complex lambda, Complex nu) {
  return {cond("Re(λ) > 0", lambda.real() > 0.0),
          cond("Re(ν) > -1", nu.real() > -1.0),
          cond("Re(s) > Re(λν)", s.real() > (lambda * nu).real()),
          not_pole("s/(2λ) - ν/2 + 1", s / (2.0 * lambda) - nu / 2.0 + 1.0)};
}

Complex sinh_power_beta(Complex s, Complex lambda, Complex nu, Check check) {
  check_or_skip(sinh_power_conditions(s, lambda, nu), check, "sinh-power");
  const Complex x = s / (2.0 * lambda) - nu / 2.0;
  return gamma_ratio({x, 1.0 + nu}, {x + nu}, "sinh-power") / (pow2(nu) * (s + lambda * nu));
}

Complex sinh_power_beta_shifted(Complex s, Complex lambda, Complex nu, Check check) {
  check_or_skip(sinh_power_conditions(s, lambda, nu), check, "sinh-power");
  return beta(s / (2.0 * lambda) - nu / 2.0, 1.0 + nu) / (pow2(1.0 + nu) * lambda);
}

// --- quotients of hyperbolic functions ------------------------------------

Conditions novel_V_conditions(Complex alpha, Complex beta, Complex p) {
  const Complex r = alpha / p;
  return {cond("Re(β) < 1", beta.real() < 1.0, false),
          cond("Re(p) > 0", p.real() > 0.0),
          cond("Re(β + α/p) > 0", (beta + r).real() > 0.0),
          cond("Re(β - α/p) > 0", (beta - r).real() > 0.0),
          not_pole("β", beta),
          not_pole("β + α/p + 1", beta + r + 1.0),
          not_pole("β - α/p + 1", beta - r + 1.0)};
}

Complex novel_V(Complex alpha, Complex beta, Complex p, Check check) {
  check_or_skip(novel_V_conditions(alpha, beta, p), check, "novel-V");
  const Complex r = alpha / p;
  return pow_real_base(4.0, beta - 1.0) / p * gamma_ratio({beta + r, beta - r}, {2.0 * beta}, "novel-V");
}

Conditions novel_VI_conditions(Complex alpha, Complex beta) {
  const Complex d = alpha - beta;
  return {cond("Re(α) > -1", alpha.real() > -1.0),
          cond("Re(α - β) > -2", d.real() > -2.0, false),
          cond("Re(α - β) < 0", d.real() < 0.0),
          not_pole("(β + α + 2)/2", (beta + alpha + 2.0) / 2.0),
          not_pole("(β - α + 2)/2", (beta - alpha + 2.0) / 2.0)};
}

Complex novel_VI(Complex alpha, Complex beta, Check check) {
  check_or_skip(novel_VI_conditions(alpha, beta), check, "novel-VI");
  return 0.5 * gamma_ratio({(1.0 + alpha) / 2.0, (beta - alpha) / 2.0}, {(1.0 + beta) / 2.0}, "novel-VI");
}

Conditions novel_VII_conditions(Complex a, Complex beta, Complex nu) {
  const Complex w = kI * a / (2.0 * beta);
  return {cond("Re(β) > 0", beta.real() > 0.0),
          cond("Re(ν) < 2", nu.real() < 2.0, false),
          cond("Re(νβ + ia) > 0", (nu * beta + kI * a).real() > 0.0),
          cond("Re(νβ - ia) > 0", (nu * beta - kI * a).real() > 0.0),
          not_pole("ν/2", nu / 2.0),
          not_pole("ν/2 + ia/(2β) + 1", nu / 2.0 + w + 1.0),
          not_pole("ν/2 - ia/(2β) + 1", nu / 2.0 - w + 1.0)};
}

Complex novel_VII(Complex a, Complex beta, Complex nu, Check check) {
  check_or_skip(novel_VII_conditions(a, beta, nu), check, "novel-VII");
  const Complex w = kI * a / (2.0 * beta);
  return pow2(nu - 2.0) / beta * gamma_ratio({nu / 2.0 + w, nu / 2.0 - w}, {nu}, "novel-VII");
}

Complex novel_VII_beta_only(Complex a, Complex beta_, Complex nu) {
  const Complex w = kI * a / (2.0 * beta_);
  return beta(nu / 2.0 + w, nu / 2.0 - w);
}

Complex cos_over_cosh2_derivative(Complex a) {
  const Complex u = a * kPi / 2.0;
  if (std::abs(u) < 0.5) {
    // sinh u - u cosh u = -sum_{k>=1} 2k u^{2k+1} / (2k+1)!, then divide by sinh^2 u.
    Complex term = u;  // u^{2k+1}/(2k+1)! at k = 0
    Complex diff = 0.0;
    for (int k = 1; k < 30; ++k) {
      term *= u * u / double((2 * k) * (2 * k + 1));
      diff -= double(2 * k) * term;
      if (std::abs(term) < 1e-18 * std::abs(diff)) break;
    }
    const Complex sh = std::sinh(u);
    return 2.0 * kPi * diff / (4.0 * sh * sh);
  }
  const Complex sh = std::sinh(u);
  const Complex ch = std::cosh(u);
  return (2.0 * kPi - a * kPi * kPi * (ch / sh)) / (4.0 * sh);
}

// --- integer powers of sine and cosine ------------------------------------

Conditions integer_power_conditions(TermKind kind, int exponent, Complex frequency, Complex s) {
  Conditions out{cond("exponent >= 1", exponent >= 1)};
  if (kind == TermKind::Sin || kind == TermKind::Cos)
    out.push_back(cond("Re(s) > exponent·|Im(frequency)|", s.real() > exponent * std::fabs(frequency.imag())));
  else if (kind == TermKind::Sinh || kind == TermKind::Cosh)
    out.push_back(cond("Re(s) > exponent·|Re(frequency)|", s.real() > exponent * std::fabs(frequency.real())));
  else
    out.push_back(cond("kind is sin, cos, sinh or cosh", false));
  return out;
}

Complex integer_power_transform(TermKind kind, int exponent, Complex frequency, Complex s, Check check) {
  check_or_skip(integer_power_conditions(kind, exponent, frequency, s), check, "integer_power_transform");
  // Expand at unit frequency, then scale every term's frequency by the
  // (possibly complex) frequency.
  return laplace_spectral(expand_power(kind, exponent, 1.0), s, frequency);
}

Complex cos_even_power_sum(Complex s, Complex beta, int m) {
  Complex sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const Complex f = double(2 * m - 2 * i) * beta;
    sum += binomial(2 * m, i) * s / (f * f + s * s);
  }
  return sum / std::ldexp(1.0, 2 * m - 1) + binomial(2 * m, m) / (std::ldexp(1.0, 2 * m) * s);
}

Complex cos_even_power_2f1(Complex s, Complex beta, int m) {
  const Complex b = (-kI * s - 2.0 * double(m) * beta) / (2.0 * beta);
  return hyp2f1(-2.0 * m, b, b + 1.0, -1.0) / (std::ldexp(1.0, 2 * m) * (s - kI * 2.0 * double(m) * beta));
}

Complex sin_even_power_sum(Complex s, Complex gamma, int n) {
  Complex sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const Complex f = double(2 * n - 2 * j) * gamma;
    sum += (j % 2 ? -1.0 : 1.0) * binomial(2 * n, j) * s / (f * f + s * s);
  }
  return (n % 2 ? -1.0 : 1.0) * sum / std::ldexp(1.0, 2 * n - 1) + binomial(2 * n, n) / (std::ldexp(1.0, 2 * n) * s);
}

Complex sin_even_power_pochhammer(Complex s, Complex gamma, int n) {
  const Complex w = kI * s / (2.0 * gamma);
  double factorial = 1.0;
  for (int k = 2; k <= 2 * n; ++k) factorial *= k;
  return factorial / (std::ldexp(1.0, 2 * n) * (s + 2.0 * kI * double(n) * gamma) * pochhammer(1.0 + w, double(n)) *
                      pochhammer(-w, double(n)));
}

Complex sin_odd_power_sum(Complex s, Complex lambda, int p) {
  Complex sum = 0.0;
  for (int k = 0; k <= p; ++k) {
    const Complex f = double(2 * p + 1 - 2 * k) * lambda;
    sum += (k % 2 ? -1.0 : 1.0) * binomial(2 * p + 1, k) * f / (f * f + s * s);
  }
  return (p % 2 ? -1.0 : 1.0) * sum / std::ldexp(1.0, 2 * p);
}

Complex sin_odd_power_pochhammer(Complex s, Complex lambda, int p) {
  double factorial = 1.0;
  for (int k = 2; k <= 2 * p + 1; ++k) factorial *= k;
  const Complex a = (3.0 * lambda + kI * s) / (2.0 * lambda);
  const Complex b = (lambda - kI * s) / (2.0 * lambda);
  return factorial * lambda /
         (std::ldexp(1.0, 2 * p) * (s - kI * lambda) * (s + kI * lambda * double(2 * p + 1)) *
          pochhammer(a, double(p)) * pochhammer(b, double(p)));
}

Complex cos_odd_power_sum(Complex s, Complex mu, int q) {
  Complex sum = 0.0;
  for (int l = 0; l <= q; ++l) {
    const Complex f = double(2 * q + 1 - 2 * l) * mu;
    sum += binomial(2 * q + 1, l) * s / (f * f + s * s);
  }
  return sum / std::ldexp(1.0, 2 * q);
}

Complex cos_odd_power_2f1(Complex s, Complex mu, int q) {
  const double k = 2 * q + 1;
  const Complex b = (-kI * s - k * mu) / (2.0 * mu);
  return hyp2f1(-k, b, b + 1.0, -1.0) / (std::ldexp(1.0, 2 * q + 1) * (s - kI * k * mu));
}

SpectralForm product_form(std::span<const PowerFactor> factors) {
  SpectralForm form = SpectralForm::constant(1.0);
  for (const auto& f : factors) {
    if (f.kind != TermKind::Sin && f.kind != TermKind::Cos)
      throw FamilyMismatch("product_transform: only sine and cosine factors are supported");
    if (f.exponent < 0) throw DomainError("product_transform: negative exponent");
    if (f.exponent == 0) continue;
    form = product(form, expand_power(f.kind, f.exponent, f.frequency));
  }
  return form;
}

Complex product_transform(std::span<const PowerFactor> factors, Complex s) {
  return laplace_spectral(product_form(factors), s);
}

}  // namespace hyperlap
