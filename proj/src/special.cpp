#include "hyperlap/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

namespace hyperlap {

PoleError::PoleError(Complex location, std::string context)
    : Error([&] {
        std::ostringstream os;
        os << "pole of Gamma at (" << location.real() << ", " << location.imag() << ") in "
           << context;
        return os.str();
      }()),
      location_(location),
      context_(std::move(context)) {}

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

const double kLogSqrtTwoPi = 0.5 * std::log(2.0 * kPi);
const double kLogPi = std::log(kPi);

// Lanczos series for Re(z) >= 1/2. Returns the series sum and t = z + g - 1/2.
struct LanczosParts {
  Complex series;
  Complex t;
};

LanczosParts lanczos_parts(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (zm1 + static_cast<double>(i));
  return {x, zm1 + kLanczosG + 0.5};
}

Complex lanczos_gamma(Complex z) {
  const auto [x, t] = lanczos_parts(z);
  return std::sqrt(2.0 * kPi) * std::exp((z - 0.5) * std::log(t) - t) * x;
}

Complex lanczos_log_gamma(Complex z) {
  const auto [x, t] = lanczos_parts(z);
  return kLogSqrtTwoPi + (z - 0.5) * std::log(t) - t + std::log(x);
}

// sin(pi r) and cos(pi r) for real r, reduced so that sin(pi n) == 0 exactly.
double sin_pi_real(double r) {
  r -= 2.0 * std::round(0.5 * r);  // r in [-1, 1]
  double sign = 1.0;
  if (r < 0) {
    r = -r;
    sign = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(kPi * r);
}

double cos_pi_real(double r) {
  r = std::fabs(r - 2.0 * std::round(0.5 * r));  // r in [0, 1]
  if (r == 0.5) return 0.0;
  if (r > 0.5) return -std::sin(kPi * (r - 0.5));
  return std::sin(kPi * (0.5 - r));
}

Complex wrap_imag(Complex w) {
  double im = std::remainder(w.imag(), 2.0 * kPi);  // (-pi, pi]
  if (im <= -kPi) im += 2.0 * kPi;
  return {w.real(), im};
}

// log sin(pi z), stable for large |Im z|.
Complex log_sin_pi(Complex z) {
  if (std::fabs(z.imag()) < 15.0) return std::log(sin_pi(z));
  if (z.imag() < 0) return std::conj(log_sin_pi(std::conj(z)));
  // sin w = (i/2) e^{-iw} (1 - e^{2iw}),  w = pi z, Im w > 0
  const Complex w = kPi * z;
  const Complex i{0.0, 1.0};
  const Complex e2iw = std::exp(2.0 * i * w);
  return -i * w + Complex{-std::log(2.0), 0.5 * kPi} + std::log(1.0 - e2iw);
}

void require_finite(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw OverflowError(std::string(what) + ": result is not finite");
}

}  // namespace

bool is_nonpositive_integer(Complex z, double tol) {
  if (std::fabs(z.imag()) > tol) return false;
  const double n = std::round(z.real());
  return n <= 0.0 && std::fabs(z.real() - n) <= tol;
}

bool is_nonnegative_integer(Complex z, double tol) {
  if (std::fabs(z.imag()) > tol) return false;
  const double n = std::round(z.real());
  return n >= 0.0 && std::fabs(z.real() - n) <= tol;
}

Complex sin_pi(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  return {sin_pi_real(x) * std::cosh(kPi * y), cos_pi_real(x) * std::sinh(kPi * y)};
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError(z, "gamma");
  if (z.imag() == 0.0 && z.real() == std::round(z.real()) && z.real() <= 171.0) {
    double f = 1.0;  // (n-1)!, exact through 22!
    for (double k = 2.0; k < z.real(); k += 1.0) f *= k;
    return f;
  }
  Complex result;
  if (z.real() < 0.5) {
    result = kPi / (sin_pi(z) * lanczos_gamma(1.0 - z));
  } else {
    result = lanczos_gamma(z);
  }
  require_finite(result, "gamma");
  return result;
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError(z, "log_gamma");
  if (z.real() < 0.5) return wrap_imag(kLogPi - log_sin_pi(z) - lanczos_log_gamma(1.0 - z));
  return wrap_imag(lanczos_log_gamma(z));
}

Complex gamma_ratio(std::span<const Complex> numerator, std::span<const Complex> denominator,
                    const char* context) {
  for (const Complex& z : numerator)
    if (is_nonpositive_integer(z)) throw PoleError(z, context);
  for (const Complex& z : denominator)
    if (is_nonpositive_integer(z)) return 0.0;

  std::vector<Complex> num(numerator.begin(), numerator.end());
  std::vector<Complex> den(denominator.begin(), denominator.end());
  for (auto it = num.begin(); it != num.end();) {
    const auto match = std::find(den.begin(), den.end(), *it);
    if (match == den.end()) {
      ++it;
      continue;
    }
    den.erase(match);
    it = num.erase(it);
  }
  // Gamma(z) Gamma(1 - z) = pi / sin(pi z), exact at the half-integers.
  Complex factor = 1.0;
  for (std::size_t i = 0; i < num.size();) {
    const auto first = num.begin() + static_cast<std::ptrdiff_t>(i);
    const auto partner = std::find_if(first + 1, num.end(), [&](const Complex& w) { return *first + w == 1.0; });
    if (partner == num.end()) {
      ++i;
      continue;
    }
    factor *= kPi / sin_pi(*first);
    num.erase(partner);
    num.erase(num.begin() + static_cast<std::ptrdiff_t>(i));
  }

  const auto small = [](const Complex& z) { return std::abs(z) <= 20.0; };
  Complex result;
  if (std::all_of(num.begin(), num.end(), small) && std::all_of(den.begin(), den.end(), small)) {
    result = factor;
    for (const Complex& z : num) result *= gamma(z);
    for (const Complex& z : den) result /= gamma(z);
  } else {
    Complex acc = 0.0;
    for (const Complex& z : num) acc += log_gamma(z);
    for (const Complex& z : den) acc -= log_gamma(z);
    result = factor * std::exp(acc);
  }
  require_finite(result, context);
  return result;
}

Complex beta(Complex a, Complex b) {
  if (is_nonpositive_integer(a)) throw PoleError(a, "beta: parameter a");
  if (is_nonpositive_integer(b)) throw PoleError(b, "beta: parameter b");
  if (is_nonpositive_integer(a + b)) throw PoleError(a + b, "beta: a + b");
  return gamma_ratio({a, b}, {a + b}, "beta");
}

Complex pochhammer(Complex lambda, Complex upsilon) {
  constexpr double kMaxProduct = 1 << 20;
  if (is_nonnegative_integer(upsilon) && upsilon.real() <= kMaxProduct) {
    const auto n = static_cast<std::int64_t>(upsilon.real());
    Complex product = 1.0;
    for (std::int64_t k = 0; k < n; ++k) product *= lambda + static_cast<double>(k);
    require_finite(product, "pochhammer");
    return product;
  }
  if (is_nonpositive_integer(lambda + upsilon)) throw PoleError(lambda + upsilon, "pochhammer");
  return gamma_ratio({lambda + upsilon}, {lambda}, "pochhammer");
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  if (n <= 60) {
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return static_cast<double>(c);
  }
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

}  // namespace hyperlap
