#include "hyperlap/hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "hyperlap/levin.hpp"
#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

constexpr double kUnitCircleTolerance = 1e-12;

// Smallest N such that some numerator parameter equals -N, if any.
std::optional<long> terminating_index(const SeriesSpec& spec) {
  std::optional<long> best;
  for (const Complex& a : spec.numerator) {
    if (is_nonpositive_integer(a)) {
      const long n = std::lround(-a.real());
      if (!best || n < *best) best = n;
    }
  }
  return best;
}

// Rejects denominator parameters that reach a pole before the series stops.
void validate(const SeriesSpec& spec, std::optional<long> stop) {
  for (const Complex& b : spec.denominator) {
    if (!is_nonpositive_integer(b)) continue;
    const long m = std::lround(-b.real());
    if (!stop || *stop > m) throw PoleError(b, "hypergeometric denominator parameter");
  }
}

Complex term_ratio(const SeriesSpec& spec, double n) {
  Complex r = spec.argument / (n + 1.0);
  for (const Complex& a : spec.numerator) r *= a + n;
  for (const Complex& b : spec.denominator) r /= b + n;
  return r;
}

Complex sum_terminating(const SeriesSpec& spec, long last) {
  Complex term = 1.0;
  Complex sum = 1.0;
  for (long n = 0; n < last; ++n) {
    term *= term_ratio(spec, static_cast<double>(n));
    sum += term;
  }
  return sum;
}

std::optional<Complex> sum_direct(const SeriesSpec& spec, double tol) {
  Complex term = 1.0;
  Complex sum = 1.0;
  int small = 0;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const Complex ratio = term_ratio(spec, static_cast<double>(n));
    term *= ratio;
    sum += term;
    if (!std::isfinite(std::abs(sum))) throw OverflowError("sum_series: partial sum overflowed");
    if (std::abs(term) <= tol * std::abs(sum) && std::abs(ratio) < 1.0) {
      if (++small == 3) return sum;
    } else {
      small = 0;
    }
  }
  return std::nullopt;
}

// Levin u over partial sums starting at index offset.
std::optional<Complex> sum_levin(const SeriesSpec& spec, std::size_t offset) {
  Complex term = 1.0;
  Complex prefix = 0.0;
  for (std::size_t n = 0; n < offset; ++n) {
    prefix += term;
    term *= term_ratio(spec, static_cast<double>(n));
  }
  LevinU levin(1.0, offset, prefix);
  std::optional<Complex> previous;
  for (int k = 0; k <= kMaxLevinOrder; ++k) {
    levin.push(term);
    term *= term_ratio(spec, static_cast<double>(offset + static_cast<std::size_t>(k)));
    const auto current = levin.estimate();
    if (!current) return std::nullopt;
    if (previous && k >= 3 &&
        std::abs(*current - *previous) <= kAccelerationTolerance * std::abs(*current))
      return current;
    previous = current;
  }
  return std::nullopt;
}

// At z = 1 the tail behaves like n^{-w}(c0 + c1/n + ...) with w the balance.
// Partial sums at n = N, 2N, 4N, ... are combined by Richardson elimination
// of those powers. Levin u loses ~8 digits to cancellation on such
// logarithmically convergent sums, this does not.
Complex sum_richardson_at_one(const SeriesSpec& spec, Complex balance) {
  double scale = 0.0;
  for (const Complex& a : spec.numerator) scale = std::max(scale, std::abs(a));
  for (const Complex& b : spec.denominator) scale = std::max(scale, std::abs(b));
  const long first = 8 + static_cast<long>(2.0 * scale);
  int levels = 0;
  while ((first << (levels + 1)) <= kMaxSeriesTerms) ++levels;
  if (levels < 4) throw NoConvergence("sum_series: parameters too large for extrapolation at z = 1");

  std::vector<Complex> table;
  Complex term = 1.0;
  Complex sum = 1.0;
  Complex carry = 0.0;  // Kahan compensation
  long n = 0;
  for (long target = first; static_cast<int>(table.size()) <= levels; target *= 2) {
    for (; n < target; ++n) {
      term *= term_ratio(spec, static_cast<double>(n));
      const Complex y = term - carry;
      const Complex t = sum + y;
      carry = (t - sum) - y;
      sum = t;
    }
    table.push_back(sum);
  }

  Complex best = table[0];
  double best_change = std::numeric_limits<double>::infinity();
  Complex previous = table[0];
  for (int i = 0; i < levels; ++i) {
    const Complex r = std::pow(2.0, -(balance + static_cast<double>(i)));
    for (std::size_t j = 0; j + 1 < table.size() - static_cast<std::size_t>(i); ++j)
      table[j] = (table[j + 1] - r * table[j]) / (1.0 - r);
    const double change = std::abs(table[0] - previous) / std::abs(table[0]);
    if (change < best_change) {
      best_change = change;
      best = table[0];
    }
    previous = table[0];
    if (change <= kAccelerationTolerance) break;
  }
  if (!(best_change <= 1e-8)) throw NoConvergence("sum_series: extrapolation at z = 1 stagnated");
  return best;
}

Complex sum_accelerated(const SeriesSpec& spec) {
  for (std::size_t offset : {0u, 10u, 40u, 150u}) {
    if (auto v = sum_levin(spec, offset)) return *v;
  }
  throw NoConvergence("sum_series: Levin acceleration stagnated");
}

}  // namespace

std::string to_string(ConvergenceKind kind) {
  switch (kind) {
    case ConvergenceKind::AllZ: return "AllZ";
    case ConvergenceKind::UnitDisk: return "UnitDisk";
    case ConvergenceKind::UnitCircleAbsolute: return "UnitCircleAbsolute";
    case ConvergenceKind::UnitCircleConditional: return "UnitCircleConditional";
    case ConvergenceKind::Divergent: return "Divergent";
    case ConvergenceKind::Terminating: return "Terminating";
  }
  return "?";
}

ConvergenceClass classify(const SeriesSpec& spec) {
  Complex balance = 0.0;
  for (const Complex& b : spec.denominator) balance += b;
  for (const Complex& a : spec.numerator) balance -= a;

  const auto stop = terminating_index(spec);
  validate(spec, stop);
  if (stop) return {ConvergenceKind::Terminating, balance};

  const std::size_t p = spec.numerator.size();
  const std::size_t q = spec.denominator.size();
  if (p <= q) return {ConvergenceKind::AllZ, balance};
  if (p > q + 1) return {ConvergenceKind::Divergent, balance};

  const double r = std::abs(spec.argument);
  if (r < 1.0 - kUnitCircleTolerance) return {ConvergenceKind::UnitDisk, balance};
  if (r > 1.0 + kUnitCircleTolerance) return {ConvergenceKind::Divergent, balance};
  if (balance.real() > 0.0) return {ConvergenceKind::UnitCircleAbsolute, balance};
  const bool at_one = std::abs(spec.argument - 1.0) <= kUnitCircleTolerance;
  if (!at_one && balance.real() > -1.0) return {ConvergenceKind::UnitCircleConditional, balance};
  return {ConvergenceKind::Divergent, balance};
}

Complex sum_series(const SeriesSpec& spec, double tol) {
  if (!(tol > 0.0)) throw DomainError("sum_series: tolerance must be positive");
  const ConvergenceClass cls = classify(spec);
  if (cls.kind == ConvergenceKind::Terminating)
    return sum_terminating(spec, *terminating_index(spec));
  if (spec.argument == Complex{0.0}) return 1.0;

  switch (cls.kind) {
    case ConvergenceKind::Divergent:
      throw DivergentSeries("sum_series: series diverges for the given argument");
    case ConvergenceKind::AllZ:
      if (auto v = sum_direct(spec, tol)) return *v;
      break;
    case ConvergenceKind::UnitDisk:
      if (std::abs(spec.argument) <= 0.9) {
        if (auto v = sum_direct(spec, tol)) return *v;
        break;
      }
      if (auto v = sum_direct(spec, tol)) return *v;
      return sum_accelerated(spec);
    case ConvergenceKind::UnitCircleAbsolute:
      if (std::abs(spec.argument - 1.0) <= kUnitCircleTolerance)
        return sum_richardson_at_one(spec, cls.balance);
      return sum_accelerated(spec);
    case ConvergenceKind::UnitCircleConditional:
      return sum_accelerated(spec);
    case ConvergenceKind::Terminating:
      break;
  }
  throw NoConvergence("sum_series: iteration cap reached");
}

SeriesSpec gauss_spec(Complex a, Complex b, Complex d) { return {{a, b}, {d}, 1.0}; }

SeriesSpec kummer_spec(Complex a, Complex b) { return {{a, b}, {1.0 + a - b}, -1.0}; }

SeriesSpec well_poised_4f3_spec(Complex a, Complex b, Complex c) {
  return {{a, 1.0 + 0.5 * a, b, c}, {0.5 * a, 1.0 + a - b, 1.0 + a - c}, -1.0};
}

Complex gauss_sum_2f1_unit(Complex a, Complex b, Complex d) {
  if (!((d - a - b).real() > 0.0))
    throw DomainError("gauss_sum_2f1_unit: requires Re(d - a - b) > 0");
  if (is_nonpositive_integer(d)) throw DomainError("gauss_sum_2f1_unit: d is a non-positive integer");
  return gamma_ratio({d, d - a - b}, {d - a, d - b}, "gauss_sum_2f1_unit");
}

Complex kummer_sum_2f1_neg1(Complex a, Complex b) {
  if (!(b.real() < 1.0)) throw DomainError("kummer_sum_2f1_neg1: requires Re(b) < 1");
  if (is_nonpositive_integer(1.0 + a - b))
    throw DomainError("kummer_sum_2f1_neg1: 1 + a - b is a non-positive integer");
  // G(1+a/2)/G(1+a) rewritten by duplication as sqrt(pi) 2^{-a} / G((1+a)/2),
  // which stays finite at negative even a.
  const Complex ratio = gamma_ratio({1.0 + a - b}, {1.0 + 0.5 * a - b, 0.5 * (1.0 + a)}, "kummer_sum_2f1_neg1");
  return ratio * std::sqrt(kPi) * std::pow(2.0, -a);
}

Complex sum_4f3_neg1(Complex a, Complex b, Complex c) {
  if (!((a - 2.0 * b - 2.0 * c).real() > -2.0))
    throw DomainError("sum_4f3_neg1: requires Re(a - 2b - 2c) > -2");
  if (is_nonpositive_integer(0.5 * a)) throw DomainError("sum_4f3_neg1: a/2 is a non-positive integer");
  if (is_nonpositive_integer(1.0 + a - b)) throw DomainError("sum_4f3_neg1: 1 + a - b is a non-positive integer");
  if (is_nonpositive_integer(1.0 + a - c)) throw DomainError("sum_4f3_neg1: 1 + a - c is a non-positive integer");
  return gamma_ratio({1.0 + a - b, 1.0 + a - c}, {1.0 + a, 1.0 + a - b - c}, "sum_4f3_neg1");
}

}  // namespace hyperlap
