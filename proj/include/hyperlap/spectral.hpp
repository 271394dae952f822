#pragma once

// Finite trigonometric / hyperbolic polynomials in normal form:
//   sum_k c_k * kind_k(f_k x),  kind in {sin, cos, sinh, cosh, 1}.
// Powers are reduced to multiple angles and products to sums, so every
// form stays a linear combination of single-frequency terms.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperlap/errors.hpp"

namespace hyperlap {

enum class TermKind { Sin, Cos, Sinh, Cosh, Const };
enum class Family { Circular, Hyperbolic };

struct SpectralTerm {
  TermKind kind;
  double coefficient;
  double frequency;  // >= 0; zero iff kind == Const

  friend bool operator==(const SpectralTerm&, const SpectralTerm&) = default;
};

std::optional<Family> family_of(TermKind kind);
std::string to_string(TermKind kind);

class SpectralForm {
 public:
  SpectralForm() = default;

  static SpectralForm constant(double value);
  static SpectralForm single(TermKind kind, double coefficient, double frequency);

  /// Adds a term after normalizing its sign/frequency and merging like terms.
  /// Throws FamilyMismatch if the term's family differs from the form's.
  void add(TermKind kind, double coefficient, double frequency);

  /// Unset while the form holds only constants (it then combines with either family).
  std::optional<Family> family() const noexcept { return family_; }

  /// Terms ordered by decreasing frequency, constant last.
  std::span<const SpectralTerm> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  SpectralForm& operator*=(double scale);

 private:
  std::optional<Family> family_;
  std::vector<SpectralTerm> terms_;
};

/// kind^exponent(frequency x) as a spectral form; exponent >= 1.
SpectralForm expand_power(TermKind kind, int exponent, double frequency);

/// Pointwise product, rewritten to a sum by the product-to-sum identities.
SpectralForm product(const SpectralForm& a, const SpectralForm& b);

double evaluate(const SpectralForm& form, double x);

/// Evaluation at a complex point; circular forms at x = i t give the
/// hyperbolic counterparts (cos(i f t) = cosh(f t), sin(i f t) = i sinh(f t)).
Complex evaluate(const SpectralForm& form, Complex x);

/// Renders e.g. "0.5·cos(2x) + 0.5" or "0.25·sinh(3x) − 0.75·sinh(x)".
std::string to_string(const SpectralForm& form);

/// Shortest decimal that round-trips ("2", "0.25", "1e-20").
std::string format_shortest(double value);

}  // namespace hyperlap
