#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hyperlap {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a Gamma-type evaluation lands on (or within 1e-12 of) a
/// point of {0, -1, -2, ...}.
class PoleError : public Error {
 public:
  PoleError(Complex location, std::string context);

  Complex location() const noexcept { return location_; }
  const std::string& context() const noexcept { return context_; }

 private:
  Complex location_;
  std::string context_;
};

/// Arguments outside the region where an identity or transform holds.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The oracle integrand would need a non-principal power of a non-positive base.
class IntegrandDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class DivergentSeries : public Error {
 public:
  using Error::Error;
};

/// Circular and hyperbolic spectral forms cannot be combined.
class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownEntry : public Error {
 public:
  explicit UnknownEntry(const std::string& id) : Error("unknown catalog entry: " + id) {}
};

/// A computation produced a non-finite value.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperlap
