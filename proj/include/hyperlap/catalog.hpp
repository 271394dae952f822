#pragma once

// Registry of named integral identities: parameter schema, convergence
// conditions, closed form, and the left-hand-side integrand used by the
// quadrature oracle.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlap/errors.hpp"
#include "hyperlap/quadrature.hpp"
#include "hyperlap/transforms.hpp"

namespace hyperlap {

enum class ParamKind { Complex, Real, Integer };

struct ParamSpec {
  std::string name;   // canonical, e.g. "ν"
  std::string ascii;  // alias accepted on the command line, e.g. "nu"
  ParamKind kind = ParamKind::Complex;
};

/// Parameter values keyed by canonical name (iteration is sorted by name).
class ParamSet {
 public:
  ParamSet() = default;
  ParamSet(std::initializer_list<std::pair<const std::string, Complex>> values) : values_(values) {}

  void set(const std::string& name, Complex value) { values_[name] = value; }
  bool has(const std::string& name) const { return values_.count(name) != 0; }
  Complex operator[](const std::string& name) const;
  double real(const std::string& name) const { return (*this)[name].real(); }
  int integer(const std::string& name) const;
  const std::map<std::string, Complex>& values() const noexcept { return values_; }
  bool all_real() const;

 private:
  std::map<std::string, Complex> values_;
};

/// The oracle's view of an integral: integrand over x > 0 and the hints
/// the quadrature needs.
struct OracleProblem {
  Integrand integrand;
  double decay_rate = 1.0;
  double max_frequency = 0.0;
  std::optional<double> endpoint_exponent;
};

struct CatalogEntry {
  std::string id;
  int section = 0;
  std::string equation;     // e.g. "Eq. (46)"
  std::string description;  // the integral in text form
  std::vector<ParamSpec> params;
  std::function<Conditions(const ParamSet&)> conditions;
  std::function<Complex(const ParamSet&, Check)> closed_form;
  std::function<OracleProblem(const ParamSet&)> oracle;
  std::vector<ParamSet> default_grid;
  /// Parameters that scale like 1/x (s and frequencies): scaling all of
  /// them by c > 0 divides the integral by c. Empty when none exist.
  std::vector<std::string> scaling;
};

class Catalog {
 public:
  static const Catalog& instance();

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  /// Throws UnknownEntry.
  const CatalogEntry& get(const std::string& id) const;
  const CatalogEntry* find(const std::string& id) const;

 private:
  Catalog();
  std::vector<CatalogEntry> entries_;
};

/// Checks the schema (all parameters present, integers integral, reals
/// real); throws DomainError otherwise.
void validate_params(const CatalogEntry& entry, const ParamSet& params);

/// Resolves a user-supplied name (canonical or ASCII alias) to the
/// canonical one, or nullopt.
std::optional<std::string> canonical_param(const CatalogEntry& entry, const std::string& name);

/// Closed form with schema validation and (in strict mode) the entry's
/// conditions enforced. For all-real parameters the integrand is real, so
/// a roundoff-level imaginary part is dropped.
Complex evaluate(const CatalogEntry& entry, const ParamSet& params, Check check = Check::Strict);

/// Section 5 presets by id ("eq-97" ... "eq-116"). Throws UnknownEntry for
/// ids outside that section.
Complex special_case(const std::string& id, const ParamSet& params, Check check = Check::Strict);

/// Builds the catalog entries; split out so the registry stays declarative.
std::vector<CatalogEntry> build_catalog_entries();

}  // namespace hyperlap
