#pragma once

// Closed form against quadrature oracle over a parameter grid.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperlap/catalog.hpp"

namespace hyperlap {

enum class PointStatus { Pass, Fail, Skip };

std::string to_string(PointStatus status);

struct PointResult {
  ParamSet params;
  PointStatus status = PointStatus::Skip;
  Complex closed{0.0, 0.0};
  Complex oracle{0.0, 0.0};
  double abs_error = 0.0;
  double rel_error = 0.0;
  std::size_t evaluations = 0;
  std::string note;  // why a point was skipped or failed
};

struct VerificationReport {
  std::string entry;
  std::string grid;  // grid spec as given, or "default"
  double tol = 0.0;
  std::vector<PointResult> points;

  std::size_t count(PointStatus status) const;
  /// True iff no non-skipped point failed.
  bool ok() const { return count(PointStatus::Fail) == 0; }
};

struct VerifyOptions {
  double tol = 1e-8;
  /// Evaluate the closed form even where the entry's conditions fail; the
  /// oracle decides. Points the oracle cannot integrate are still skipped.
  bool relaxed = false;
  /// 0 means: HYPERLAP_THREADS if set, else the hardware concurrency.
  unsigned threads = 0;
};

/// Tolerance handed to the quadrature for a verification tolerance.
double oracle_tolerance(double tol);

/// Quadrature value of the entry's integral at one parameter point.
IntegralResult oracle_integral(const CatalogEntry& entry, const ParamSet& params, double tol,
                               bool throw_on_failure = true);

VerificationReport verify_entry(const CatalogEntry& entry, const std::vector<ParamSet>& grid,
                                const VerifyOptions& options = {}, std::string grid_spec = "default");
/// Throws UnknownEntry.
VerificationReport verify_entry(const std::string& id, const std::vector<ParamSet>& grid,
                                const VerifyOptions& options = {}, std::string grid_spec = "default");

unsigned default_thread_count();

/// One header line then one line per point, each a JSON object.
void write_records(std::ostream& out, const VerificationReport& report);
/// Aligned rows then a summary line; with failures_only, passing rows are
/// left out but still counted in the summary.
void write_table(std::ostream& out, const VerificationReport& report, bool failures_only = false);

}  // namespace hyperlap
