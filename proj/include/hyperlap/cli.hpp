#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperlap/catalog.hpp"

namespace hyperlap::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,  // verification found a failing point, or a numerical failure
  kDomain = 2,
  kUnknownEntry = 3,
  kIo = 4,
  kUsage = 64,
};

/// Bad command-line input that is not a domain question (malformed numbers,
/// unknown parameter names, oversized grids).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// "1.5", "-2", "0.5+0.25i", "3i", "-i". Throws UsageError.
Complex parse_complex(const std::string& text);

/// "name=v;name=a,b;name=start:stop:count", cross product in schema order.
/// Names may be canonical or ASCII aliases. Throws UsageError.
std::vector<ParamSet> parse_grid(const CatalogEntry& entry, const std::string& spec);

/// "name=v" tokens for a single point. Throws UsageError.
ParamSet parse_params(const CatalogEntry& entry, const std::vector<std::string>& tokens);

/// Shortest round-trip decimal with Python float-repr conventions
/// ("1.0", "0.7853981633974483", "1e-05"); complex values as "a+bi".
std::string format_number(double value);
std::string format_number(Complex value);

inline constexpr std::size_t kMaxGridPoints = 1'000'000;

/// Runs the command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlap::cli
