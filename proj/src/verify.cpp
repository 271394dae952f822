#include "hyperlap/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "hyperlap/version.hpp"

namespace hyperlap {

std::string to_string(PointStatus status) {
  switch (status) {
    case PointStatus::Pass: return "pass";
    case PointStatus::Fail: return "fail";
    default: return "skip";
  }
}

std::size_t VerificationReport::count(PointStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [status](const PointResult& p) { return p.status == status; }));
}

double oracle_tolerance(double tol) { return std::clamp(tol / 100.0, 1e-13, 1e-10); }

IntegralResult oracle_integral(const CatalogEntry& entry, const ParamSet& params, double tol, bool throw_on_failure) {
  const OracleProblem problem = entry.oracle(params);
  QuadratureOptions options;
  options.decay_rate = problem.decay_rate;
  options.max_frequency = problem.max_frequency;
  options.endpoint_exponent = problem.endpoint_exponent;
  options.tol = tol;
  options.throw_on_failure = throw_on_failure;
  return integrate_semi_infinite(problem.integrand, options);
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("HYPERLAP_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

constexpr double kAbsoluteFloor = 1e-13;

std::string failed_conditions(const Conditions& conditions) {
  std::string out;
  for (const auto& c : conditions) {
    if (!c.enforced || c.holds) continue;
    if (!out.empty()) out += "; ";
    out += c.text;
  }
  return out;
}

PointResult check_point(const CatalogEntry& entry, const ParamSet& params, const VerifyOptions& options) {
  PointResult r;
  r.params = params;
  if (!options.relaxed) {
    const std::string failed = failed_conditions(entry.conditions(params));
    if (!failed.empty()) {
      r.note = "condition violated: " + failed;
      return r;
    }
  }

  IntegralResult integral;
  try {
    integral = oracle_integral(entry, params, oracle_tolerance(options.tol), false);
  } catch (const DomainError& e) {
    r.note = std::string("oracle: ") + e.what();
    return r;
  }
  r.oracle = integral.value;
  r.evaluations = integral.evaluations;

  try {
    r.closed = evaluate(entry, params, options.relaxed ? Check::Relaxed : Check::Strict);
  } catch (const Error& e) {
    r.status = PointStatus::Fail;
    r.note = std::string("closed form: ") + e.what();
    r.closed = Complex(std::nan(""), std::nan(""));
    r.abs_error = r.rel_error = std::nan("");
    return r;
  }

  r.abs_error = std::abs(r.closed - r.oracle);
  r.rel_error = r.abs_error / std::abs(r.oracle);
  const bool close = r.rel_error <= options.tol || r.abs_error <= kAbsoluteFloor;
  r.status = close ? PointStatus::Pass : PointStatus::Fail;
  if (!integral.converged) {
    r.note = "oracle did not converge";
    r.status = PointStatus::Fail;
  }
  return r;
}

}  // namespace

VerificationReport verify_entry(const CatalogEntry& entry, const std::vector<ParamSet>& grid,
                                const VerifyOptions& options, std::string grid_spec) {
  for (const auto& p : grid) validate_params(entry, p);

  VerificationReport report;
  report.entry = entry.id;
  report.grid = std::move(grid_spec);
  report.tol = options.tol;
  report.points.resize(grid.size());

  const unsigned threads =
      std::min<std::size_t>(options.threads ? options.threads : default_thread_count(), std::max<std::size_t>(grid.size(), 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) report.points[i] = check_point(entry, grid[i], options);
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return report;
}

VerificationReport verify_entry(const std::string& id, const std::vector<ParamSet>& grid,
                                const VerifyOptions& options, std::string grid_spec) {
  return verify_entry(Catalog::instance().get(id), grid, options, std::move(grid_spec));
}

void write_records(std::ostream& out, const VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json header = {{"record", "header"},
                         {"entry", report.entry},
                         {"grid", report.grid},
                         {"tol", report.tol},
                         {"version", kVersion}};
  out << header.dump() << '\n';
  for (const auto& p : report.points) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : p.params.values()) params[name] = {value.real(), value.imag()};
    // Skipped points computed nothing; NaN serializes as null.
    const bool skip = p.status == PointStatus::Skip;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const auto num = [&](double v) { return skip ? nan : v; };
    ordered_json rec = {{"record", "point"},
                        {"entry", report.entry},
                        {"params", params},
                        {"closed_re", num(p.closed.real())},
                        {"closed_im", num(p.closed.imag())},
                        {"oracle_re", num(p.oracle.real())},
                        {"oracle_im", num(p.oracle.imag())},
                        {"abs_err", num(p.abs_error)},
                        {"rel_err", num(p.rel_error)},
                        {"status", to_string(p.status)}};
    if (!p.note.empty()) rec["note"] = p.note;
    out << rec.dump() << '\n';
  }
}

namespace {

std::string format_complex(Complex z) {
  char buf[64];
  if (z.imag() == 0.0) std::snprintf(buf, sizeof buf, "%.12g", z.real());
  else std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::string format_params(const ParamSet& params) {
  std::string out;
  for (const auto& [name, value] : params.values()) {
    if (!out.empty()) out += ' ';
    out += name + "=" + format_complex(value);
  }
  return out;
}

}  // namespace

void write_table(std::ostream& out, const VerificationReport& report, bool failures_only) {
  char line[512];
  for (const auto& p : report.points) {
    if (failures_only && p.status == PointStatus::Pass) continue;
    std::snprintf(line, sizeof line, "%-9s %-4s %-34s %-26s %-26s %9.2e", report.entry.c_str(),
                  to_string(p.status).c_str(), format_params(p.params).c_str(),
                  p.status == PointStatus::Skip ? "-" : format_complex(p.closed).c_str(),
                  p.status == PointStatus::Skip ? "-" : format_complex(p.oracle).c_str(), p.rel_error);
    out << line;
    if (!p.note.empty()) out << "  " << p.note;
    out << '\n';
  }
  std::snprintf(line, sizeof line, "%s: %zu pass, %zu fail, %zu skip (tol %g)", report.entry.c_str(),
                report.count(PointStatus::Pass), report.count(PointStatus::Fail), report.count(PointStatus::Skip),
                report.tol);
  out << line << '\n';
}

}  // namespace hyperlap
