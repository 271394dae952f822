#include "hyperlap/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyperlap/spectral.hpp"
#include "hyperlap/verify.hpp"
#include "hyperlap/version.hpp"

namespace hyperlap::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

double parse_real(const std::string& text, const std::string& whole) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != last) throw UsageError("bad number: '" + whole + "'");
  return v;
}

std::string resolve_name(const CatalogEntry& entry, const std::string& name) {
  const auto canonical = canonical_param(entry, name);
  if (!canonical) {
    std::string known;
    for (const auto& p : entry.params) known += (known.empty() ? "" : ", ") + p.name;
    throw UsageError(entry.id + ": unknown parameter '" + name + "' (expected " + (known.empty() ? "none" : known) +
                     ")");
  }
  return *canonical;
}

std::pair<std::string, std::string> split_assignment(const std::string& token) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected name=value, got '" + token + "'");
  return {trim(token.substr(0, eq)), trim(token.substr(eq + 1))};
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw UsageError("empty number");
  if (text.back() != 'i' && text.back() != 'j') return parse_real(text, raw);
  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split_at = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, raw);
  };
  if (split_at == std::string::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split_at), raw), imag_part(body.substr(split_at))};
}

std::vector<ParamSet> parse_grid(const CatalogEntry& entry, const std::string& spec) {
  std::map<std::string, std::vector<Complex>> axes;
  for (const auto& part : split(spec, ';')) {
    if (part.empty()) continue;
    const auto [raw_name, value] = split_assignment(part);
    const std::string name = resolve_name(entry, raw_name);
    if (axes.count(name)) throw UsageError("parameter given twice in grid: " + name);
    std::vector<Complex> values;
    if (value.find(':') != std::string::npos) {
      const auto fields = split(value, ':');
      if (fields.size() != 3) throw UsageError("range must be start:stop:count, got '" + value + "'");
      const Complex start = parse_complex(fields[0]), stop = parse_complex(fields[1]);
      const double count = parse_real(fields[2], value);
      if (count < 1 || count != std::floor(count) || count > double(kMaxGridPoints))
        throw UsageError("range count must be a positive integer, got '" + fields[2] + "'");
      const auto n = static_cast<std::size_t>(count);
      for (std::size_t i = 0; i < n; ++i)
        values.push_back(n == 1 ? start : start + (stop - start) * (double(i) / double(n - 1)));
    } else {
      for (const auto& item : split(value, ',')) values.push_back(parse_complex(item));
    }
    axes[name] = std::move(values);
  }

  std::size_t total = 1;
  for (const auto& [name, values] : axes) {
    total *= values.size();
    if (total > kMaxGridPoints) throw UsageError("grid has more than 1000000 points");
  }

  std::vector<ParamSet> grid{ParamSet{}};
  for (const auto& p : entry.params) {
    const auto it = axes.find(p.name);
    if (it == axes.end()) continue;
    std::vector<ParamSet> next;
    next.reserve(grid.size() * it->second.size());
    for (const auto& base : grid)
      for (const Complex v : it->second) {
        ParamSet ps = base;
        ps.set(p.name, v);
        next.push_back(std::move(ps));
      }
    grid = std::move(next);
  }
  return grid;
}

ParamSet parse_params(const CatalogEntry& entry, const std::vector<std::string>& tokens) {
  ParamSet ps;
  for (const auto& token : tokens) {
    const auto [raw_name, value] = split_assignment(token);
    const std::string name = resolve_name(entry, raw_name);
    if (ps.has(name)) throw UsageError("parameter given twice: " + name);
    ps.set(name, parse_complex(value));
  }
  return ps;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific);
  const std::string sci(buf, res.ptr);
  const int exponent = std::stoi(sci.substr(sci.find('e') + 1));
  if (exponent < -4 || exponent >= 16) return sci;
  res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  std::string fixed(buf, res.ptr);
  if (fixed.find('.') == std::string::npos) fixed += ".0";
  return fixed;
}

std::string format_number(Complex value) {
  if (value.imag() == 0.0) return format_number(value.real());
  std::string im = format_number(value.imag());
  if (im.front() != '-') im = "+" + im;
  return format_number(value.real()) + im + "i";
}

namespace {

std::string schema_text(const CatalogEntry& entry) {
  std::string out;
  for (const auto& p : entry.params) {
    if (!out.empty()) out += ", ";
    out += p.name;
    if (p.ascii != p.name) out += "|" + p.ascii;
    if (p.kind == ParamKind::Integer) out += ":int";
    else if (p.kind == ParamKind::Real) out += ":real";
  }
  return out.empty() ? "(none)" : out;
}

std::string conditions_text(const Conditions& conditions) {
  std::string out;
  for (const auto& c : conditions) {
    if (!out.empty()) out += "; ";
    out += c.text;
    if (!c.enforced) out += " [not enforced]";
  }
  return out.empty() ? "(none)" : out;
}

int cmd_list(std::optional<int> section, std::ostream& out) {
  for (const auto& e : Catalog::instance().entries()) {
    if (section && e.section != *section) continue;
    char head[128];
    std::snprintf(head, sizeof head, "%-8s %-24s section %d", e.id.c_str(), e.equation.c_str(), e.section);
    out << head << '\n';
    out << "    " << e.description << '\n';
    out << "    params: " << schema_text(e) << '\n';
    // Condition texts do not depend on the values, so any grid point will do.
    const ParamSet sample = e.default_grid.empty() ? ParamSet{} : e.default_grid.front();
    out << "    conditions: " << conditions_text(e.conditions(sample)) << '\n';
  }
  return kOk;
}

int cmd_eval(const std::string& id, const std::vector<std::string>& tokens, bool oracle, bool relaxed, double tol,
             std::ostream& out, std::ostream& err) {
  const CatalogEntry& entry = Catalog::instance().get(id);
  const ParamSet params = parse_params(entry, tokens);
  validate_params(entry, params);
  const Conditions conditions = entry.conditions(params);

  const Complex value = evaluate(entry, params, relaxed ? Check::Relaxed : Check::Strict);
  out << format_number(value) << '\n';

  std::string violated, advisory;
  for (const auto& c : conditions) {
    if (c.holds) continue;
    std::string& target = c.enforced ? violated : advisory;
    target += (target.empty() ? "" : "; ") + c.text;
  }
  if (violated.empty()) out << "conditions: hold\n";
  else out << "conditions: violated (relaxed): " << violated << '\n';
  if (!advisory.empty()) out << "not enforced, fails: " << advisory << '\n';

  if (oracle) {
    const IntegralResult r = oracle_integral(entry, params, tol, false);
    out << "oracle: " << format_number(r.value) << '\n';
    out << "oracle error estimate: " << format_number(r.error_estimate) << '\n';
    const double diff = std::abs(value - r.value);
    out << "difference: " << format_number(diff) << " (relative " << format_number(diff / std::abs(r.value))
        << ")\n";
    if (!r.converged) err << "warning: quadrature did not reach the requested tolerance\n";
  }
  return kOk;
}

int cmd_expand(const std::string& kind_text, int exponent, double frequency, const std::string& laplace,
               std::ostream& out) {
  static const std::map<std::string, TermKind> kinds = {
      {"sin", TermKind::Sin}, {"cos", TermKind::Cos}, {"sinh", TermKind::Sinh}, {"cosh", TermKind::Cosh}};
  const auto it = kinds.find(kind_text);
  if (it == kinds.end()) throw UsageError("kind must be sin, cos, sinh or cosh, got '" + kind_text + "'");
  const SpectralForm form = expand_power(it->second, exponent, frequency);
  out << to_string(form) << '\n';
  if (!laplace.empty()) {
    const auto [name, value] = split_assignment(laplace);
    if (name != "s") throw UsageError("--laplace expects s=<value>");
    out << format_number(laplace_spectral(form, parse_complex(value))) << '\n';
  }
  return kOk;
}

void write_report_file(const std::string& path, const std::vector<VerificationReport>& reports) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  for (const auto& r : reports) write_records(file, r);
  file.flush();
  if (!file) throw IoError("error writing '" + path + "'");
}

void warn_skips(const VerificationReport& report, std::ostream& err) {
  for (const auto& p : report.points)
    if (p.status == PointStatus::Skip) err << "warning: " << report.entry << ": point skipped: " << p.note << '\n';
}

int cmd_verify(const std::string& id, const std::optional<std::string>& grid_spec, double tol, bool relaxed,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
  VerifyOptions options;
  options.tol = tol;
  options.relaxed = relaxed;

  std::vector<VerificationReport> reports;
  if (id == "all") {
    if (grid_spec) throw UsageError("--grid cannot be combined with 'all'");
    for (const auto& entry : Catalog::instance().entries()) {
      reports.push_back(verify_entry(entry, entry.default_grid, options));
      write_table(out, reports.back(), true);
      warn_skips(reports.back(), err);
    }
  } else {
    const CatalogEntry& entry = Catalog::instance().get(id);
    const auto grid = grid_spec ? parse_grid(entry, *grid_spec) : entry.default_grid;
    reports.push_back(verify_entry(entry, grid, options, grid_spec.value_or("default")));
    write_table(out, reports.back());
    warn_skips(reports.back(), err);
  }

  if (!out_path.empty()) write_report_file(out_path, reports);

  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : reports) {
    pass += r.count(PointStatus::Pass);
    fail += r.count(PointStatus::Fail);
    skip += r.count(PointStatus::Skip);
  }
  if (reports.size() > 1)
    out << "total: " << pass << " pass, " << fail << " fail, " << skip << " skip over " << reports.size()
        << " entries\n";
  return fail == 0 ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form Laplace transforms of powers of hyperbolic and trigonometric functions", "hyperlap"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::optional<int> section;
  auto* list = app.add_subcommand("list", "List catalog entries with their parameters and conditions");
  list->add_option("--section", section, "Only entries from this section");

  std::string eval_id;
  std::vector<std::string> eval_params;
  bool eval_oracle = false, eval_relaxed = false;
  double eval_tol = 1e-10;
  auto* eval = app.add_subcommand("eval", "Evaluate an entry's closed form");
  eval->add_option("entry", eval_id, "Entry id, e.g. novel-V")->required();
  eval->add_option("params", eval_params, "Parameters as name=value (complex as a+bi)");
  eval->add_flag("--oracle", eval_oracle, "Also integrate numerically and print the difference");
  eval->add_flag("--relaxed", eval_relaxed, "Evaluate even if the stated conditions fail");
  eval->add_option("--tol", eval_tol, "Quadrature tolerance for --oracle");

  std::string kind;
  int exponent = 1;
  double frequency = 1.0;
  std::string laplace;
  auto* expand = app.add_subcommand("expand", "Expand a power of sin, cos, sinh or cosh into a sum of multiples");
  expand->add_option("kind", kind, "sin, cos, sinh or cosh")->required();
  expand->add_option("exponent", exponent, "Integer power >= 1")->required();
  expand->add_option("frequency", frequency, "Frequency of the argument")->required();
  expand->add_option("--laplace", laplace, "Also print the Laplace transform at s=<value>");

  std::string verify_id;
  std::optional<std::string> grid;
  double verify_tol = 1e-8;
  bool verify_relaxed = false;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Compare closed forms with numerical integration over a grid");
  verify->add_option("entry", verify_id, "Entry id, or 'all' for every entry's default grid")->required();
  verify->add_option("--grid", grid, "name=v;name=a,b;name=start:stop:count");
  verify->add_option("--tol", verify_tol, "Relative tolerance per point");
  verify->add_flag("--relaxed", verify_relaxed, "Also check points where the stated conditions fail");
  verify->add_option("--out", out_path, "Write the JSON-lines report here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (list->parsed()) return cmd_list(section, out);
    if (eval->parsed()) return cmd_eval(eval_id, eval_params, eval_oracle, eval_relaxed, eval_tol, out, err);
    if (expand->parsed()) return cmd_expand(kind, exponent, frequency, laplace, out);
    return cmd_verify(verify_id, grid, verify_tol, verify_relaxed, out_path, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownEntry& e) {
    err << "error: " << e.what() << '\n';
    return kUnknownEntry;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const FamilyMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace hyperlap::cli
