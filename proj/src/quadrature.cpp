#include "hyperlap/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

namespace hyperlap {

namespace {

// Kronrod abscissae on [-1, 1] (positive half, descending); odd indices are
// the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Interval {
  int segment;  // 0: mapped first panel (when active), 1: plain x
  double a, b;
  Complex value;
  double error;
  bool settled;  // cannot be refined further (roundoff or width limit)
};

struct RuleResult {
  double value, error, resabs;
};

RuleResult finish_rule(const std::array<double, 15>& fv, double half) {
  // fv[0..6]: f(c - h x_j), fv[7]: f(c), fv[8..14]: f(c + h x_j) for j = 0..6
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  double resabs = std::fabs(resk);
  for (int j = 0; j < 7; ++j) {
    const double pair = fv[j] + fv[14 - j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::fabs(fv[j]) + std::fabs(fv[14 - j]));
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));

  const double value = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  return {value, err, resabs};
}

}  // namespace

IntegralResult integrate_semi_infinite(const Integrand& f, const QuadratureOptions& options) {
  if (!(options.decay_rate > 0.0) || !std::isfinite(options.decay_rate))
    throw DomainError("integrate_semi_infinite: decay rate must be positive, got " +
                      std::to_string(options.decay_rate));
  if (!(options.tol > 0.0)) throw DomainError("integrate_semi_infinite: tol must be positive");
  if (options.endpoint_exponent && !(*options.endpoint_exponent > -1.0))
    throw DomainError("integrate_semi_infinite: endpoint exponent must exceed -1");

  const double tol = options.tol;
  const double upper = (std::log(1.0 / tol) + 40.0) / options.decay_rate;
  double width = 1.0;
  if (options.max_frequency > 0.0) width = std::min(width, 1.5707963267948966 / options.max_frequency);
  const std::size_t panels = static_cast<std::size_t>(std::ceil(upper / width));
  const double h = upper / static_cast<double>(panels);

  const bool mapped = options.endpoint_exponent.has_value();
  const double power = mapped ? 2.0 / (*options.endpoint_exponent + 1.0) : 1.0;

  std::size_t evaluations = 0;
  auto eval = [&](int segment, double t) -> Complex {
    ++evaluations;
    if (segment == 0) {
      if (t <= 0.0) return 0.0;  // the mapped integrand vanishes at u = 0
      const double x = h * std::pow(t, power);
      return f(x) * (h * power * std::pow(t, power - 1.0));
    }
    return f(t);
  };

  auto apply_rule = [&](int segment, double a, double b) -> Interval {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<double, 15> re{}, im{};
    for (int j = 0; j < 15; ++j) {
      double x;
      if (j < 7) x = c - half * kXgk[j];
      else if (j == 7) x = c;
      else x = c + half * kXgk[14 - j];
      const Complex v = eval(segment, x);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("integrate_semi_infinite: integrand is not finite at x = " + std::to_string(x));
      re[j] = v.real();
      im[j] = v.imag();
    }
    const RuleResult r = finish_rule(re, half);
    const RuleResult i = finish_rule(im, half);
    Interval out{segment, a, b, Complex(r.value, i.value), std::hypot(r.error, i.error), false};
    const double roundoff = 50.0 * kEps * std::hypot(r.resabs, i.resabs);
    const double min_width = 100.0 * kEps * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
    if (out.error <= roundoff * 1.0000001 || (b - a) <= min_width) out.settled = true;
    return out;
  };

  std::vector<Interval> intervals;
  intervals.reserve(panels + 64);
  for (std::size_t k = 0; k < panels; ++k) {
    const double a = static_cast<double>(k) * h;
    const double b = (k + 1 == panels) ? upper : static_cast<double>(k + 1) * h;
    if (k == 0 && mapped) intervals.push_back(apply_rule(0, 0.0, 1.0));
    else intervals.push_back(apply_rule(1, a, b));
  }

  auto by_error = [&](std::size_t l, std::size_t r) { return intervals[l].error < intervals[r].error; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_error)> heap(by_error);
  std::vector<bool> alive(intervals.size(), true);
  for (std::size_t k = 0; k < intervals.size(); ++k)
    if (!intervals[k].settled) heap.push(k);

  auto totals = [&]() {
    // Neumaier summation in index order over live intervals.
    Complex sum = 0.0, comp = 0.0;
    double err = 0.0;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      if (!alive[k]) continue;
      const Complex v = intervals[k].value;
      const Complex t = sum + v;
      auto fix = [](double s, double x, double tt) {
        return std::fabs(s) >= std::fabs(x) ? (s - tt) + x : (x - tt) + s;
      };
      comp += Complex(fix(sum.real(), v.real(), t.real()), fix(sum.imag(), v.imag(), t.imag()));
      sum = t;
      err += intervals[k].error;
    }
    return std::pair<Complex, double>(sum + comp, err);
  };

  // Running totals for the stopping test; exact totals are recomputed at the end.
  Complex running_value = 0.0;
  double running_error = 0.0;
  for (const auto& iv : intervals) {
    running_value += iv.value;
    running_error += iv.error;
  }

  bool exhausted = false;
  std::size_t iterations = 0;
  while (!heap.empty()) {
    if (running_error <= tol * std::max(std::abs(running_value), options.magnitude_floor)) break;
    if (evaluations + 30 > options.max_evaluations) {
      exhausted = true;
      break;
    }
    // Periodically refresh the running totals to stop drift.
    if (++iterations % 256 == 0) std::tie(running_value, running_error) = totals();

    const std::size_t k = heap.top();
    heap.pop();
    const Interval parent = intervals[k];
    alive[k] = false;
    const double mid = 0.5 * (parent.a + parent.b);
    const Interval left = apply_rule(parent.segment, parent.a, mid);
    const Interval right = apply_rule(parent.segment, mid, parent.b);
    running_value += left.value + right.value - parent.value;
    running_error += left.error + right.error - parent.error;
    for (const Interval& child : {left, right}) {
      intervals.push_back(child);
      alive.push_back(true);
      if (!child.settled) heap.push(intervals.size() - 1);
    }
  }

  // Sum in a fixed order: by segment, then by left endpoint.
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < intervals.size(); ++k)
    if (alive[k]) order.push_back(k);
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    if (intervals[l].segment != intervals[r].segment) return intervals[l].segment < intervals[r].segment;
    return intervals[l].a < intervals[r].a;
  });
  std::vector<Interval> sorted;
  sorted.reserve(order.size());
  for (std::size_t k : order) sorted.push_back(intervals[k]);
  intervals = std::move(sorted);
  alive.assign(intervals.size(), true);
  const auto [value, error] = totals();

  IntegralResult result;
  result.value = value;
  result.error_estimate = error;
  result.evaluations = evaluations;
  result.converged = error <= tol * std::max(1.0, std::abs(value));
  if (!result.converged && options.throw_on_failure) {
    throw NoConvergence(std::string("integrate_semi_infinite: ") +
                        (exhausted ? "evaluation budget exhausted" : "roundoff limits the attainable accuracy") +
                        " (error estimate " + std::to_string(error) + ")");
  }
  return result;
}

}  // namespace hyperlap
