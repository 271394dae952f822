#include <cmath>
#include <cstdio>
#include <memory>

#include "hyperlap/catalog.hpp"
#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

using C = Complex;
constexpr double kLn2 = 0.69314718055994530942;
constexpr C kI{0.0, 1.0};

// log cosh along the ray from 0, so powers follow the branch that is
// continuous from cosh(0) = 1.
C log_cosh(C z) {
  if (z.real() < 0.0) z = -z;
  return z + std::log(1.0 + std::exp(-2.0 * z)) - kLn2;
}

double log_sinh(double x) {
  if (x < 1.0) return std::log(std::sinh(x));
  return x + std::log1p(-std::exp(-2.0 * x)) - kLn2;
}

C ipow(C z, int k) {
  C r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

// sum_k c_k kind_k(multiple_k * base * x) for integer multiples, evaluated
// as a logarithm so large arguments do not overflow. Near x = 0 the sum is
// expanded in its Taylor series with moments sum_k c_k multiple_k^j, which
// avoids the cancellation between the cosh/sinh terms.
class PowerOfSum {
 public:
  struct Term {
    TermKind kind;
    double coefficient;
    int multiple;
  };

  PowerOfSum(std::vector<Term> terms, double base) : terms_(std::move(terms)), base_(base) {
    for (const auto& t : terms_) max_multiple_ = std::max(max_multiple_, t.multiple);
    moments_.assign(kMoments, 0.0);
    scale_.assign(kMoments, 0.0);
    for (const auto& t : terms_) {
      double kj = 1.0;
      for (int j = 0; j < kMoments; ++j) {
        const bool used = (t.kind == TermKind::Const && j == 0) || (t.kind == TermKind::Cosh && j % 2 == 0) ||
                          (t.kind == TermKind::Sinh && j % 2 == 1);
        if (used) {
          moments_[j] += t.coefficient * kj;
          scale_[j] += std::fabs(t.coefficient) * kj;
        }
        kj *= t.multiple;
      }
    }
    double abs_sum = 0.0;
    for (const auto& t : terms_) abs_sum += std::fabs(t.coefficient);
    bound_.assign(kMoments, abs_sum);
    for (int j = 1; j < kMoments; ++j) bound_[j] = bound_[j - 1] * max_multiple_;
    leading_ = 0;
    while (leading_ + 1 < kMoments && std::fabs(moments_[leading_]) <= 1e-12 * scale_[leading_]) {
      moments_[leading_] = 0.0;
      ++leading_;
    }
  }

  int leading_order() const { return leading_; }
  double growth() const { return max_multiple_ * base_; }

  double log_value(double x) const {
    const double y = base_ * x;
    double sum = 0.0;
    double shift = 0.0;
    if (max_multiple_ * y <= 4.0) {
      // S = y^L sum_{j>=L} M_j y^{j-L} / j!
      double pw = 1.0;
      for (int j = 2; j <= leading_; ++j) pw /= j;
      for (int j = leading_; j < kMoments; ++j) {
        if (j > leading_) pw *= y / j;
        const double term = moments_[j] * pw;
        sum += term;
        if (j > leading_ && bound_[j] * pw <= 1e-18 * std::fabs(sum)) break;
      }
      shift = leading_ > 0 ? leading_ * std::log(y) : 0.0;
    } else {
      const double top = max_multiple_ * y;
      for (const auto& t : terms_) {
        const double k = t.multiple * y;
        switch (t.kind) {
          case TermKind::Cosh: sum += t.coefficient * 0.5 * (std::exp(k - top) + std::exp(-k - top)); break;
          case TermKind::Sinh: sum += t.coefficient * 0.5 * (std::exp(k - top) - std::exp(-k - top)); break;
          default: sum += t.coefficient * std::exp(-top); break;
        }
      }
      shift = top;
    }
    if (!(sum > 0.0) || !(x > 0.0))
      throw IntegrandDomainError("integrand base is not positive at x = " + std::to_string(x));
    return shift + std::log(sum);
  }

 private:
  static constexpr int kMoments = 90;
  std::vector<Term> terms_;
  double base_;
  int max_multiple_ = 0;
  int leading_ = 0;
  std::vector<double> moments_;
  std::vector<double> scale_;  // sum_k |c_k| multiple_k^j over the parity of j
  std::vector<double> bound_;  // sum_k |c_k| max_multiple^j, bounds the tail
};

double real_frequency(C f, const char* name) {
  if (f.imag() != 0.0 || !(f.real() > 0.0))
    throw IntegrandDomainError(std::string("oracle needs a real positive ") + name);
  return f.real();
}

// e^{-sx} S(x)^ν with S given by its literal finite-series coefficients.
OracleProblem laplace_of_power(std::vector<PowerOfSum::Term> terms, double base, C s, C nu) {
  auto sum = std::make_shared<const PowerOfSum>(std::move(terms), base);
  OracleProblem p;
  p.integrand = [sum, s, nu](double x) { return std::exp(nu * sum->log_value(x) - s * x); };
  p.decay_rate = s.real() - nu.real() * sum->growth();
  p.max_frequency = std::fabs(s.imag()) + std::fabs(nu.imag()) * sum->growth();
  const int lead = sum->leading_order();
  if (lead > 0) {
    const double sigma = lead * nu.real();
    if (nu.imag() != 0.0 || sigma < 0.0 || sigma != std::round(sigma)) p.endpoint_exponent = sigma;
  }
  return p;
}

std::vector<PowerOfSum::Term> first_series(int m) {  // cosh^{2m} family
  std::vector<PowerOfSum::Term> t;
  for (int i = 0; i < m; ++i) t.push_back({TermKind::Cosh, binomial(2 * m, i), 2 * m - 2 * i});
  t.push_back({TermKind::Const, 0.5 * binomial(2 * m, m), 0});
  return t;
}

std::vector<PowerOfSum::Term> second_series(int n) {  // sinh^{2n} family
  std::vector<PowerOfSum::Term> t;
  for (int j = 0; j < n; ++j) t.push_back({TermKind::Cosh, (j % 2 ? -1.0 : 1.0) * binomial(2 * n, j), 2 * n - 2 * j});
  t.push_back({TermKind::Const, (n % 2 ? -0.5 : 0.5) * binomial(2 * n, n), 0});
  return t;
}

std::vector<PowerOfSum::Term> third_series(int p) {  // sinh^{2p+1} family
  std::vector<PowerOfSum::Term> t;
  for (int k = 0; k <= p; ++k)
    t.push_back({TermKind::Sinh, (k % 2 ? -1.0 : 1.0) * binomial(2 * p + 1, k), 2 * p + 1 - 2 * k});
  return t;
}

std::vector<PowerOfSum::Term> fourth_series(int q) {  // cosh^{2q+1} family
  std::vector<PowerOfSum::Term> t;
  for (int l = 0; l <= q; ++l) t.push_back({TermKind::Cosh, binomial(2 * q + 1, l), 2 * q + 1 - 2 * l});
  return t;
}

// cosh(2αt) / cosh^{2β}(pt)
OracleProblem cosh_ratio(C alpha, C beta, C p) {
  OracleProblem o;
  o.integrand = [=](double t) { return std::exp(log_cosh(2.0 * alpha * t) - 2.0 * beta * log_cosh(p * t)); };
  o.decay_rate = 2.0 * (beta * p).real() - 2.0 * std::fabs(alpha.real());
  o.max_frequency = 2.0 * std::fabs(alpha.imag()) + 2.0 * std::fabs((beta * p).imag());
  return o;
}

// cos(ax) / cosh^ν(βx)
OracleProblem cos_over_cosh_power(C a, C beta, C nu) {
  OracleProblem o;
  o.integrand = [=](double x) {
    const C l = nu * log_cosh(beta * x);
    return 0.5 * (std::exp(kI * a * x - l) + std::exp(-kI * a * x - l));
  };
  o.decay_rate = (nu * beta).real() - std::fabs(a.imag());
  o.max_frequency = std::fabs(a.real()) + std::fabs((nu * beta).imag());
  return o;
}

// e^{-sx} trig^k(fx)
OracleProblem trig_power(TermKind kind, int k, C f, C s) {
  OracleProblem o;
  o.integrand = [=](double x) {
    const C arg = f * x;
    return ipow(kind == TermKind::Sin ? std::sin(arg) : std::cos(arg), k) * std::exp(-s * x);
  };
  o.decay_rate = s.real() - k * std::fabs(f.imag());
  o.max_frequency = std::fabs(s.imag()) + k * std::fabs(f.real());
  return o;
}

ParamSpec P(const char* name, const char* ascii, ParamKind kind = ParamKind::Complex) { return {name, ascii, kind}; }
ParamSpec I(const char* name) { return {name, name, ParamKind::Integer}; }
ParamSpec R(const char* name, const char* ascii) { return {name, ascii, ParamKind::Real}; }

std::vector<ParamSet> grid(const std::vector<std::string>& names, const std::vector<std::vector<C>>& rows) {
  std::vector<ParamSet> out;
  for (const auto& row : rows) {
    ParamSet ps;
    for (std::size_t i = 0; i < names.size(); ++i) ps.set(names[i], row.at(i));
    out.push_back(ps);
  }
  return out;
}

std::vector<std::string> names_of(const std::vector<ParamSpec>& params) {
  std::vector<std::string> out;
  for (const auto& p : params) out.push_back(p.name);
  return out;
}

ConditionResult cond(std::string text, bool holds, bool enforced = true) { return {std::move(text), enforced, holds}; }

ConditionResult not_pole(std::string expr, C value) {
  return cond(expr + " ∉ {0, -1, -2, ...}", !is_nonpositive_integer(value));
}

// --- section 2 -------------------------------------------------------------

void add_section2(std::vector<CatalogEntry>& out) {
  const std::vector<std::vector<C>> cosh_grid = {
      {3.0, 1.3, 0.7}, {2.0, 1.0, 0.5}, {4.0, 1.0, 1.0}, {3.0, 2.0, -0.3}, {5.0, 1.0, 2.0},
      {1.0, 0.5, 0.4}, {6.0, 3.0, 1.5}, {3.0, 1.0, 0.1}, {C(3, 1), 1.0, 0.6}, {4.0, 1.0, C(0.5, 0.5)}};
  const std::vector<std::vector<C>> sinh_grid = {
      {3.0, 1.0, 1.0}, {3.0, 1.0, 0.5}, {2.0, 1.0, -0.5}, {4.0, 2.0, 1.5}, {5.0, 1.0, 3.0},
      {1.0, 0.5, 0.6}, {3.0, 0.7, 2.2}, {6.0, 1.5, 0.25}, {C(3, 1), 1.0, 0.5}, {4.0, 1.0, C(0.8, 0.3)}};

  auto cosh_entry = [&](const char* id, const char* eq, const char* rhs, bool shifted) {
    CatalogEntry e;
    e.id = id;
    e.section = 2;
    e.equation = eq;
    e.description = std::string("∫ e^{-sx} [cosh(γx) - 1]^ν dx = ") + rhs;
    e.params = {P("s", "s"), P("γ", "gamma"), P("ν", "nu")};
    e.conditions = [](const ParamSet& p) { return cosh_minus_one_conditions(p["s"], p["γ"], p["ν"]); };
    e.closed_form = [shifted](const ParamSet& p, Check c) {
      return shifted ? cosh_minus_one_beta_shifted(p["s"], p["γ"], p["ν"], c)
                     : cosh_minus_one_beta(p["s"], p["γ"], p["ν"], c);
    };
    e.oracle = [](const ParamSet& p) {
      return laplace_of_power({{TermKind::Cosh, 1.0, 1}, {TermKind::Const, -1.0, 0}}, real_frequency(p["γ"], "γ"),
                              p["s"], p["ν"]);
    };
    e.default_grid = grid(names_of(e.params), cosh_grid);
    e.scaling = {"s", "γ"};
    out.push_back(std::move(e));
  };
  cosh_entry("eq-38", "Eq. (38)", "2ν B(s/γ - ν, 2ν) / (2^ν (s + νγ))", false);
  cosh_entry("eq-39", "Eq. (39)", "B(s/γ - ν, 2ν + 1) / (2^ν γ)", true);

  auto sinh_entry = [&](const char* id, const char* eq, const char* rhs, bool shifted) {
    CatalogEntry e;
    e.id = id;
    e.section = 2;
    e.equation = eq;
    e.description = std::string("∫ e^{-sx} sinh^ν(λx) dx = ") + rhs;
    e.params = {P("s", "s"), P("λ", "lambda"), P("ν", "nu")};
    e.conditions = [](const ParamSet& p) { return sinh_power_conditions(p["s"], p["λ"], p["ν"]); };
    e.closed_form = [shifted](const ParamSet& p, Check c) {
      return shifted ? sinh_power_beta_shifted(p["s"], p["λ"], p["ν"], c) : sinh_power_beta(p["s"], p["λ"], p["ν"], c);
    };
    e.oracle = [](const ParamSet& p) {
      return laplace_of_power({{TermKind::Sinh, 1.0, 1}}, real_frequency(p["λ"], "λ"), p["s"], p["ν"]);
    };
    e.default_grid = grid(names_of(e.params), sinh_grid);
    e.scaling = {"s", "λ"};
    out.push_back(std::move(e));
  };
  sinh_entry("eq-40", "Eq. (40)", "ν B(s/(2λ) - ν/2, ν) / (2^ν (s + λν))", false);
  sinh_entry("eq-41", "Eq. (41)", "B(s/(2λ) - ν/2, 1 + ν) / (2^{1+ν} λ)", true);

  {
    CatalogEntry e;
    e.id = "entry-I";
    e.section = 2;
    e.equation = "Eq. (42)";
    e.description =
        "∫ e^{-sx} [Σ_{i<m} C(2m,i) cosh((2m-2i)βx) + C(2m,m)/2]^ν dx = "
        "2F1(-2mν, s/(2β)-mν; s/(2β)-mν+1; -1) / (2^ν (s - 2mνβ))";
    e.params = {P("s", "s"), P("β", "beta"), P("ν", "nu"), I("m")};
    e.conditions = [](const ParamSet& p) { return entry_I_conditions(p["s"], p["β"], p["ν"], p.integer("m")); };
    e.closed_form = [](const ParamSet& p, Check c) { return entry_I(p["s"], p["β"], p["ν"], p.integer("m"), c); };
    e.oracle = [](const ParamSet& p) {
      return laplace_of_power(first_series(p.integer("m")), real_frequency(p["β"], "β"), p["s"], p["ν"]);
    };
    e.default_grid = grid(names_of(e.params),
                          {{4.0, 1.0, 1.0, 1.0}, {4.0, 1.0, 0.0, 1.0}, {6.0, 0.5, 1.5, 2.0}, {3.0, 1.0, 0.5, 1.0},
                           {5.0, 0.7, 0.3, 3.0}, {2.5, 1.0, -0.4, 1.0}, {4.0, 0.8, 1.3, 1.0}, {7.0, 1.2, 0.6, 2.0},
                           {3.0, 0.5, 2.5, 1.0}, {C(4, 1), 1.0, 0.7, 1.0}, {5.0, 0.8, C(0.5, 0.3), 2.0}});
    e.scaling = {"s", "β"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "entry-II";
    e.section = 2;
    e.equation = "Eq. (43)";
    e.description =
        "∫ e^{-sx} [Σ_{j<n} (-1)^j C(2n,j) cosh((2n-2j)γx) + (-1)^n C(2n,n)/2]^ν dx = "
        "2^{1-ν} nν B(s/(2γ) - nν, 2nν) / (s + 2nνγ)";
    e.params = {P("s", "s"), P("γ", "gamma"), P("ν", "nu"), I("n")};
    e.conditions = [](const ParamSet& p) { return entry_II_conditions(p["s"], p["γ"], p["ν"], p.integer("n")); };
    e.closed_form = [](const ParamSet& p, Check c) { return entry_II(p["s"], p["γ"], p["ν"], p.integer("n"), c); };
    e.oracle = [](const ParamSet& p) {
      return laplace_of_power(second_series(p.integer("n")), real_frequency(p["γ"], "γ"), p["s"], p["ν"]);
    };
    e.default_grid = grid(names_of(e.params),
                          {{5.0, 1.0, 1.0, 1.0}, {3.0, 0.65, 0.7, 1.0}, {4.0, 1.0, 0.5, 2.0}, {6.0, 0.5, 1.5, 3.0},
                           {2.0, 1.0, 0.25, 1.0}, {3.0, 1.0, -0.3, 1.0}, {5.0, 0.8, 2.0, 1.0}, {4.0, 0.6, 0.8, 2.0},
                           {C(4, 2), 1.0, 0.6, 1.0}, {5.0, 0.7, C(0.8, 0.4), 1.0}});
    e.scaling = {"s", "γ"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "entry-III";
    e.section = 2;
    e.equation = "Eq. (44)";
    e.description =
        "∫ e^{-sx} [Σ_{k<=p} (-1)^k C(2p+1,k) sinh((2p+1-2k)λx)]^ν dx = "
        "(2p+1)ν B(s/(2λ) - pν - ν/2, (2p+1)ν) / (2^ν (s + (2p+1)νλ))";
    e.params = {P("s", "s"), P("λ", "lambda"), P("ν", "nu"), I("p")};
    e.conditions = [](const ParamSet& p) { return entry_III_conditions(p["s"], p["λ"], p["ν"], p.integer("p")); };
    e.closed_form = [](const ParamSet& p, Check c) { return entry_III(p["s"], p["λ"], p["ν"], p.integer("p"), c); };
    e.oracle = [](const ParamSet& p) {
      return laplace_of_power(third_series(p.integer("p")), real_frequency(p["λ"], "λ"), p["s"], p["ν"]);
    };
    e.default_grid = grid(names_of(e.params),
                          {{3.0, 1.0, 1.0, 0.0}, {3.0, 1.0, 0.5, 0.0}, {4.0, 1.0, 0.7, 1.0}, {6.0, 0.5, 1.2, 2.0},
                           {2.0, 1.0, -0.5, 0.0}, {5.0, 0.8, 2.0, 1.0}, {3.0, 0.4, 1.5, 1.0}, {4.0, 1.0, 0.3, 2.0},
                           {C(3, 1), 1.0, 0.8, 0.0}, {5.0, 0.6, C(0.6, 0.5), 1.0}});
    e.scaling = {"s", "λ"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "entry-IV";
    e.section = 2;
    e.equation = "Eq. (45)";
    e.description =
        "∫ e^{-sx} [Σ_{l<=q} C(2q+1,l) cosh((2q+1-2l)μx)]^ν dx = "
        "2F1(-(2q+1)ν, s/(2μ)-qν-ν/2; s/(2μ)-qν-ν/2+1; -1) / (2^ν (s - (2q+1)νμ))";
    e.params = {P("s", "s"), P("μ", "mu"), P("ν", "nu"), I("q")};
    e.conditions = [](const ParamSet& p) { return entry_IV_conditions(p["s"], p["μ"], p["ν"], p.integer("q")); };
    e.closed_form = [](const ParamSet& p, Check c) { return entry_IV(p["s"], p["μ"], p["ν"], p.integer("q"), c); };
    e.oracle = [](const ParamSet& p) {
      return laplace_of_power(fourth_series(p.integer("q")), real_frequency(p["μ"], "μ"), p["s"], p["ν"]);
    };
    e.default_grid = grid(names_of(e.params),
                          {{4.0, 1.0, 2.0, 0.0}, {3.0, 1.0, 0.5, 0.0}, {4.0, 0.5, 1.5, 1.0}, {5.0, 0.4, 0.7, 2.0},
                           {2.0, 1.0, -1.5, 0.0}, {3.0, 0.3, 2.5, 1.0}, {6.0, 1.0, 1.2, 1.0}, {4.0, 0.7, -0.3, 2.0},
                           {C(3, 2), 1.0, 0.5, 0.0}, {5.0, 0.5, C(1, 0.5), 1.0}});
    e.scaling = {"s", "μ"};
    out.push_back(std::move(e));
  }
}

// --- section 3 -------------------------------------------------------------

void add_section3(std::vector<CatalogEntry>& out) {
  {
    CatalogEntry e;
    e.id = "novel-V";
    e.section = 3;
    e.equation = "Eq. (46)";
    e.description = "∫ cosh(2αt) / cosh^{2β}(pt) dt = 4^{β-1} B(β + α/p, β - α/p) / p";
    e.params = {P("α", "alpha"), P("β", "beta"), P("p", "p")};
    e.conditions = [](const ParamSet& p) { return novel_V_conditions(p["α"], p["β"], p["p"]); };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_V(p["α"], p["β"], p["p"], c); };
    e.oracle = [](const ParamSet& p) { return cosh_ratio(p["α"], p["β"], p["p"]); };
    e.default_grid = grid(names_of(e.params),
                          {{0.0, 1.0, 1.0}, {0.0, 1.5, 1.0}, {0.25, 0.5, 1.0}, {0.3, 1.0, 1.2}, {-0.4, 0.8, 1.0},
                           {0.0, 0.5, 2.0}, {1.0, 1.5, 1.5}, {0.5, 2.0, 0.7}, {0.1, 0.3, 1.0},
                           {C(0.2, 0.1), 1.0, 1.0}, {0.3, C(0.8, 0.4), 1.5}});
    e.scaling = {"α", "p"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "novel-VI";
    e.section = 3;
    e.equation = "Eq. (47)";
    e.description = "∫ sinh^α(x) / cosh^β(x) dx = B((1+α)/2, (β-α)/2) / 2";
    e.params = {P("α", "alpha"), P("β", "beta")};
    e.conditions = [](const ParamSet& p) { return novel_VI_conditions(p["α"], p["β"]); };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_VI(p["α"], p["β"], c); };
    e.oracle = [](const ParamSet& p) {
      const C alpha = p["α"], beta = p["β"];
      OracleProblem o;
      o.integrand = [=](double x) { return std::exp(alpha * log_sinh(x) - beta * log_cosh(x)); };
      o.decay_rate = (beta - alpha).real();
      o.max_frequency = std::fabs((beta - alpha).imag());
      if (alpha.imag() != 0.0 || !is_nonnegative_integer(alpha)) o.endpoint_exponent = alpha.real();
      return o;
    };
    e.default_grid = grid(names_of(e.params), {{0.0, 2.0}, {1.0, 3.0}, {0.0, 1.0}, {0.5, 1.5}, {-0.5, 1.0},
                                               {2.0, 3.5}, {1.5, 2.0}, {0.3, 2.7}, {3.0, 5.0},
                                               {C(0.5, 0.3), 2.0}, {1.0, C(2.5, 0.5)}});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "novel-VII";
    e.section = 3;
    e.equation = "Eq. (48)";
    e.description = "∫ cos(ax) / cosh^ν(βx) dx = 2^{ν-2} Γ(ν/2 + ia/(2β)) Γ(ν/2 - ia/(2β)) / (β Γ(ν))";
    e.params = {P("a", "a"), P("β", "beta"), P("ν", "nu")};
    e.conditions = [](const ParamSet& p) { return novel_VII_conditions(p["a"], p["β"], p["ν"]); };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_VII(p["a"], p["β"], p["ν"], c); };
    e.oracle = [](const ParamSet& p) { return cos_over_cosh_power(p["a"], p["β"], p["ν"]); };
    e.default_grid = grid(names_of(e.params),
                          {{0.0, 1.0, 2.0}, {1.0, 1.0, 2.0}, {1.0, 1.0, 1.0}, {1.0, 2.0, 1.0}, {2.0, 1.0, 1.5},
                           {0.5, 0.5, 3.0}, {3.0, 1.5, 2.5}, {0.0, 2.0, 0.5}, {1.5, 1.0, 0.8},
                           {C(0.5, 0.3), 1.0, 1.5}, {1.0, 1.0, C(1.2, 0.5)}});
    e.scaling = {"a", "β"};
    out.push_back(std::move(e));
  }
}

// --- section 4 -------------------------------------------------------------

void add_power_entries(std::vector<CatalogEntry>& out) {
  struct Spec {
    const char* id;
    const char* equation;
    TermKind kind;
    const char* freq;
    const char* freq_ascii;
    const char* index;
    bool odd;
    bool closed;  // hypergeometric/Pochhammer form rather than the finite sum
    const char* description;
    std::vector<std::vector<C>> rows;
  };
  const std::vector<std::vector<C>> cos_even = {
      {1.0, 1.0, 1.0}, {2.0, 1.0, 1.0}, {1.5, 0.7, 2.0}, {3.0, 1.2, 3.0}, {0.5, 0.3, 4.0},
      {2.0, 2.0, 2.0}, {1.0, 0.5, 3.0}, {4.0, 1.0, 1.0}, {C(1, 1), 0.8, 2.0}, {2.0, C(0.7, 0.2), 2.0}};
  const std::vector<std::vector<C>> sin_even = {
      {1.0, 1.0, 1.0}, {2.0, 0.5, 2.0}, {0.8, 1.3, 3.0}, {3.0, 2.0, 1.0}, {1.5, 0.4, 4.0},
      {2.5, 1.0, 2.0}, {1.0, 0.9, 1.0}, {0.6, 0.6, 2.0}, {C(1.5, 0.5), 1.0, 1.0}, {2.0, C(1, -0.2), 2.0}};
  const std::vector<std::vector<C>> sin_odd = {
      {2.0, 1.0, 1.0}, {1.0, 1.0, 0.0}, {1.5, 0.7, 2.0}, {3.0, 1.5, 1.0}, {0.7, 0.5, 3.0},
      {2.0, 2.0, 0.0}, {1.0, 0.8, 2.0}, {4.0, 1.1, 1.0}, {C(2, 1), 1.0, 1.0}, {3.0, C(0.6, 0.3), 1.0}};
  const std::vector<std::vector<C>> cos_odd = {
      {1.0, 2.0, 0.0}, {1.1, 0.6, 2.0}, {2.0, 1.0, 1.0}, {0.8, 0.4, 3.0}, {3.0, 1.5, 0.0},
      {1.5, 0.9, 1.0}, {2.5, 2.0, 2.0}, {1.0, 1.0, 3.0}, {C(1, 0.5), 1.0, 1.0}, {2.0, C(0.5, 0.2), 2.0}};

  const std::vector<Spec> specs = {
      {"eq-74", "Eq. (74)", TermKind::Cos, "β", "beta", "m", false, false,
       "∫ e^{-sx} cos^{2m}(βx) dx as the finite sum of s/((2m-2i)²β² + s²) terms", cos_even},
      {"eq-75", "Eq. (75)", TermKind::Cos, "β", "beta", "m", false, true,
       "∫ e^{-sx} cos^{2m}(βx) dx = 2F1(-2m, b; b+1; -1) / (2^{2m}(s - 2imβ)), b = (-is - 2mβ)/(2β)", cos_even},
      {"eq-76", "Eq. (76)", TermKind::Sin, "γ", "gamma", "n", false, false,
       "∫ e^{-sx} sin^{2n}(γx) dx as the finite sum of s/((2n-2j)²γ² + s²) terms", sin_even},
      {"eq-77", "Eq. (77)", TermKind::Sin, "γ", "gamma", "n", false, true,
       "∫ e^{-sx} sin^{2n}(γx) dx = (2n)! / (2^{2n}(s + 2inγ)(1 + is/(2γ))_n (-is/(2γ))_n)", sin_even},
      {"eq-78", "Eq. (78)", TermKind::Sin, "λ", "lambda", "p", true, false,
       "∫ e^{-sx} sin^{2p+1}(λx) dx as the finite sum of (2p+1-2k)λ/((2p+1-2k)²λ² + s²) terms", sin_odd},
      {"eq-79", "Eq. (79)", TermKind::Sin, "λ", "lambda", "p", true, true,
       "∫ e^{-sx} sin^{2p+1}(λx) dx = (2p+1)! λ / (2^{2p}(s - iλ)(s + i(2p+1)λ)((3λ+is)/(2λ))_p ((λ-is)/(2λ))_p)",
       sin_odd},
      {"eq-80", "Eq. (80)", TermKind::Cos, "μ", "mu", "q", true, false,
       "∫ e^{-sx} cos^{2q+1}(μx) dx as the finite sum of s/((2q+1-2l)²μ² + s²) terms", cos_odd},
      {"eq-81", "Eq. (81)", TermKind::Cos, "μ", "mu", "q", true, true,
       "∫ e^{-sx} cos^{2q+1}(μx) dx = 2F1(-2q-1, b; b+1; -1) / (2^{2q+1}(s - i(2q+1)μ)), b = (-is - (2q+1)μ)/(2μ)",
       cos_odd},
  };

  for (const Spec& sp : specs) {
    CatalogEntry e;
    e.id = sp.id;
    e.section = 4;
    e.equation = sp.equation;
    e.description = sp.description;
    e.params = {P("s", "s"), P(sp.freq, sp.freq_ascii), I(sp.index)};
    const std::string f = sp.freq, idx = sp.index;
    const bool odd = sp.odd;
    const TermKind kind = sp.kind;
    auto exponent = [idx, odd](const ParamSet& p) { return 2 * p.integer(idx) + (odd ? 1 : 0); };
    e.conditions = [=](const ParamSet& p) {
      const int k = p.integer(idx);
      Conditions c{cond(idx + (odd ? " >= 0" : " >= 1"), odd ? k >= 0 : k >= 1)};
      const std::string bound = odd ? "(2" + idx + "+1)" : "2" + idx;
      c.push_back(cond("Re(s) > " + bound + "|Im(" + f + ")|",
                       p["s"].real() > exponent(p) * std::fabs(p[f].imag())));
      return c;
    };
    const std::string id = sp.id;
    e.closed_form = [=](const ParamSet& p, Check) -> C {
      const C s = p["s"], w = p[f];
      const int k = p.integer(idx);
      if (id == "eq-74") return cos_even_power_sum(s, w, k);
      if (id == "eq-75") return cos_even_power_2f1(s, w, k);
      if (id == "eq-76") return sin_even_power_sum(s, w, k);
      if (id == "eq-77") return sin_even_power_pochhammer(s, w, k);
      if (id == "eq-78") return sin_odd_power_sum(s, w, k);
      if (id == "eq-79") return sin_odd_power_pochhammer(s, w, k);
      if (id == "eq-80") return cos_odd_power_sum(s, w, k);
      return cos_odd_power_2f1(s, w, k);
    };
    e.oracle = [=](const ParamSet& p) { return trig_power(kind, exponent(p), p[f], p["s"]); };
    e.default_grid = grid(names_of(e.params), sp.rows);
    e.scaling = {"s", f};
    out.push_back(std::move(e));
  }
}

struct ProductFactor {
  TermKind kind;
  char index;  // exponent is 2*index or 2*index+1
  bool odd;
  const char* freq;
};

// The 10 two-factor, 20 three-factor and 36 four-factor products.
const std::vector<std::vector<ProductFactor>>& product_table() {
  constexpr TermKind S = TermKind::Sin, K = TermKind::Cos;
  static const std::vector<std::vector<ProductFactor>> table = {
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 1, "γ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 0, "γ"}},
      {{S, 'm', 0, "β"}, {S, 'n', 0, "γ"}},
      {{S, 'm', 1, "β"}, {S, 'n', 1, "γ"}},
      {{S, 'm', 0, "β"}, {S, 'n', 1, "γ"}},
      {{K, 'm', 0, "β"}, {K, 'n', 0, "γ"}},
      {{K, 'm', 1, "β"}, {K, 'n', 1, "γ"}},
      {{K, 'm', 0, "β"}, {K, 'n', 1, "γ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 0, "λ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 1, "λ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 0, "λ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 1, "λ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 0, "λ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 1, "λ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 0, "λ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 1, "λ"}},
      {{S, 'm', 0, "β"}, {K, 'p', 1, "γ"}, {S, 'n', 0, "λ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 1, "λ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 1, "λ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 0, "λ"}},
      {{S, 'm', 0, "β"}, {S, 'n', 0, "γ"}, {S, 'p', 0, "λ"}},
      {{S, 'm', 0, "β"}, {S, 'n', 0, "γ"}, {S, 'p', 1, "λ"}},
      {{S, 'm', 1, "β"}, {S, 'n', 1, "γ"}, {S, 'p', 0, "λ"}},
      {{S, 'm', 1, "β"}, {S, 'n', 1, "γ"}, {S, 'p', 1, "λ"}},
      {{K, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 0, "λ"}},
      {{K, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 1, "λ"}},
      {{K, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 0, "λ"}},
      {{K, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 1, "λ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 0, "λ"}, {S, 'q', 0, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 0, "λ"}, {S, 'q', 1, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 0, "λ"}, {K, 'q', 0, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 0, "λ"}, {K, 'q', 1, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 1, "λ"}, {S, 'q', 1, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 1, "λ"}, {K, 'q', 0, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 1, "λ"}, {K, 'q', 1, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 0, "λ"}, {K, 'q', 0, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 0, "λ"}, {K, 'q', 1, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 1, "λ"}, {K, 'q', 1, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 0, "λ"}, {S, 'q', 0, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 0, "λ"}, {S, 'q', 1, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 0, "λ"}, {K, 'q', 1, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 1, "λ"}, {S, 'q', 1, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 1, "λ"}, {K, 'q', 0, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 1, "λ"}, {K, 'q', 1, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 0, "λ"}, {K, 'q', 0, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 0, "λ"}, {K, 'q', 1, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 1, "λ"}, {K, 'q', 1, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 0, "λ"}, {S, 'q', 0, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 0, "λ"}, {S, 'q', 1, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 1, "γ"}, {S, 'p', 0, "λ"}, {K, 'q', 1, "μ"}},
      {{S, 'm', 0, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 1, "λ"}, {K, 'q', 1, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 1, "λ"}, {S, 'q', 1, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 0, "γ"}, {S, 'p', 1, "λ"}, {K, 'q', 0, "μ"}},
      {{S, 'm', 1, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 0, "λ"}, {K, 'q', 0, "μ"}},
      {{S, 'm', 0, "β"}, {S, 'n', 0, "γ"}, {S, 'p', 0, "λ"}, {S, 'q', 0, "μ"}},
      {{S, 'm', 0, "β"}, {S, 'n', 0, "γ"}, {S, 'p', 0, "λ"}, {S, 'q', 1, "μ"}},
      {{S, 'm', 0, "β"}, {S, 'n', 0, "γ"}, {S, 'p', 1, "λ"}, {S, 'q', 1, "μ"}},
      {{S, 'm', 1, "β"}, {S, 'n', 1, "γ"}, {S, 'p', 0, "λ"}, {S, 'q', 1, "μ"}},
      {{S, 'm', 1, "β"}, {S, 'n', 1, "γ"}, {S, 'p', 1, "λ"}, {S, 'q', 1, "μ"}},
      {{K, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 0, "λ"}, {K, 'q', 0, "μ"}},
      {{K, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 0, "λ"}, {K, 'q', 1, "μ"}},
      {{K, 'm', 0, "β"}, {K, 'n', 0, "γ"}, {K, 'p', 1, "λ"}, {K, 'q', 1, "μ"}},
      {{K, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 0, "λ"}, {K, 'q', 1, "μ"}},
      {{K, 'm', 1, "β"}, {K, 'n', 1, "γ"}, {K, 'p', 1, "λ"}, {K, 'q', 1, "μ"}},
  };
  return table;
}

const char* ascii_of(const std::string& greek) {
  if (greek == "β") return "beta";
  if (greek == "γ") return "gamma";
  if (greek == "λ") return "lambda";
  return "mu";
}

void add_product_entries(std::vector<CatalogEntry>& out) {
  const auto& table = product_table();
  const double freqs[] = {0.5, 0.8, 1.0, 1.3, 1.7, 2.1, 0.6, 1.1, 0.9, 1.4};
  const double svals[] = {1.0, 1.5, 2.0, 0.8, 2.5, 3.0, 1.2, 0.7};
  for (std::size_t e_idx = 0; e_idx < table.size(); ++e_idx) {
    const auto factors = table[e_idx];
    CatalogEntry e;
    char id[16];
    std::snprintf(id, sizeof id, "prod-%02zu", e_idx + 1);
    e.id = id;
    e.section = 4;
    if (e_idx == 0) e.equation = "Eq. (86)";
    else if (e_idx + 1 == table.size()) e.equation = "Eq. (87)";
    else e.equation = "Eqs. (86)-(87) #" + std::to_string(e_idx + 1);

    std::string integrand = "e^{-sx}";
    e.params = {P("s", "s")};
    for (const auto& f : factors) {
      const std::string idx(1, f.index);
      integrand += std::string(" ") + (f.kind == TermKind::Sin ? "sin" : "cos") + "^{2" + idx + (f.odd ? "+1" : "") +
                   "}(" + f.freq + "x)";
      e.params.push_back(R(f.freq, ascii_of(f.freq)));
      e.params.push_back({idx, idx, ParamKind::Integer});
    }
    e.description = "∫ " + integrand + " dx";

    e.conditions = [factors](const ParamSet& p) {
      Conditions c{cond("Re(s) > 0", p["s"].real() > 0.0)};
      for (const auto& f : factors) {
        const std::string idx(1, f.index);
        const int k = p.integer(idx);
        c.push_back(cond(idx + (f.odd ? " >= 0" : " >= 1"), f.odd ? k >= 0 : k >= 1));
      }
      return c;
    };
    auto power_factors = [factors](const ParamSet& p) {
      std::vector<PowerFactor> pf;
      for (const auto& f : factors)
        pf.push_back({f.kind, 2 * p.integer(std::string(1, f.index)) + (f.odd ? 1 : 0), p.real(f.freq)});
      return pf;
    };
    e.closed_form = [power_factors](const ParamSet& p, Check) { return product_transform(power_factors(p), p["s"]); };
    e.oracle = [power_factors](const ParamSet& p) {
      const auto pf = power_factors(p);
      const C s = p["s"];
      OracleProblem o;
      o.integrand = [pf, s](double x) {
        double v = 1.0;
        for (const auto& f : pf) {
          const double t = f.kind == TermKind::Sin ? std::sin(f.frequency * x) : std::cos(f.frequency * x);
          for (int i = 0; i < f.exponent; ++i) v *= t;
        }
        return v * std::exp(-s * x);
      };
      o.decay_rate = s.real();
      o.max_frequency = std::fabs(s.imag());
      for (const auto& f : pf) o.max_frequency += f.exponent * std::fabs(f.frequency);
      return o;
    };

    auto point = [&](int i, C s) {
      ParamSet ps;
      ps.set("s", s);
      for (std::size_t j = 0; j < factors.size(); ++j) {
        const auto& f = factors[j];
        ps.set(f.freq, freqs[(3 * i + 2 * j + e_idx) % 10]);
        const int alt = static_cast<int>((i + j) % 2);
        // Even powers 2 or 4 on the first factor, 2 elsewhere; odd powers 1 or 3.
        const int k = f.odd ? alt : (j == 0 ? 1 + alt : 1);
        ps.set(std::string(1, f.index), double(k));
      }
      return ps;
    };
    for (int i = 0; i < 8; ++i) e.default_grid.push_back(point(i, svals[i]));
    e.default_grid.push_back(point(0, C(1.5, 0.7)));
    e.default_grid.push_back(point(1, C(2.0, -1.0)));
    e.scaling = {"s"};
    for (const auto& f : factors) e.scaling.push_back(f.freq);
    out.push_back(std::move(e));
  }
}

// --- section 5 -------------------------------------------------------------

void add_section5(std::vector<CatalogEntry>& out) {
  // Laplace transforms of powers of the section 2 series at fixed small
  // orders; each closed form delegates to the general entry.
  struct SeriesCase {
    const char* id;
    const char* equation;
    const char* freq;
    const char* freq_ascii;
    const char* description;
    double base_divisor;  // series frequencies are multiples of freq / base_divisor
    std::vector<PowerOfSum::Term> terms;
    double nu_floor;        // Re(ν) > nu_floor
    double pole_scale;      // pole argument is pole_scale*(s/freq - ν) + 1
    bool half;              // ... or pole_scale*(s/(2 freq) - ν/2) + 1
    int family;             // 1..4 selects entry I..IV
    int order;              // m, n, p or q
    double negative_nu;     // negative ν used in the default grid
  };
  using K = TermKind;
  const std::vector<SeriesCase> cases = {
      {"eq-97", "Eq. (97)", "β", "beta", "∫ e^{-sx} [cosh(βx) + 1]^ν dx", 1.0,
       {{K::Cosh, 1, 1}, {K::Const, 1, 0}}, -1.0, 1.0, false, 1, 1, -0.5},
      {"eq-98", "Eq. (98)", "β", "beta", "∫ e^{-sx} [cosh(βx) + 4cosh(βx/2) + 3]^ν dx", 2.0,
       {{K::Cosh, 1, 2}, {K::Cosh, 4, 1}, {K::Const, 3, 0}}, -0.5, 2.0, false, 1, 2, -0.3},
      {"eq-99", "Eq. (99)", "β", "beta", "∫ e^{-sx} [cosh(βx) + 6cosh(2βx/3) + 15cosh(βx/3) + 10]^ν dx", 3.0,
       {{K::Cosh, 1, 3}, {K::Cosh, 6, 2}, {K::Cosh, 15, 1}, {K::Const, 10, 0}}, -1.0 / 3.0, 3.0, false, 1, 3, -0.2},
      {"eq-100", "Eq. (100)", "γ", "gamma", "∫ e^{-sx} [cosh(γx) - 4cosh(γx/2) + 3]^ν dx", 2.0,
       {{K::Cosh, 1, 2}, {K::Cosh, -4, 1}, {K::Const, 3, 0}}, -0.25, 2.0, false, 2, 2, -0.2},
      {"eq-101", "Eq. (101)", "γ", "gamma", "∫ e^{-sx} [cosh(γx) - 6cosh(2γx/3) + 15cosh(γx/3) - 10]^ν dx", 3.0,
       {{K::Cosh, 1, 3}, {K::Cosh, -6, 2}, {K::Cosh, 15, 1}, {K::Const, -10, 0}}, -1.0 / 6.0, 3.0, false, 2, 3,
       -0.1},
      {"eq-102", "Eq. (102)", "λ", "lambda", "∫ e^{-sx} [sinh(λx) - 3sinh(λx/3)]^ν dx", 3.0,
       {{K::Sinh, 1, 3}, {K::Sinh, -3, 1}}, -1.0 / 3.0, 3.0, true, 3, 1, -0.25},
      {"eq-103", "Eq. (103)", "λ", "lambda", "∫ e^{-sx} [sinh(λx) - 5sinh(3λx/5) + 10sinh(λx/5)]^ν dx", 5.0,
       {{K::Sinh, 1, 5}, {K::Sinh, -5, 3}, {K::Sinh, 10, 1}}, -0.2, 5.0, true, 3, 2, -0.15},
      {"eq-104", "Eq. (104)", "μ", "mu", "∫ e^{-sx} cosh^ν(μx) dx", 1.0, {{K::Cosh, 1, 1}}, -2.0, 1.0, true, 4, 0,
       -1.5},
      {"eq-105", "Eq. (105)", "μ", "mu", "∫ e^{-sx} [cosh(μx) + 3cosh(μx/3)]^ν dx", 3.0,
       {{K::Cosh, 1, 3}, {K::Cosh, 3, 1}}, -2.0 / 3.0, 3.0, true, 4, 1, -0.5},
      {"eq-106", "Eq. (106)", "μ", "mu", "∫ e^{-sx} [cosh(μx) + 5cosh(3μx/5) + 10cosh(μx/5)]^ν dx", 5.0,
       {{K::Cosh, 1, 5}, {K::Cosh, 5, 3}, {K::Cosh, 10, 1}}, -0.4, 5.0, true, 4, 2, -0.3},
  };

  for (const SeriesCase& sc : cases) {
    CatalogEntry e;
    e.id = sc.id;
    e.section = 5;
    e.equation = sc.equation;
    e.description = sc.description;
    e.params = {P("s", "s"), P(sc.freq, sc.freq_ascii), P("ν", "nu")};
    const std::string f = sc.freq;
    e.conditions = [sc, f](const ParamSet& p) {
      const C s = p["s"], w = p[f], nu = p["ν"];
      char floor_text[32];
      std::snprintf(floor_text, sizeof floor_text, "%.6g", sc.nu_floor);
      const C pole = sc.pole_scale * (sc.half ? s / (2.0 * w) - nu / 2.0 : s / w - nu) + 1.0;
      const std::string pole_text = (sc.pole_scale == 1.0 ? std::string() : std::to_string(int(sc.pole_scale))) +
                                    (sc.half ? "s/(2" + f + ")" : "s/" + f) + " - " +
                                    (sc.pole_scale == 1.0 ? std::string() : std::to_string(int(sc.pole_scale))) +
                                    (sc.half ? "ν/2" : "ν") + " + 1";
      return Conditions{cond("Re(" + f + ") > 0", w.real() > 0.0),
                        cond(std::string("Re(ν) > ") + floor_text, nu.real() > sc.nu_floor),
                        cond("Re(s) > Re(" + f + "ν)", s.real() > (w * nu).real()), not_pole(pole_text, pole)};
    };
    e.closed_form = [sc, f](const ParamSet& p, Check c) -> C {
      const C s = p["s"], w = p[f], nu = p["ν"];
      // The general entries use the half-frequency of the first term:
      // entry I/II at freq/(2m), entry III/IV at freq/(2p+1).
      switch (sc.family) {
        case 1: return entry_I(s, w / (2.0 * sc.order), nu, sc.order, c);
        case 2: return entry_II(s, w / (2.0 * sc.order), nu, sc.order, c);
        case 3: return entry_III(s, w / double(2 * sc.order + 1), nu, sc.order, c);
        default: return entry_IV(s, w / double(2 * sc.order + 1), nu, sc.order, c);
      }
    };
    e.oracle = [sc, f](const ParamSet& p) {
      return laplace_of_power(sc.terms, real_frequency(p[f], f.c_str()) / sc.base_divisor, p["s"], p["ν"]);
    };
    e.default_grid = grid(names_of(e.params), {{3.0, 1.0, 1.0}, {2.0, 1.0, 0.5}, {4.0, 2.0, 1.5},
                                               {3.0, 1.0, sc.negative_nu}, {5.0, 1.0, 2.5}, {1.0, 0.5, 0.7},
                                               {6.0, 3.0, 1.0}, {2.0, 0.8, 0.3}, {C(3, 1), 1.0, 0.6},
                                               {4.0, 1.0, C(0.5, 0.5)}});
    e.scaling = {"s", f};
    out.push_back(std::move(e));
  }

  auto entry = [&](const char* id, const char* eq, const char* desc, std::vector<ParamSpec> params) {
    CatalogEntry e;
    e.id = id;
    e.section = 5;
    e.equation = eq;
    e.description = desc;
    e.params = std::move(params);
    return e;
  };

  {
    CatalogEntry e = entry("eq-107", "Eq. (107)", "∫ dt / cosh^{2μ}(t) = 4^{μ-1} B(μ, μ)", {P("μ", "mu")});
    e.conditions = [](const ParamSet& p) { return Conditions{cond("Re(μ) > 0", p["μ"].real() > 0.0)}; };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_V(0.0, p["μ"], 1.0, c); };
    e.oracle = [](const ParamSet& p) { return cosh_ratio(0.0, p["μ"], 1.0); };
    e.default_grid = grid({"μ"}, {{0.5}, {1.0}, {1.5}, {2.0}, {0.3}, {3.0}, {0.8}, {2.5}, {C(1, 0.5)}, {C(0.7, -0.3)}});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = entry("eq-108", "Eq. (108)", "∫ cosh(at) / cosh(bt) dt = (π/(2b)) sec(aπ/(2b))",
                           {R("a", "a"), R("b", "b")});
    e.conditions = [](const ParamSet& p) {
      return Conditions{cond("b > |a|", p.real("b") > std::fabs(p.real("a")))};
    };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_V(p["a"] / 2.0, 0.5, p["b"], c); };
    e.oracle = [](const ParamSet& p) { return cosh_ratio(p["a"] / 2.0, 0.5, p["b"]); };
    e.default_grid = grid({"a", "b"}, {{1.0, 2.0}, {0.0, 1.0}, {0.5, 1.0}, {-1.0, 3.0}, {2.0, 2.5}, {1.5, 4.0},
                                       {-0.3, 0.5}, {3.0, 3.5}});
    e.scaling = {"a", "b"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = entry("eq-109", "Eq. (109)", "∫ cosh(at) / cosh(πt) dt = sec(a/2) / 2", {R("a", "a")});
    e.conditions = [](const ParamSet& p) {
      return Conditions{cond("-π < a < π", std::fabs(p.real("a")) < kPi)};
    };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_V(p["a"] / 2.0, 0.5, kPi, c); };
    e.oracle = [](const ParamSet& p) { return cosh_ratio(p["a"] / 2.0, 0.5, kPi); };
    e.default_grid = grid({"a"}, {{0.0}, {1.0}, {-1.0}, {2.0}, {-2.5}, {3.0}, {0.5}, {-3.0}});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = entry("eq-110", "Eq. (110)", "∫ cosh(at) / cosh(t) dt = (π/2) sec(aπ/2)", {R("a", "a")});
    e.conditions = [](const ParamSet& p) { return Conditions{cond("|a| < 1", std::fabs(p.real("a")) < 1.0)}; };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_V(p["a"] / 2.0, 0.5, 1.0, c); };
    e.oracle = [](const ParamSet& p) { return cosh_ratio(p["a"] / 2.0, 0.5, 1.0); };
    e.default_grid = grid({"a"}, {{0.0}, {0.5}, {-0.5}, {0.9}, {-0.8}, {0.25}, {0.7}, {-0.1}});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = entry("eq-111", "Eq. (111)", "∫ dt / cosh(at) = π/(2a)", {R("a", "a")});
    e.conditions = [](const ParamSet& p) { return Conditions{cond("a > 0", p.real("a") > 0.0)}; };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_V(0.0, 0.5, p["a"], c); };
    e.oracle = [](const ParamSet& p) { return cosh_ratio(0.0, 0.5, p["a"]); };
    e.default_grid = grid({"a"}, {{2.0}, {1.0}, {0.5}, {3.0}, {0.25}, {1.5}, {5.0}, {0.8}});
    e.scaling = {"a"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = entry("eq-112", "Eq. (112)", "∫ cosh(2αt) / cosh²(pt) dt = πα / (p² sin(πα/p))",
                           {P("α", "alpha"), P("p", "p")});
    e.conditions = [](const ParamSet& p) {
      const C r = p["α"] / p["p"];
      return Conditions{cond("Re(p) > 0", p["p"].real() > 0.0), cond("Re(1 + α/p) > 0", (1.0 + r).real() > 0.0),
                        cond("Re(1 - α/p) > 0", (1.0 - r).real() > 0.0)};
    };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_V(p["α"], 1.0, p["p"], c); };
    e.oracle = [](const ParamSet& p) { return cosh_ratio(p["α"], 1.0, p["p"]); };
    e.default_grid = grid({"α", "p"}, {{0.3, 1.2}, {0.0, 1.0}, {0.5, 1.0}, {-0.7, 1.0}, {1.0, 1.5}, {0.2, 0.5},
                                       {-1.0, 2.0}, {1.5, 2.0}, {C(0.3, 0.2), 1.0}, {0.4, C(1, 0.5)}});
    e.scaling = {"α", "p"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = entry("eq-113", "Eq. (113)", "∫ dt / cosh^μ(t) = B(1/2, μ/2) / 2", {P("μ", "mu")});
    e.conditions = [](const ParamSet& p) { return Conditions{cond("Re(μ) > 0", p["μ"].real() > 0.0)}; };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_VI(0.0, p["μ"], c); };
    e.oracle = [](const ParamSet& p) {
      const C mu = p["μ"];
      OracleProblem o;
      o.integrand = [mu](double t) { return std::exp(-mu * log_cosh(t)); };
      o.decay_rate = mu.real();
      o.max_frequency = std::fabs(mu.imag());
      return o;
    };
    e.default_grid = grid({"μ"}, {{1.0}, {2.0}, {3.0}, {0.5}, {1.5}, {4.0}, {0.25}, {2.5}, {C(1, 1)}, {C(2, -0.5)}});
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = entry("eq-113b", "Eq. (113) ff., ν = 2n",
                           "∫ cos(ax) / cosh^{2n}(βx) dx = 2^{2n-2} Γ(n + ia/(2β)) Γ(n - ia/(2β)) / (β Γ(2n))",
                           {P("a", "a"), P("β", "beta"), I("n")});
    e.conditions = [](const ParamSet& p) {
      const C a = p["a"], b = p["β"];
      const int n = p.integer("n");
      return Conditions{cond("n >= 1", n >= 1), cond("Re(β) > 0", b.real() > 0.0),
                        cond("Re(2nβ ± ia) > 0", (2.0 * n * b).real() > std::fabs((kI * a).real()))};
    };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_VII(p["a"], p["β"], 2.0 * p.integer("n"), c); };
    e.oracle = [](const ParamSet& p) { return cos_over_cosh_power(p["a"], p["β"], 2.0 * p.integer("n")); };
    e.default_grid = grid({"a", "β", "n"}, {{1.0, 1.0, 1.0}, {0.0, 1.0, 1.0}, {2.0, 1.0, 2.0}, {0.5, 0.5, 1.0},
                                            {3.0, 2.0, 3.0}, {1.5, 1.0, 2.0}, {0.0, 0.7, 2.0}, {4.0, 1.5, 1.0},
                                            {C(1, 0.3), 1.0, 1.0}, {1.0, C(1, 0.2), 2.0}});
    e.scaling = {"a", "β"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = entry("eq-114", "Eq. (114)", "∫ dx / cosh²(x) = 1", {});
    e.conditions = [](const ParamSet&) { return Conditions{}; };
    e.closed_form = [](const ParamSet&, Check c) { return novel_VII(0.0, 1.0, 2.0, c); };
    e.oracle = [](const ParamSet&) { return cos_over_cosh_power(0.0, 1.0, 2.0); };
    e.default_grid = {ParamSet{}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = entry("eq-115", "Eq. (115)", "∫ cos(ax) / cosh²(βx) dx = πa / (2β² sinh(πa/(2β)))",
                           {R("a", "a"), P("β", "beta")});
    e.conditions = [](const ParamSet& p) {
      return Conditions{cond("Re(β) > 0", p["β"].real() > 0.0), cond("a > 0", p.real("a") > 0.0)};
    };
    e.closed_form = [](const ParamSet& p, Check c) { return novel_VII(p["a"], p["β"], 2.0, c); };
    e.oracle = [](const ParamSet& p) { return cos_over_cosh_power(p["a"], p["β"], 2.0); };
    e.default_grid = grid({"a", "β"}, {{0.5, 1.0}, {1.0, 1.0}, {1.5, 1.0}, {2.0, 1.0}, {2.5, 1.0}, {1.0, 0.5},
                                       {3.0, 2.0}, {0.2, 0.8}, {1.0, C(1, 0.5)}, {2.0, C(0.8, -0.3)}});
    e.scaling = {"a", "β"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = entry("eq-116", "Eq. (116)",
                           "d/da ∫ cos(ax) / cosh²(x) dx = -∫ x sin(ax) / cosh²(x) dx "
                           "= (2π sinh(aπ/2) - aπ² cosh(aπ/2)) / (4 sinh²(πa/2))",
                           {R("a", "a")});
    e.conditions = [](const ParamSet& p) { return Conditions{cond("a > 0", p.real("a") > 0.0)}; };
    e.closed_form = [](const ParamSet& p, Check) { return cos_over_cosh2_derivative(p["a"]); };
    e.oracle = [](const ParamSet& p) {
      const double a = p.real("a");
      OracleProblem o;
      o.integrand = [a](double x) { return C(-x * std::sin(a * x) * std::exp(-2.0 * log_cosh(x).real())); };
      o.decay_rate = 1.5;
      o.max_frequency = std::fabs(a);
      return o;
    };
    e.default_grid = grid({"a"}, {{0.5}, {1.0}, {2.0}, {0.25}, {1.5}, {3.0}, {4.0}, {0.1}});
    out.push_back(std::move(e));
  }
}

}  // namespace

std::vector<CatalogEntry> build_catalog_entries() {
  std::vector<CatalogEntry> out;
  add_section2(out);
  add_section3(out);
  add_power_entries(out);
  add_product_entries(out);
  add_section5(out);
  return out;
}

}  // namespace hyperlap
