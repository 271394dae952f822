#include "hyperlap/spectral.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "hyperlap/special.hpp"

namespace hyperlap {

namespace {

constexpr double kFrequencyTolerance = 1e-12;

bool same_frequency(double a, double b) {
  return std::fabs(a - b) <= kFrequencyTolerance * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

bool is_odd(TermKind kind) { return kind == TermKind::Sin || kind == TermKind::Sinh; }

int kind_rank(TermKind kind) {
  switch (kind) {
    case TermKind::Cos: return 0;
    case TermKind::Sin: return 1;
    case TermKind::Cosh: return 2;
    case TermKind::Sinh: return 3;
    case TermKind::Const: return 4;
  }
  return 5;
}

}  // namespace

std::optional<Family> family_of(TermKind kind) {
  switch (kind) {
    case TermKind::Sin:
    case TermKind::Cos: return Family::Circular;
    case TermKind::Sinh:
    case TermKind::Cosh: return Family::Hyperbolic;
    case TermKind::Const: return std::nullopt;
  }
  return std::nullopt;
}

std::string to_string(TermKind kind) {
  switch (kind) {
    case TermKind::Sin: return "sin";
    case TermKind::Cos: return "cos";
    case TermKind::Sinh: return "sinh";
    case TermKind::Cosh: return "cosh";
    case TermKind::Const: return "const";
  }
  return "?";
}

SpectralForm SpectralForm::constant(double value) {
  SpectralForm form;
  form.add(TermKind::Const, value, 0.0);
  return form;
}

SpectralForm SpectralForm::single(TermKind kind, double coefficient, double frequency) {
  SpectralForm form;
  if (auto fam = family_of(kind)) form.family_ = fam;
  form.add(kind, coefficient, frequency);
  return form;
}

void SpectralForm::add(TermKind kind, double coefficient, double frequency) {
  if (auto fam = family_of(kind)) {
    if (family_ && *family_ != *fam)
      throw FamilyMismatch("cannot mix circular and hyperbolic terms in one form");
    family_ = fam;
  }
  if (kind == TermKind::Const) frequency = 0.0;
  if (std::fabs(frequency) <= kFrequencyTolerance) {
    if (is_odd(kind)) return;  // sin(0) = sinh(0) = 0
    kind = TermKind::Const;
    frequency = 0.0;
  } else if (frequency < 0.0) {
    frequency = -frequency;
    if (is_odd(kind)) coefficient = -coefficient;
  }
  if (coefficient == 0.0) return;

  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const SpectralTerm& t) {
    return t.kind == kind && same_frequency(t.frequency, frequency);
  });
  if (it != terms_.end()) {
    it->coefficient += coefficient;
    if (it->coefficient == 0.0) terms_.erase(it);
    return;
  }
  const SpectralTerm term{kind, coefficient, frequency};
  auto pos = std::find_if(terms_.begin(), terms_.end(), [&](const SpectralTerm& t) {
    if (t.kind == TermKind::Const) return true;
    if (kind == TermKind::Const) return false;
    if (t.frequency != frequency) return t.frequency < frequency;
    return kind_rank(t.kind) > kind_rank(kind);
  });
  terms_.insert(pos, term);
}

SpectralForm& SpectralForm::operator*=(double scale) {
  if (scale == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

SpectralForm expand_power(TermKind kind, int exponent, double frequency) {
  if (exponent < 1) throw DomainError("expand_power: exponent must be >= 1");
  if (kind == TermKind::Const) throw DomainError("expand_power: kind must be sin, cos, sinh or cosh");

  const bool hyperbolic = kind == TermKind::Sinh || kind == TermKind::Cosh;
  const bool sine = kind == TermKind::Sin || kind == TermKind::Sinh;
  const TermKind even_kind = hyperbolic ? TermKind::Cosh : TermKind::Cos;
  const TermKind odd_kind = hyperbolic ? TermKind::Sinh : TermKind::Sin;

  SpectralForm form;
  if (hyperbolic) form = SpectralForm::single(TermKind::Cosh, 0.0, 1.0);
  else form = SpectralForm::single(TermKind::Cos, 0.0, 1.0);

  const int n = exponent;
  const int half = n / 2;
  if (n % 2 == 0) {
    // 2^{n-1} f^n = sum_{i<half} s_i C(n,i) cosh/cos((n-2i) x) + s_half C(n,half)/2,
    // with s_i = (-1)^i for sine kinds (and an extra (-1)^half for circular sine).
    double scale = std::ldexp(1.0, -(n - 1));
    if (sine && !hyperbolic && half % 2 == 1) scale = -scale;
    for (int i = 0; i < half; ++i) {
      const double sign = (sine && i % 2 == 1) ? -1.0 : 1.0;
      form.add(even_kind, scale * sign * binomial(n, i), (n - 2 * i) * frequency);
    }
    const double sign = (sine && half % 2 == 1) ? -1.0 : 1.0;
    form.add(TermKind::Const, scale * sign * 0.5 * binomial(n, half), 0.0);
  } else {
    double scale = std::ldexp(1.0, -(n - 1));
    if (sine && !hyperbolic && half % 2 == 1) scale = -scale;
    const TermKind term_kind = sine ? odd_kind : even_kind;
    for (int k = 0; k <= half; ++k) {
      const double sign = (sine && k % 2 == 1) ? -1.0 : 1.0;
      form.add(term_kind, scale * sign * binomial(n, k), (n - 2 * k) * frequency);
    }
  }
  return form;
}

SpectralForm product(const SpectralForm& a, const SpectralForm& b) {
  if (a.family() && b.family() && *a.family() != *b.family())
    throw FamilyMismatch("product: circular and hyperbolic forms cannot be multiplied");
  SpectralForm out;
  if (a.family()) out = SpectralForm::single(a.family() == Family::Circular ? TermKind::Cos : TermKind::Cosh, 0.0, 1.0);
  else if (b.family()) out = SpectralForm::single(b.family() == Family::Circular ? TermKind::Cos : TermKind::Cosh, 0.0, 1.0);

  for (const SpectralTerm& s : a.terms()) {
    for (const SpectralTerm& t : b.terms()) {
      const double c = s.coefficient * t.coefficient;
      if (s.kind == TermKind::Const) {
        out.add(t.kind, c, t.frequency);
        continue;
      }
      if (t.kind == TermKind::Const) {
        out.add(s.kind, c, s.frequency);
        continue;
      }
      const double sum = s.frequency + t.frequency;
      const double diff = s.frequency - t.frequency;
      const double h = 0.5 * c;
      switch (s.kind) {
        case TermKind::Sin:
          if (t.kind == TermKind::Sin) {  // 2 sinA sinB = cos(A-B) - cos(A+B)
            out.add(TermKind::Cos, h, diff);
            out.add(TermKind::Cos, -h, sum);
          } else {  // 2 sinA cosB = sin(A+B) + sin(A-B)
            out.add(TermKind::Sin, h, sum);
            out.add(TermKind::Sin, h, diff);
          }
          break;
        case TermKind::Cos:
          if (t.kind == TermKind::Cos) {  // 2 cosA cosB = cos(A-B) + cos(A+B)
            out.add(TermKind::Cos, h, diff);
            out.add(TermKind::Cos, h, sum);
          } else {  // 2 cosA sinB = sin(A+B) - sin(A-B)
            out.add(TermKind::Sin, h, sum);
            out.add(TermKind::Sin, -h, diff);
          }
          break;
        case TermKind::Sinh:
          if (t.kind == TermKind::Sinh) {  // 2 sinhA sinhB = cosh(A+B) - cosh(A-B)
            out.add(TermKind::Cosh, h, sum);
            out.add(TermKind::Cosh, -h, diff);
          } else {  // 2 sinhA coshB = sinh(A+B) + sinh(A-B)
            out.add(TermKind::Sinh, h, sum);
            out.add(TermKind::Sinh, h, diff);
          }
          break;
        case TermKind::Cosh:
          if (t.kind == TermKind::Cosh) {  // 2 coshA coshB = cosh(A+B) + cosh(A-B)
            out.add(TermKind::Cosh, h, sum);
            out.add(TermKind::Cosh, h, diff);
          } else {  // 2 coshA sinhB = sinh(A+B) - sinh(A-B)
            out.add(TermKind::Sinh, h, sum);
            out.add(TermKind::Sinh, -h, diff);
          }
          break;
        case TermKind::Const:
          break;
      }
    }
  }
  return out;
}

namespace {

template <class T>
T term_value(TermKind kind, T arg) {
  switch (kind) {
    case TermKind::Sin: return std::sin(arg);
    case TermKind::Cos: return std::cos(arg);
    case TermKind::Sinh: return std::sinh(arg);
    case TermKind::Cosh: return std::cosh(arg);
    case TermKind::Const: return T(1);
  }
  return T(0);
}

}  // namespace

double evaluate(const SpectralForm& form, double x) {
  double sum = 0.0;
  for (const auto& t : form.terms()) sum += t.coefficient * term_value(t.kind, t.frequency * x);
  return sum;
}

Complex evaluate(const SpectralForm& form, Complex x) {
  Complex sum = 0.0;
  for (const auto& t : form.terms()) sum += t.coefficient * term_value(t.kind, t.frequency * x);
  return sum;
}

std::string format_shortest(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string to_string(const SpectralForm& form) {
  if (form.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : form.terms()) {
    double c = t.coefficient;
    if (first) {
      if (c < 0) {
        out += "−";
        c = -c;
      }
    } else {
      out += c < 0 ? " − " : " + ";
      c = std::fabs(c);
    }
    first = false;
    if (t.kind == TermKind::Const) {
      out += format_shortest(c);
      continue;
    }
    if (c != 1.0) out += format_shortest(c) + "·";
    out += to_string(t.kind) + "(";
    if (t.frequency != 1.0) out += format_shortest(t.frequency);
    out += "x)";
  }
  return out;
}

}  // namespace hyperlap
