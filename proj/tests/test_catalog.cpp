#include <doctest.h>

#include <set>

#include "hyperlap/catalog.hpp"
#include "hyperlap/special.hpp"
#include "support.hpp"

using namespace hyperlap;
using test::rel_err;

namespace {

bool conditions_hold(const CatalogEntry& e, const ParamSet& p) {
  for (const auto& c : e.conditions(p))
    if (c.enforced && !c.holds) return false;
  return true;
}

bool has_complex_param(const CatalogEntry& e) {
  for (const auto& p : e.params)
    if (p.kind == ParamKind::Complex) return true;
  return false;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("registry contents") {
  const auto& entries = Catalog::instance().entries();
  CHECK(entries.size() == 106);
  std::set<std::string> ids;
  for (const auto& e : entries) ids.insert(e.id);
  CHECK(ids.size() == entries.size());
  for (const char* id : {"eq-38", "eq-41", "entry-I", "entry-IV", "novel-V", "novel-VI", "novel-VII", "eq-74",
                         "eq-81", "prod-01", "prod-66", "eq-97", "eq-106", "eq-107", "eq-113b", "eq-116"})
    CHECK(ids.count(id) == 1);
  CHECK(Catalog::instance().get("novel-V").equation == "Eq. (46)");
  CHECK(Catalog::instance().find("nope") == nullptr);
  CHECK_THROWS_AS(Catalog::instance().get("nope"), UnknownEntry);
}

TEST_CASE("default grids lie inside the stated regions") {
  for (const auto& e : Catalog::instance().entries()) {
    CAPTURE(e.id);
    if (e.id != "eq-114") CHECK(e.default_grid.size() >= 8);
    std::size_t complex_points = 0;
    for (const auto& p : e.default_grid) {
      CHECK_NOTHROW(validate_params(e, p));
      CHECK(conditions_hold(e, p));
      if (!p.all_real()) ++complex_points;
    }
    if (has_complex_param(e)) CHECK(complex_points >= 2);
    else CHECK(complex_points == 0);
  }
}

TEST_CASE("parameter validation") {
  const auto& e = Catalog::instance().get("entry-I");
  CHECK_THROWS_AS(validate_params(e, ParamSet{{"s", 4.0}, {"β", 1.0}, {"ν", 1.0}}), DomainError);
  CHECK_THROWS_AS(validate_params(e, ParamSet{{"s", 4.0}, {"β", 1.0}, {"ν", 1.0}, {"m", 1.5}}), DomainError);
  CHECK_THROWS_AS(validate_params(e, ParamSet{{"s", 4.0}, {"β", 1.0}, {"ν", 1.0}, {"m", 1.0}, {"x", 1.0}}),
                  DomainError);
  CHECK_THROWS_AS(evaluate(Catalog::instance().get("eq-111"), ParamSet{{"a", Complex(2.0, 1.0)}}), DomainError);
  CHECK(canonical_param(e, "beta") == "β");
  CHECK(canonical_param(e, "ν") == "ν");
  CHECK_FALSE(canonical_param(e, "alpha").has_value());
}

TEST_CASE("evaluation") {
  const auto& e = Catalog::instance().get("entry-I");
  const Complex v = evaluate(e, {{"s", 4.0}, {"β", 1.0}, {"ν", 1.0}, {"m", 1.0}});
  CHECK(v.imag() == 0.0);
  CHECK(rel_err(v, 7.0 / 12.0) < 1e-14);
  CHECK_THROWS_AS(evaluate(e, {{"s", 1.0}, {"β", 1.0}, {"ν", 1.0}, {"m", 1.0}}), DomainError);
  CHECK_NOTHROW(evaluate(e, {{"s", 1.0}, {"β", 1.0}, {"ν", 1.0}, {"m", 1.0}}, Check::Relaxed));
}

TEST_CASE("special cases") {
  CHECK(rel_err(special_case("eq-111", {{"a", 2.0}}), kPi / 4.0) < 1e-12);
  CHECK(rel_err(special_case("eq-108", {{"a", 1.0}, {"b", 2.0}}), kPi / (2.0 * std::sqrt(2.0))) < 1e-12);
  CHECK(rel_err(special_case("eq-114", {}), 1.0) < 1e-12);
  CHECK(rel_err(special_case("eq-104", {{"s", 3.0}, {"μ", 1.0}, {"ν", 1.0}}), 3.0 / 8.0) < 1e-12);
  CHECK(rel_err(special_case("eq-110", {{"a", 0.5}}), (kPi / 2.0) / std::cos(kPi / 4.0)) < 1e-12);
  CHECK(rel_err(special_case("eq-109", {{"a", 1.0}}), 0.5 / std::cos(0.5)) < 1e-12);
  CHECK(rel_err(special_case("eq-116", {{"a", 1.0}}), -0.48645944886729) < 1e-12);
  for (double mu : {1.0, 2.0, 3.0})
    CHECK(rel_err(special_case("eq-113", {{"μ", mu}}), 0.5 * beta(0.5, mu / 2.0)) < 1e-12);
  CHECK_THROWS_AS(special_case("novel-V", {{"α", 0.0}, {"β", 1.0}, {"p", 1.0}}), UnknownEntry);
  CHECK_THROWS_AS(special_case("eq-108", {{"a", 3.0}, {"b", 2.0}}), DomainError);
}

TEST_CASE("scaling s and frequencies by c divides the integral by c") {
  for (const auto& e : Catalog::instance().entries()) {
    if (e.scaling.empty()) continue;
    CAPTURE(e.id);
    for (const auto& p : e.default_grid) {
      const Complex base = evaluate(e, p);
      for (double c : {0.5, 2.3}) {
        ParamSet scaled = p;
        for (const auto& name : e.scaling) scaled.set(name, p[name] * c);
        CHECK(rel_err(evaluate(e, scaled) * c, base) < 1e-10);
      }
    }
  }
}

TEST_CASE("oracle problems") {
  const auto& e = Catalog::instance().get("entry-II");
  const OracleProblem p = e.oracle({{"s", 3.0}, {"γ", 1.0}, {"ν", -0.3}, {"n", 1.0}});
  REQUIRE(p.endpoint_exponent.has_value());
  CHECK(*p.endpoint_exponent == doctest::Approx(-0.6));
  CHECK(p.decay_rate == doctest::Approx(3.6));
  CHECK_THROWS_AS(e.oracle({{"s", 3.0}, {"γ", Complex(1.0, 0.5)}, {"ν", 0.5}, {"n", 1.0}}), IntegrandDomainError);
}

}
