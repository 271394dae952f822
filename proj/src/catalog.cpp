#include "hyperlap/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlap/special.hpp"

namespace hyperlap {

Complex ParamSet::operator[](const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw DomainError("missing parameter " + name);
  return it->second;
}

int ParamSet::integer(const std::string& name) const {
  const Complex v = (*this)[name];
  if (v.imag() != 0.0 || v.real() != std::round(v.real()) || std::fabs(v.real()) > 1e6)
    throw DomainError("parameter " + name + " must be an integer");
  return static_cast<int>(v.real());
}

bool ParamSet::all_real() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return kv.second.imag() == 0.0; });
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

Catalog::Catalog() : entries_(build_catalog_entries()) {}

const CatalogEntry* Catalog::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::get(const std::string& id) const {
  if (const CatalogEntry* e = find(id)) return *e;
  throw UnknownEntry(id);
}

std::optional<std::string> canonical_param(const CatalogEntry& entry, const std::string& name) {
  for (const auto& p : entry.params)
    if (p.name == name || p.ascii == name) return p.name;
  return std::nullopt;
}

void validate_params(const CatalogEntry& entry, const ParamSet& params) {
  for (const auto& [name, value] : params.values()) {
    if (!canonical_param(entry, name) || *canonical_param(entry, name) != name)
      throw DomainError(entry.id + ": unknown parameter " + name);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
      throw DomainError(entry.id + ": parameter " + name + " is not finite");
  }
  for (const auto& spec : entry.params) {
    if (!params.has(spec.name)) throw DomainError(entry.id + ": missing parameter " + spec.name);
    if (spec.kind == ParamKind::Integer) params.integer(spec.name);
    if (spec.kind == ParamKind::Real && params[spec.name].imag() != 0.0)
      throw DomainError(entry.id + ": parameter " + spec.name + " must be real");
  }
}

Complex evaluate(const CatalogEntry& entry, const ParamSet& params, Check check) {
  validate_params(entry, params);
  if (check == Check::Strict) require(entry.conditions(params), entry.id);
  Complex value = entry.closed_form(params, check);
  if (params.all_real() && std::fabs(value.imag()) <= 1e-12 * std::max(1.0, std::abs(value)))
    value.imag(0.0);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw OverflowError(entry.id + ": closed form is not finite");
  return value;
}

Complex special_case(const std::string& id, const ParamSet& params, Check check) {
  const CatalogEntry& entry = Catalog::instance().get(id);
  if (entry.section != 5) throw UnknownEntry(id);
  return evaluate(entry, params, check);
}

}  // namespace hyperlap
