#include "abc/env.hpp"

#include <algorithm>
#include <stdexcept>

namespace abc {

std::optional<Value> AttributeEnv::lookup(const AttributeId& a) const {
  auto it = map_.find(a);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::string AttributeEnv::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : map_) {
    if (!first) out += ", ";
    first = false;
    out += k + "=" + v.to_string();
  }
  return out + "}";
}

AttributeEnv restrict_env(const AttributeEnv& env, const Interface& iface) {
  std::map<AttributeId, Value> kept;
  for (const auto& [k, v] : env) {
    if (iface.count(k)) kept.emplace(k, v);
  }
  return AttributeEnv(std::move(kept));
}

void DomainContext::declare(const AttributeId& a, std::vector<Value> values) {
  if (values.empty()) throw std::invalid_argument("empty domain for attribute " + a);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  domains_.insert_or_assign(a, std::move(values));
}

const std::vector<Value>* DomainContext::domain_of(const AttributeId& a) const {
  auto it = domains_.find(a);
  return it == domains_.end() ? nullptr : &it->second;
}

bool DomainContext::admits(const AttributeId& a, const Value& v) const {
  const auto* d = domain_of(a);
  return d == nullptr || std::binary_search(d->begin(), d->end(), v);
}

void DomainContext::merge(const DomainContext& other) {
  for (const auto& [a, vs] : other.domains_) {
    auto it = domains_.find(a);
    if (it == domains_.end()) {
      domains_.emplace(a, vs);
      continue;
    }
    std::vector<Value> both;
    std::set_intersection(it->second.begin(), it->second.end(), vs.begin(), vs.end(),
                          std::back_inserter(both));
    if (both.empty()) throw std::invalid_argument("conflicting domains for attribute " + a);
    it->second = std::move(both);
  }
}

}  // namespace abc
