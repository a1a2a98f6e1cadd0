#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abc/value.hpp"

namespace abc {

using AttributeId = std::string;

/// Finite set of exposed attribute identifiers.
using Interface = std::set<AttributeId>;

/// A partial map from attribute identifiers to values. Looking up an unmapped
/// identifier yields std::nullopt, the undefined result.
class AttributeEnv {
 public:
  AttributeEnv() = default;
  AttributeEnv(std::initializer_list<std::pair<const AttributeId, Value>> init)
      : map_(init) {}
  explicit AttributeEnv(std::map<AttributeId, Value> m) : map_(std::move(m)) {}

  std::optional<Value> lookup(const AttributeId& a) const;
  bool defines(const AttributeId& a) const { return map_.count(a) != 0; }
  void set(const AttributeId& a, Value v) { map_.insert_or_assign(a, std::move(v)); }
  void erase(const AttributeId& a) { map_.erase(a); }

  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }
  const std::map<AttributeId, Value>& entries() const { return map_; }

  friend bool operator==(const AttributeEnv&, const AttributeEnv&) = default;
  friend auto operator<=>(const AttributeEnv& a, const AttributeEnv& b) {
    return a.map_ <=> b.map_;
  }

  /// `{id="p", role="fwd"}`; keys in sorted order.
  std::string to_string() const;

 private:
  std::map<AttributeId, Value> map_;
};

/// Γ↓I: keeps exactly the mapped attributes that are in the interface.
AttributeEnv restrict_env(const AttributeEnv& env, const Interface& iface);

/// Declared finite attribute domains. Absent attributes are unbounded.
class DomainContext {
 public:
  DomainContext() = default;

  void declare(const AttributeId& a, std::vector<Value> values);
  const std::vector<Value>* domain_of(const AttributeId& a) const;
  bool admits(const AttributeId& a, const Value& v) const;
  bool empty() const { return domains_.empty(); }
  const std::map<AttributeId, std::vector<Value>>& entries() const { return domains_; }

  /// Union with another context; on a shared attribute the domains intersect.
  void merge(const DomainContext& other);

  friend bool operator==(const DomainContext&, const DomainContext&) = default;

 private:
  std::map<AttributeId, std::vector<Value>> domains_;
};

}  // namespace abc
