#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace abc {

/// A message or attribute value: integer, boolean, name, tuple or finite set.
///
/// Values are immutable and compare structurally. Sets are kept sorted and
/// duplicate-free, so two sets with the same elements are identical.
class Value {
 public:
  enum class Kind : std::uint8_t { Int, Bool, Name, Tuple, Set };

  Value() : Value(integer(0)) {}

  static Value integer(std::int64_t v);
  static Value boolean(bool v);
  static Value name(std::string v);
  static Value tuple(std::vector<Value> items);
  static Value set(std::vector<Value> items);

  Kind kind() const noexcept { return kind_; }
  bool is_int() const noexcept { return kind_ == Kind::Int; }
  bool is_bool() const noexcept { return kind_ == Kind::Bool; }
  bool is_name() const noexcept { return kind_ == Kind::Name; }
  bool is_tuple() const noexcept { return kind_ == Kind::Tuple; }
  bool is_set() const noexcept { return kind_ == Kind::Set; }

  std::int64_t as_int() const;
  bool as_bool() const;
  const std::string& as_name() const;
  /// Elements of a tuple or set.
  std::span<const Value> items() const;

  /// Set membership; false for non-sets.
  bool contains(const Value& v) const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

  /// Concrete-syntax rendering, e.g. `3`, `true`, `"fwd"`, `{1, 2}`,
  /// `tuple(1, "a")`.
  std::string to_string() const;

 private:
  using Items = std::shared_ptr<const std::vector<Value>>;
  Value(Kind k, std::variant<std::int64_t, bool, std::string, Items> d)
      : kind_(k), data_(std::move(d)) {}

  Kind kind_;
  std::variant<std::int64_t, bool, std::string, Items> data_;
};

using Values = std::vector<Value>;

std::ostream& operator<<(std::ostream& os, const Value& v);

/// Renders a value sequence as `(v1, v2, ...)`.
std::string to_string(std::span<const Value> values);

/// Double-quoted, escaped rendering of a name.
std::string quote_name(const std::string& raw);

}  // namespace abc
