#include "abc/value.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abc {

Value Value::integer(std::int64_t v) { return Value(Kind::Int, v); }

Value Value::boolean(bool v) { return Value(Kind::Bool, v); }

Value Value::name(std::string v) { return Value(Kind::Name, std::move(v)); }

Value Value::tuple(std::vector<Value> items) {
  return Value(Kind::Tuple,
               std::make_shared<const std::vector<Value>>(std::move(items)));
}

Value Value::set(std::vector<Value> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return Value(Kind::Set,
               std::make_shared<const std::vector<Value>>(std::move(items)));
}

std::int64_t Value::as_int() const {
  if (kind_ != Kind::Int) throw std::logic_error("value is not an integer");
  return std::get<std::int64_t>(data_);
}

bool Value::as_bool() const {
  if (kind_ != Kind::Bool) throw std::logic_error("value is not a boolean");
  return std::get<bool>(data_);
}

const std::string& Value::as_name() const {
  if (kind_ != Kind::Name) throw std::logic_error("value is not a name");
  return std::get<std::string>(data_);
}

std::span<const Value> Value::items() const {
  if (kind_ != Kind::Tuple && kind_ != Kind::Set)
    throw std::logic_error("value has no items");
  return *std::get<Items>(data_);
}

bool Value::contains(const Value& v) const {
  if (kind_ != Kind::Set) return false;
  const auto& xs = *std::get<Items>(data_);
  return std::binary_search(xs.begin(), xs.end(), v);
}

bool operator==(const Value& a, const Value& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case Value::Kind::Int:
      return std::get<std::int64_t>(a.data_) <=> std::get<std::int64_t>(b.data_);
    case Value::Kind::Bool:
      return std::get<bool>(a.data_) <=> std::get<bool>(b.data_);
    case Value::Kind::Name: {
      int c = std::get<std::string>(a.data_).compare(std::get<std::string>(b.data_));
      return c < 0 ? std::strong_ordering::less
                   : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case Value::Kind::Tuple:
    case Value::Kind::Set: {
      const auto& xs = *std::get<Value::Items>(a.data_);
      const auto& ys = *std::get<Value::Items>(b.data_);
      return std::lexicographical_compare_three_way(xs.begin(), xs.end(), ys.begin(),
                                                    ys.end());
    }
  }
  return std::strong_ordering::equal;
}

std::string quote_name(const std::string& raw) {
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string Value::to_string() const {
  switch (kind_) {
    case Kind::Int:
      return std::to_string(std::get<std::int64_t>(data_));
    case Kind::Bool:
      return std::get<bool>(data_) ? "true" : "false";
    case Kind::Name:
      return quote_name(std::get<std::string>(data_));
    case Kind::Tuple:
      return "tuple" + abc::to_string(items());
    case Kind::Set: {
      std::string out = "{";
      bool first = true;
      for (const auto& v : items()) {
        if (!first) out += ", ";
        first = false;
        out += v.to_string();
      }
      return out + "}";
    }
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.to_string(); }

std::string to_string(std::span<const Value> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].to_string();
  }
  return out + ")";
}

}  // namespace abc
