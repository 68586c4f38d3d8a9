#include "thermocap/json_value.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thermocap {

JsonValue::JsonValue(double value) : kind_(Kind::Float), number_(value) {}
JsonValue::JsonValue(bool value) : kind_(Kind::Bool), flag_(value) {}
JsonValue::JsonValue(int value) : kind_(Kind::Signed), signed_(value) {}
JsonValue::JsonValue(std::int64_t value) : kind_(Kind::Signed), signed_(value) {}
JsonValue::JsonValue(std::uint64_t value) : kind_(Kind::Unsigned), unsigned_(value) {}
JsonValue::JsonValue(std::string value) : kind_(Kind::String), text_(std::move(value)) {}
JsonValue::JsonValue(const char* value) : kind_(Kind::String), text_(value) {}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::Object;
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::Array;
  return v;
}

JsonValue JsonValue::array(std::span<const double> values) {
  JsonValue v = array();
  for (double x : values) {
    v.push(x);
  }
  return v;
}

JsonValue& JsonValue::set(const std::string& key, JsonValue value) {
  if (kind_ != Kind::Object) {
    throw std::logic_error("JsonValue::set on a non-object");
  }
  const auto it = std::find(keys_.begin(), keys_.end(), key);
  if (it != keys_.end()) {
    children_[static_cast<std::size_t>(it - keys_.begin())] = std::move(value);
  } else {
    keys_.push_back(key);
    children_.push_back(std::move(value));
  }
  return *this;
}

JsonValue& JsonValue::push(JsonValue value) {
  if (kind_ != Kind::Array) {
    throw std::logic_error("JsonValue::push on a non-array");
  }
  children_.push_back(std::move(value));
  return *this;
}

std::string JsonValue::dump() const {
  std::string out;
  write(out, 0);
  out += '\n';
  return out;
}

namespace {

void write_string(std::string& out, const std::string& text) {
  out += '"';
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<unsigned>(c));
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(2 * depth), ' '); }

}  // namespace

void JsonValue::write(std::string& out, int depth) const {
  switch (kind_) {
    case Kind::Null: out += "null"; return;
    case Kind::Bool: out += flag_ ? "true" : "false"; return;
    case Kind::Float:
      out += std::isfinite(number_) ? fmt::format("{:.17g}", number_) : std::string("null");
      return;
    case Kind::Signed: out += fmt::format("{}", signed_); return;
    case Kind::Unsigned: out += fmt::format("{}", unsigned_); return;
    case Kind::String: write_string(out, text_); return;
    case Kind::Object:
    case Kind::Array: {
      const bool is_object = kind_ == Kind::Object;
      if (children_.empty()) {
        out += is_object ? "{}" : "[]";
        return;
      }
      out += is_object ? "{\n" : "[\n";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        indent(out, depth + 1);
        if (is_object) {
          write_string(out, keys_[i]);
          out += ": ";
        }
        children_[i].write(out, depth + 1);
        out += i + 1 < children_.size() ? ",\n" : "\n";
      }
      indent(out, depth);
      out += is_object ? '}' : ']';
      return;
    }
  }
}

}  // namespace thermocap
