#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace thermocap {

// Ordered JSON document used for every artifact the tools emit. Floats are
// printed with 17 significant digits so that identical inputs give identical
// bytes and values round-trip exactly. Non-finite floats print as null.
class JsonValue {
 public:
  JsonValue() = default;  // null
  JsonValue(double value);
  JsonValue(bool value);
  JsonValue(int value);
  JsonValue(std::int64_t value);
  JsonValue(std::uint64_t value);
  JsonValue(std::string value);
  JsonValue(const char* value);

  static JsonValue object();
  static JsonValue array();
  static JsonValue array(std::span<const double> values);

  // Object member in insertion order; replaces an existing key.
  JsonValue& set(const std::string& key, JsonValue value);
  // Array element.
  JsonValue& push(JsonValue value);

  std::string dump() const;

 private:
  enum class Kind { Null, Bool, Float, Signed, Unsigned, String, Object, Array };

  void write(std::string& out, int depth) const;

  Kind kind_ = Kind::Null;
  bool flag_ = false;
  double number_ = 0.0;
  std::int64_t signed_ = 0;
  std::uint64_t unsigned_ = 0;
  std::string text_;
  std::vector<std::string> keys_;
  std::vector<JsonValue> children_;
};

}  // namespace thermocap
