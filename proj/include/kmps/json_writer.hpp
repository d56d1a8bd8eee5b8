#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kmps/bigint.hpp"
#include "kmps/int_poly.hpp"
#include "kmps/series.hpp"

namespace kmps {

// Minimal JSON value for output: preserves insertion order and writes
// arbitrary-precision integers as bare JSON numbers, so emitted documents are
// byte-identical across runs.
class JsonValue {
 public:
  JsonValue() : kind_(Kind::Null) {}
  JsonValue(bool b) : kind_(Kind::Bool), scalar_(b ? "true" : "false") {}
  JsonValue(int v) : kind_(Kind::Number), scalar_(std::to_string(v)) {}
  JsonValue(long long v) : kind_(Kind::Number), scalar_(std::to_string(v)) {}
  JsonValue(const BigInt& v) : kind_(Kind::Number), scalar_(v.str()) {}
  JsonValue(double v);
  JsonValue(const char* s) : kind_(Kind::String), scalar_(s) {}
  JsonValue(std::string s) : kind_(Kind::String), scalar_(std::move(s)) {}

  static JsonValue object();
  static JsonValue array();

  JsonValue& set(const std::string& key, JsonValue v);  // object field, insertion order
  JsonValue& push(JsonValue v);                         // array element

  std::string dump() const;

  static JsonValue coeff_array(const std::vector<BigInt>& coeffs);
  static JsonValue poly(const IntPoly& p);
  static JsonValue series(const Series& s);

 private:
  enum class Kind { Null, Bool, Number, String, Object, Array };
  void write(std::string* out) const;

  Kind kind_;
  std::string scalar_;
  std::vector<std::pair<std::string, JsonValue>> fields_;
  std::vector<JsonValue> elements_;
};

std::string json_escape(const std::string& s);

}  // namespace kmps
