#include "kmps/json_writer.hpp"

#include <cstdio>

namespace kmps {

JsonValue::JsonValue(double v) : kind_(Kind::Number) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  scalar_ = buf;
}

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

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
  fields_.emplace_back(key, std::move(v));
  return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
  elements_.push_back(std::move(v));
  return *this;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void JsonValue::write(std::string* out) const {
  switch (kind_) {
    case Kind::Null: *out += "null"; break;
    case Kind::Bool:
    case Kind::Number: *out += scalar_; break;
    case Kind::String:
      *out += '"';
      *out += json_escape(scalar_);
      *out += '"';
      break;
    case Kind::Object: {
      *out += '{';
      bool first = true;
      for (const auto& [k, v] : fields_) {
        if (!first) *out += ',';
        first = false;
        *out += '"';
        *out += json_escape(k);
        *out += "\":";
        v.write(out);
      }
      *out += '}';
      break;
    }
    case Kind::Array: {
      *out += '[';
      bool first = true;
      for (const auto& v : elements_) {
        if (!first) *out += ',';
        first = false;
        v.write(out);
      }
      *out += ']';
      break;
    }
  }
}

std::string JsonValue::dump() const {
  std::string out;
  write(&out);
  return out;
}

JsonValue JsonValue::coeff_array(const std::vector<BigInt>& coeffs) {
  JsonValue a = array();
  for (const auto& c : coeffs) a.push(JsonValue(c));
  return a;
}

JsonValue JsonValue::poly(const IntPoly& p) {
  if (p.is_zero()) {
    JsonValue a = array();
    a.push(JsonValue(BigInt(0)));
    return a;
  }
  return coeff_array(p.coeffs());
}

JsonValue JsonValue::series(const Series& s) { return coeff_array(s.coeffs()); }

}  // namespace kmps
