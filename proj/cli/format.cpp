#include "format.hpp"

#include <cmath>
#include <cstdio>

namespace hulthen::cli {

std::string fmt_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string fmt_sig9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::obj_v;
  return v;
}

JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::arr_v;
  return v;
}

JsonValue JsonValue::str(std::string s) {
  JsonValue v;
  v.kind_ = Kind::str_v;
  v.str_ = std::move(s);
  return v;
}

JsonValue JsonValue::num(double x) {
  JsonValue v;
  if (!std::isfinite(x)) return v; // null
  v.kind_ = Kind::num_v;
  v.num_ = x;
  return v;
}

JsonValue JsonValue::integer(long long x) {
  JsonValue v;
  v.kind_ = Kind::int_v;
  v.int_ = x;
  return v;
}

JsonValue JsonValue::boolean(bool x) {
  JsonValue v;
  v.kind_ = Kind::bool_v;
  v.b_ = x;
  return v;
}

JsonValue JsonValue::null() { return JsonValue{}; }

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
  obj_.emplace_back(key, std::move(v));
  return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
  arr_.push_back(std::move(v));
  return *this;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
  out += '"';
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
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void indent(std::string& out, int depth) { out.append(static_cast<size_t>(depth) * 2, ' '); }

} // namespace

void JsonValue::write(std::string& out, int depth) const {
  switch (kind_) {
    case Kind::null_v: out += "null"; break;
    case Kind::bool_v: out += b_ ? "true" : "false"; break;
    case Kind::num_v: out += fmt_sig9(num_); break;
    case Kind::int_v: out += std::to_string(int_); break;
    case Kind::str_v: write_escaped(out, str_); break;
    case Kind::arr_v: {
      if (arr_.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (size_t i = 0; i < arr_.size(); ++i) {
        indent(out, depth + 1);
        arr_[i].write(out, depth + 1);
        if (i + 1 < arr_.size()) out += ',';
        out += '\n';
      }
      indent(out, depth);
      out += ']';
      break;
    }
    case Kind::obj_v: {
      if (obj_.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      for (size_t i = 0; i < obj_.size(); ++i) {
        indent(out, depth + 1);
        write_escaped(out, obj_[i].first);
        out += ": ";
        obj_[i].second.write(out, depth + 1);
        if (i + 1 < obj_.size()) out += ',';
        out += '\n';
      }
      indent(out, depth);
      out += '}';
      break;
    }
  }
}

std::string JsonValue::dump() const {
  std::string out;
  write(out, 0);
  out += '\n';
  return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
  return out;
}

} // namespace hulthen::cli
