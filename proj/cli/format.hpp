#pragma once

// Deterministic text output: fixed 6-decimal energies for CSV tables,
// 9-significant-digit doubles elsewhere, and a small insertion-ordered JSON
// writer (the one knob we need, an exact digit policy, is easier to pin
// down here than to coax out of a general-purpose serializer).

#include <string>
#include <utility>
#include <vector>

namespace hulthen::cli {

// "%.6f" with negative zero normalised away
std::string fmt_fixed6(double v);

// "%.9g"
std::string fmt_sig9(double v);

class JsonValue {
 public:
  static JsonValue object();
  static JsonValue array();
  static JsonValue str(std::string s);
  static JsonValue num(double v);    // rendered with %.9g; non-finite -> null
  static JsonValue integer(long long v);
  static JsonValue boolean(bool v);
  static JsonValue null();

  // object helpers (insertion order preserved)
  JsonValue& set(const std::string& key, JsonValue v);
  // array helper
  JsonValue& push(JsonValue v);

  std::string dump() const; // 2-space indent, LF line ends, trailing newline

 private:
  enum class Kind { null_v, bool_v, num_v, int_v, str_v, arr_v, obj_v };
  Kind kind_ = Kind::null_v;
  bool b_ = false;
  double num_ = 0.0;
  long long int_ = 0;
  std::string str_;
  std::vector<JsonValue> arr_;
  std::vector<std::pair<std::string, JsonValue>> obj_;

  void write(std::string& out, int depth) const;
};

// joins cells with commas and a LF
std::string csv_row(const std::vector<std::string>& cells);

} // namespace hulthen::cli
