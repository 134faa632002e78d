// Copyright 2026 The nhqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "nhqc/dense.hpp"
#include "nhqc/tomography.hpp"

namespace nhqc {

/// Deterministic JSON tree: objects emit keys in sorted order and doubles
/// with 12 significant digits, so identical runs produce identical bytes.
class JsonValue {
 public:
  JsonValue() : kind_(Kind::null_v) {}

  static JsonValue object() { return with_kind(Kind::object_v); }
  static JsonValue array() { return with_kind(Kind::array_v); }
  static JsonValue boolean(bool v);
  static JsonValue number(double v);
  static JsonValue integer(long long v);
  static JsonValue string(std::string v);

  /// Object field access; inserts a null on first use.
  JsonValue& operator[](const std::string& key);
  void append(JsonValue v);

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { null_v, bool_v, int_v, double_v, string_v, array_v, object_v };

  static JsonValue with_kind(Kind k) {
    JsonValue v;
    v.kind_ = k;
    return v;
  }

  void emit(std::string& out, int indent, int depth) const;

  Kind kind_;
  bool bool_value_ = false;
  long long int_value_ = 0;
  double double_value_ = 0.0;
  std::string string_value_;
  std::vector<JsonValue> items_;
  std::map<std::string, JsonValue> fields_;
};

/// "%.12g" rendering shared by the JSON and CSV emitters.
std::string format_sig12(double v);

/// Row-major nested arrays of [re, im] pairs.
JsonValue json_matrix(const Matrix& m);

/// {"basis": [labels...], "entries": <matrix>, "fit_residual": r}.
JsonValue json_chi(const ChiMatrix& chi);

}  // namespace nhqc
