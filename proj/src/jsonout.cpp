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

#include "nhqc/jsonout.hpp"

#include <cmath>
#include <cstdio>

namespace nhqc {

std::string format_sig12(double v) {
  if (!std::isfinite(v)) {
    throw NumericError("json: non-finite number");
  }
  if (v == 0.0) {
    return "0";  // normalize -0
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

JsonValue JsonValue::boolean(bool v) {
  JsonValue j = with_kind(Kind::bool_v);
  j.bool_value_ = v;
  return j;
}

JsonValue JsonValue::number(double v) {
  JsonValue j = with_kind(Kind::double_v);
  j.double_value_ = v;
  return j;
}

JsonValue JsonValue::integer(long long v) {
  JsonValue j = with_kind(Kind::int_v);
  j.int_value_ = v;
  return j;
}

JsonValue JsonValue::string(std::string v) {
  JsonValue j = with_kind(Kind::string_v);
  j.string_value_ = std::move(v);
  return j;
}

JsonValue& JsonValue::operator[](const std::string& key) {
  if (kind_ == Kind::null_v) {
    kind_ = Kind::object_v;
  }
  if (kind_ != Kind::object_v) {
    throw std::logic_error("JsonValue: operator[] on non-object");
  }
  return fields_[key];
}

void JsonValue::append(JsonValue v) {
  if (kind_ == Kind::null_v) {
    kind_ = Kind::array_v;
  }
  if (kind_ != Kind::array_v) {
    throw std::logic_error("JsonValue: append on non-array");
  }
  items_.push_back(std::move(v));
}

namespace {

void emit_escaped(std::string& out, const std::string& s) {
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

}  // namespace

void JsonValue::emit(std::string& out, int indent, int depth) const {
  const std::string pad((depth + 1) * indent, ' ');
  const std::string close_pad(depth * indent, ' ');
  switch (kind_) {
    case Kind::null_v:
      out += "null";
      break;
    case Kind::bool_v:
      out += bool_value_ ? "true" : "false";
      break;
    case Kind::int_v:
      out += std::to_string(int_value_);
      break;
    case Kind::double_v:
      out += format_sig12(double_value_);
      break;
    case Kind::string_v:
      emit_escaped(out, string_value_);
      break;
    case Kind::array_v: {
      if (items_.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < items_.size(); ++i) {
        out += pad;
        items_[i].emit(out, indent, depth + 1);
        if (i + 1 < items_.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "]";
      break;
    }
    case Kind::object_v: {
      if (fields_.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      std::size_t i = 0;
      for (const auto& [key, value] : fields_) {
        out += pad;
        emit_escaped(out, key);
        out += ": ";
        value.emit(out, indent, depth + 1);
        if (++i < fields_.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "}";
      break;
    }
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  emit(out, indent, 0);
  out += '\n';
  return out;
}

JsonValue json_matrix(const Matrix& m) {
  JsonValue rows = JsonValue::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    JsonValue row = JsonValue::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      JsonValue pair = JsonValue::array();
      pair.append(JsonValue::number(m(r, c).real()));
      pair.append(JsonValue::number(m(r, c).imag()));
      row.append(std::move(pair));
    }
    rows.append(std::move(row));
  }
  return rows;
}

JsonValue json_chi(const ChiMatrix& chi) {
  JsonValue out = JsonValue::object();
  JsonValue labels = JsonValue::array();
  for (const auto& label : chi.basis_labels) {
    labels.append(JsonValue::string(label));
  }
  out["basis"] = std::move(labels);
  out["entries"] = json_matrix(chi.entries);
  out["fit_residual"] = JsonValue::number(chi.fit_residual);
  return out;
}

}  // namespace nhqc
