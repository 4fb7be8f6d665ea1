// Copyright 2026 The qhmm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qhmm/json_text.hpp"

#include <cmath>
#include <cstdio>

namespace qhmm {

namespace {

bool is_scalar_array(const OrderedJson& value) {
  if (!value.is_array()) return false;
  for (const auto& item : value) {
    if (item.is_structured()) return false;
  }
  return true;
}

// Scalars, or a row of [re, im] pairs.
bool prints_inline(const OrderedJson& value) {
  if (is_scalar_array(value)) return true;
  if (!value.is_array()) return false;
  for (const auto& item : value) {
    if (!is_scalar_array(item) || item.size() != 2) return false;
  }
  return true;
}

void emit(const OrderedJson& value, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int level) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (value.type()) {
    case OrderedJson::value_t::number_float:
      out += format_number(value.get<double>());
      return;
    case OrderedJson::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += OrderedJson(key).dump();
        out += pretty ? ": " : ":";
        emit(item, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case OrderedJson::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      const bool inline_items = !pretty || prints_inline(value);
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += (inline_items && pretty) ? ", " : ",";
        first = false;
        if (!inline_items) newline(depth + 1);
        emit(item, indent, depth + 1, out);
      }
      if (!inline_items) newline(depth);
      out += ']';
      return;
    }
    default:
      out += value.dump();
      return;
  }
}

}  // namespace

std::string format_number(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump_json(const OrderedJson& value, int indent) {
  std::string out;
  emit(value, indent, 0, out);
  return out;
}

}  // namespace qhmm
