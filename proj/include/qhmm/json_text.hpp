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

#pragma once

#include <string>

#include "json.hpp"

namespace qhmm {

using OrderedJson = nlohmann::ordered_json;

/// Shortest-free number format: 17 significant digits, always with a decimal
/// point or exponent so that integral values read back as floats.
std::string format_number(double value);

/// Serializes with keys in insertion order and every float via format_number.
/// indent < 0 gives a single line; otherwise arrays of scalars stay inline.
std::string dump_json(const OrderedJson& value, int indent = -1);

}  // namespace qhmm
