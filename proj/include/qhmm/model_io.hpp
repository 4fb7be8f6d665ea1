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

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhmm/models.hpp"
#include "qhmm/monras.hpp"

namespace qhmm {

using Model = std::variant<ClassicalMealyHMM, MealyQHMM>;

/// Parses a `.hmm.json` / `.qhmm.json` document and validates the model.
/// Throws IoError on malformed input (with line/column or field path) and
/// ValidationError with the violation report on an invalid model.
Model parse_model(std::string_view text, const std::string& origin = "<input>");
std::string serialize_model(const Model& model);

Model load_model(const std::filesystem::path& path);
void save_model(const Model& model, const std::filesystem::path& path);

/// {"kind": "measurement", "effects": {"label": matrix, ...}}; outcome order
/// follows the file.
Measurement parse_measurement(std::string_view text, const std::string& origin = "<input>");
Measurement load_measurement(const std::filesystem::path& path);
std::string serialize_measurement(const Measurement& mu);

std::string serialize_hqmm(const SingleRegisterHQMM& h);

/// Names accepted by builtin().
std::vector<std::string> builtin_names();

/// The example models: lambda1c, lambda2c, lambda3c, lambda1q, lambda_ex2_c,
/// lambda_ex2_q. Throws InputError on an unknown name.
Model builtin(const std::string& name);

/// Quantum view of any model; classical models are embedded at dimension 1.
MealyQHMM as_qhmm(const Model& model);

}  // namespace qhmm
