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

#include <cstddef>
#include <string>
#include <vector>

#include "qhmm/inference.hpp"

namespace qhmm {

/// All strings up to max_len over an alphabet, shortest first and
/// lexicographic in alphabet order within a length, starting with the empty string.
struct StringBasis {
  std::vector<std::string> alphabet;
  std::size_t max_len = 0;
  std::vector<Sequence> strings;
};

StringBasis make_string_basis(const std::vector<std::string>& alphabet, std::size_t max_len);

/// H(u, v) = P(u v) with u indexing rows and v columns.
RealMatrix hankel(const MealyQHMM& model, const StringBasis& rows, const StringBasis& cols);
RealMatrix hankel(const ClassicalMealyHMM& model, const StringBasis& rows, const StringBasis& cols);

/// Numeric rank of the square Hankel block with both bases up to max_len.
std::size_t hankel_rank(const MealyQHMM& model, std::size_t max_len,
                        double rel_tol = kRankTolerance);
std::size_t hankel_rank(const ClassicalMealyHMM& model, std::size_t max_len,
                        double rel_tol = kRankTolerance);

/// Tab-separated table; the empty string is written as the label "ε".
std::string hankel_tsv(const RealMatrix& h, const StringBasis& rows, const StringBasis& cols,
                       const std::string& sep = "");

}  // namespace qhmm
