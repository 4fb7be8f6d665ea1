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

#include "qhmm/spectral.hpp"

#include <cstdio>
#include <sstream>

namespace qhmm {

namespace {

void check_alphabet(const std::vector<std::string>& model_alphabet, const StringBasis& basis) {
  if (basis.alphabet != model_alphabet) {
    throw InputError("hankel: basis alphabet differs from the model alphabet");
  }
}

template <typename Model, typename Probability>
RealMatrix hankel_impl(const Model& model, const StringBasis& rows, const StringBasis& cols,
                       Probability probability) {
  check_alphabet(model.alphabet, rows);
  check_alphabet(model.alphabet, cols);
  RealMatrix h(static_cast<Eigen::Index>(rows.strings.size()),
               static_cast<Eigen::Index>(cols.strings.size()));
  for (std::size_t r = 0; r < rows.strings.size(); ++r) {
    for (std::size_t c = 0; c < cols.strings.size(); ++c) {
      Sequence word = rows.strings[r];
      word.insert(word.end(), cols.strings[c].begin(), cols.strings[c].end());
      h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = probability(model, word);
    }
  }
  return h;
}

std::string label(const Sequence& s, const std::string& sep) {
  return s.empty() ? "ε" : join_sequence(s, sep);
}

}  // namespace

StringBasis make_string_basis(const std::vector<std::string>& alphabet, std::size_t max_len) {
  StringBasis basis{alphabet, max_len, {Sequence{}}};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = basis.strings.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (const auto& symbol : alphabet) {
        Sequence next = basis.strings[i];
        next.push_back(symbol);
        basis.strings.push_back(std::move(next));
      }
    }
    level_start = level_end;
  }
  return basis;
}

RealMatrix hankel(const MealyQHMM& model, const StringBasis& rows, const StringBasis& cols) {
  return hankel_impl(model, rows, cols,
                     [](const MealyQHMM& m, const Sequence& w) { return forward(m, w).prob; });
}

RealMatrix hankel(const ClassicalMealyHMM& model, const StringBasis& rows,
                  const StringBasis& cols) {
  return hankel_impl(model, rows, cols, [](const ClassicalMealyHMM& m, const Sequence& w) {
    return classical_forward(m, w);
  });
}

std::size_t hankel_rank(const MealyQHMM& model, std::size_t max_len, double rel_tol) {
  const auto basis = make_string_basis(model.alphabet, max_len);
  return numeric_rank(hankel(model, basis, basis), rel_tol);
}

std::size_t hankel_rank(const ClassicalMealyHMM& model, std::size_t max_len, double rel_tol) {
  const auto basis = make_string_basis(model.alphabet, max_len);
  return numeric_rank(hankel(model, basis, basis), rel_tol);
}

std::string hankel_tsv(const RealMatrix& h, const StringBasis& rows, const StringBasis& cols,
                       const std::string& sep) {
  std::ostringstream os;
  for (const auto& c : cols.strings) os << '\t' << label(c, sep);
  os << '\n';
  char buf[32];
  for (std::size_t r = 0; r < rows.strings.size(); ++r) {
    os << label(rows.strings[r], sep);
    for (std::size_t c = 0; c < cols.strings.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g",
                    h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
      os << '\t' << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qhmm
