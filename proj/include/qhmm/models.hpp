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
#include <cstdint>
#include <string>
#include <vector>

#include "qhmm/tom.hpp"

namespace qhmm {

/// Ordered list of symbol labels.
using Sequence = std::vector<std::string>;

/// Splits text into symbols: one symbol per character when sep is empty,
/// otherwise at each occurrence of sep. The empty text is the empty sequence.
Sequence parse_sequence(const std::string& text, const std::string& sep = "");
std::string join_sequence(const Sequence& sequence, const std::string& sep = "");

/// Collected invariant violations; empty means the model is valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Classical Mealy HMM. trans[v](i, j) is the probability of moving from
/// state j to state i while emitting alphabet[v] (column convention).
struct ClassicalMealyHMM {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  Eigen::VectorXd pi;
  std::vector<RealMatrix> trans;  // indexed like alphabet
  /// Relaxes only the "sum over symbols is stochastic" check to substochastic.
  bool substochastic = false;

  std::size_t symbol_index(const std::string& symbol) const;
};

/// Mealy quantum HMM: vector state pi and one sub-TOM per symbol, the sum over
/// symbols being a TOM.
struct MealyQHMM {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::size_t dim = 1;
  VectorState pi;
  std::vector<SubTOM> trans;  // indexed like alphabet
  bool substochastic = false;

  std::size_t num_states() const { return states.size(); }
  std::size_t symbol_index(const std::string& symbol) const;
  std::size_t state_index(const std::string& state) const;
};

ValidationReport validate_hmm(const ClassicalMealyHMM& model);
ValidationReport validate_qhmm(const MealyQHMM& model);

/// Throws ValidationError carrying the report when the model is invalid.
void require_valid(const ClassicalMealyHMM& model);
void require_valid(const MealyQHMM& model);

/// dim-1 embedding: probability p becomes the 1x1 Kraus operation {[sqrt p]}.
MealyQHMM embed_classical(const ClassicalMealyHMM& hmm);

// Random generation, deterministic in the seed.

/// Column-normalized Ginibre model; sum over symbols is a TOM.
MealyQHMM random_qhmm(std::size_t num_states, std::size_t num_symbols, std::size_t dim,
                      std::uint64_t seed);

/// Model whose every entry is c * channel (Viterbi-eligible). Roughly a
/// quarter of the entries are zero operations.
MealyQHMM random_eligible_qhmm(std::size_t num_states, std::size_t num_symbols, std::size_t dim,
                               std::uint64_t seed);

/// Random sub-TOM: each column sums to u_j times a channel, u_j uniform in (0, 1].
SubTOM random_sub_tom(std::size_t rows, std::size_t cols, std::size_t dim_in,
                      std::size_t dim_out, std::uint64_t seed);
TOM random_tom(std::size_t rows, std::size_t cols, std::size_t dim_in, std::size_t dim_out,
               std::uint64_t seed);
VectorState random_vector_state(std::size_t size, std::size_t dim, std::uint64_t seed);

/// State diagram: an edge j -> i per symbol with a non-zero operation at (i, j).
struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t symbol = 0;
  std::string label;  // "P_{to from}^{V} | V"
};

struct ModelGraph {
  std::vector<std::string> nodes;
  std::vector<GraphEdge> edges;  // ordered by source state, then symbol, then target
};

ModelGraph graph_view(const MealyQHMM& model);
std::string to_dot(const ModelGraph& graph);

}  // namespace qhmm
