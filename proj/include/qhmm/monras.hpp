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

/// Single-register hidden quantum Markov model on H_quantum (x) H_classical.
/// Basis index of |q>|c> is q * classical_dim + c.
struct SingleRegisterHQMM {
  std::vector<std::string> alphabet;
  std::size_t quantum_dim = 1;
  std::size_t classical_dim = 1;
  DensityOperator initial;         // sum_i pi_i (x) |i><i|
  std::vector<KrausOperation> ops;  // indexed like alphabet
  KrausOperation terminal;         // partial trace over the classical factor, {I (x) <k|}_k

  std::size_t dim() const { return quantum_dim * classical_dim; }
};

/// Lifts every Kraus matrix E at grid position (k, l) to E (x) |k><l|.
SingleRegisterHQMM to_hqmm(const MealyQHMM& model);

/// Folds the symbol operations over O starting from the initial state; with
/// `terminate` the partial-trace operation is applied last.
DensityOperator hqmm_forward(const SingleRegisterHQMM& h, const Sequence& sequence,
                             bool terminate);

/// sum over symbols of the lifted operations is a channel.
bool is_trace_preserving(const SingleRegisterHQMM& h);

/// Block-diagonal embedding sum_i alpha_i (x) |i><i| of a sub-vector state.
ComplexMatrix block_diagonal(const SubVectorState& alpha);

/// Largest Frobenius distance between the terminated single-register state
/// and the forward state, over every sequence of length <= max_length.
double equivalence_check(const MealyQHMM& model, std::size_t max_length,
                         std::size_t cap = kDefaultEnumerationCap);

}  // namespace qhmm
