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
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qhmm/models.hpp"

namespace qhmm {

/// Longest sequence accepted by forward-type routines. Traces are not
/// rescaled, so much longer inputs would underflow.
inline constexpr std::size_t kMaxSequenceLength = 500;

/// Default work cap for exponential enumerations.
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Symbol indices of O; throws InputError on an unknown symbol.
std::vector<std::size_t> encode(const MealyQHMM& model, const Sequence& sequence);
std::vector<std::size_t> encode(const ClassicalMealyHMM& model, const Sequence& sequence);

struct ForwardResult {
  SubVectorState alpha;  // alpha_T
  DensityOperator rho;   // sum_i alpha_T,i
  double prob = 0.0;     // tr rho
};

/// alpha_T = P^{o_T} ... P^{o_1}(pi). The empty sequence returns pi.
ForwardResult forward(const MealyQHMM& model, const Sequence& sequence);

/// One step of the fold: P^{symbol}(alpha).
SubVectorState forward_step(const MealyQHMM& model, const SubVectorState& alpha,
                            std::size_t symbol);

/// Sum of the entries of Pi^{o_T} ... Pi^{o_1} pi.
double classical_forward(const ClassicalMealyHMM& model, const Sequence& sequence);

/// Outcome probabilities of mu on the forward state of O.
LabelledValues measured_probabilities(const MealyQHMM& model, const Sequence& sequence,
                                      const Measurement& mu);

struct SequenceState {
  Sequence sequence;
  DensityOperator rho;
};

/// Forward state of every sequence of length T, in lexicographic order of the
/// alphabet. Throws ResourceError when M^T exceeds cap.
std::vector<SequenceState> enumerate_distribution(const MealyQHMM& model, std::size_t length,
                                                  std::size_t cap = kDefaultEnumerationCap);

/// || sum_o rho_{O o} - rho_O ||_F
double marginalization_check(const MealyQHMM& model, const Sequence& sequence);

/// Conditional distribution of the next symbol given a (sub-normalised)
/// forward state. Throws DomainError if alpha has vanished.
LabelledValues next_symbol_distribution(const MealyQHMM& model, const SubVectorState& alpha);

/// Draws a length-T sequence symbol by symbol from the conditional distribution.
Sequence sample(const MealyQHMM& model, std::size_t length, std::uint64_t seed);
Sequence sample(const MealyQHMM& model, std::size_t length, std::mt19937_64& rng);
/// `count` sequences drawn from one generator seeded with `seed`.
std::vector<Sequence> sample_many(const MealyQHMM& model, std::size_t length, std::uint64_t seed,
                                  std::size_t count);

// Viterbi

struct EntryFactor {
  std::size_t symbol = 0;
  std::size_t row = 0;  // target state i
  std::size_t col = 0;  // source state j
  std::optional<double> factor;
};

struct EligibilityReport {
  bool eligible = false;
  std::vector<EntryFactor> factors;  // symbol-major, then row, then column
};

/// Eligible when every entry is c * channel; zero operations count as c = 0.
EligibilityReport viterbi_eligibility(const MealyQHMM& model);

struct Survivor {
  DensityOperator state;                   // A_{k, S_i}
  std::optional<std::size_t> backpointer;  // n*_{k-1}(S_i); absent at k = 0
};

struct ViterbiResult {
  std::vector<std::size_t> path;         // n_0 ... n_T
  std::vector<std::string> path_labels;
  /// survivors[k][i]; filled by viterbi, empty for brute_force_viterbi.
  std::vector<std::vector<Survivor>> survivors;
  DensityOperator final_state;  // A_{T, n*_T}
  double prob = 0.0;
};

/// Trellis dynamic program. Ties go to the smallest previous-state index and,
/// at termination, the smallest final state. When every path has zero trace
/// the path is all first-state. Throws EligibilityError on ineligible models.
ViterbiResult viterbi(const MealyQHMM& model, const Sequence& sequence);

/// Maximum-trace path by exhaustive search over all N^(T+1) paths, with the
/// same tie rule (prefer the path whose latest differing state is smaller).
ViterbiResult brute_force_viterbi(const MealyQHMM& model, const Sequence& sequence,
                                  std::size_t cap = kDefaultEnumerationCap);

/// Relative comparison used for all trace maximizations.
bool trace_exceeds(double a, double b);

}  // namespace qhmm
