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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhmm/dense.hpp"

namespace qhmm {

/// Ordered (label, value) pairs; order follows the declaring object
/// (measurement outcome order or model alphabet order).
using LabelledValues = std::vector<std::pair<std::string, double>>;

/// Positive semi-definite operator with trace in [0, 1]; sub-normalised
/// states are admitted.
class DensityOperator {
 public:
  /// Validates Hermiticity, the eigenvalue floor and the trace bound, then
  /// stores the symmetrized matrix. Throws ShapeError or DomainError.
  explicit DensityOperator(const ComplexMatrix& matrix);

  /// Zero operator of the given dimension.
  static DensityOperator zero(std::size_t dim);

  /// Skips validation. Only for results of completely positive maps applied
  /// to valid states, which satisfy the invariants by construction.
  static DensityOperator trusted(ComplexMatrix matrix);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double trace() const { return matrix_.trace().real(); }

 private:
  struct TrustedTag {};
  DensityOperator(ComplexMatrix matrix, TrustedTag) : matrix_(std::move(matrix)) {}

  ComplexMatrix matrix_;
};

DensityOperator operator+(const DensityOperator& a, const DensityOperator& b);

/// Completely positive trace non-increasing map rho -> sum_j K_j rho K_j^dagger.
class KrausOperation {
 public:
  /// Throws ShapeError on an empty or inconsistent list and DomainError when
  /// sum_j K_j^dagger K_j exceeds the identity by more than kTolerance.
  explicit KrausOperation(std::vector<ComplexMatrix> kraus);

  static KrausOperation zero(std::size_t dim_in, std::size_t dim_out);
  static KrausOperation zero(std::size_t dim) { return zero(dim, dim); }
  static KrausOperation identity(std::size_t dim);
  /// Single-Kraus map X . X^dagger.
  static KrausOperation conjugation(const ComplexMatrix& x);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// sum_j K_j^dagger K_j (dim_in x dim_in).
  ComplexMatrix gram() const;

  /// True when every Kraus matrix is entrywise below tol in magnitude.
  bool is_zero(double tol = 1e-12) const;

 private:
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  std::vector<ComplexMatrix> kraus_;
};

DensityOperator apply(const KrausOperation& op, const DensityOperator& rho);

/// Raw action on an arbitrary matrix, no state invariants involved.
ComplexMatrix apply_to_matrix(const KrausOperation& op, const ComplexMatrix& m);

/// Sum of maps: Kraus lists are concatenated. Throws DomainError if the sum
/// is no longer trace non-increasing.
KrausOperation op_add(const KrausOperation& a, const KrausOperation& b);

/// outer after inner, Kraus list {K_o K_i} over all pairs.
KrausOperation op_compose(const KrausOperation& outer, const KrausOperation& inner);

/// c * a for c in [0, 1]; Kraus matrices are scaled by sqrt(c).
KrausOperation op_scale(double c, const KrausOperation& a);

bool is_trace_preserving(const KrausOperation& a);

/// Returns c when sum K^dagger K = c * I (entrywise within kTolerance),
/// i.e. when the operation is c times a channel.
std::optional<double> proportional_channel_factor(const KrausOperation& a);

/// POVM: one positive effect per outcome label, effects summing to identity.
class Measurement {
 public:
  /// Throws ValidationError when an effect is not PSD or the sum is not I.
  explicit Measurement(std::vector<std::pair<std::string, ComplexMatrix>> effects);

  /// Single outcome with effect I.
  static Measurement trivial(std::size_t dim, std::string label = "a_e");

  std::size_t dim() const { return dim_; }
  const std::vector<std::pair<std::string, ComplexMatrix>>& effects() const { return effects_; }

 private:
  std::size_t dim_ = 0;
  std::vector<std::pair<std::string, ComplexMatrix>> effects_;
};

/// p(a) = tr(effect(a) rho), clamped to [0, tr rho].
LabelledValues measure_probabilities(const Measurement& mu, const DensityOperator& rho);

}  // namespace qhmm
