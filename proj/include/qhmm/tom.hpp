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
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qhmm/errors.hpp"
#include "qhmm/quantum.hpp"

namespace qhmm {

/// Rectangular grid of operations given row by row, before validation.
using OperationGrid = std::vector<std::vector<KrausOperation>>;

/// First column of a grid whose summed operation breaks the column law.
struct ColumnViolation {
  std::size_t column = 0;
  /// Ascending eigenvalues of sum_i sum_k K^dagger K over the column.
  std::vector<double> spectrum;
  std::string message;
};

/// Either a validated value or the violation that prevented it.
template <typename T>
class Checked {
 public:
  Checked(T value) : v_(std::move(value)) {}                      // NOLINT
  Checked(ColumnViolation violation) : v_(std::move(violation)) {}  // NOLINT

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    if (!ok()) throw ValidationError(violation().message);
    return std::get<0>(v_);
  }
  const ColumnViolation& violation() const { return std::get<1>(v_); }

 private:
  std::variant<T, ColumnViolation> v_;
};

class SubTOM;
class TOM;
Checked<SubTOM> validate_sub_tom(const OperationGrid& grid);
Checked<TOM> validate_tom(const OperationGrid& grid);

/// Grid of operations whose columns each sum to a trace non-increasing map.
/// Entry (i, j) carries the amplitude for moving from column state j to
/// row state i. Only obtainable through validate_sub_tom or the algebra below.
class SubTOM {
 public:
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  const KrausOperation& at(std::size_t i, std::size_t j) const;

  OperationGrid grid() const;

  /// All-zero grid.
  static SubTOM zero(std::size_t rows, std::size_t cols, std::size_t dim);

 protected:
  SubTOM(std::size_t rows, std::size_t cols, std::vector<KrausOperation> cells);

 private:
  friend Checked<SubTOM> validate_sub_tom(const OperationGrid& grid);
  friend Checked<TOM> validate_tom(const OperationGrid& grid);
  friend class TOM;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  std::vector<KrausOperation> cells_;  // row-major
};

/// Sub-TOM whose every column sums to a quantum channel.
class TOM : public SubTOM {
 public:
  /// Diagonal of identity channels.
  static TOM identity(std::size_t size, std::size_t dim);

 private:
  friend Checked<TOM> validate_tom(const OperationGrid& grid);
  explicit TOM(SubTOM base) : SubTOM(std::move(base)) {}
  friend TOM tom_product(const TOM& b, const TOM& a);
};

/// Checks the column law on the entrywise sum of several grids sharing a
/// shape, without materializing the sum. With require_channel each column
/// must sum to a channel; otherwise to a trace non-increasing map.
std::optional<ColumnViolation> check_column_sum(std::span<const SubTOM> terms,
                                                bool require_channel);

/// Column of sub-normalised states whose traces sum to at most one.
class SubVectorState {
 public:
  explicit SubVectorState(std::vector<DensityOperator> parts);
  static SubVectorState trusted(std::vector<DensityOperator> parts);

  std::size_t size() const { return parts_.size(); }
  std::size_t dim() const { return parts_.front().dim(); }
  const std::vector<DensityOperator>& parts() const { return parts_; }
  const DensityOperator& operator[](std::size_t i) const { return parts_[i]; }

  /// sum_i parts[i]
  DensityOperator total() const;
  double total_trace() const;

 protected:
  struct TrustedTag {};
  SubVectorState(std::vector<DensityOperator> parts, TrustedTag);

 private:
  std::vector<DensityOperator> parts_;
};

/// Sub-vector state whose parts sum to a unit-trace state.
class VectorState : public SubVectorState {
 public:
  explicit VectorState(std::vector<DensityOperator> parts);
  /// Throws ValidationError unless the traces sum to one.
  explicit VectorState(const SubVectorState& state);
};

/// beta_i = sum_j t(i, j)(alpha_j)
SubVectorState apply_tom(const SubTOM& t, const SubVectorState& alpha);
VectorState apply_tom(const TOM& t, const VectorState& alpha);

/// Action-level product b after a: entry (i, j) = sum_k b(i, k) o a(k, j).
SubTOM tom_product(const SubTOM& b, const SubTOM& a);
TOM tom_product(const TOM& b, const TOM& a);

}  // namespace qhmm
