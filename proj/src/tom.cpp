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

#include "qhmm/tom.hpp"

#include <sstream>

namespace qhmm {

namespace {

std::vector<KrausOperation> flatten(const OperationGrid& grid) {
  if (grid.empty() || grid.front().empty()) throw ShapeError("grid must be non-empty");
  const std::size_t cols = grid.front().size();
  const std::size_t dim_in = grid.front().front().dim_in();
  const std::size_t dim_out = grid.front().front().dim_out();
  std::vector<KrausOperation> cells;
  cells.reserve(grid.size() * cols);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != cols) {
      throw ShapeError("ragged grid: row " + std::to_string(i) + " has " +
                       std::to_string(grid[i].size()) + " entries, expected " +
                       std::to_string(cols));
    }
    for (const auto& op : grid[i]) {
      if (op.dim_in() != dim_in || op.dim_out() != dim_out) {
        throw ShapeError("grid entries do not share input/output dimensions");
      }
      cells.push_back(op);
    }
  }
  return cells;
}

std::string describe(const std::vector<double>& spectrum) {
  std::ostringstream os;
  os.precision(6);
  os << "[";
  for (std::size_t i = 0; i < spectrum.size(); ++i) os << (i ? ", " : "") << spectrum[i];
  os << "]";
  return os.str();
}

}  // namespace

// SubTOM

SubTOM::SubTOM(std::size_t rows, std::size_t cols, std::vector<KrausOperation> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  dim_in_ = cells_.front().dim_in();
  dim_out_ = cells_.front().dim_out();
}

const KrausOperation& SubTOM::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw ShapeError("SubTOM::at: index out of range");
  return cells_[i * cols_ + j];
}

OperationGrid SubTOM::grid() const {
  OperationGrid out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].assign(cells_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  return out;
}

SubTOM SubTOM::zero(std::size_t rows, std::size_t cols, std::size_t dim) {
  if (rows == 0 || cols == 0) throw ShapeError("SubTOM::zero: empty shape");
  return SubTOM(rows, cols, std::vector<KrausOperation>(rows * cols, KrausOperation::zero(dim)));
}

TOM TOM::identity(std::size_t size, std::size_t dim) {
  OperationGrid grid(size, std::vector<KrausOperation>(size, KrausOperation::zero(dim)));
  for (std::size_t i = 0; i < size; ++i) grid[i][i] = KrausOperation::identity(dim);
  return validate_tom(grid).value();
}

std::optional<ColumnViolation> check_column_sum(std::span<const SubTOM> terms,
                                                bool require_channel) {
  if (terms.empty()) throw ShapeError("check_column_sum: no terms");
  const SubTOM& first = terms.front();
  for (const auto& t : terms) {
    if (t.rows() != first.rows() || t.cols() != first.cols() || t.dim_in() != first.dim_in() ||
        t.dim_out() != first.dim_out()) {
      throw ShapeError("check_column_sum: terms have different shapes");
    }
  }
  const std::size_t dim = first.dim_in();
  for (std::size_t j = 0; j < first.cols(); ++j) {
    ComplexMatrix sum = zeros(dim, dim);
    for (const auto& t : terms) {
      for (std::size_t i = 0; i < t.rows(); ++i) sum += t.at(i, j).gram();
    }
    const auto spectrum = hermitian_eigenvalues(sum);
    const bool ok = require_channel
                        ? (sum - identity(dim)).norm() <= kTolerance * static_cast<double>(dim)
                        : spectrum.back() <= 1.0 + kTolerance;
    if (!ok) {
      ColumnViolation v;
      v.column = j;
      v.spectrum = spectrum;
      v.message = "column " + std::to_string(j) + (require_channel
                                                       ? " does not sum to a channel"
                                                       : " is not trace non-increasing") +
                  "; spectrum of sum K^dagger K = " + describe(spectrum);
      return v;
    }
  }
  return std::nullopt;
}

Checked<SubTOM> validate_sub_tom(const OperationGrid& grid) {
  const std::size_t rows = grid.size();
  auto cells = flatten(grid);
  const std::size_t cols = cells.size() / rows;
  SubTOM candidate(rows, cols, std::move(cells));
  if (auto v = check_column_sum(std::span<const SubTOM>(&candidate, 1), false)) return *v;
  return candidate;
}

Checked<TOM> validate_tom(const OperationGrid& grid) {
  const std::size_t rows = grid.size();
  auto cells = flatten(grid);
  const std::size_t cols = cells.size() / rows;
  SubTOM candidate(rows, cols, std::move(cells));
  if (auto v = check_column_sum(std::span<const SubTOM>(&candidate, 1), true)) return *v;
  return TOM(std::move(candidate));
}

// Vector states

SubVectorState::SubVectorState(std::vector<DensityOperator> parts, TrustedTag)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw ShapeError("vector state must have at least one part");
  for (const auto& p : parts_) {
    if (p.dim() != parts_.front().dim()) throw ShapeError("vector state parts differ in dimension");
  }
}

SubVectorState::SubVectorState(std::vector<DensityOperator> parts)
    : SubVectorState(std::move(parts), TrustedTag{}) {
  const double tr = total_trace();
  if (tr > 1.0 + kTolerance) {
    throw DomainError("sub-vector state: traces sum to " + std::to_string(tr));
  }
}

SubVectorState SubVectorState::trusted(std::vector<DensityOperator> parts) {
  return SubVectorState(std::move(parts), TrustedTag{});
}

DensityOperator SubVectorState::total() const {
  ComplexMatrix sum = zeros(dim(), dim());
  for (const auto& p : parts_) sum += p.matrix();
  return DensityOperator::trusted(std::move(sum));
}

double SubVectorState::total_trace() const {
  double tr = 0.0;
  for (const auto& p : parts_) tr += p.trace();
  return tr;
}

VectorState::VectorState(std::vector<DensityOperator> parts)
    : VectorState(SubVectorState(std::move(parts))) {}

VectorState::VectorState(const SubVectorState& state) : SubVectorState(state) {
  const double tr = total_trace();
  if (std::abs(tr - 1.0) > kTolerance) {
    throw ValidationError("vector state: traces sum to " + std::to_string(tr) + ", not 1");
  }
}

// Algebra

SubVectorState apply_tom(const SubTOM& t, const SubVectorState& alpha) {
  if (t.cols() != alpha.size()) throw ShapeError("apply_tom: size mismatch");
  if (t.dim_in() != alpha.dim()) throw ShapeError("apply_tom: dimension mismatch");
  std::vector<DensityOperator> beta;
  beta.reserve(t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    ComplexMatrix sum = zeros(t.dim_out(), t.dim_out());
    for (std::size_t j = 0; j < t.cols(); ++j) sum += apply_to_matrix(t.at(i, j), alpha[j].matrix());
    beta.push_back(DensityOperator::trusted(std::move(sum)));
  }
  return SubVectorState::trusted(std::move(beta));
}

VectorState apply_tom(const TOM& t, const VectorState& alpha) {
  return VectorState(apply_tom(static_cast<const SubTOM&>(t),
                               static_cast<const SubVectorState&>(alpha)));
}

SubTOM tom_product(const SubTOM& b, const SubTOM& a) {
  if (a.rows() != b.cols()) throw ShapeError("tom_product: inner sizes differ");
  if (a.dim_out() != b.dim_in()) throw ShapeError("tom_product: inner dimensions differ");
  OperationGrid grid(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    grid[i].reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      std::vector<ComplexMatrix> kraus;
      for (std::size_t k = 0; k < a.rows(); ++k) {
        const auto composed = op_compose(b.at(i, k), a.at(k, j));
        kraus.insert(kraus.end(), composed.kraus().begin(), composed.kraus().end());
      }
      grid[i].emplace_back(std::move(kraus));
    }
  }
  return validate_sub_tom(grid).value();
}

TOM tom_product(const TOM& b, const TOM& a) {
  const SubTOM product =
      tom_product(static_cast<const SubTOM&>(b), static_cast<const SubTOM&>(a));
  return validate_tom(product.grid()).value();
}

}  // namespace qhmm
