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

#include <algorithm>
#include <cmath>
#include <random>

#include "qhmm/models.hpp"

namespace qhmm {

namespace {

using Engine = std::mt19937_64;

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Engine& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

ComplexMatrix inverse_sqrt(const ComplexMatrix& positive) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (positive + positive.adjoint()));
  const Eigen::VectorXd scale = solver.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
  return solver.eigenvectors() * scale.asDiagonal() * solver.eigenvectors().adjoint();
}

/// Kraus matrices of one column, indexed [row][kraus]; rescaled so that the
/// column sums to `weight` times a channel.
using ColumnKraus = std::vector<std::vector<ComplexMatrix>>;

void normalize_column(std::vector<ColumnKraus*> column_parts, std::size_t dim_in, double weight) {
  ComplexMatrix gram = zeros(dim_in, dim_in);
  for (auto* part : column_parts) {
    for (auto& row : *part) {
      for (auto& k : row) gram += k.adjoint() * k;
    }
  }
  const ComplexMatrix fix = inverse_sqrt(gram) * std::sqrt(weight);
  for (auto* part : column_parts) {
    for (auto& row : *part) {
      for (auto& k : row) k = k * fix;
    }
  }
}

std::size_t kraus_per_cell(std::size_t cells, std::size_t dim_in, std::size_t dim_out) {
  const std::size_t available = cells * dim_out;
  return std::max<std::size_t>(1, (dim_in + available - 1) / available);
}

/// Builds `symbols` sub-TOMs of shape rows x cols; column j of their sum is
/// weights[j] times a channel.
std::vector<SubTOM> random_grids(std::size_t symbols, std::size_t rows, std::size_t cols,
                                 std::size_t dim_in, std::size_t dim_out,
                                 const std::vector<double>& weights, Engine& rng) {
  const std::size_t per_cell = kraus_per_cell(symbols * rows, dim_in, dim_out);
  // kraus[v][j][i] = Kraus list for symbol v, column j, row i
  std::vector<std::vector<ColumnKraus>> kraus(symbols, std::vector<ColumnKraus>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<ColumnKraus*> parts;
    for (std::size_t v = 0; v < symbols; ++v) {
      auto& column = kraus[v][j];
      column.resize(rows);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < per_cell; ++k) column[i].push_back(ginibre(dim_out, dim_in, rng));
      }
      parts.push_back(&column);
    }
    normalize_column(parts, dim_in, weights[j]);
  }
  std::vector<SubTOM> out;
  out.reserve(symbols);
  for (std::size_t v = 0; v < symbols; ++v) {
    OperationGrid grid(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) grid[i].emplace_back(kraus[v][j][i]);
    }
    out.push_back(validate_sub_tom(grid).value());
  }
  return out;
}

VectorState random_vector_state(std::size_t size, std::size_t dim, Engine& rng) {
  std::vector<ComplexMatrix> blocks;
  double total = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    blocks.push_back(g * g.adjoint());
    total += blocks.back().trace().real();
  }
  std::vector<DensityOperator> parts;
  for (const auto& b : blocks) parts.emplace_back(b / total);
  return VectorState(std::move(parts));
}

KrausOperation random_channel(std::size_t dim, std::size_t count, Engine& rng) {
  ColumnKraus column(1);
  for (std::size_t k = 0; k < count; ++k) column[0].push_back(ginibre(dim, dim, rng));
  normalize_column({&column}, dim, 1.0);
  return KrausOperation(column[0]);
}

std::vector<std::string> labels(const char* prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

std::vector<std::string> symbol_labels(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
  }
  return out;
}

}  // namespace

MealyQHMM random_qhmm(std::size_t num_states, std::size_t num_symbols, std::size_t dim,
                      std::uint64_t seed) {
  Engine rng(seed);
  const std::vector<double> weights(num_states, 1.0);
  auto trans = random_grids(num_symbols, num_states, num_states, dim, dim, weights, rng);
  auto pi = random_vector_state(num_states, dim, rng);
  return MealyQHMM{labels("s", num_states), symbol_labels(num_symbols), dim, std::move(pi),
                   std::move(trans), false};
}

MealyQHMM random_eligible_qhmm(std::size_t num_states, std::size_t num_symbols, std::size_t dim,
                               std::uint64_t seed) {
  Engine rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_int_distribution<std::size_t> kraus_count(1, 2);
  // grid[v][i][j]
  std::vector<OperationGrid> grids(
      num_symbols,
      OperationGrid(num_states, std::vector<KrausOperation>(num_states, KrausOperation::zero(dim))));
  for (std::size_t j = 0; j < num_states; ++j) {
    std::vector<double> w(num_symbols * num_states);
    double total = 0.0;
    for (auto& x : w) {
      x = unit(rng) < 0.25 ? 0.0 : expo(rng);
      total += x;
    }
    if (total == 0.0) {
      w[std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng)] = 1.0;
      total = 1.0;
    }
    for (std::size_t v = 0; v < num_symbols; ++v) {
      for (std::size_t i = 0; i < num_states; ++i) {
        const double c = std::clamp(w[v * num_states + i] / total, 0.0, 1.0);
        if (c == 0.0) continue;
        grids[v][i][j] = op_scale(c, random_channel(dim, kraus_count(rng), rng));
      }
    }
  }
  std::vector<SubTOM> trans;
  for (const auto& g : grids) trans.push_back(validate_sub_tom(g).value());
  auto pi = random_vector_state(num_states, dim, rng);
  return MealyQHMM{labels("s", num_states), symbol_labels(num_symbols), dim, std::move(pi),
                   std::move(trans), false};
}

SubTOM random_sub_tom(std::size_t rows, std::size_t cols, std::size_t dim_in,
                      std::size_t dim_out, std::uint64_t seed) {
  Engine rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(cols);
  for (auto& w : weights) w = 1.0 - unit(rng);
  return random_grids(1, rows, cols, dim_in, dim_out, weights, rng).front();
}

TOM random_tom(std::size_t rows, std::size_t cols, std::size_t dim_in, std::size_t dim_out,
               std::uint64_t seed) {
  Engine rng(seed);
  const std::vector<double> weights(cols, 1.0);
  const auto sub = random_grids(1, rows, cols, dim_in, dim_out, weights, rng).front();
  return validate_tom(sub.grid()).value();
}

VectorState random_vector_state(std::size_t size, std::size_t dim, std::uint64_t seed) {
  Engine rng(seed);
  return random_vector_state(size, dim, rng);
}

}  // namespace qhmm
