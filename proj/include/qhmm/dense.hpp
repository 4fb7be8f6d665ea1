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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qhmm {

using Complex = std::complex<double>;

/// Dense complex matrix used for every operator in the library. Treated as an
/// immutable value: functions below return new matrices and never mutate inputs.
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Default absolute tolerance for traces, eigenvalue floors and channel checks.
inline constexpr double kTolerance = 1e-9;

/// Default relative threshold for numeric_rank.
inline constexpr double kRankTolerance = 1e-8;

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the second tensor factor of a (dim1*dim2)-square matrix whose
/// basis is ordered |i>|k> -> i*dim2 + k.
ComplexMatrix partial_trace_second(const ComplexMatrix& a, std::size_t dim1, std::size_t dim2);

/// Eigenvalues of a Hermitian matrix in ascending order. The input is
/// symmetrized first; it must be Hermitian to within kTolerance relative
/// Frobenius norm or DomainError is thrown.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Number of singular values above rel_tol times the largest one.
std::size_t numeric_rank(const ComplexMatrix& a, double rel_tol = kRankTolerance);
std::size_t numeric_rank(const RealMatrix& a, double rel_tol = kRankTolerance);

bool all_finite(const ComplexMatrix& a);
bool is_square(const ComplexMatrix& a);

/// ||a - a^dagger||_F <= tol * max(1, ||a||_F)
bool is_hermitian(const ComplexMatrix& a, double tol = kTolerance);

ComplexMatrix identity(std::size_t dim);
ComplexMatrix zeros(std::size_t rows, std::size_t cols);

/// |i><j| in dimension dim.
ComplexMatrix ketbra(std::size_t i, std::size_t j, std::size_t dim);

}  // namespace qhmm
