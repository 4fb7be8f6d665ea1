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

#include "qhmm/dense.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhmm/errors.hpp"

namespace qhmm {

namespace {

std::string shape(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

std::size_t rank_from_singular_values(const Eigen::VectorXd& sv, double rel_tol) {
  if (sv.size() == 0) return 0;
  const double largest = sv.maxCoeff();
  if (largest <= 0.0) return 0;
  return static_cast<std::size_t>((sv.array() > rel_tol * largest).count());
}

}  // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: cannot multiply " + shape(a) + " by " + shape(b));
  }
  return a * b;
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

Complex trace(const ComplexMatrix& a) {
  if (!is_square(a)) throw ShapeError("trace: matrix is " + shape(a));
  return a.trace();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& a, std::size_t dim1, std::size_t dim2) {
  const auto side = static_cast<Eigen::Index>(dim1 * dim2);
  if (dim1 == 0 || dim2 == 0 || a.rows() != side || a.cols() != side) {
    throw ShapeError("partial_trace_second: " + shape(a) + " is not " + std::to_string(dim1) +
                     "*" + std::to_string(dim2) + " square");
  }
  const auto d1 = static_cast<Eigen::Index>(dim1);
  const auto d2 = static_cast<Eigen::Index>(dim2);
  ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
  for (Eigen::Index i = 0; i < d1; ++i) {
    for (Eigen::Index j = 0; j < d1; ++j) {
      for (Eigen::Index k = 0; k < d2; ++k) out(i, j) += a(i * d2 + k, j * d2 + k);
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  if (!is_square(a)) throw ShapeError("hermitian_eigenvalues: matrix is " + shape(a));
  if (!is_hermitian(a)) throw DomainError("hermitian_eigenvalues: matrix is not Hermitian");
  if (a.size() == 0) return {};
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DomainError("hermitian_eigenvalues: eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::size_t numeric_rank(const ComplexMatrix& a, double rel_tol) {
  if (rel_tol <= 0.0) throw DomainError("numeric_rank: rel_tol must be positive");
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return rank_from_singular_values(svd.singularValues(), rel_tol);
}

std::size_t numeric_rank(const RealMatrix& a, double rel_tol) {
  if (rel_tol <= 0.0) throw DomainError("numeric_rank: rel_tol must be positive");
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<RealMatrix> svd(a);
  return rank_from_singular_values(svd.singularValues(), rel_tol);
}

bool all_finite(const ComplexMatrix& a) { return a.allFinite(); }

bool is_square(const ComplexMatrix& a) { return a.rows() == a.cols(); }

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) return false;
  const double scale = std::max(1.0, a.norm());
  return (a - a.adjoint()).norm() <= tol * scale;
}

ComplexMatrix identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return ComplexMatrix::Identity(d, d);
}

ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
}

ComplexMatrix ketbra(std::size_t i, std::size_t j, std::size_t dim) {
  if (i >= dim || j >= dim) throw ShapeError("ketbra: index outside dimension");
  ComplexMatrix out = zeros(dim, dim);
  out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return out;
}

}  // namespace qhmm
