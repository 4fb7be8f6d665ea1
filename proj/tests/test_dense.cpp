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


#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qhmm/dense.hpp"
#include "qhmm/errors.hpp"

namespace {

using qhmm::ComplexMatrix;

ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> g;
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = {g(rng), g(rng)};
  return m;
}

TEST(Dense, MatmulMatchesLoopOracle) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const int r = 1 + t % 4, k = 1 + (t / 4) % 4, c = 1 + (t / 16) % 3;
    const auto a = random_matrix(rng, r, k);
    const auto b = random_matrix(rng, k, c);
    EXPECT_LE(oracle::frob(qhmm::matmul(a, b) - oracle::loop_matmul(a, b)), 1e-12);
  }
}

TEST(Dense, MatmulShapeMismatchThrows) {
  EXPECT_THROW(qhmm::matmul(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(2, 3)),
               qhmm::ShapeError);
}

TEST(Dense, TraceRequiresSquare) {
  EXPECT_THROW(qhmm::trace(ComplexMatrix::Zero(2, 3)), qhmm::ShapeError);
  std::mt19937_64 rng(1);
  const auto a = random_matrix(rng, 3, 3);
  EXPECT_LE(std::abs(qhmm::trace(a) - oracle::loop_trace(a)), 1e-14);
}

TEST(Dense, AdjointIsInvolution) {
  std::mt19937_64 rng(2);
  const auto a = random_matrix(rng, 2, 3);
  EXPECT_LE(oracle::frob(qhmm::adjoint(a) - oracle::loop_adjoint(a)), 0.0);
  EXPECT_LE(oracle::frob(qhmm::adjoint(qhmm::adjoint(a)) - a), 0.0);
}

TEST(Dense, KronEntries) {
  std::mt19937_64 rng(3);
  const auto a = random_matrix(rng, 2, 3);
  const auto b = random_matrix(rng, 3, 2);
  const auto k = qhmm::kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 2; ++q) EXPECT_EQ(k(i * 3 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(Dense, KronMixedProduct) {
  std::mt19937_64 rng(4);
  const auto a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3);
  const auto c = random_matrix(rng, 2, 2), d = random_matrix(rng, 3, 3);
  const auto lhs = oracle::loop_matmul(qhmm::kron(a, b), qhmm::kron(c, d));
  const auto rhs = qhmm::kron(oracle::loop_matmul(a, c), oracle::loop_matmul(b, d));
  EXPECT_LE(oracle::frob(lhs - rhs), 1e-10);
}

TEST(Dense, PartialTraceOfProduct) {
  std::mt19937_64 rng(5);
  const auto a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3);
  const auto pt = qhmm::partial_trace_second(qhmm::kron(a, b), 2, 3);
  EXPECT_LE(oracle::frob(pt - a * oracle::loop_trace(b)), 1e-12);
  EXPECT_THROW(qhmm::partial_trace_second(ComplexMatrix::Zero(5, 5), 2, 3), qhmm::ShapeError);
}

TEST(Dense, HermitianEigenvaluesMatchCharacteristicPolynomial) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 4;
    const auto x = random_matrix(rng, n, n);
    const ComplexMatrix h = x + oracle::loop_adjoint(x);
    const auto got = qhmm::hermitian_eigenvalues(h);
    const auto want = oracle::poly_real_roots(oracle::char_poly(h));
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-8);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(Dense, DegenerateEigenvaluesMatchJacobi) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 3;
    const auto x = random_matrix(rng, n, 1);
    const ComplexMatrix h = oracle::loop_matmul(x, oracle::loop_adjoint(x));  // rank one
    const auto got = qhmm::hermitian_eigenvalues(h);
    const auto want = oracle::jacobi_eigenvalues(h);
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12 * (1 + std::abs(want[i])));
  }
}

TEST(Dense, EigenvaluesRejectNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(qhmm::hermitian_eigenvalues(m), qhmm::DomainError);
}

TEST(Dense, NumericRank) {
  std::mt19937_64 rng(8);
  EXPECT_EQ(qhmm::numeric_rank(ComplexMatrix(ComplexMatrix::Zero(3, 4))), 0u);
  for (int r = 1; r <= 4; ++r) {
    const auto m = oracle::loop_matmul(random_matrix(rng, 5, r), random_matrix(rng, r, 6));
    EXPECT_EQ(qhmm::numeric_rank(m), static_cast<std::size_t>(r));
  }
  Eigen::MatrixXd real(3, 3);
  real << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  EXPECT_EQ(qhmm::numeric_rank(real), 2u);
  EXPECT_EQ(oracle::gauss_rank(real, 1e-8), 2u);
  EXPECT_THROW(qhmm::numeric_rank(real, 0.0), qhmm::DomainError);
}

TEST(Dense, Helpers) {
  EXPECT_TRUE(qhmm::is_square(qhmm::identity(3)));
  EXPECT_FALSE(qhmm::is_square(qhmm::zeros(2, 3)));
  auto m = qhmm::identity(2);
  EXPECT_TRUE(qhmm::all_finite(m));
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_FALSE(qhmm::all_finite(m));
  const auto kb = qhmm::ketbra(1, 0, 2);
  EXPECT_EQ(kb(1, 0), std::complex<double>(1.0));
  EXPECT_EQ(oracle::frob(kb), 1.0);
  EXPECT_TRUE(qhmm::is_hermitian(qhmm::identity(3)));
  EXPECT_FALSE(qhmm::is_hermitian(kb));
}

}  // namespace
