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

#include "oracle.hpp"
#include "qhmm/model_io.hpp"
#include "qhmm/spectral.hpp"

namespace {

qhmm::ClassicalMealyHMM ex2c() {
  return std::get<qhmm::ClassicalMealyHMM>(qhmm::builtin("lambda_ex2_c"));
}
qhmm::MealyQHMM ex2q() { return std::get<qhmm::MealyQHMM>(qhmm::builtin("lambda_ex2_q")); }

qhmm::Sequence concat(qhmm::Sequence a, const qhmm::Sequence& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

TEST(Spectral, BasisIsLengthLexicographic) {
  const auto b = qhmm::make_string_basis({"a", "b"}, 2);
  ASSERT_EQ(b.strings.size(), 7u);
  const std::vector<qhmm::Sequence> want{{}, {"a"}, {"b"}, {"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}};
  EXPECT_EQ(b.strings, want);
}

TEST(Spectral, EntriesAreConcatenationProbabilities) {
  const auto h = ex2c();
  const auto b = qhmm::make_string_basis(h.alphabet, 3);
  const auto m = qhmm::hankel(h, b, b);
  ASSERT_EQ(m.rows(), 15);
  for (std::size_t i = 0; i < b.strings.size(); ++i)
    for (std::size_t j = 0; j < b.strings.size(); ++j)
      ASSERT_NEAR(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)),
                  oracle::classical_path_sum(h, concat(b.strings[i], b.strings[j])), 1e-15);
}

TEST(Spectral, QuantumMatchesClassicalAndRankFour) {
  const auto b = qhmm::make_string_basis({"a", "b"}, 3);
  const auto hc = qhmm::hankel(ex2c(), b, b);
  const auto hq = qhmm::hankel(ex2q(), b, b);
  EXPECT_LE((hc - hq).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(oracle::gauss_rank(hc, 1e-8), 4u);
  EXPECT_EQ(qhmm::numeric_rank(hc), 4u);
  EXPECT_EQ(qhmm::numeric_rank(hq), 4u);
  EXPECT_EQ(oracle::gauss_rank(hc.topLeftCorner(11, 11), 1e-8), 4u);
  // row consistency: H(u, empty) = sum_v H(u, v) over single symbols
  for (Eigen::Index i = 0; i < hc.rows(); ++i)
    EXPECT_NEAR(hc(i, 0), hc(i, 1) + hc(i, 2), 1e-12);
}

TEST(Spectral, RankGrowsWithBasis) {
  const std::vector<std::size_t> want{1, 2, 3, 4, 4};
  for (std::size_t len = 0; len < want.size(); ++len) {
    EXPECT_EQ(qhmm::hankel_rank(ex2c(), len), want[len]) << len;
    EXPECT_EQ(qhmm::hankel_rank(ex2q(), len), want[len]) << len;
  }
}

TEST(Spectral, RankBoundedByStates) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto m = qhmm::random_qhmm(2, 2, 1, seed);
    EXPECT_LE(qhmm::hankel_rank(m, 3), 2u);
  }
}

TEST(Spectral, AlphabetMismatchRejected) {
  const auto b = qhmm::make_string_basis({"x"}, 1);
  EXPECT_THROW(qhmm::hankel(ex2c(), b, b), qhmm::InputError);
}

TEST(Spectral, TsvLayout) {
  const auto b = qhmm::make_string_basis({"a", "b"}, 1);
  const auto text = qhmm::hankel_tsv(qhmm::hankel(ex2q(), b, b), b, b);
  EXPECT_EQ(text, "\tε\ta\tb\nε\t1\t1\t0\na\t1\t0.5\t0.5\nb\t0\t0\t0\n");
}

}  // namespace
