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

#include <map>

#include "oracle.hpp"
#include "qhmm/inference.hpp"
#include "qhmm/model_io.hpp"

namespace {

using qhmm::Sequence;

qhmm::MealyQHMM q(const std::string& name) { return qhmm::as_qhmm(qhmm::builtin(name)); }

struct OraclePath {
  std::vector<std::size_t> path;
  double prob = 0;
};

// Exhaustive maximum over hidden paths; ties go to the path that is smallest
// when read from the last state backwards.
OraclePath oracle_viterbi(const qhmm::MealyQHMM& model, const Sequence& s) {
  std::vector<OraclePath> all;
  oracle::for_each_path(model, s, [&](const std::vector<std::size_t>& p, const oracle::CM& rho) {
    all.push_back({p, oracle::loop_trace(rho).real()});
  });
  double best = 0;
  for (const auto& p : all) best = std::max(best, p.prob);
  if (best <= 0) return {std::vector<std::size_t>(s.size() + 1, 0), 0.0};
  const OraclePath* pick = nullptr;
  for (const auto& p : all) {
    if (p.prob < best - 1e-12 * best) continue;
    if (!pick || std::lexicographical_compare(p.path.rbegin(), p.path.rend(),
                                              pick->path.rbegin(), pick->path.rend()))
      pick = &p;
  }
  return *pick;
}

TEST(Forward, MatchesPathSumOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto m = qhmm::random_qhmm(1 + seed % 3, 1 + (seed / 3) % 3, 1 + (seed / 9) % 3, seed);
    for (std::size_t len = 0; len <= 3; ++len) {
      for (const auto& s : oracle::all_sequences(m.alphabet, len)) {
        const auto r = qhmm::forward(m, s);
        const auto want = oracle::path_sum_forward(m, s);
        ASSERT_LE(oracle::frob(r.rho.matrix() - want), 1e-12);
        ASSERT_NEAR(r.prob, oracle::loop_trace(want).real(), 1e-12);
      }
    }
  }
}

TEST(Forward, EmptySequenceIsInitialState) {
  const auto m = q("lambda1q");
  const auto r = qhmm::forward(m, {});
  EXPECT_DOUBLE_EQ(r.prob, 1.0);
  EXPECT_LE(oracle::frob(r.rho.matrix() - qhmm::ketbra(0, 0, 2)), 0.0);
}

TEST(Forward, LambdaOneQuantumMeasured) {
  const auto m = q("lambda1q");
  const qhmm::Measurement mu({{"b", qhmm::ketbra(1, 1, 2)}, {"c", qhmm::ketbra(0, 0, 2)}});
  const auto aba = qhmm::measured_probabilities(m, {"a", "b", "a"}, mu);
  EXPECT_EQ(aba[0].second, 0.5);
  EXPECT_EQ(aba[1].second, 0.0);
  const auto aca = qhmm::measured_probabilities(m, {"a", "c", "a"}, mu);
  EXPECT_EQ(aca[0].second, 0.0);
  EXPECT_EQ(aca[1].second, 0.5);
  EXPECT_THROW(qhmm::measured_probabilities(m, {"a"}, qhmm::Measurement::trivial(3)),
               qhmm::ShapeError);
}

TEST(Forward, ErrorsOnBadInput) {
  const auto m = q("lambda1q");
  EXPECT_THROW(qhmm::forward(m, {"z"}), qhmm::InputError);
  EXPECT_THROW(qhmm::forward(m, Sequence(501, "a")), qhmm::ResourceError);
  EXPECT_NO_THROW(qhmm::forward(m, Sequence(500, "a")));
}

TEST(ClassicalForward, MatchesPathSum) {
  for (const auto& name : {"lambda1c", "lambda2c", "lambda3c", "lambda_ex2_c"}) {
    const auto h = std::get<qhmm::ClassicalMealyHMM>(qhmm::builtin(name));
    for (std::size_t len = 0; len <= 5; ++len)
      for (const auto& s : oracle::all_sequences(h.alphabet, len))
        ASSERT_NEAR(qhmm::classical_forward(h, s), oracle::classical_path_sum(h, s), 1e-15);
  }
}

TEST(Enumerate, OrderTotalAndCap) {
  const auto m = qhmm::random_qhmm(2, 3, 2, 77);
  const auto all = qhmm::enumerate_distribution(m, 3);
  ASSERT_EQ(all.size(), 27u);
  oracle::CM total = oracle::CM::Zero(2, 2);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i) EXPECT_LT(all[i - 1].sequence, all[i].sequence);
    total += all[i].rho.matrix();
  }
  EXPECT_NEAR(oracle::loop_trace(total).real(), 1.0, 1e-12);
  for (double ev : oracle::jacobi_eigenvalues(total)) EXPECT_GE(ev, -1e-12);
  EXPECT_THROW(qhmm::enumerate_distribution(m, 3, 26), qhmm::ResourceError);
  EXPECT_NO_THROW(qhmm::enumerate_distribution(m, 3, 27));
}

TEST(Marginalization, OperatorResidual) {
  const auto m = q("lambda1q");
  EXPECT_LE(qhmm::marginalization_check(m, {"a", "b"}), 1e-15);
  // after "a" the b/c branches rotate |0><0| into I/2
  EXPECT_NEAR(qhmm::marginalization_check(m, {"a"}), std::sqrt(0.5), 1e-15);
  const auto e = q("lambda_ex2_q");
  oracle::CM sum = oracle::CM::Zero(2, 2);
  for (const auto& o : e.alphabet) sum += oracle::path_sum_forward(e, {"a", o});
  EXPECT_NEAR(qhmm::marginalization_check(e, {"a"}),
              oracle::frob(sum - oracle::path_sum_forward(e, {"a"})), 1e-15);
}

TEST(Marginalization, TracesAgree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = qhmm::random_qhmm(3, 2, 2, seed);
    const Sequence prefix{"a", "b", "b", "a"};
    double ext = 0;
    for (const auto& o : m.alphabet) {
      auto s = prefix;
      s.push_back(o);
      ext += qhmm::forward(m, s).prob;
    }
    EXPECT_NEAR(ext, qhmm::forward(m, prefix).prob, 1e-12);
  }
}

TEST(NextSymbol, IsConditionalProbability) {
  const auto m = qhmm::random_qhmm(2, 3, 2, 5);
  const Sequence prefix{"c", "a"};
  const auto alpha = qhmm::forward(m, prefix).alpha;
  const auto dist = qhmm::next_symbol_distribution(m, alpha);
  double sum = 0;
  for (const auto& [sym, p] : dist) {
    auto ext = prefix;
    ext.push_back(sym);
    EXPECT_NEAR(p, qhmm::forward(m, ext).prob / qhmm::forward(m, prefix).prob, 1e-12);
    sum += p;
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
  const auto dead = qhmm::forward(q("lambda1q"), {"b"}).alpha;
  EXPECT_THROW(qhmm::next_symbol_distribution(q("lambda1q"), dead), qhmm::DomainError);
}

TEST(Sample, DeterministicAndSupported) {
  const auto m = q("lambda1q");
  EXPECT_EQ(qhmm::sample(m, 3, 99), qhmm::sample(m, 3, 99));
  const auto draws = qhmm::sample_many(m, 3, 1, 200);
  std::map<Sequence, int> counts;
  for (const auto& s : draws) {
    ASSERT_GT(qhmm::forward(m, s).prob, 0.0);
    ++counts[s];
  }
  EXPECT_EQ(counts.size(), 2u);
}

TEST(Viterbi, LambdaOneQuantum) {
  const auto m = q("lambda1q");
  const auto r = qhmm::viterbi(m, {"a", "b", "a"});
  EXPECT_EQ(r.path_labels, (std::vector<std::string>{"s2", "s1", "s2", "s1"}));
  EXPECT_NEAR(r.prob, 0.5, 1e-15);
  ASSERT_EQ(r.survivors.size(), 4u);
  EXPECT_FALSE(r.survivors[0][0].backpointer.has_value());
  EXPECT_EQ(r.survivors[3][0].backpointer, 1u);
  EXPECT_NEAR(r.final_state.trace(), 0.5, 1e-15);
}

TEST(Viterbi, ImpossibleSequenceGivesZeroPath) {
  const auto m = q("lambda1q");
  const auto r = qhmm::viterbi(m, {"b", "b"});
  EXPECT_EQ(r.prob, 0.0);
  EXPECT_EQ(r.path, (std::vector<std::size_t>{0, 0, 0}));
  const auto b = qhmm::brute_force_viterbi(m, {"b", "b"});
  EXPECT_EQ(b.path, r.path);
}

TEST(Viterbi, EligibilityReport) {
  const auto ok = qhmm::viterbi_eligibility(q("lambda1q"));
  EXPECT_TRUE(ok.eligible);
  EXPECT_EQ(ok.factors.size(), 12u);
  const auto bad = qhmm::viterbi_eligibility(q("lambda_ex2_q"));
  EXPECT_FALSE(bad.eligible);
  bool has_missing = false;
  for (const auto& f : bad.factors) has_missing |= !f.factor.has_value();
  EXPECT_TRUE(has_missing);
  EXPECT_THROW(qhmm::viterbi(q("lambda_ex2_q"), {"a"}), qhmm::EligibilityError);
}

TEST(Viterbi, MatchesExhaustiveOracle) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto m = qhmm::random_eligible_qhmm(1 + seed % 3, 2, 1 + seed % 2, seed);
    for (std::size_t len = 0; len <= 4; ++len) {
      for (const auto& s : oracle::all_sequences(m.alphabet, len)) {
        const auto want = oracle_viterbi(m, s);
        const auto got = qhmm::viterbi(m, s);
        ASSERT_EQ(got.path, want.path) << "seed " << seed << " " << qhmm::join_sequence(s);
        ASSERT_NEAR(got.prob, want.prob, 1e-12);
        const auto brute = qhmm::brute_force_viterbi(m, s);
        ASSERT_EQ(brute.path, want.path);
        ASSERT_NEAR(brute.prob, want.prob, 1e-12);
      }
    }
  }
}

TEST(Viterbi, BruteForceWorksOnIneligibleModels) {
  const auto m = q("lambda_ex2_q");
  const auto r = qhmm::brute_force_viterbi(m, {"a", "b"});
  const auto want = oracle_viterbi(m, {"a", "b"});
  EXPECT_EQ(r.path, want.path);
  EXPECT_NEAR(r.prob, 0.5, 1e-15);
  EXPECT_THROW(qhmm::brute_force_viterbi(m, Sequence(12, "a"), 1000), qhmm::ResourceError);
}

TEST(Viterbi, TraceComparison) {
  EXPECT_TRUE(qhmm::trace_exceeds(0.5, 0.4));
  EXPECT_FALSE(qhmm::trace_exceeds(0.5, 0.5));
  EXPECT_FALSE(qhmm::trace_exceeds(0.5 + 1e-15, 0.5));
  EXPECT_FALSE(qhmm::trace_exceeds(0.0, 0.0));
}

}  // namespace
