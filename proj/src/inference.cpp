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

#include "qhmm/inference.hpp"

#include <algorithm>
#include <cmath>

namespace qhmm {

namespace {

template <typename Model>
std::vector<std::size_t> encode_impl(const Model& model, const Sequence& sequence) {
  if (sequence.size() > kMaxSequenceLength) {
    throw ResourceError("sequence length " + std::to_string(sequence.size()) +
                        " exceeds the limit of " + std::to_string(kMaxSequenceLength));
  }
  std::vector<std::size_t> out;
  out.reserve(sequence.size());
  for (const auto& s : sequence) out.push_back(model.symbol_index(s));
  return out;
}

/// base^exponent, saturating above cap.
bool power_exceeds(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t value = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && value > cap / base) return true;
    value *= base;
  }
  return value > cap;
}

void enumerate_rec(const MealyQHMM& model, const SubVectorState& alpha, std::size_t remaining,
                   Sequence& prefix, std::vector<SequenceState>& out) {
  if (remaining == 0) {
    out.push_back({prefix, alpha.total()});
    return;
  }
  for (std::size_t v = 0; v < model.alphabet.size(); ++v) {
    prefix.push_back(model.alphabet[v]);
    enumerate_rec(model, forward_step(model, alpha, v), remaining - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::size_t> encode(const MealyQHMM& model, const Sequence& sequence) {
  return encode_impl(model, sequence);
}

std::vector<std::size_t> encode(const ClassicalMealyHMM& model, const Sequence& sequence) {
  return encode_impl(model, sequence);
}

SubVectorState forward_step(const MealyQHMM& model, const SubVectorState& alpha,
                            std::size_t symbol) {
  if (symbol >= model.trans.size()) throw InputError("forward_step: symbol index out of range");
  return apply_tom(model.trans[symbol], alpha);
}

ForwardResult forward(const MealyQHMM& model, const Sequence& sequence) {
  SubVectorState alpha = model.pi;
  for (std::size_t v : encode(model, sequence)) alpha = forward_step(model, alpha, v);
  DensityOperator rho = alpha.total();
  const double prob = rho.trace();
  return {std::move(alpha), std::move(rho), prob};
}

double classical_forward(const ClassicalMealyHMM& model, const Sequence& sequence) {
  Eigen::VectorXd v = model.pi;
  for (std::size_t s : encode(model, sequence)) v = model.trans[s] * v;
  return v.sum();
}

LabelledValues measured_probabilities(const MealyQHMM& model, const Sequence& sequence,
                                      const Measurement& mu) {
  if (mu.dim() != model.dim) throw ShapeError("measurement dimension does not match the model");
  return measure_probabilities(mu, forward(model, sequence).rho);
}

std::vector<SequenceState> enumerate_distribution(const MealyQHMM& model, std::size_t length,
                                                  std::size_t cap) {
  if (power_exceeds(model.alphabet.size(), length, cap)) {
    throw ResourceError("enumerating " + std::to_string(model.alphabet.size()) + "^" +
                        std::to_string(length) + " sequences exceeds the cap of " +
                        std::to_string(cap));
  }
  if (length > kMaxSequenceLength) throw ResourceError("sequence length limit exceeded");
  std::vector<SequenceState> out;
  Sequence prefix;
  enumerate_rec(model, model.pi, length, prefix, out);
  return out;
}

double marginalization_check(const MealyQHMM& model, const Sequence& sequence) {
  const ForwardResult base = forward(model, sequence);
  ComplexMatrix sum = zeros(model.dim, model.dim);
  for (std::size_t v = 0; v < model.alphabet.size(); ++v) {
    sum += forward_step(model, base.alpha, v).total().matrix();
  }
  return (sum - base.rho.matrix()).norm();
}

LabelledValues next_symbol_distribution(const MealyQHMM& model, const SubVectorState& alpha) {
  const double total = alpha.total_trace();
  if (total <= 1e-12) throw DomainError("next_symbol_distribution: state has vanished");
  LabelledValues out;
  out.reserve(model.alphabet.size());
  for (std::size_t v = 0; v < model.alphabet.size(); ++v) {
    out.emplace_back(model.alphabet[v], forward_step(model, alpha, v).total_trace() / total);
  }
  return out;
}

Sequence sample(const MealyQHMM& model, std::size_t length, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SubVectorState alpha = model.pi;
  Sequence out;
  out.reserve(length);
  for (std::size_t t = 0; t < length; ++t) {
    const auto dist = next_symbol_distribution(model, alpha);
    const double u = unit(rng);
    double acc = 0.0;
    std::size_t chosen = dist.size();
    std::size_t last_positive = 0;
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (dist[v].second <= 0.0) continue;
      last_positive = v;
      acc += dist[v].second;
      if (u < acc) {
        chosen = v;
        break;
      }
    }
    if (chosen == dist.size()) chosen = last_positive;  // rounding at the top end
    out.push_back(model.alphabet[chosen]);
    const SubVectorState next = forward_step(model, alpha, chosen);
    // Conditioning: rescale to unit trace so long samples do not underflow.
    const double scale = next.total_trace();
    std::vector<DensityOperator> parts;
    parts.reserve(next.size());
    for (const auto& p : next.parts()) parts.push_back(DensityOperator::trusted(p.matrix() / scale));
    alpha = SubVectorState::trusted(std::move(parts));
  }
  return out;
}

Sequence sample(const MealyQHMM& model, std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample(model, length, rng);
}

std::vector<Sequence> sample_many(const MealyQHMM& model, std::size_t length, std::uint64_t seed,
                                  std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Sequence> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample(model, length, rng));
  return out;
}

}  // namespace qhmm
