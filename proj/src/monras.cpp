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

#include "qhmm/monras.hpp"

#include <algorithm>

namespace qhmm {

namespace {

KrausOperation partial_trace_operation(std::size_t quantum_dim, std::size_t classical_dim) {
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < classical_dim; ++k) {
    ComplexMatrix bra = zeros(1, classical_dim);
    bra(0, static_cast<Eigen::Index>(k)) = 1.0;
    kraus.push_back(kron(identity(quantum_dim), bra));
  }
  return KrausOperation(std::move(kraus));
}

KrausOperation lift(const SubTOM& t, std::size_t quantum_dim) {
  const std::size_t n = t.rows();
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const KrausOperation& op = t.at(k, l);
      if (op.is_zero(0.0)) continue;
      const ComplexMatrix transfer = ketbra(k, l, n);
      for (const auto& e : op.kraus()) kraus.push_back(kron(e, transfer));
    }
  }
  if (kraus.empty()) return KrausOperation::zero(quantum_dim * n);
  return KrausOperation(std::move(kraus));
}

struct Comparison {
  const MealyQHMM& model;
  const SingleRegisterHQMM& h;
  double worst = 0.0;

  void visit(const SubVectorState& alpha, const ComplexMatrix& lifted, std::size_t remaining) {
    const ComplexMatrix reduced = apply_to_matrix(h.terminal, lifted);
    worst = std::max(worst, (reduced - alpha.total().matrix()).norm());
    if (remaining == 0) return;
    for (std::size_t v = 0; v < model.alphabet.size(); ++v) {
      visit(forward_step(model, alpha, v), apply_to_matrix(h.ops[v], lifted), remaining - 1);
    }
  }
};

}  // namespace

ComplexMatrix block_diagonal(const SubVectorState& alpha) {
  const std::size_t n = alpha.size();
  ComplexMatrix out = zeros(alpha.dim() * n, alpha.dim() * n);
  for (std::size_t i = 0; i < n; ++i) out += kron(alpha[i].matrix(), ketbra(i, i, n));
  return out;
}

SingleRegisterHQMM to_hqmm(const MealyQHMM& model) {
  std::vector<KrausOperation> ops;
  ops.reserve(model.trans.size());
  for (const auto& t : model.trans) ops.push_back(lift(t, model.dim));
  return SingleRegisterHQMM{model.alphabet,
                            model.dim,
                            model.num_states(),
                            DensityOperator::trusted(block_diagonal(model.pi)),
                            std::move(ops),
                            partial_trace_operation(model.dim, model.num_states())};
}

DensityOperator hqmm_forward(const SingleRegisterHQMM& h, const Sequence& sequence,
                             bool terminate) {
  if (sequence.size() > kMaxSequenceLength) throw ResourceError("sequence length limit exceeded");
  ComplexMatrix state = h.initial.matrix();
  for (const auto& symbol : sequence) {
    const auto it = std::find(h.alphabet.begin(), h.alphabet.end(), symbol);
    if (it == h.alphabet.end()) throw InputError("unknown symbol '" + symbol + "'");
    state = apply_to_matrix(h.ops[static_cast<std::size_t>(it - h.alphabet.begin())], state);
  }
  if (terminate) state = apply_to_matrix(h.terminal, state);
  return DensityOperator::trusted(std::move(state));
}

bool is_trace_preserving(const SingleRegisterHQMM& h) {
  ComplexMatrix gram = zeros(h.dim(), h.dim());
  for (const auto& op : h.ops) gram += op.gram();
  return (gram - identity(h.dim())).norm() <= kTolerance * static_cast<double>(h.dim());
}

double equivalence_check(const MealyQHMM& model, std::size_t max_length, std::size_t cap) {
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t t = 0; t <= max_length; ++t) {
    total += level;
    if (total > cap) {
      throw ResourceError("equivalence_check: more than " + std::to_string(cap) + " sequences");
    }
    if (t < max_length && level > cap / std::max<std::size_t>(1, model.alphabet.size())) {
      throw ResourceError("equivalence_check: more than " + std::to_string(cap) + " sequences");
    }
    level *= model.alphabet.size();
  }
  const SingleRegisterHQMM h = to_hqmm(model);
  Comparison cmp{model, h};
  cmp.visit(model.pi, h.initial.matrix(), max_length);
  return cmp.worst;
}

}  // namespace qhmm
