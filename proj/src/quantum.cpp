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

#include "qhmm/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qhmm/errors.hpp"

namespace qhmm {

namespace {

double max_eigenvalue(const ComplexMatrix& hermitian) {
  const auto ev = hermitian_eigenvalues(hermitian);
  return ev.empty() ? 0.0 : ev.back();
}

}  // namespace

// DensityOperator

DensityOperator::DensityOperator(const ComplexMatrix& matrix) {
  if (matrix.rows() == 0 || !is_square(matrix)) {
    throw ShapeError("DensityOperator: matrix must be square and non-empty");
  }
  if (!all_finite(matrix)) throw DomainError("DensityOperator: non-finite entry");
  if (!is_hermitian(matrix)) throw DomainError("DensityOperator: matrix is not Hermitian");
  const auto ev = hermitian_eigenvalues(matrix);
  if (ev.front() < -kTolerance) {
    throw DomainError("DensityOperator: negative eigenvalue " + std::to_string(ev.front()));
  }
  const double tr = matrix.trace().real();
  if (tr > 1.0 + kTolerance) {
    throw DomainError("DensityOperator: trace " + std::to_string(tr) + " exceeds 1");
  }
  matrix_ = 0.5 * (matrix + matrix.adjoint());
}

DensityOperator DensityOperator::zero(std::size_t dim) {
  if (dim == 0) throw ShapeError("DensityOperator: dimension must be positive");
  return DensityOperator(zeros(dim, dim), TrustedTag{});
}

DensityOperator DensityOperator::trusted(ComplexMatrix matrix) {
  return DensityOperator(std::move(matrix), TrustedTag{});
}

DensityOperator operator+(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) throw ShapeError("DensityOperator: dimension mismatch in sum");
  return DensityOperator::trusted(a.matrix() + b.matrix());
}

// KrausOperation

KrausOperation::KrausOperation(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ShapeError("KrausOperation: empty Kraus list");
  dim_out_ = static_cast<std::size_t>(kraus_.front().rows());
  dim_in_ = static_cast<std::size_t>(kraus_.front().cols());
  if (dim_in_ == 0 || dim_out_ == 0) throw ShapeError("KrausOperation: zero dimension");
  for (const auto& k : kraus_) {
    if (static_cast<std::size_t>(k.rows()) != dim_out_ ||
        static_cast<std::size_t>(k.cols()) != dim_in_) {
      throw ShapeError("KrausOperation: Kraus matrices have inconsistent shapes");
    }
    if (!all_finite(k)) throw DomainError("KrausOperation: non-finite entry");
  }
  const double top = max_eigenvalue(gram());
  if (top > 1.0 + kTolerance) {
    throw DomainError("KrausOperation: not trace non-increasing (largest eigenvalue of "
                      "sum K^dagger K is " + std::to_string(top) + ")");
  }
}

KrausOperation KrausOperation::zero(std::size_t dim_in, std::size_t dim_out) {
  return KrausOperation({zeros(dim_out, dim_in)});
}

KrausOperation KrausOperation::identity(std::size_t dim) {
  return KrausOperation({qhmm::identity(dim)});
}

KrausOperation KrausOperation::conjugation(const ComplexMatrix& x) { return KrausOperation({x}); }

ComplexMatrix KrausOperation::gram() const {
  ComplexMatrix sum = zeros(dim_in_, dim_in_);
  for (const auto& k : kraus_) sum.noalias() += k.adjoint() * k;
  return sum;
}

bool KrausOperation::is_zero(double tol) const {
  return std::all_of(kraus_.begin(), kraus_.end(),
                     [tol](const ComplexMatrix& k) { return k.cwiseAbs().maxCoeff() <= tol; });
}

ComplexMatrix apply_to_matrix(const KrausOperation& op, const ComplexMatrix& m) {
  if (static_cast<std::size_t>(m.rows()) != op.dim_in() ||
      static_cast<std::size_t>(m.cols()) != op.dim_in()) {
    throw ShapeError("apply: state dimension does not match operation input dimension");
  }
  ComplexMatrix out = zeros(op.dim_out(), op.dim_out());
  for (const auto& k : op.kraus()) out.noalias() += k * m * k.adjoint();
  return out;
}

DensityOperator apply(const KrausOperation& op, const DensityOperator& rho) {
  return DensityOperator::trusted(apply_to_matrix(op, rho.matrix()));
}

KrausOperation op_add(const KrausOperation& a, const KrausOperation& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw ShapeError("op_add: dimension mismatch");
  }
  std::vector<ComplexMatrix> kraus = a.kraus();
  kraus.insert(kraus.end(), b.kraus().begin(), b.kraus().end());
  return KrausOperation(std::move(kraus));
}

KrausOperation op_compose(const KrausOperation& outer, const KrausOperation& inner) {
  if (inner.dim_out() != outer.dim_in()) throw ShapeError("op_compose: dimension mismatch");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(outer.kraus().size() * inner.kraus().size());
  for (const auto& ko : outer.kraus()) {
    for (const auto& ki : inner.kraus()) kraus.push_back(ko * ki);
  }
  return KrausOperation(std::move(kraus));
}

KrausOperation op_scale(double c, const KrausOperation& a) {
  if (!(c >= 0.0 && c <= 1.0)) throw DomainError("op_scale: factor must lie in [0, 1]");
  const double s = std::sqrt(c);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus().size());
  for (const auto& k : a.kraus()) kraus.push_back(s * k);
  return KrausOperation(std::move(kraus));
}

bool is_trace_preserving(const KrausOperation& a) {
  const double dim = static_cast<double>(a.dim_in());
  return (a.gram() - qhmm::identity(a.dim_in())).norm() <= kTolerance * dim;
}

std::optional<double> proportional_channel_factor(const KrausOperation& a) {
  const ComplexMatrix g = a.gram();
  const double c = g.trace().real() / static_cast<double>(a.dim_in());
  const ComplexMatrix residual = g - c * qhmm::identity(a.dim_in());
  if (residual.cwiseAbs().maxCoeff() > kTolerance) return std::nullopt;
  if (c < -kTolerance || c > 1.0 + kTolerance) return std::nullopt;
  return std::clamp(c, 0.0, 1.0);
}

// Measurement

Measurement::Measurement(std::vector<std::pair<std::string, ComplexMatrix>> effects)
    : effects_(std::move(effects)) {
  if (effects_.empty()) throw ValidationError("Measurement: no outcomes");
  dim_ = static_cast<std::size_t>(effects_.front().second.rows());
  if (dim_ == 0) throw ValidationError("Measurement: zero dimension");
  std::set<std::string> seen;
  ComplexMatrix sum = zeros(dim_, dim_);
  for (const auto& [label, effect] : effects_) {
    if (!seen.insert(label).second) {
      throw ValidationError("Measurement: duplicate outcome '" + label + "'");
    }
    if (static_cast<std::size_t>(effect.rows()) != dim_ || !is_square(effect)) {
      throw ValidationError("Measurement: effect '" + label + "' has the wrong shape");
    }
    if (!all_finite(effect) || !is_hermitian(effect)) {
      throw ValidationError("Measurement: effect '" + label + "' is not Hermitian");
    }
    const auto ev = hermitian_eigenvalues(effect);
    if (ev.front() < -kTolerance) {
      throw ValidationError("Measurement: effect '" + label + "' is not positive semi-definite");
    }
    sum += effect;
  }
  if ((sum - qhmm::identity(dim_)).cwiseAbs().maxCoeff() > kTolerance) {
    throw ValidationError("Measurement: effects do not sum to the identity");
  }
}

Measurement Measurement::trivial(std::size_t dim, std::string label) {
  return Measurement({{std::move(label), qhmm::identity(dim)}});
}

LabelledValues measure_probabilities(const Measurement& mu, const DensityOperator& rho) {
  if (mu.dim() != rho.dim()) throw ShapeError("measure_probabilities: dimension mismatch");
  const double total = std::max(0.0, rho.trace());
  LabelledValues out;
  out.reserve(mu.effects().size());
  for (const auto& [label, effect] : mu.effects()) {
    const double p = (effect * rho.matrix()).trace().real();
    out.emplace_back(label, std::clamp(p, 0.0, total));
  }
  return out;
}

}  // namespace qhmm
