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


// Test-side reference computations. These deliberately avoid the library's
// own arithmetic helpers: plain loops over raw Eigen storage only.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qhmm/models.hpp"

namespace oracle {

using C = std::complex<double>;
using CM = Eigen::MatrixXcd;

inline CM loop_matmul(const CM& a, const CM& b) {
  CM out = CM::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      C s = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

inline CM loop_adjoint(const CM& a) {
  CM out(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline C loop_trace(const CM& a) {
  C s = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

inline double frob(const CM& a) {
  double s = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// sum_k K rho K^dagger
inline CM kraus_apply(const std::vector<CM>& kraus, const CM& rho) {
  CM out = CM::Zero(kraus.front().rows(), kraus.front().rows());
  for (const auto& k : kraus) out += loop_matmul(loop_matmul(k, rho), loop_adjoint(k));
  return out;
}

// Characteristic polynomial coefficients via Faddeev-LeVerrier:
// det(xI - A) = x^n + c[n-1] x^{n-1} + ... + c[0]
inline std::vector<C> char_poly(const CM& a) {
  const auto n = a.rows();
  std::vector<C> c(n + 1, 0.0);
  c[n] = 1.0;
  CM m = CM::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    CM next = loop_matmul(a, m);
    for (Eigen::Index i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    c[n - k] = -loop_trace(loop_matmul(a, m)) / static_cast<double>(k);
  }
  return c;
}

// Durand-Kerner root finding on a monic polynomial; real parts, ascending.
inline std::vector<double> poly_real_roots(const std::vector<C>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<C> z(n);
  const C seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<double>(i));
  auto eval = [&](C x) {
    C v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      C den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      if (std::abs(den) > 0) z[i] -= eval(z[i]) / den;
    }
  }
  std::vector<double> out;
  for (const auto& r : z) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on the real
// symmetric embedding [[Re, -Im], [Im, Re]] (every eigenvalue appears twice).
inline std::vector<double> jacobi_eigenvalues(const CM& h) {
  const auto n = h.rows();
  Eigen::MatrixXd a(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = a(i + n, j + n) = h(i, j).real();
      a(i + n, j) = h(i, j).imag();
      a(i, j + n) = -h(i, j).imag();
    }
  const auto m = 2 * n;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (Eigen::Index p = 0; p < m; ++p)
      for (Eigen::Index q = p + 1; q < m; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (Eigen::Index p = 0; p < m; ++p)
      for (Eigen::Index q = p + 1; q < m; ++q) {
        if (a(p, q) == 0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (Eigen::Index k = 0; k < m; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < m; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev;
  for (Eigen::Index i = 0; i < m; ++i) ev.push_back(a(i, i));
  std::sort(ev.begin(), ev.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < ev.size(); i += 2) out.push_back(0.5 * (ev[i] + ev[i + 1]));
  return out;
}

// Rank by Gaussian elimination with full pivoting, relative to the largest entry.
inline std::size_t gauss_rank(Eigen::MatrixXd m, double rel_tol) {
  double scale = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) scale = std::max(scale, std::abs(m(i, j)));
  if (scale == 0) return 0;
  std::size_t rank = 0;
  const auto rows = m.rows(), cols = m.cols();
  for (Eigen::Index step = 0; step < std::min(rows, cols); ++step) {
    Eigen::Index pr = step, pc = step;
    double best = 0;
    for (Eigen::Index i = step; i < rows; ++i)
      for (Eigen::Index j = step; j < cols; ++j)
        if (std::abs(m(i, j)) > best) best = std::abs(m(i, j)), pr = i, pc = j;
    if (best <= rel_tol * scale) break;
    m.row(step).swap(m.row(pr));
    m.col(step).swap(m.col(pc));
    for (Eigen::Index i = step + 1; i < rows; ++i) {
      const double f = m(i, step) / m(step, step);
      for (Eigen::Index j = step; j < cols; ++j) m(i, j) -= f * m(step, j);
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::size_t> symbol_ids(const qhmm::MealyQHMM& model, const qhmm::Sequence& s) {
  std::vector<std::size_t> out;
  for (const auto& sym : s) {
    const auto it = std::find(model.alphabet.begin(), model.alphabet.end(), sym);
    out.push_back(static_cast<std::size_t>(it - model.alphabet.begin()));
  }
  return out;
}

// Visits every hidden path n_0..n_T with its unnormalized operator
// P_{n_T n_{T-1}}^{o_T} ... P_{n_1 n_0}^{o_1} (pi_{n_0}).
template <typename Visit>
void for_each_path(const qhmm::MealyQHMM& model, const qhmm::Sequence& s, Visit visit) {
  const auto ids = symbol_ids(model, s);
  const std::size_t n = model.num_states();
  std::vector<std::size_t> path(ids.size() + 1, 0);
  auto rec = [&](auto&& self, std::size_t k, const CM& rho) -> void {
    if (k == ids.size()) {
      visit(path, rho);
      return;
    }
    for (std::size_t next = 0; next < n; ++next) {
      path[k + 1] = next;
      const auto& op = model.trans[ids[k]].at(next, path[k]);
      self(self, k + 1, kraus_apply(op.kraus(), rho));
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    path[0] = i;
    rec(rec, 0, model.pi[i].matrix());
  }
}

inline CM path_sum_forward(const qhmm::MealyQHMM& model, const qhmm::Sequence& s) {
  CM total = CM::Zero(model.dim, model.dim);
  for_each_path(model, s, [&](const auto&, const CM& rho) { total += rho; });
  return total;
}

// Classical path sum: sum over n_0..n_T of pi(n_0) prod T^{o_k}(n_k, n_{k-1}).
inline double classical_path_sum(const qhmm::ClassicalMealyHMM& model, const qhmm::Sequence& s) {
  std::vector<std::size_t> ids;
  for (const auto& sym : s)
    ids.push_back(static_cast<std::size_t>(
        std::find(model.alphabet.begin(), model.alphabet.end(), sym) - model.alphabet.begin()));
  const auto n = static_cast<std::size_t>(model.pi.size());
  double total = 0;
  auto rec = [&](auto&& self, std::size_t k, std::size_t state, double w) -> void {
    if (w == 0) return;
    if (k == ids.size()) {
      total += w;
      return;
    }
    for (std::size_t next = 0; next < n; ++next)
      self(self, k + 1, next, w * model.trans[ids[k]](next, state));
  };
  for (std::size_t i = 0; i < n; ++i) rec(rec, 0, i, model.pi(i));
  return total;
}

inline std::vector<qhmm::Sequence> all_sequences(const std::vector<std::string>& alphabet,
                                                 std::size_t length) {
  std::vector<qhmm::Sequence> out{{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<qhmm::Sequence> next;
    for (const auto& s : out)
      for (const auto& a : alphabet) {
        auto t = s;
        t.push_back(a);
        next.push_back(t);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
