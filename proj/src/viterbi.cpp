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

#include "qhmm/inference.hpp"

namespace qhmm {

namespace {

std::vector<std::string> labels_of(const MealyQHMM& model, const std::vector<std::size_t>& path) {
  std::vector<std::string> out;
  out.reserve(path.size());
  for (std::size_t s : path) out.push_back(model.states[s]);
  return out;
}

/// Path a precedes path b when, scanning from the last step backwards, the
/// first differing state of a is smaller.
bool reverse_lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

struct Search {
  const MealyQHMM& model;
  const std::vector<std::size_t>& symbols;
  std::vector<std::size_t> path;
  std::vector<std::size_t> best_path;
  std::optional<DensityOperator> best_state;
  double best_trace = 0.0;

  void visit(const DensityOperator& state, std::size_t step) {
    if (step == symbols.size()) {
      const double t = state.trace();
      const bool take = !best_state || trace_exceeds(t, best_trace) ||
                        (!trace_exceeds(best_trace, t) && reverse_lex_less(path, best_path));
      if (take) {
        best_path = path;
        best_state = state;
        best_trace = t;
      }
      return;
    }
    const SubTOM& t = model.trans[symbols[step]];
    const std::size_t from = path.back();
    for (std::size_t to = 0; to < model.num_states(); ++to) {
      path.push_back(to);
      visit(apply(t.at(to, from), state), step + 1);
      path.pop_back();
    }
  }
};

}  // namespace

bool trace_exceeds(double a, double b) {
  return a > b + 1e-12 * std::max(std::abs(a), std::abs(b));
}

EligibilityReport viterbi_eligibility(const MealyQHMM& model) {
  EligibilityReport report;
  report.eligible = true;
  for (std::size_t v = 0; v < model.trans.size(); ++v) {
    const SubTOM& t = model.trans[v];
    for (std::size_t i = 0; i < t.rows(); ++i) {
      for (std::size_t j = 0; j < t.cols(); ++j) {
        auto c = proportional_channel_factor(t.at(i, j));
        if (!c) report.eligible = false;
        report.factors.push_back({v, i, j, c});
      }
    }
  }
  return report;
}

ViterbiResult viterbi(const MealyQHMM& model, const Sequence& sequence) {
  if (!viterbi_eligibility(model).eligible) {
    throw EligibilityError(
        "viterbi: model has operations that are not of the form c * channel; "
        "use brute_force_viterbi instead");
  }
  const auto symbols = encode(model, sequence);
  const std::size_t n = model.num_states();
  const std::size_t steps = symbols.size();

  std::vector<std::vector<Survivor>> survivors(steps + 1);
  for (std::size_t i = 0; i < n; ++i) survivors[0].push_back({model.pi[i], std::nullopt});

  for (std::size_t k = 1; k <= steps; ++k) {
    const SubTOM& t = model.trans[symbols[k - 1]];
    survivors[k].reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::optional<Survivor> best;
      double best_trace = 0.0;
      for (std::size_t prev = 0; prev < n; ++prev) {
        DensityOperator candidate = apply(t.at(i, prev), survivors[k - 1][prev].state);
        const double tr = candidate.trace();
        if (!best || trace_exceeds(tr, best_trace)) {
          best = Survivor{std::move(candidate), prev};
          best_trace = tr;
        }
      }
      survivors[k].push_back(std::move(*best));
    }
  }

  std::size_t last = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (trace_exceeds(survivors[steps][i].state.trace(), survivors[steps][last].state.trace())) {
      last = i;
    }
  }
  std::vector<std::size_t> path(steps + 1, 0);
  const double prob = survivors[steps][last].state.trace();
  if (prob > 0.0) {
    path[steps] = last;
    for (std::size_t k = steps; k > 0; --k) path[k - 1] = *survivors[k][path[k]].backpointer;
  }
  DensityOperator final_state = survivors[steps][path[steps]].state;
  const double final_trace = final_state.trace();
  return {path, labels_of(model, path), std::move(survivors), std::move(final_state), final_trace};
}

ViterbiResult brute_force_viterbi(const MealyQHMM& model, const Sequence& sequence,
                                  std::size_t cap) {
  const auto symbols = encode(model, sequence);
  const std::size_t n = model.num_states();
  std::size_t paths = 1;
  for (std::size_t k = 0; k <= symbols.size(); ++k) {
    if (paths > cap / n) {
      throw ResourceError("brute_force_viterbi: " + std::to_string(n) + "^" +
                          std::to_string(symbols.size() + 1) + " paths exceed the cap of " +
                          std::to_string(cap));
    }
    paths *= n;
  }
  Search search{model, symbols, {}, {}, std::nullopt, 0.0};
  for (std::size_t start = 0; start < n; ++start) {
    search.path = {start};
    search.visit(model.pi[start], 0);
  }
  return {search.best_path, labels_of(model, search.best_path), {}, *search.best_state,
          search.best_trace};
}

}  // namespace qhmm
