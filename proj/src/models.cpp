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

#include "qhmm/models.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qhmm {

namespace {

std::size_t index_of(const std::vector<std::string>& labels, const std::string& label,
                     const char* what) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError(std::string("unknown ") + what + " '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

void check_labels(const std::vector<std::string>& labels, const char* field,
                  ValidationReport& report) {
  if (labels.empty()) report.violations.push_back(std::string(field) + ": empty");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) {
      report.violations.push_back(std::string(field) + "[" + std::to_string(i) + "]: empty label");
    } else if (!seen.insert(labels[i]).second) {
      report.violations.push_back(std::string(field) + "[" + std::to_string(i) +
                                  "]: duplicate label '" + labels[i] + "'");
    }
  }
}

}  // namespace

Sequence parse_sequence(const std::string& text, const std::string& sep) {
  Sequence out;
  if (text.empty()) return out;
  if (sep.empty()) {
    for (char c : text) out.emplace_back(1, c);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return out;
}

std::string join_sequence(const Sequence& sequence, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i) out += sep;
    out += sequence[i];
  }
  return out;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v << "\n";
  return os.str();
}

std::size_t ClassicalMealyHMM::symbol_index(const std::string& symbol) const {
  return index_of(alphabet, symbol, "symbol");
}

std::size_t MealyQHMM::symbol_index(const std::string& symbol) const {
  return index_of(alphabet, symbol, "symbol");
}

std::size_t MealyQHMM::state_index(const std::string& state) const {
  return index_of(states, state, "state");
}

ValidationReport validate_hmm(const ClassicalMealyHMM& model) {
  ValidationReport report;
  auto& out = report.violations;
  check_labels(model.states, "states", report);
  check_labels(model.alphabet, "alphabet", report);
  const auto n = static_cast<Eigen::Index>(model.states.size());

  if (model.pi.size() != n) {
    out.push_back("pi: length " + std::to_string(model.pi.size()) + ", expected " +
                  std::to_string(n));
  } else {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!std::isfinite(model.pi(i)) || model.pi(i) < -1e-12) {
        out.push_back("pi[" + std::to_string(i) + "]: not a probability");
      }
    }
    const double sum = model.pi.sum();
    if (std::abs(sum - 1.0) > kTolerance) out.push_back("pi: sums to " + std::to_string(sum));
  }

  if (model.trans.size() != model.alphabet.size()) {
    out.push_back("transitions: " + std::to_string(model.trans.size()) + " matrices for " +
                  std::to_string(model.alphabet.size()) + " symbols");
    return report;
  }
  RealMatrix total = RealMatrix::Zero(n, n);
  bool shapes_ok = true;
  for (std::size_t v = 0; v < model.trans.size(); ++v) {
    const auto& m = model.trans[v];
    const std::string where = "transitions[" + model.alphabet[v] + "]";
    if (m.rows() != n || m.cols() != n) {
      out.push_back(where + ": shape " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
      shapes_ok = false;
      continue;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (!std::isfinite(m(i, j)) || m(i, j) < -1e-12) {
          out.push_back(where + "(" + std::to_string(i) + "," + std::to_string(j) +
                        "): not a probability");
        }
      }
    }
    total += m;
  }
  if (shapes_ok) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double s = total.col(j).sum();
      const bool bad = model.substochastic ? s > 1.0 + kTolerance : std::abs(s - 1.0) > kTolerance;
      if (bad) {
        std::string parts;
        for (std::size_t v = 0; v < model.trans.size(); ++v) {
          parts += (v ? ", " : "") + model.alphabet[v] + ": " +
                   std::to_string(model.trans[v].col(j).sum());
        }
        out.push_back("transitions: column " + model.states[static_cast<std::size_t>(j)] +
                      " of the sum over symbols sums to " + std::to_string(s) + " (" + parts + ")");
      }
    }
  }
  return report;
}

ValidationReport validate_qhmm(const MealyQHMM& model) {
  ValidationReport report;
  auto& out = report.violations;
  check_labels(model.states, "states", report);
  check_labels(model.alphabet, "alphabet", report);
  const std::size_t n = model.states.size();
  if (model.dim == 0) out.push_back("dim: must be positive");
  if (model.pi.size() != n) {
    out.push_back("pi: " + std::to_string(model.pi.size()) + " parts for " + std::to_string(n) +
                  " states");
  }
  if (model.pi.dim() != model.dim) out.push_back("pi: part dimension differs from dim");
  if (model.trans.size() != model.alphabet.size()) {
    out.push_back("transitions: " + std::to_string(model.trans.size()) + " sub-TOMs for " +
                  std::to_string(model.alphabet.size()) + " symbols");
    return report;
  }
  bool shapes_ok = true;
  for (std::size_t v = 0; v < model.trans.size(); ++v) {
    const auto& t = model.trans[v];
    if (t.rows() != n || t.cols() != n || t.dim_in() != model.dim || t.dim_out() != model.dim) {
      out.push_back("transitions[" + model.alphabet[v] + "]: expected " + std::to_string(n) + "x" +
                    std::to_string(n) + " grid on dimension " + std::to_string(model.dim));
      shapes_ok = false;
    }
  }
  if (shapes_ok) {
    if (auto v = check_column_sum(model.trans, !model.substochastic)) {
      // Per-symbol share of the column, tr(sum K^dagger K) / dim.
      std::string parts;
      for (std::size_t s = 0; s < model.trans.size(); ++s) {
        double share = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          share += model.trans[s].at(i, v->column).gram().trace().real();
        }
        parts += (s ? ", " : "") + model.alphabet[s] + ": " +
                 std::to_string(share / static_cast<double>(model.dim));
      }
      out.push_back("transitions: sum over symbols, column " + model.states[v->column] + ": " +
                    v->message + " (per-symbol share " + parts + ")");
    }
  }
  return report;
}

void require_valid(const ClassicalMealyHMM& model) {
  const auto report = validate_hmm(model);
  if (!report.ok()) throw ValidationError("invalid HMM:\n" + report.to_string());
}

void require_valid(const MealyQHMM& model) {
  const auto report = validate_qhmm(model);
  if (!report.ok()) throw ValidationError("invalid QHMM:\n" + report.to_string());
}

MealyQHMM embed_classical(const ClassicalMealyHMM& hmm) {
  require_valid(hmm);
  const std::size_t n = hmm.states.size();
  auto scalar = [](double p) {
    ComplexMatrix m(1, 1);
    m(0, 0) = std::sqrt(std::max(0.0, p));
    return m;
  };
  std::vector<DensityOperator> parts;
  parts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexMatrix m(1, 1);
    m(0, 0) = std::max(0.0, hmm.pi(static_cast<Eigen::Index>(i)));
    parts.emplace_back(m);
  }
  std::vector<SubTOM> trans;
  trans.reserve(hmm.trans.size());
  for (const auto& p : hmm.trans) {
    OperationGrid grid(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        grid[i].emplace_back(std::vector<ComplexMatrix>{
            scalar(p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)))});
      }
    }
    trans.push_back(validate_sub_tom(grid).value());
  }
  return MealyQHMM{hmm.states,      hmm.alphabet, 1, VectorState(std::move(parts)),
                   std::move(trans), hmm.substochastic};
}

ModelGraph graph_view(const MealyQHMM& model) {
  ModelGraph g;
  g.nodes = model.states;
  const std::size_t n = model.num_states();
  for (std::size_t from = 0; from < n; ++from) {
    for (std::size_t v = 0; v < model.alphabet.size(); ++v) {
      for (std::size_t to = 0; to < n; ++to) {
        if (model.trans[v].at(to, from).is_zero()) continue;
        const auto& sym = model.alphabet[v];
        g.edges.push_back({from, to, v,
                           "P_{" + model.states[to] + " " + model.states[from] + "}^{" + sym +
                               "} | " + sym});
      }
    }
  }
  return g;
}

std::string to_dot(const ModelGraph& graph) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph qhmm {\n";
  for (const auto& node : graph.nodes) os << "  " << quote(node) << ";\n";
  for (const auto& e : graph.edges) {
    os << "  " << quote(graph.nodes[e.from]) << " -> " << quote(graph.nodes[e.to])
       << " [label=" << quote(e.label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qhmm
