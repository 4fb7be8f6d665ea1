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

#include "qhmm/model_io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "qhmm/json_text.hpp"

namespace qhmm {

namespace {

using Json = OrderedJson;

[[noreturn]] void field_error(const std::string& origin, const std::string& path,
                              const std::string& what) {
  throw IoError(origin + ": " + path + ": " + what);
}

Json parse_json(std::string_view text, const std::string& origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw IoError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) +
                  ": malformed JSON (" + e.what() + ")");
  }
}

struct Reader {
  std::string origin;

  const Json& field(const Json& obj, const std::string& key, const std::string& path) const {
    if (!obj.is_object()) field_error(origin, path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) field_error(origin, path.empty() ? key : path + "." + key, "missing");
    return *it;
  }

  double number(const Json& j, const std::string& path) const {
    if (!j.is_number()) field_error(origin, path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) field_error(origin, path, "non-finite number");
    return v;
  }

  Complex complex(const Json& j, const std::string& path) const {
    if (j.is_number()) return {number(j, path), 0.0};
    if (!j.is_array() || j.size() != 2) field_error(origin, path, "expected [re, im]");
    return {number(j[0], path + "[0]"), number(j[1], path + "[1]")};
  }

  ComplexMatrix matrix(const Json& j, const std::string& path) const {
    if (!j.is_array() || j.empty()) field_error(origin, path, "expected a non-empty matrix");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      const std::string rp = path + "[" + std::to_string(r) + "]";
      if (!j[r].is_array() || j[r].empty()) field_error(origin, rp, "expected a non-empty row");
      if (r == 0) cols = j[r].size();
      if (j[r].size() != cols) field_error(origin, rp, "ragged matrix row");
    }
    ComplexMatrix m = zeros(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            complex(j[r][c], path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
    return m;
  }

  std::vector<std::string> labels(const Json& j, const std::string& path) const {
    if (!j.is_array()) field_error(origin, path, "expected a list of labels");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_string()) field_error(origin, path + "[" + std::to_string(i) + "]", "expected a string");
      out.push_back(j[i].get<std::string>());
    }
    return out;
  }

  /// N x N grid of arbitrary cells.
  const Json& square_grid(const Json& j, std::size_t n, const std::string& path) const {
    if (!j.is_array() || j.size() != n) {
      field_error(origin, path, "expected " + std::to_string(n) + " rows");
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (!j[r].is_array() || j[r].size() != n) {
        field_error(origin, path + "[" + std::to_string(r) + "]",
                    "expected " + std::to_string(n) + " entries");
      }
    }
    return j;
  }

  void check_transition_keys(const Json& trans, const std::vector<std::string>& alphabet) const {
    if (!trans.is_object()) field_error(origin, "transitions", "expected an object");
    const std::set<std::string> known(alphabet.begin(), alphabet.end());
    for (const auto& [key, value] : trans.items()) {
      if (!known.count(key)) field_error(origin, "transitions." + key, "symbol not in alphabet");
    }
  }
};

ClassicalMealyHMM read_hmm(const Json& doc, const Reader& rd) {
  ClassicalMealyHMM m;
  m.states = rd.labels(rd.field(doc, "states", ""), "states");
  m.alphabet = rd.labels(rd.field(doc, "alphabet", ""), "alphabet");
  if (doc.contains("substochastic")) {
    if (!doc["substochastic"].is_boolean()) field_error(rd.origin, "substochastic", "expected a boolean");
    m.substochastic = doc["substochastic"].get<bool>();
  }
  const std::size_t n = m.states.size();
  const Json& pi = rd.field(doc, "pi", "");
  if (!pi.is_array() || pi.size() != n) {
    field_error(rd.origin, "pi", "expected " + std::to_string(n) + " probabilities");
  }
  m.pi.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m.pi(static_cast<Eigen::Index>(i)) = rd.number(pi[i], "pi[" + std::to_string(i) + "]");
  }
  const Json& trans = rd.field(doc, "transitions", "");
  rd.check_transition_keys(trans, m.alphabet);
  for (const auto& symbol : m.alphabet) {
    const std::string path = "transitions." + symbol;
    const Json& grid = rd.square_grid(rd.field(trans, symbol, "transitions"), n, path);
    RealMatrix p(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rd.number(
            grid[i][j], path + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      }
    }
    m.trans.push_back(std::move(p));
  }
  require_valid(m);
  return m;
}

MealyQHMM read_qhmm(const Json& doc, const Reader& rd) {
  auto states = rd.labels(rd.field(doc, "states", ""), "states");
  auto alphabet = rd.labels(rd.field(doc, "alphabet", ""), "alphabet");
  const Json& dim_json = rd.field(doc, "dim", "");
  if (!dim_json.is_number_unsigned() || dim_json.get<std::size_t>() == 0) {
    field_error(rd.origin, "dim", "expected a positive integer");
  }
  const std::size_t dim = dim_json.get<std::size_t>();
  bool substochastic = false;
  if (doc.contains("substochastic")) {
    if (!doc["substochastic"].is_boolean()) field_error(rd.origin, "substochastic", "expected a boolean");
    substochastic = doc["substochastic"].get<bool>();
  }
  const std::size_t n = states.size();
  if (n == 0) field_error(rd.origin, "states", "empty");

  const Json& pi_json = rd.field(doc, "pi", "");
  if (!pi_json.is_array() || pi_json.size() != n) {
    field_error(rd.origin, "pi", "expected " + std::to_string(n) + " matrices");
  }
  std::vector<DensityOperator> parts;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string path = "pi[" + std::to_string(i) + "]";
    const ComplexMatrix m = rd.matrix(pi_json[i], path);
    if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim) {
      field_error(rd.origin, path, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    try {
      parts.emplace_back(m);
    } catch (const DomainError& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }
  std::optional<VectorState> pi;
  try {
    pi.emplace(std::move(parts));
  } catch (const Error& e) {
    throw ValidationError(std::string("pi: ") + e.what());
  }

  const Json& trans_json = rd.field(doc, "transitions", "");
  rd.check_transition_keys(trans_json, alphabet);
  std::vector<SubTOM> trans;
  for (const auto& symbol : alphabet) {
    const std::string path = "transitions." + symbol;
    const Json& grid_json = rd.square_grid(rd.field(trans_json, symbol, "transitions"), n, path);
    OperationGrid grid(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::string cp = path + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
        const Json& cell = grid_json[i][j];
        if (!cell.is_array()) field_error(rd.origin, cp, "expected a list of Kraus matrices");
        if (cell.empty()) {
          grid[i].push_back(KrausOperation::zero(dim));
          continue;
        }
        std::vector<ComplexMatrix> kraus;
        for (std::size_t k = 0; k < cell.size(); ++k) {
          const std::string kp = cp + "[" + std::to_string(k) + "]";
          kraus.push_back(rd.matrix(cell[k], kp));
          if (static_cast<std::size_t>(kraus.back().rows()) != dim ||
              static_cast<std::size_t>(kraus.back().cols()) != dim) {
            field_error(rd.origin, kp, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
          }
        }
        try {
          grid[i].emplace_back(std::move(kraus));
        } catch (const DomainError& e) {
          throw ValidationError(cp + ": " + e.what());
        }
      }
    }
    auto checked = validate_sub_tom(grid);
    if (!checked) throw ValidationError(path + ": " + checked.violation().message);
    trans.push_back(checked.value());
  }
  MealyQHMM model{std::move(states), std::move(alphabet), dim, std::move(*pi), std::move(trans),
                  substochastic};
  require_valid(model);
  return model;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json matrix_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json kraus_json(const KrausOperation& op) {
  Json cell = Json::array();
  for (const auto& k : op.kraus()) cell.push_back(matrix_json(k));
  return cell;
}

Json model_json(const ClassicalMealyHMM& m) {
  Json doc;
  doc["kind"] = "hmm";
  doc["states"] = m.states;
  doc["alphabet"] = m.alphabet;
  doc["dim"] = 1;
  if (m.substochastic) doc["substochastic"] = true;
  Json pi = Json::array();
  for (Eigen::Index i = 0; i < m.pi.size(); ++i) pi.push_back(m.pi(i));
  doc["pi"] = std::move(pi);
  Json trans = Json::object();
  for (std::size_t v = 0; v < m.alphabet.size(); ++v) {
    Json grid = Json::array();
    for (Eigen::Index i = 0; i < m.trans[v].rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.trans[v].cols(); ++j) row.push_back(m.trans[v](i, j));
      grid.push_back(std::move(row));
    }
    trans[m.alphabet[v]] = std::move(grid);
  }
  doc["transitions"] = std::move(trans);
  return doc;
}

Json model_json(const MealyQHMM& m) {
  Json doc;
  doc["kind"] = "qhmm";
  doc["states"] = m.states;
  doc["alphabet"] = m.alphabet;
  doc["dim"] = m.dim;
  if (m.substochastic) doc["substochastic"] = true;
  Json pi = Json::array();
  for (const auto& part : m.pi.parts()) pi.push_back(matrix_json(part.matrix()));
  doc["pi"] = std::move(pi);
  Json trans = Json::object();
  for (std::size_t v = 0; v < m.alphabet.size(); ++v) {
    const SubTOM& t = m.trans[v];
    Json grid = Json::array();
    for (std::size_t i = 0; i < t.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < t.cols(); ++j) {
        row.push_back(t.at(i, j).is_zero(0.0) ? Json::array() : kraus_json(t.at(i, j)));
      }
      grid.push_back(std::move(row));
    }
    trans[m.alphabet[v]] = std::move(grid);
  }
  doc["transitions"] = std::move(trans);
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("error writing " + path.string());
}

// Builtin example models.

RealMatrix real(std::initializer_list<std::initializer_list<double>> rows) {
  RealMatrix m(static_cast<Eigen::Index>(rows.size()),
               static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

ComplexMatrix cm(std::initializer_list<std::initializer_list<double>> rows) {
  return real(rows).cast<Complex>();
}

Eigen::VectorXd vec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

ClassicalMealyHMM lambda1c() {
  return {{"s1", "s2"},
          {"a", "b", "c"},
          vec({0, 1}),
          {real({{0, 1}, {0, 0}}), real({{0, 0}, {0.5, 0}}), real({{0, 0}, {0.5, 0}})},
          false};
}

ClassicalMealyHMM lambda2c() {
  return {{"s1", "s2"}, {"a", "b"}, vec({0, 1}),
          {real({{0, 1}, {0, 0}}), real({{0, 0}, {0.5, 0}})}, true};
}

ClassicalMealyHMM lambda3c() {
  return {{"s1", "s2", "s3"},
          {"a", "b", "c"},
          vec({0, 1, 0}),
          {real({{0, 1, 1}, {0, 0, 0}, {0, 0, 0}}), real({{0, 0, 0}, {0.5, 0, 0}, {0, 0, 0}}),
           real({{0, 0, 0}, {0, 0, 0}, {0.5, 0, 0}})},
          false};
}

ClassicalMealyHMM lambda_ex2_c() {
  return {{"s1", "s2", "s3", "s4"},
          {"a", "b"},
          vec({1, 0, 0, 0}),
          {real({{0, 1, 0, 0}, {0.5, 0, 0, 0}, {0, 0, 0, 0}, {0.5, 0, 0, 0}}),
           real({{0, 0, 0, 0.5}, {0, 0, 0, 0}, {0, 0, 0, 0.5}, {0, 0, 1, 0}})},
          false};
}

MealyQHMM quantum_model(std::vector<std::string> states, std::vector<std::string> alphabet,
                        std::vector<ComplexMatrix> pi, std::vector<OperationGrid> grids) {
  std::vector<DensityOperator> parts;
  for (const auto& p : pi) parts.emplace_back(p);
  std::vector<SubTOM> trans;
  for (const auto& g : grids) trans.push_back(validate_sub_tom(g).value());
  const auto dim = static_cast<std::size_t>(pi.front().rows());
  return {std::move(states), std::move(alphabet), dim, VectorState(std::move(parts)),
          std::move(trans), false};
}

// Weighted single-Kraus maps w * X.X^dagger with w = 1/2 are stored as the
// pair {X/2, X/2}: same map, but every entry stays dyadic so printed
// probabilities come out exact.
KrausOperation half_conjugation(const ComplexMatrix& x) {
  return KrausOperation({0.5 * x, 0.5 * x});
}

MealyQHMM lambda1q() {
  const ComplexMatrix u = cm({{0, -1}, {1, 0}});
  const auto zero = KrausOperation::zero(2);
  OperationGrid pa{{zero, KrausOperation::identity(2)}, {zero, zero}};
  OperationGrid pb{{zero, zero}, {half_conjugation(u), zero}};
  OperationGrid pc{{zero, zero}, {half_conjugation(identity(2)), zero}};
  return quantum_model({"s1", "s2"}, {"a", "b", "c"}, {zeros(2, 2), cm({{1, 0}, {0, 0}})},
                       {pa, pb, pc});
}

MealyQHMM lambda_ex2_q() {
  // Phi_{H|0><0|} = (1/2) Phi_{(|0>+|1>)<0|}, Phi_{H|1><1|} = (1/2) Phi_{(|0>-|1>)<1|}
  const auto h0 = half_conjugation(cm({{1, 0}, {1, 0}}));
  const auto h1 = half_conjugation(cm({{0, 1}, {0, -1}}));
  const auto plus = KrausOperation::conjugation(cm({{0.5, 0.5}, {0.5, 0.5}}));
  const auto minus = KrausOperation::conjugation(cm({{0.5, -0.5}, {-0.5, 0.5}}));
  const ComplexMatrix p0 = cm({{1, 0}, {0, 0}});
  const auto zero = KrausOperation::zero(2);
  OperationGrid pa{{zero, plus, h0}, {h0, zero, zero}, {zero, zero, zero}};
  OperationGrid pb{{zero, zero, zero}, {zero, zero, h1}, {h1, minus, zero}};
  return quantum_model({"s1", "s2", "s3"}, {"a", "b"}, {zeros(2, 2), zeros(2, 2), p0}, {pa, pb});
}

}  // namespace

Model parse_model(std::string_view text, const std::string& origin) {
  const Json doc = parse_json(text, origin);
  Reader rd{origin};
  const Json& kind = rd.field(doc, "kind", "");
  if (kind == "hmm") return read_hmm(doc, rd);
  if (kind == "qhmm") return read_qhmm(doc, rd);
  field_error(origin, "kind", "expected \"hmm\" or \"qhmm\"");
}

std::string serialize_model(const Model& model) {
  return dump_json(std::visit([](const auto& m) { return model_json(m); }, model), 2) + "\n";
}

Model load_model(const std::filesystem::path& path) {
  return parse_model(read_file(path), path.string());
}

void save_model(const Model& model, const std::filesystem::path& path) {
  write_file(path, serialize_model(model));
}

Measurement parse_measurement(std::string_view text, const std::string& origin) {
  const Json doc = parse_json(text, origin);
  Reader rd{origin};
  const Json& effects = rd.field(doc, "effects", "");
  if (!effects.is_object() || effects.empty()) {
    field_error(origin, "effects", "expected a non-empty object");
  }
  std::vector<std::pair<std::string, ComplexMatrix>> out;
  for (const auto& [label, m] : effects.items()) {
    out.emplace_back(label, rd.matrix(m, "effects." + label));
  }
  return Measurement(std::move(out));
}

Measurement load_measurement(const std::filesystem::path& path) {
  return parse_measurement(read_file(path), path.string());
}

std::string serialize_measurement(const Measurement& mu) {
  Json doc;
  doc["kind"] = "measurement";
  Json effects = Json::object();
  for (const auto& [label, m] : mu.effects()) effects[label] = matrix_json(m);
  doc["effects"] = std::move(effects);
  return dump_json(doc, 2) + "\n";
}

std::string serialize_hqmm(const SingleRegisterHQMM& h) {
  Json doc;
  doc["kind"] = "hqmm";
  doc["alphabet"] = h.alphabet;
  doc["quantum_dim"] = h.quantum_dim;
  doc["classical_dim"] = h.classical_dim;
  doc["dim"] = h.dim();
  doc["initial"] = matrix_json(h.initial.matrix());
  Json ops = Json::object();
  for (std::size_t v = 0; v < h.alphabet.size(); ++v) ops[h.alphabet[v]] = kraus_json(h.ops[v]);
  doc["operations"] = std::move(ops);
  Json terminal;
  terminal["symbol"] = "$";
  terminal["kraus"] = kraus_json(h.terminal);
  doc["terminal"] = std::move(terminal);
  return dump_json(doc, 2) + "\n";
}

std::vector<std::string> builtin_names() {
  return {"lambda1c", "lambda2c", "lambda3c", "lambda1q", "lambda_ex2_c", "lambda_ex2_q"};
}

Model builtin(const std::string& name) {
  if (name == "lambda1c") return lambda1c();
  if (name == "lambda2c") return lambda2c();
  if (name == "lambda3c") return lambda3c();
  if (name == "lambda1q") return lambda1q();
  if (name == "lambda_ex2_c") return lambda_ex2_c();
  if (name == "lambda_ex2_q") return lambda_ex2_q();
  throw InputError("unknown builtin model '" + name + "'");
}

MealyQHMM as_qhmm(const Model& model) {
  if (const auto* q = std::get_if<MealyQHMM>(&model)) return *q;
  return embed_classical(std::get<ClassicalMealyHMM>(model));
}

}  // namespace qhmm
