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

// Command-line front end: qhmm <command> <model> ...
// A model is either a file path or builtin:<name>.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhmm/inference.hpp"
#include "qhmm/json_text.hpp"
#include "qhmm/model_io.hpp"
#include "qhmm/monras.hpp"
#include "qhmm/spectral.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kEligibility = 3,
  kResource = 4,
  kIo = 5,
};

constexpr const char* kBuiltinPrefix = "builtin:";

qhmm::Model load(const std::string& source) {
  if (source.rfind(kBuiltinPrefix, 0) == 0) {
    qhmm::Model model = qhmm::builtin(source.substr(std::string(kBuiltinPrefix).size()));
    std::visit([](const auto& m) { qhmm::require_valid(m); }, model);
    return model;
  }
  return qhmm::load_model(source);
}

std::size_t enumeration_cap() {
  const char* env = std::getenv("QHMM_ENUM_CAP");
  if (env == nullptr || *env == '\0') return qhmm::kDefaultEnumerationCap;
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(env, &used);
    if (used != std::string(env).size() || value == 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw qhmm::InputError(std::string("QHMM_ENUM_CAP must be a positive integer, got '") + env + "'");
  }
}

std::string show(const qhmm::Sequence& s, const std::string& sep) {
  return s.empty() ? "ε" : qhmm::join_sequence(s, sep);
}

qhmm::OrderedJson matrix_json(const qhmm::ComplexMatrix& m) {
  qhmm::OrderedJson rows = qhmm::OrderedJson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    qhmm::OrderedJson row = qhmm::OrderedJson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(qhmm::OrderedJson::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Options {
  std::string model;
  std::string sequence;
  std::string sep;
  std::string measure;
  std::string target = "monras";
  std::string dump;
  bool brute_force = false;
  bool rank_only = false;
  std::size_t length = 0;
  std::size_t max_len = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  double rel_tol = qhmm::kRankTolerance;
};

int cmd_validate(const Options& o) {
  const qhmm::Model model = load(o.model);
  const auto report = std::visit(
      [](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, qhmm::MealyQHMM>) {
          return qhmm::validate_qhmm(m);
        } else {
          return qhmm::validate_hmm(m);
        }
      },
      model);
  if (!report.ok()) {
    std::cerr << report.to_string();
    return kValidation;
  }
  std::cout << "OK\n";
  return kOk;
}

int cmd_forward(const Options& o) {
  const qhmm::MealyQHMM model = qhmm::as_qhmm(load(o.model));
  const qhmm::Sequence seq = qhmm::parse_sequence(o.sequence, o.sep);
  const qhmm::ForwardResult result = qhmm::forward(model, seq);
  qhmm::OrderedJson out;
  out["prob"] = result.prob;
  out["rho"] = matrix_json(result.rho.matrix());
  if (!o.measure.empty()) {
    const qhmm::Measurement mu = qhmm::load_measurement(o.measure);
    qhmm::OrderedJson per = qhmm::OrderedJson::object();
    for (const auto& [label, p] : qhmm::measured_probabilities(model, seq, mu)) per[label] = p;
    out["per_outcome"] = std::move(per);
  }
  std::cout << qhmm::dump_json(out) << "\n";
  return kOk;
}

int cmd_viterbi(const Options& o) {
  const qhmm::MealyQHMM model = qhmm::as_qhmm(load(o.model));
  const qhmm::Sequence seq = qhmm::parse_sequence(o.sequence, o.sep);
  const bool eligible = qhmm::viterbi_eligibility(model).eligible;
  if (!eligible && !o.brute_force) {
    std::cerr << "model is not Viterbi-eligible (some operation is not c * channel); "
                 "rerun with --brute-force\n";
    return kEligibility;
  }
  const qhmm::ViterbiResult result = o.brute_force
                                         ? qhmm::brute_force_viterbi(model, seq, enumeration_cap())
                                         : qhmm::viterbi(model, seq);
  qhmm::OrderedJson out;
  out["path"] = result.path_labels;
  out["prob"] = result.prob;
  out["eligible"] = eligible;
  std::cout << qhmm::dump_json(out) << "\n";
  return kOk;
}

int cmd_sample(const Options& o) {
  const qhmm::MealyQHMM model = qhmm::as_qhmm(load(o.model));
  for (const auto& s : qhmm::sample_many(model, o.length, o.seed, o.count)) {
    std::cout << qhmm::join_sequence(s, o.sep) << "\n";
  }
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const qhmm::MealyQHMM model = qhmm::as_qhmm(load(o.model));
  const auto all = qhmm::enumerate_distribution(model, o.length, enumeration_cap());
  qhmm::ComplexMatrix sum = qhmm::zeros(model.dim, model.dim);
  for (const auto& entry : all) {
    std::cout << show(entry.sequence, o.sep) << "\t" << qhmm::format_number(entry.rho.trace())
              << "\n";
    sum += entry.rho.matrix();
  }
  const double total = sum.trace().real();
  const auto ev = qhmm::hermitian_eigenvalues(sum);
  const bool holds = std::abs(total - 1.0) <= qhmm::kTolerance && ev.front() >= -qhmm::kTolerance;
  std::cout << "# total\t" << qhmm::format_number(total) << "\t"
            << (holds ? "ok" : "violated") << "\n";
  return kOk;
}

int cmd_hankel(const Options& o) {
  const qhmm::Model model = load(o.model);
  const auto& alphabet = std::visit([](const auto& m) { return m.alphabet; }, model);
  const auto basis = qhmm::make_string_basis(alphabet, o.max_len);
  const qhmm::RealMatrix h =
      std::visit([&](const auto& m) { return qhmm::hankel(m, basis, basis); }, model);
  if (o.rank_only) {
    std::cout << qhmm::numeric_rank(h, o.rel_tol) << "\n";
  } else {
    std::cout << qhmm::hankel_tsv(h, basis, basis, o.sep);
  }
  return kOk;
}

int cmd_convert(const Options& o) {
  if (o.target != "monras") throw qhmm::InputError("convert: unknown target '" + o.target + "'");
  std::cout << qhmm::serialize_hqmm(qhmm::to_hqmm(qhmm::as_qhmm(load(o.model))));
  return kOk;
}

int cmd_graph(const Options& o) {
  std::cout << qhmm::to_dot(qhmm::graph_view(qhmm::as_qhmm(load(o.model))));
  return kOk;
}

int cmd_examples(const Options& o) {
  if (!o.dump.empty()) {
    std::cout << qhmm::serialize_model(qhmm::builtin(o.dump));
    return kOk;
  }
  for (const auto& name : qhmm::builtin_names()) std::cout << name << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum hidden Markov models built from transition operation matrices"};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&) = nullptr;

  auto model_arg = [&](CLI::App* sub) {
    sub->add_option("model", o.model, "model file or builtin:<name>")->required();
  };
  auto sep_opt = [&](CLI::App* sub) {
    sub->add_option("--sep", o.sep, "symbol separator (default: one symbol per character)");
  };

  auto* validate = app.add_subcommand("validate", "check model invariants");
  model_arg(validate);
  validate->callback([&] { handler = cmd_validate; });

  auto* fwd = app.add_subcommand("forward", "forward algorithm");
  model_arg(fwd);
  fwd->add_option("sequence", o.sequence, "observed symbols");
  fwd->add_option("--measure", o.measure, "measurement file applied to the final state");
  sep_opt(fwd);
  fwd->callback([&] { handler = cmd_forward; });

  auto* vit = app.add_subcommand("viterbi", "most probable state path");
  model_arg(vit);
  vit->add_option("sequence", o.sequence, "observed symbols");
  vit->add_flag("--brute-force", o.brute_force, "exhaustive search over all paths");
  sep_opt(vit);
  vit->callback([&] { handler = cmd_viterbi; });

  auto* smp = app.add_subcommand("sample", "draw sequences from the model");
  model_arg(smp);
  smp->add_option("--length", o.length, "sequence length")->required();
  smp->add_option("--seed", o.seed, "random seed")->required();
  smp->add_option("--count", o.count, "number of sequences");
  sep_opt(smp);
  smp->callback([&] { handler = cmd_sample; });

  auto* en = app.add_subcommand("enumerate", "forward trace of every sequence of a length");
  model_arg(en);
  en->add_option("--length", o.length, "sequence length")->required();
  sep_opt(en);
  en->callback([&] { handler = cmd_enumerate; });

  auto* hk = app.add_subcommand("hankel", "Hankel matrix of string probabilities");
  model_arg(hk);
  hk->add_option("--max-len", o.max_len, "longest prefix/suffix")->required();
  hk->add_flag("--rank-only", o.rank_only, "print only the numeric rank");
  hk->add_option("--rel-tol", o.rel_tol, "relative singular value threshold");
  sep_opt(hk);
  hk->callback([&] { handler = cmd_hankel; });

  auto* cv = app.add_subcommand("convert", "convert to another model family");
  model_arg(cv);
  cv->add_option("--to", o.target, "target family")->required();
  cv->callback([&] { handler = cmd_convert; });

  auto* gr = app.add_subcommand("graph", "state diagram as DOT");
  model_arg(gr);
  gr->callback([&] { handler = cmd_graph; });

  auto* ex = app.add_subcommand("examples", "list builtin models");
  ex->add_option("--dump", o.dump, "print the named builtin as a model file");
  ex->callback([&] { handler = cmd_examples; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return handler(o);
  } catch (const qhmm::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kValidation;
  } catch (const qhmm::EligibilityError& e) {
    std::cerr << e.what() << "\n";
    return kEligibility;
  } catch (const qhmm::ResourceError& e) {
    std::cerr << e.what() << "\n";
    return kResource;
  } catch (const qhmm::IoError& e) {
    std::cerr << e.what() << "\n";
    return kIo;
  } catch (const qhmm::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
}
