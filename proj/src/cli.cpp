// Copyright 2026 The HLP Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hlp/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hlp/error.hpp"
#include "hlp/eval.hpp"
#include "hlp/experiment.hpp"
#include "hlp/io.hpp"
#include "hlp/matching.hpp"

namespace hlp {
namespace {

namespace fs = std::filesystem;

constexpr int kExitFailure = 1;
constexpr int kExitInvalidConfig = 2;

// Model hyperparameters shared by `experiment` and `score`.
struct ModelOptions {
  AlgorithmSpec spec;

  void Register(CLI::App* app) {
    auto& mb = spec.matboost;
    app->add_option("--max-iterations", mb.max_iterations,
                    "MATBoost iteration cap")
        ->capture_default_str();
    app->add_option("--latent-dim", mb.completion.latent_dim,
                    "latent factors per vertex")
        ->capture_default_str();
    app->add_option("--reg", mb.completion.reg, "L2 regularization")
        ->capture_default_str();
    app->add_option("--learning-rate", mb.completion.learning_rate,
                    "SGD learning rate")
        ->capture_default_str();
    app->add_option("--epochs", mb.completion.epochs, "SGD epochs")
        ->capture_default_str();
    app->add_option("--alpha", mb.matching.l1_penalty, "lasso L1 penalty")
        ->capture_default_str();
    app->add_option("--lasso-steps", mb.matching.max_steps,
                    "projected gradient steps")
        ->capture_default_str();
    app->add_option("--lasso-step-size", mb.matching.step_size,
                    "step as a fraction of 1/L")
        ->capture_default_str();
    app->add_option("--katz-beta", spec.katz.beta, "HKatz damping")
        ->capture_default_str();
    app->add_option("--katz-length", spec.katz.max_path_length,
                    "HKatz maximum walk length")
        ->capture_default_str();
    app->add_option("--shc-xi", spec.shc.xi, "SHC propagation weight")
        ->capture_default_str();
    app->add_flag("--cv", spec.cross_validate,
                  "choose HKatz beta / SHC xi by five-fold cross-validation");
  }
};

std::string Header(const CLI::App& app, const std::string& command) {
  return "hlp " + command + "\n" + app.config_to_str(true, false);
}

std::ofstream OpenOutput(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << std::setprecision(10);
  return out;
}

void PrintWarnings(const ParsedHyperlinks& parsed, std::ostream& err) {
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
}

ParsedHyperlinks LoadHyperlinks(const std::string& path,
                                const VertexIndex& vertices,
                                std::ostream& err) {
  auto parsed = ParseIncidenceFile(path, vertices);
  PrintWarnings(parsed, err);
  return parsed;
}

// --- generate ---------------------------------------------------------------

struct GenerateOptions {
  SyntheticConfig synth;
  std::size_t num_negatives = 30;
  std::string out_dir;
};

int RunGenerate(const CLI::App& app, const GenerateOptions& opt,
                std::ostream& out) {
  opt.synth.Validate();
  const IncidenceMatrix full = GenerateSynthetic(opt.synth);
  const IncidenceMatrix negatives =
      GenerateNegativePool(full, opt.num_negatives, opt.synth);
  std::vector<std::string> names;
  for (Index v = 0; v < opt.synth.num_vertices; ++v) {
    names.push_back("v" + std::to_string(v));
  }
  const VertexIndex vertices(std::move(names));

  fs::create_directories(opt.out_dir);
  const std::string header = Header(app, "generate");
  auto write = [&](const std::string& file, auto&& body) {
    auto f = OpenOutput(fs::path(opt.out_dir) / file);
    WriteCommentHeader(f, header);
    body(f);
  };
  write("vertices.txt", [&](std::ostream& f) { WriteVertices(f, vertices); });
  write("hyperlinks.tsv",
        [&](std::ostream& f) { WriteIncidence(f, full, vertices); });
  write("negatives.tsv",
        [&](std::ostream& f) { WriteIncidence(f, negatives, vertices); });
  out << "wrote " << full.num_columns() << " hyperlinks and "
      << negatives.num_columns() << " negatives over "
      << vertices.size() << " vertices to " << opt.out_dir << '\n';
  return 0;
}

// --- experiment -------------------------------------------------------------

struct ExperimentOptions {
  std::string vertices;
  std::string hyperlinks;
  std::string negatives;
  std::string dataset;
  std::vector<std::size_t> missing;
  std::size_t trials = 12;
  std::vector<std::string> algorithms = {"matboost", "random"};
  std::size_t threads = 1;
  std::string out_dir;
  std::uint64_t seed = 0;
  ModelOptions model;
};

int RunExperimentCommand(const CLI::App& app, const ExperimentOptions& opt,
                         std::ostream& out, std::ostream& err) {
  ExperimentSpec spec;
  IncidenceMatrix full;
  IncidenceMatrix negatives;
  try {
    const VertexIndex vertices = ReadVerticesFile(opt.vertices);
    full = LoadHyperlinks(opt.hyperlinks, vertices, err).matrix;
    negatives = LoadHyperlinks(opt.negatives, vertices, err).matrix;

    spec.dataset = opt.dataset.empty() ? fs::path(opt.hyperlinks).stem().string()
                                       : opt.dataset;
    spec.missing_counts = opt.missing;
    spec.trials = opt.trials;
    spec.seed = opt.seed;
    spec.threads = opt.threads;
    for (const auto& name : opt.algorithms) {
      AlgorithmSpec a = opt.model.spec;
      a.kind = ParseAlgorithm(name);
      spec.algorithms.push_back(a);
    }
    spec.Validate(full.num_columns());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  fs::create_directories(opt.out_dir);
  const std::string header = Header(app, "experiment");
  auto results = OpenOutput(fs::path(opt.out_dir) / "results.tsv");
  WriteCommentHeader(results, header);
  results << kResultsColumns << '\n';

  ExperimentResult result;
  try {
    result = RunExperiment(full, negatives, spec, [&](const TrialRecord& r) {
      WriteRecord(results, r);
      results.flush();
    });
  } catch (const Error& e) {
    err << "error: " << e.what() << " (partial results kept in "
        << (fs::path(opt.out_dir) / "results.tsv").string() << ")\n";
    return kExitFailure;
  }

  auto summary = OpenOutput(fs::path(opt.out_dir) / "summary.tsv");
  WriteCommentHeader(summary, header);
  summary << kSummaryColumns << '\n';
  out << "dataset " << spec.dataset << ": " << full.num_vertices()
      << " vertices, " << full.num_columns() << " hyperlinks, "
      << negatives.num_columns() << " negatives, " << spec.trials
      << " trials\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& c : result.summary) {
    WriteSummaryRow(summary, c);
    out << std::left << std::setw(10) << c.algorithm << " missing="
        << std::setw(5) << c.missing_count << " auc=" << c.auc_mean << " +/- "
        << c.auc_std << "  recovered=" << c.recovered_mean << " +/- "
        << c.recovered_std << '\n';
  }
  return 0;
}

// --- score ------------------------------------------------------------------

struct ScoreOptions {
  std::string vertices;
  std::string train;
  std::string pool;
  std::string algorithm = "matboost";
  std::string out_file;
  std::uint64_t seed = 0;
  ModelOptions model;
};

int RunScore(const CLI::App& app, const ScoreOptions& opt, std::ostream& out,
             std::ostream& err) {
  const VertexIndex vertices = ReadVerticesFile(opt.vertices);
  const IncidenceMatrix train = LoadHyperlinks(opt.train, vertices, err).matrix;
  const IncidenceMatrix pool = LoadHyperlinks(opt.pool, vertices, err).matrix;
  if (pool.num_columns() == 0) throw InvalidInputError("empty candidate pool");
  AlgorithmSpec spec = opt.model.spec;
  spec.kind = ParseAlgorithm(opt.algorithm);
  spec.matboost.Validate();

  const ScoreVector scores = ScoreWith(spec, train, pool, opt.seed);
  auto f = OpenOutput(opt.out_file);
  WriteCommentHeader(f, Header(app, "score"));
  WriteRanking(f, pool, scores, vertices);
  out << "ranked " << pool.num_columns() << " candidates with "
      << opt.algorithm << " into " << opt.out_file << '\n';
  return 0;
}

// --- oracle -----------------------------------------------------------------

struct OracleOptions {
  std::string vertices;
  std::string train;
  std::string pool;
  std::string missing;
  double alpha = 0.01;
  std::uint64_t seed = 0;
};

int RunOracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
  const VertexIndex vertices = ReadVerticesFile(opt.vertices);
  const IncidenceMatrix train = LoadHyperlinks(opt.train, vertices, err).matrix;
  const IncidenceMatrix pool = LoadHyperlinks(opt.pool, vertices, err).matrix;
  const IncidenceMatrix missing =
      LoadHyperlinks(opt.missing, vertices, err).matrix;

  const AdjacencyMatrix a = Project(train);
  const AdjacencyMatrix target = MaskOff(Project(missing), a);
  const IlsqSolution exact = SolveIlsqOracle(pool, target, a);
  MatchConfig cfg;
  cfg.l1_penalty = opt.alpha;
  const LassoResult lasso = SolveLassoDetailed(pool, target, a, cfg);

  out << std::setprecision(6);
  out << "index\tilsq\tlasso\tin_missing\thyperlink\n";
  std::size_t agree = 0;
  for (std::size_t c = 0; c < pool.num_columns(); ++c) {
    const bool planted = missing.Contains(pool.column(c));
    const bool rounded = lasso.scores[c] >= 0.5;
    agree += (rounded == (exact.indicators[c] == 1.0)) ? 1 : 0;
    out << c << '\t' << exact.indicators[c] << '\t' << lasso.scores[c] << '\t'
        << (planted ? 1 : 0) << '\t';
    auto col = pool.column(c);
    for (std::size_t p = 0; p < col.size(); ++p) {
      out << (p > 0 ? " " : "") << vertices.name(col[p]);
    }
    out << '\n';
  }
  out << "ilsq residual " << exact.residual << ", runner-up "
      << exact.runner_up_residual
      << (exact.runner_up_residual > exact.residual ? " (unique)" : " (tied)")
      << '\n';
  out << "lasso objective " << lasso.objective << " after " << lasso.steps
      << " steps; rounded support agrees on " << agree << "/"
      << pool.num_columns() << " candidates\n";
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Hyperlink prediction: MATBoost and baselines"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "write a synthetic dataset");
  gen_cmd->add_option("--num-vertices", gen.synth.num_vertices)
      ->capture_default_str();
  gen_cmd->add_option("--num-hyperlinks", gen.synth.num_hyperlinks)
      ->capture_default_str();
  gen_cmd->add_option("--num-negatives", gen.num_negatives)
      ->capture_default_str();
  gen_cmd->add_option("--min-cardinality", gen.synth.min_cardinality)
      ->capture_default_str();
  gen_cmd->add_option("--max-cardinality", gen.synth.max_cardinality)
      ->capture_default_str();
  gen_cmd->add_option("--overlap-bias", gen.synth.overlap_bias)
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out_dir, "output directory")->required();
  gen_cmd->add_option("--seed", gen.synth.seed)->required();

  ExperimentOptions exp;
  auto* exp_cmd =
      app.add_subcommand("experiment", "random-deletion recovery experiment");
  exp_cmd->add_option("--vertices", exp.vertices)
      ->required()
      ->check(CLI::ExistingFile);
  exp_cmd->add_option("--hyperlinks", exp.hyperlinks)
      ->required()
      ->check(CLI::ExistingFile);
  exp_cmd->add_option("--negatives", exp.negatives)
      ->required()
      ->check(CLI::ExistingFile);
  exp_cmd->add_option("--dataset", exp.dataset, "name used in reports");
  exp_cmd->add_option("--missing", exp.missing, "deleted hyperlink counts")
      ->required()
      ->delimiter(',');
  exp_cmd->add_option("--trials", exp.trials)->capture_default_str();
  exp_cmd->add_option("--algorithms", exp.algorithms,
                      "matboost, shc, hkatz, hcn, random")
      ->delimiter(',')
      ->capture_default_str();
  exp_cmd->add_option("--threads", exp.threads)->capture_default_str();
  exp_cmd->add_option("--out", exp.out_dir, "output directory")->required();
  exp_cmd->add_option("--seed", exp.seed)->required();
  exp.model.Register(exp_cmd);

  ScoreOptions score;
  auto* score_cmd =
      app.add_subcommand("score", "rank a candidate pool against a network");
  score_cmd->add_option("--vertices", score.vertices)
      ->required()
      ->check(CLI::ExistingFile);
  score_cmd->add_option("--train", score.train)
      ->required()
      ->check(CLI::ExistingFile);
  score_cmd->add_option("--pool", score.pool)
      ->required()
      ->check(CLI::ExistingFile);
  score_cmd->add_option("--algorithm", score.algorithm)->capture_default_str();
  score_cmd->add_option("--out", score.out_file, "ranking file")->required();
  score_cmd->add_option("--seed", score.seed)->required();
  score.model.Register(score_cmd);

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "exact subset selection vs lasso on a small instance");
  oracle_cmd->add_option("--vertices", oracle.vertices)
      ->required()
      ->check(CLI::ExistingFile);
  oracle_cmd->add_option("--train", oracle.train)
      ->required()
      ->check(CLI::ExistingFile);
  oracle_cmd->add_option("--pool", oracle.pool)
      ->required()
      ->check(CLI::ExistingFile);
  oracle_cmd->add_option("--missing", oracle.missing,
                         "hyperlinks removed from the network")
      ->required()
      ->check(CLI::ExistingFile);
  oracle_cmd->add_option("--alpha", oracle.alpha)->capture_default_str();
  oracle_cmd->add_option("--seed", oracle.seed)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every real parse error is a bad config.
    return app.exit(e, out, err) == 0 ? 0 : kExitInvalidConfig;
  }

  try {
    if (*gen_cmd) return RunGenerate(*gen_cmd, gen, out);
    if (*exp_cmd) return RunExperimentCommand(*exp_cmd, exp, out, err);
    if (*score_cmd) return RunScore(*score_cmd, score, out, err);
    if (*oracle_cmd) return RunOracle(oracle, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace hlp
