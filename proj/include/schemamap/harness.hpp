#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schemamap/scenario.hpp"
#include "schemamap/selector.hpp"

namespace schemamap {

/// A scenario directory read back: schema.txt, source.inst, target.inst,
/// candidates.tgd, and the optional sizes.txt and groundtruth.tgd.
struct LoadedScenario {
  SchemaPtr source_schema;
  SchemaPtr target_schema;
  Instance source;
  Instance target;
  CandidateSet candidates;
  std::optional<std::vector<StTgd>> ground_truth;

  EvalContext context() const { return EvalContext(candidates, source, target); }
};

/// Throws ParseError naming the offending file and line.
LoadedScenario load_scenario_dir(const std::string& dir);

/// Writes schema.txt, source.inst, target.inst, candidates.tgd and, when
/// the candidates carry overrides, sizes.txt.
void write_problem_dir(const std::string& dir, const Schema& source_schema,
                       const Schema& target_schema, const Instance& source,
                       const Instance& target, const CandidateSet& candidates);

struct RecoveryMetrics {
  Rational precision;
  Rational recall;
  bool exact_match = false;

  friend bool operator==(const RecoveryMetrics&, const RecoveryMetrics&) = default;
};

/// Compares selected tgd shapes with the ground-truth shapes after
/// normalization. An empty selection has precision 1 when the ground truth
/// is empty too and 0 otherwise; recall over an empty ground truth is 1.
RecoveryMetrics compare_to_ground_truth(const Selection& selected, const CandidateSet& candidates,
                                        const std::vector<StTgd>& ground_truth);

/// One to three primitives drawn uniformly from all seven kinds, everything
/// else at the defaults; deterministic in `seed`, which also becomes the
/// config's own seed.
ScenarioConfig random_scenario_config(std::uint64_t seed);

struct BenchOptions {
  std::size_t scenarios = 10;
  std::uint64_t seed = 0;
  SolverKind solver = SolverKind::Exhaustive;
  SolverOptions solver_options;
  /// Fixed template for every scenario; its seed is replaced per scenario.
  /// Without it each scenario draws its primitives at random.
  std::optional<ScenarioConfig> config;
  unsigned workers = 1;  // scenarios run concurrently; 0 = hardware concurrency
};

struct BenchRecord {
  std::size_t scenario_id = 0;
  std::uint64_t seed = 0;
  ScenarioConfig config;
  std::size_t candidates = 0;
  std::string solver;
  Rational best_total;
  double wall_seconds = 0.0;
  std::uint64_t evaluations = 0;
  RecoveryMetrics metrics;
};

/// Scenario i uses seed derive_seed(options.seed, i). Records come back in
/// scenario-id order whatever the completion order.
std::vector<BenchRecord> bench(const BenchOptions& options);

/// Header comment, column line and one row per record. Wall time is a
/// column only when `timing` is set, so untimed output is reproducible.
std::string format_bench_csv(const std::vector<BenchRecord>& records, bool timing);

/// Comment header, column line and one row for an objective breakdown.
std::string evaluation_csv_header();
std::string evaluation_csv_row(const std::vector<std::string>& ids, const ObjectiveBreakdown& b);

/// The command-line entry point. Exit status 0 on success, 1 on domain
/// errors, 2 on I/O, parse and usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schemamap
