#include "schemamap/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "schemamap/errors.hpp"
#include "schemamap/instance_io.hpp"
#include "schemamap/setcover.hpp"
#include "schemamap/worked_example.hpp"

namespace schemamap {

namespace fs = std::filesystem;

namespace {

std::string in_dir(const std::string& dir, const char* name) { return (fs::path(dir) / name).string(); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  for (char c : text) {
    if (c == ',' || c == ';' || c == ' ') {
      if (!item.empty()) out.push_back(item);
      item.clear();
    } else {
      item.push_back(c);
    }
  }
  if (!item.empty()) out.push_back(item);
  return out;
}

std::string braces(const std::vector<std::string>& ids) { return "{" + join(ids, ", ") + "}"; }

std::string fixed4(double d) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << d;
  return s.str();
}

}  // namespace

LoadedScenario load_scenario_dir(const std::string& dir) {
  auto schema_path = in_dir(dir, "schema.txt");
  SchemaPair schemas = parse_schema_file(read_text_file(schema_path), schema_path);
  auto source_path = in_dir(dir, "source.inst");
  auto target_path = in_dir(dir, "target.inst");
  auto cand_path = in_dir(dir, "candidates.tgd");
  LoadedScenario out{schemas.source,
                     schemas.target,
                     parse_instance(read_text_file(source_path), schemas.source, source_path),
                     parse_instance(read_text_file(target_path), schemas.target, target_path),
                     parse_tgd_file(read_text_file(cand_path), *schemas.source, *schemas.target,
                                    cand_path),
                     std::nullopt};
  auto sizes_path = in_dir(dir, "sizes.txt");
  if (fs::exists(sizes_path))
    out.candidates.set_overrides(parse_size_overrides(read_text_file(sizes_path), sizes_path));
  auto gt_path = in_dir(dir, "groundtruth.tgd");
  if (fs::exists(gt_path)) {
    auto gt = parse_tgd_file(read_text_file(gt_path), *schemas.source, *schemas.target, gt_path);
    out.ground_truth = gt.candidates();
  }
  return out;
}

void write_problem_dir(const std::string& dir, const Schema& source_schema,
                       const Schema& target_schema, const Instance& source,
                       const Instance& target, const CandidateSet& candidates) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ParseError("cannot create directory: " + ec.message(), 0, dir);
  write_text_file(in_dir(dir, "schema.txt"), serialize_schema_file(source_schema, target_schema));
  write_text_file(in_dir(dir, "source.inst"), serialize_instance(source));
  write_text_file(in_dir(dir, "target.inst"), serialize_instance(target));
  write_text_file(in_dir(dir, "candidates.tgd"), serialize_tgd_file(candidates));
  if (!candidates.overrides().empty())
    write_text_file(in_dir(dir, "sizes.txt"), serialize_size_overrides(candidates.overrides()));
}

RecoveryMetrics compare_to_ground_truth(const Selection& selected, const CandidateSet& candidates,
                                        const std::vector<StTgd>& ground_truth) {
  selected.check_within(candidates);
  auto key = [](const StTgd& t) { return format_tgd(normalize_tgd(t)); };
  std::set<std::string> sel;
  for (auto i : selected.members()) sel.insert(key(candidates[i]));
  std::set<std::string> gt;
  for (const auto& g : ground_truth) gt.insert(key(g));
  std::int64_t common = 0;
  for (const auto& s : sel) common += gt.count(s) ? 1 : 0;

  RecoveryMetrics m;
  auto n_sel = static_cast<std::int64_t>(sel.size());
  auto n_gt = static_cast<std::int64_t>(gt.size());
  m.precision = n_sel == 0 ? Rational(n_gt == 0 ? 1 : 0) : Rational(common, n_sel);
  m.recall = n_gt == 0 ? Rational(1) : Rational(common, n_gt);
  m.exact_match = sel == gt;
  return m;
}

ScenarioConfig random_scenario_config(std::uint64_t seed) {
  Rng rng(seed);
  ScenarioConfig cfg;
  cfg.seed = seed;
  auto count = rng.between(1, 3);
  for (std::int64_t i = 0; i < count; ++i)
    ++cfg.primitive_counts[kAllPrimitives[rng.below(kAllPrimitives.size())]];
  return cfg;
}

std::vector<BenchRecord> bench(const BenchOptions& options) {
  std::vector<BenchRecord> records(options.scenarios);
  std::vector<std::exception_ptr> failures(options.scenarios);
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < options.scenarios; i = next++) {
      try {
        std::uint64_t seed = derive_seed(options.seed, i);
        ScenarioConfig cfg = options.config ? *options.config : random_scenario_config(seed);
        cfg.seed = seed;
        Scenario sc = generate_scenario(cfg);
        EvalContext ctx = sc.context();
        SolverOptions so = options.solver_options;
        so.seed = derive_seed(seed, 1);
        SolverReport report = run_solver(options.solver, ctx, so);
        BenchRecord& r = records[i];
        r.scenario_id = i;
        r.seed = seed;
        r.config = cfg;
        r.candidates = sc.candidates.size();
        r.solver = report.solver;
        r.best_total = report.breakdown.total;
        r.wall_seconds = report.wall_seconds;
        r.evaluations = report.evaluations;
        r.metrics = compare_to_ground_truth(report.best, sc.candidates, sc.ground_truth);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, options.scenarios)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return records;
}

std::string format_bench_csv(const std::vector<BenchRecord>& records, bool timing) {
  std::ostringstream out;
  out << "# schemamap bench v1\n"
      << "scenario,seed,primitives,rows,pi_corresp,pi_unexplained,pi_errors,candidates,solver,"
         "best_total,best_total_decimal,evaluations,precision,recall,exact_match";
  if (timing) out << ",wall_seconds";
  out << "\n";
  for (const auto& r : records) {
    std::string primitives = r.config.primitives_spec();
    std::replace(primitives.begin(), primitives.end(), ',', ';');
    out << r.scenario_id << "," << r.seed << "," << primitives << ","
        << r.config.rows << "," << r.config.pi_corresp << "," << r.config.pi_unexplained << ","
        << r.config.pi_errors << "," << r.candidates << "," << r.solver << ","
        << format_rational(r.best_total) << "," << fixed4(to_double(r.best_total)) << ","
        << r.evaluations << "," << format_rational(r.metrics.precision) << ","
        << format_rational(r.metrics.recall) << "," << (r.metrics.exact_match ? 1 : 0);
    if (timing) out << "," << std::setprecision(6) << std::fixed << r.wall_seconds;
    out << "\n";
  }
  return out.str();
}

std::string evaluation_csv_header() {
  return "# schemamap evaluate v1\nselection,unexplained,errors,size,total\n";
}

std::string evaluation_csv_row(const std::vector<std::string>& ids, const ObjectiveBreakdown& b) {
  return join(ids, ";") + "," + format_rational(b.unexplained) + "," + format_rational(b.errors) +
         "," + std::to_string(b.size) + "," + format_rational(b.total) + "\n";
}

namespace {

// Options shared by the subcommands that read a problem.
struct ProblemFlags {
  std::string dir;
  std::string schema, source, target, candidates, sizes;

  void attach(CLI::App* cmd, bool needs_target) {
    cmd->add_option("--dir", dir, "Scenario directory");
    cmd->add_option("--schema", schema, "Schema file (overrides --dir)");
    cmd->add_option("--source", source, "Source instance file (overrides --dir)");
    if (needs_target) cmd->add_option("--target", target, "Target instance file (overrides --dir)");
    cmd->add_option("--candidates,--tgds", candidates, "Candidate tgd file (overrides --dir)");
    cmd->add_option("--sizes", sizes, "Size override file");
  }

  std::string pick(const std::string& explicit_path, const char* name) const {
    if (!explicit_path.empty()) return explicit_path;
    if (dir.empty())
      throw ParseError(std::string("no input for ") + name + "; pass --dir or the file flag");
    return in_dir(dir, name);
  }

  LoadedScenario load(bool needs_target) const {
    auto schema_path = pick(schema, "schema.txt");
    SchemaPair schemas = parse_schema_file(read_text_file(schema_path), schema_path);
    auto source_path = pick(source, "source.inst");
    auto cand_path = pick(candidates, "candidates.tgd");
    LoadedScenario out{schemas.source,
                       schemas.target,
                       parse_instance(read_text_file(source_path), schemas.source, source_path),
                       Instance(schemas.target),
                       parse_tgd_file(read_text_file(cand_path), *schemas.source, *schemas.target,
                                      cand_path),
                       std::nullopt};
    if (needs_target) {
      auto target_path = pick(target, "target.inst");
      out.target = parse_instance(read_text_file(target_path), schemas.target, target_path);
    }
    std::string sizes_path = sizes;
    if (sizes_path.empty() && !dir.empty() && fs::exists(in_dir(dir, "sizes.txt")))
      sizes_path = in_dir(dir, "sizes.txt");
    if (!sizes_path.empty())
      out.candidates.set_overrides(parse_size_overrides(read_text_file(sizes_path), sizes_path));
    return out;
  }
};

struct SolverFlags {
  std::string solver = "exhaustive";
  std::string weights = "1,1,1";
  std::uint64_t seed = 0;
  std::size_t cap = 20;
  unsigned workers = 1;
  std::uint64_t max_moves = 10000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--solver", solver, "exhaustive, greedy or local")
        ->check(CLI::IsMember({"exhaustive", "greedy", "local"}));
    cmd->add_option("--weights", weights, "w1,w2,w3");
    cmd->add_option("--seed", seed, "Seed for randomized search");
    cmd->add_option("--cap", cap, "Largest candidate set the exhaustive solver accepts");
    cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
    cmd->add_option("--max-moves", max_moves, "Local search move budget");
  }

  SolverOptions options() const {
    SolverOptions o;
    o.weights = parse_weights(weights);
    o.weights.validate();
    o.seed = seed;
    o.cap = cap;
    o.workers = workers;
    o.max_moves = max_moves;
    return o;
  }
};

void print_breakdown(std::ostream& out, const std::vector<std::string>& ids,
                     const ObjectiveBreakdown& b, const std::string& format) {
  if (format == "csv") {
    out << evaluation_csv_header() << evaluation_csv_row(ids, b);
    return;
  }
  out << "selection:   " << braces(ids) << "\n"
      << "unexplained: " << format_rational_with_decimal(b.unexplained) << "\n"
      << "errors:      " << format_rational_with_decimal(b.errors) << "\n"
      << "size:        " << b.size << "\n"
      << "total:       " << format_rational_with_decimal(b.total) << "\n";
}

int verify_fixture(std::ostream& out, const std::string& out_dir) {
  WorkedExample ex = running_example();
  if (!out_dir.empty())
    write_problem_dir(out_dir, *ex.source_schema, *ex.target_schema, ex.source, ex.target,
                      ex.candidates);
  EvalContext ctx = ex.context();
  const std::vector<std::pair<std::vector<std::string>, Rational>> expected = {
      {{}, Rational(4)},
      {{"theta1"}, Rational(22, 3)},
      {{"theta3"}, Rational(8)},
      {{"theta1", "theta3"}, Rational(12)},
  };
  bool ok = true;
  for (const auto& [ids, want] : expected) {
    auto b = objective(Selection::from_ids(ex.candidates, ids), ctx);
    bool match = b.total == want;
    ok = ok && match;
    out << std::left << std::setw(18) << braces(ids) << " total " << std::setw(24)
        << format_rational_with_decimal(b.total) << (match ? " ok" : " MISMATCH (expected " +
                                                              format_rational(want) + ")")
        << "\n";
  }
  out << (ok ? "fixture verified\n" : "fixture FAILED\n");
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schema-mapping selection: chase, score and select candidate tgds"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a benchmark scenario directory");
  std::string gen_out, gen_primitives, gen_config;
  std::uint64_t gen_seed = 0;
  std::size_t gen_rows = 5;
  std::vector<std::int64_t> gen_attr_range, gen_arity_range;
  unsigned pi_corresp = 0, pi_unexplained = 0, pi_errors = 0;
  gen->add_option("--out", gen_out, "Output directory")->required();
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--primitives", gen_primitives, "Counts such as CP:2,ME:1 (random when absent)");
  gen->add_option("--config", gen_config, "config.txt to replay (flags are ignored)");
  gen->add_option("--rows", gen_rows, "Tuples per source relation");
  gen->add_option("--attr-range", gen_attr_range, "Attributes added/removed: low high")
      ->expected(2);
  gen->add_option("--source-arity-range", gen_arity_range, "Fresh source arity: low high")
      ->expected(2);
  gen->add_option("--pi-corresp", pi_corresp, "Percent of target relations given random correspondences");
  gen->add_option("--pi-unexplained", pi_unexplained, "Percent of the unexplained pool added to J");
  gen->add_option("--pi-errors", pi_errors, "Percent of the error pool deleted from J");

  // chase
  auto* chase_cmd = app.add_subcommand("chase", "Chase candidates over the source instance");
  ProblemFlags chase_flags;
  chase_flags.attach(chase_cmd, false);
  std::string chase_selection, chase_out;
  chase_cmd->add_option("--selection", chase_selection, "Comma-separated ids (all when absent)");
  chase_cmd->add_option("--out", chase_out, "Instance file; provenance goes to <file>.prov");

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "Score one selection");
  ProblemFlags eval_flags;
  eval_flags.attach(eval_cmd, true);
  std::string eval_selection, eval_weights = "1,1,1", eval_format = "text";
  eval_cmd->add_option("--selection", eval_selection, "Comma-separated ids (empty selection when absent)");
  eval_cmd->add_option("--weights", eval_weights, "w1,w2,w3");
  eval_cmd->add_option("--format", eval_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  // select
  auto* select_cmd = app.add_subcommand("select", "Search for the best selection");
  ProblemFlags select_flags;
  select_flags.attach(select_cmd, true);
  SolverFlags select_solver;
  select_solver.attach(select_cmd);
  std::string select_format = "text", select_out;
  bool select_prune = false;
  select_cmd->add_option("--format", select_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  select_cmd->add_option("--out", select_out, "Also write the chosen tgds to this file");
  select_cmd->add_flag("--prune", select_prune, "Drop certain-unexplained tuples before searching");

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "Is there a selection with total <= threshold?");
  ProblemFlags decide_flags;
  decide_flags.attach(decide_cmd, true);
  SolverFlags decide_solver;
  decide_solver.attach(decide_cmd);
  std::string threshold_text;
  decide_cmd->add_option("--threshold", threshold_text, "Rational threshold p or p/q")->required();

  // reduce-setcover
  auto* reduce_cmd = app.add_subcommand("reduce-setcover", "Build the selection instance of a SET COVER instance");
  std::string reduce_input, reduce_out, reduce_weights = "1,1,1";
  bool reduce_solve = false;
  reduce_cmd->add_option("--input", reduce_input, "SET COVER file")->required();
  reduce_cmd->add_option("--out", reduce_out, "Output directory")->required();
  reduce_cmd->add_option("--weights", reduce_weights, "w1,w2,w3 (weighted reduction unless 1,1,1)");
  reduce_cmd->add_flag("--solve", reduce_solve, "Also decide the instance exhaustively");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Generate scenarios, select, and compare with the ground truth");
  std::size_t bench_scenarios = 10;
  SolverFlags bench_solver;
  bench_solver.attach(bench_cmd);
  std::string bench_out, bench_primitives;
  std::size_t bench_rows = 5;
  unsigned bench_pc = 0, bench_pu = 0, bench_pe = 0, bench_jobs = 1;
  bool bench_timing = false;
  bench_cmd->add_option("--scenarios", bench_scenarios, "Number of scenarios");
  bench_cmd->add_option("--out", bench_out, "CSV file (stdout when absent)");
  std::string bench_format = "csv";
  bench_cmd->add_option("--format", bench_format, "csv (the only bench format)")
      ->check(CLI::IsMember({"csv"}));
  bench_cmd->add_option("--primitives", bench_primitives, "Fixed counts such as CP:1,VP:1");
  bench_cmd->add_option("--rows", bench_rows, "Tuples per source relation");
  bench_cmd->add_option("--pi-corresp", bench_pc, "Correspondence noise percent");
  bench_cmd->add_option("--pi-unexplained", bench_pu, "Unexplained noise percent");
  bench_cmd->add_option("--pi-errors", bench_pe, "Error noise percent");
  bench_cmd->add_option("--jobs", bench_jobs, "Scenarios run concurrently (0 = all cores)");
  bench_cmd->add_flag("--timing", bench_timing, "Add a wall_seconds column");

  // verify-fixture
  auto* verify_cmd = app.add_subcommand("verify-fixture", "Replay the project/task/org worked example");
  std::string verify_out;
  verify_cmd->add_option("--out", verify_out, "Also write the fixture as a problem directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*gen) {
      ScenarioConfig cfg;
      if (!gen_config.empty()) {
        cfg = ScenarioConfig::from_text(read_text_file(gen_config), gen_config);
      } else {
        cfg = gen_primitives.empty() ? random_scenario_config(gen_seed) : ScenarioConfig{};
        if (!gen_primitives.empty()) cfg.primitive_counts = parse_primitive_counts(gen_primitives);
        cfg.seed = gen_seed;
        cfg.rows = gen_rows;
        if (!gen_attr_range.empty()) {
          cfg.attr_min = gen_attr_range[0];
          cfg.attr_max = gen_attr_range[1];
        }
        if (!gen_arity_range.empty()) {
          cfg.source_arity_min = gen_arity_range[0];
          cfg.source_arity_max = gen_arity_range[1];
        }
        cfg.pi_corresp = pi_corresp;
        cfg.pi_unexplained = pi_unexplained;
        cfg.pi_errors = pi_errors;
      }
      Scenario sc = generate_scenario(cfg);
      write_scenario(sc, gen_out);
      out << "primitives " << cfg.primitives_spec() << ", " << sc.source_schema->relations().size()
          << " source / " << sc.target_schema->relations().size() << " target relations, "
          << sc.candidates.size() << " candidates, |I| = " << sc.source.size()
          << ", |J| = " << sc.target.size() << " (+" << sc.ledger.added.size() << " -"
          << sc.ledger.deleted.size() << ")\n";
      return 0;
    }

    if (*chase_cmd) {
      LoadedScenario p = chase_flags.load(false);
      Selection sel = chase_selection.empty() ? Selection::all(p.candidates)
                                              : Selection::from_ids(p.candidates, split_ids(chase_selection));
      std::vector<StTgd> tgds;
      for (auto i : sel.members()) tgds.push_back(p.candidates[i]);
      NullAllocator nulls;
      ChaseResult r = chase_mapping(tgds, p.source, p.target_schema, nulls);
      if (!chase_out.empty()) {
        write_text_file(chase_out, serialize_instance(r.instance));
        write_text_file(chase_out + ".prov", format_provenance(r));
        out << r.instance.size() << " tuples written to " << chase_out << "\n";
      } else {
        out << serialize_instance(r.instance);
        std::istringstream prov(format_provenance(r));
        for (std::string line; std::getline(prov, line);) out << "% " << line << "\n";
      }
      return 0;
    }

    if (*eval_cmd) {
      LoadedScenario p = eval_flags.load(true);
      Weights w = parse_weights(eval_weights);
      Selection sel = Selection::from_ids(p.candidates, split_ids(eval_selection));
      auto b = objective(sel, p.context(), w);
      print_breakdown(out, sel.ids(p.candidates), b, eval_format);
      return 0;
    }

    if (*select_cmd) {
      LoadedScenario p = select_flags.load(true);
      SolverOptions opts = select_solver.options();
      EvalContext ctx = p.context();
      SolverReport report;
      if (select_prune) {
        PrunedContext pruned = prune_certain(ctx, opts.weights);
        report = run_solver(parse_solver_kind(select_solver.solver), pruned.context, opts);
        report.breakdown = objective(report.best, ctx, opts.weights);
      } else {
        report = run_solver(parse_solver_kind(select_solver.solver), ctx, opts);
      }
      std::string tgds;
      for (auto i : report.best.members()) tgds += format_tgd(p.candidates[i]) + "\n";
      if (!select_out.empty()) write_text_file(select_out, tgds);
      auto ids = report.best.ids(p.candidates);
      if (select_format == "text") {
        out << (tgds.empty() ? "% empty selection\n" : tgds);
        out << "% total " << format_rational_with_decimal(report.breakdown.total) << "\n";
      } else {
        out << tgds;
      }
      out << evaluation_csv_header() << evaluation_csv_row(ids, report.breakdown);
      out << "% solver=" << report.solver << " evaluations=" << report.evaluations
          << " optimal=" << (report.optimal ? "yes" : "unknown") << " selected=" << braces(ids) << "\n";
      return 0;
    }

    if (*decide_cmd) {
      LoadedScenario p = decide_flags.load(true);
      SolverOptions opts = decide_solver.options();
      Rational threshold = parse_rational(threshold_text);
      bool exact = decide_solver.solver == "exhaustive";
      bool yes = decide(p.context(), threshold, opts, exact);
      out << (yes ? "yes" : "no") << " (threshold " << format_rational(threshold) << ", "
          << (exact ? "exact" : "heuristic") << ")\n";
      return 0;
    }

    if (*reduce_cmd) {
      SetCoverInstance sc = parse_setcover(read_text_file(reduce_input), reduce_input);
      Weights w = parse_weights(reduce_weights);
      ReducedInstance red = w == Weights{} ? reduce(sc) : reduce_weighted(sc, w);
      write_problem_dir(reduce_out, *red.source_schema, *red.target_schema, red.source, red.target,
                        red.candidates);
      write_text_file(in_dir(reduce_out, "threshold.txt"), std::to_string(red.threshold) + "\n");
      out << "threshold " << red.threshold << ", " << red.candidates.size() << " candidates, |J| = "
          << red.target.size() << "\n";
      if (reduce_solve) {
        bool cover = decide_cover_via_selection(sc, w);
        out << "cover within " << sc.bound << " sets: " << (cover ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (*bench_cmd) {
      BenchOptions opts;
      opts.scenarios = bench_scenarios;
      opts.seed = bench_solver.seed;
      opts.solver = parse_solver_kind(bench_solver.solver);
      opts.solver_options = bench_solver.options();
      opts.workers = bench_jobs;
      if (!bench_primitives.empty() || bench_pc || bench_pu || bench_pe || bench_rows != 5) {
        if (bench_primitives.empty())
          throw DomainError("--primitives is required with fixed scenario settings");
        ScenarioConfig cfg;
        cfg.primitive_counts = parse_primitive_counts(bench_primitives);
        cfg.rows = bench_rows;
        cfg.pi_corresp = bench_pc;
        cfg.pi_unexplained = bench_pu;
        cfg.pi_errors = bench_pe;
        cfg.validate();
        opts.config = cfg;
      }
      std::string csv = format_bench_csv(bench(opts), bench_timing);
      if (bench_out.empty()) {
        out << csv;
      } else {
        write_text_file(bench_out, csv);
        out << bench_scenarios << " scenarios written to " << bench_out << "\n";
      }
      return 0;
    }

    if (*verify_cmd) return verify_fixture(out, verify_out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace schemamap
