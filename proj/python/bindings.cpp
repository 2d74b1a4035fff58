// Python bindings. Problems are built from the same text formats the
// command line reads; rationals come back as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "schemamap/errors.hpp"
#include "schemamap/harness.hpp"
#include "schemamap/instance_io.hpp"
#include "schemamap/scenario.hpp"
#include "schemamap/selector.hpp"
#include "schemamap/setcover.hpp"
#include "schemamap/worked_example.hpp"

namespace py = pybind11;
using namespace schemamap;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

Rational to_rational(const py::handle& value) {
  if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
  py::object f = py::module_::import("fractions").attr("Fraction")(value);
  return Rational(f.attr("numerator").cast<std::int64_t>(), f.attr("denominator").cast<std::int64_t>());
}

Weights to_weights(const std::tuple<std::int64_t, std::int64_t, std::int64_t>& w) {
  Weights out{std::get<0>(w), std::get<1>(w), std::get<2>(w)};
  out.validate();
  return out;
}

py::dict breakdown_dict(const std::vector<std::string>& ids, const ObjectiveBreakdown& b) {
  py::dict d;
  d["selection"] = ids;
  d["unexplained"] = fraction(b.unexplained);
  d["errors"] = fraction(b.errors);
  d["size"] = b.size;
  d["total"] = fraction(b.total);
  return d;
}

using WeightTuple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

// A loaded data example with its evaluation context built once.
class Problem {
 public:
  explicit Problem(LoadedScenario loaded)
      : loaded_(std::move(loaded)), ctx_(loaded_.candidates, loaded_.source, loaded_.target) {}

  static Problem from_text(const std::string& schema, const std::string& source, const std::string& target,
                           const std::string& candidates, const std::optional<std::string>& sizes) {
    SchemaPair schemas = parse_schema_file(schema, "schema");
    LoadedScenario p{schemas.source,
                     schemas.target,
                     parse_instance(source, schemas.source, "source"),
                     parse_instance(target, schemas.target, "target"),
                     parse_tgd_file(candidates, *schemas.source, *schemas.target, "candidates"),
                     std::nullopt};
    if (sizes) p.candidates.set_overrides(parse_size_overrides(*sizes, "sizes"));
    return Problem(std::move(p));
  }

  std::vector<std::string> candidate_ids() const {
    std::vector<std::string> out;
    for (const auto& c : loaded_.candidates.candidates()) out.push_back(c.id);
    return out;
  }

  std::vector<std::string> candidate_tgds() const {
    std::vector<std::string> out;
    for (const auto& c : loaded_.candidates.candidates()) out.push_back(format_tgd(c));
    return out;
  }

  std::optional<std::vector<std::string>> ground_truth() const {
    if (!loaded_.ground_truth) return std::nullopt;
    std::vector<std::string> out;
    for (const auto& g : *loaded_.ground_truth) out.push_back(format_tgd(g));
    return out;
  }

  std::string source_text() const { return serialize_instance(loaded_.source); }
  std::string target_text() const { return serialize_instance(loaded_.target); }

  py::dict objective(const std::vector<std::string>& ids, const WeightTuple& w) const {
    Selection sel = Selection::from_ids(loaded_.candidates, ids);
    return breakdown_dict(sel.ids(loaded_.candidates), schemamap::objective(sel, ctx_, to_weights(w)));
  }

  py::object covers(const std::string& candidate, const std::string& tuple) const {
    auto index = loaded_.candidates.index_of(candidate);
    if (!index) throw DomainError("unknown candidate id '" + candidate + "'");
    return fraction(schemamap::covers(ctx_, *index, parse_tuple(tuple)));
  }

  std::string chase(const std::optional<std::vector<std::string>>& ids) const {
    Selection sel = ids ? Selection::from_ids(loaded_.candidates, *ids) : Selection::all(loaded_.candidates);
    std::vector<StTgd> tgds;
    for (auto i : sel.members()) tgds.push_back(loaded_.candidates[i]);
    NullAllocator nulls;
    return serialize_instance(chase_mapping(tgds, loaded_.source, loaded_.target_schema, nulls).instance);
  }

  py::dict select(const std::string& solver, const WeightTuple& w, std::uint64_t seed, unsigned workers,
                  std::size_t cap, std::uint64_t max_moves, bool prune) const {
    SolverOptions o;
    o.weights = to_weights(w);
    o.seed = seed;
    o.workers = workers;
    o.cap = cap;
    o.max_moves = max_moves;
    SolverKind kind = parse_solver_kind(solver);
    SolverReport r;
    {
      py::gil_scoped_release release;
      if (prune) {
        PrunedContext pruned = prune_certain(ctx_, o.weights);
        r = run_solver(kind, pruned.context, o);
        r.breakdown = schemamap::objective(r.best, ctx_, o.weights);
      } else {
        r = run_solver(kind, ctx_, o);
      }
    }
    py::dict d = breakdown_dict(r.best.ids(loaded_.candidates), r.breakdown);
    d["solver"] = r.solver;
    d["evaluations"] = r.evaluations;
    d["optimal"] = r.optimal;
    return d;
  }

  bool decide(const py::object& threshold, const std::string& solver, const WeightTuple& w) const {
    SolverOptions o;
    o.weights = to_weights(w);
    Rational t = to_rational(threshold);
    bool exact = parse_solver_kind(solver) == SolverKind::Exhaustive;
    py::gil_scoped_release release;
    return schemamap::decide(ctx_, t, o, exact);
  }

  void write(const std::string& dir) const {
    write_problem_dir(dir, *loaded_.source_schema, *loaded_.target_schema, loaded_.source, loaded_.target,
                      loaded_.candidates);
  }

 private:
  LoadedScenario loaded_;
  EvalContext ctx_;
};

Problem problem_of(const SchemaPtr& source_schema, const SchemaPtr& target_schema, const Instance& source,
                   const Instance& target, const CandidateSet& candidates,
                   std::optional<std::vector<StTgd>> ground_truth = std::nullopt) {
  LoadedScenario p{source_schema, target_schema, source, target, candidates, std::move(ground_truth)};
  return Problem(std::move(p));
}

SetCoverInstance setcover_of(const std::vector<std::string>& universe,
                             const std::vector<std::vector<std::string>>& family, std::size_t bound) {
  SetCoverInstance sc{universe, family, bound};
  sc.validate();
  return sc;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schema-mapping selection: chase, objective, solvers, scenarios and the SET COVER reduction";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Problem>(m, "Problem")
      .def(py::init(&Problem::from_text), py::arg("schema"), py::arg("source"), py::arg("target"),
           py::arg("candidates"), py::arg("sizes") = std::nullopt,
           "Build a problem from schema, instance, tgd and optional size-override texts.")
      .def_static(
          "from_dir", [](const std::string& dir) { return Problem(load_scenario_dir(dir)); }, py::arg("dir"),
          "Load schema.txt, source.inst, target.inst, candidates.tgd and the optional sizes.txt.")
      .def_property_readonly("candidate_ids", &Problem::candidate_ids)
      .def_property_readonly("candidate_tgds", &Problem::candidate_tgds)
      .def_property_readonly("ground_truth", &Problem::ground_truth)
      .def_property_readonly("source", &Problem::source_text)
      .def_property_readonly("target", &Problem::target_text)
      .def("objective", &Problem::objective, py::arg("selection"), py::arg("weights") = WeightTuple{1, 1, 1})
      .def("covers", &Problem::covers, py::arg("candidate"), py::arg("tuple"))
      .def("chase", &Problem::chase, py::arg("selection") = std::nullopt,
           "Chase the selection (all candidates by default) and return the instance text.")
      .def("select", &Problem::select, py::arg("solver") = "exhaustive", py::arg("weights") = WeightTuple{1, 1, 1},
           py::arg("seed") = 0, py::arg("workers") = 1, py::arg("cap") = 20, py::arg("max_moves") = 10000,
           py::arg("prune") = false)
      .def("decide", &Problem::decide, py::arg("threshold"), py::arg("solver") = "exhaustive",
           py::arg("weights") = WeightTuple{1, 1, 1})
      .def("write", &Problem::write, py::arg("dir"));

  m.def(
      "running_example",
      [](std::size_t extra_projects) {
        WorkedExample ex = running_example(extra_projects);
        return problem_of(ex.source_schema, ex.target_schema, ex.source, ex.target, ex.candidates);
      },
      py::arg("extra_projects") = 0, "The project/task/org example with optional extra projects.");

  m.def(
      "generate_scenario",
      [](const std::string& primitives, std::uint64_t seed, std::size_t rows, unsigned pi_corresp,
         unsigned pi_unexplained, unsigned pi_errors, const std::optional<std::string>& out_dir) {
        ScenarioConfig cfg;
        cfg.primitive_counts = parse_primitive_counts(primitives);
        cfg.seed = seed;
        cfg.rows = rows;
        cfg.pi_corresp = pi_corresp;
        cfg.pi_unexplained = pi_unexplained;
        cfg.pi_errors = pi_errors;
        Scenario sc = generate_scenario(cfg);
        if (out_dir) write_scenario(sc, *out_dir);
        py::dict d;
        d["problem"] = problem_of(sc.source_schema, sc.target_schema, sc.source, sc.target, sc.candidates,
                                  sc.ground_truth);
        d["ground_truth_ids"] = sc.ground_truth_selection().ids(sc.candidates);
        std::vector<std::string> added, deleted;
        for (const auto& t : sc.ledger.added) added.push_back(format_tuple(t));
        for (const auto& t : sc.ledger.deleted) deleted.push_back(format_tuple(t));
        d["added"] = added;
        d["deleted"] = deleted;
        d["config"] = cfg.to_text();
        return d;
      },
      py::arg("primitives"), py::arg("seed") = 0, py::arg("rows") = 5, py::arg("pi_corresp") = 0,
      py::arg("pi_unexplained") = 0, py::arg("pi_errors") = 0, py::arg("out_dir") = std::nullopt,
      "Generate a scenario from counts such as 'CP:2,ME:1'.");

  m.def(
      "reduce_setcover",
      [](const std::vector<std::string>& universe, const std::vector<std::vector<std::string>>& family,
         std::size_t bound, const WeightTuple& w) {
        SetCoverInstance sc = setcover_of(universe, family, bound);
        Weights weights = to_weights(w);
        ReducedInstance red = weights == Weights{} ? reduce(sc) : reduce_weighted(sc, weights);
        return py::make_tuple(
            problem_of(red.source_schema, red.target_schema, red.source, red.target, red.candidates),
            red.threshold);
      },
      py::arg("universe"), py::arg("family"), py::arg("bound"), py::arg("weights") = WeightTuple{1, 1, 1},
      "Build the selection problem of a SET COVER instance; returns (problem, threshold).");

  m.def(
      "set_cover_closed_form",
      [](const std::vector<std::string>& universe, const std::vector<std::vector<std::string>>& family,
         std::size_t bound, const std::vector<std::size_t>& chosen, const WeightTuple& w) {
        SetCoverInstance sc = setcover_of(universe, family, bound);
        return fraction(closed_form_objective_weighted(chosen, sc, to_weights(w)));
      },
      py::arg("universe"), py::arg("family"), py::arg("bound"), py::arg("chosen"),
      py::arg("weights") = WeightTuple{1, 1, 1});

  m.def(
      "brute_force_set_cover",
      [](const std::vector<std::string>& universe, const std::vector<std::vector<std::string>>& family,
         std::size_t bound) { return brute_force_set_cover(setcover_of(universe, family, bound)); },
      py::arg("universe"), py::arg("family"), py::arg("bound"));

  m.def(
      "decide_cover_via_selection",
      [](const std::vector<std::string>& universe, const std::vector<std::vector<std::string>>& family,
         std::size_t bound, const WeightTuple& w) {
        return decide_cover_via_selection(setcover_of(universe, family, bound), to_weights(w));
      },
      py::arg("universe"), py::arg("family"), py::arg("bound"), py::arg("weights") = WeightTuple{1, 1, 1});

  m.def(
      "normalize_tgd",
      [](const std::string& tgd, const std::string& schema) {
        SchemaPair s = parse_schema_file(schema, "schema");
        return format_tgd(normalize_tgd(parse_tgd(tgd, *s.source, *s.target)));
      },
      py::arg("tgd"), py::arg("schema"), "Canonical form of a tgd up to atom order and variable names.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> argv_store = {"schemamap"};
        argv_store.insert(argv_store.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : argv_store) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a command-line invocation in process; returns (exit_code, stdout, stderr).");
}
