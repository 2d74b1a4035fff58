#pragma once

#include <cstdint>
#include <string>

#include "schemamap/objective.hpp"

namespace schemamap {

struct SolverReport {
  Selection best;
  ObjectiveBreakdown breakdown;
  std::string solver;
  std::uint64_t evaluations = 0;
  double wall_seconds = 0.0;
  bool optimal = false;  // only the exhaustive solver sets this
};

struct SolverOptions {
  Weights weights;
  std::size_t cap = 20;       // exhaustive: maximum |C|
  unsigned workers = 1;       // 0 = hardware concurrency
  std::uint64_t seed = 0;     // local search move order
  std::uint64_t max_moves = 10000;  // local search: move evaluations
};

/// Orders (total, size, member indices). Lower is better.
bool better_solution(const ObjectiveBreakdown& a, const Selection& sa,
                     const ObjectiveBreakdown& b, const Selection& sb);

/// Scores all 2^|C| selections. Throws DomainError when |C| exceeds the cap.
/// The result does not depend on the worker count.
SolverReport select_exhaustive(const EvalContext& ctx, const SolverOptions& options = {});

/// Adds, from the empty selection, the candidate with the largest strict
/// decrease until none decreases the total; ties go to the earliest candidate.
SolverReport select_greedy(const EvalContext& ctx, const SolverOptions& options = {});

/// Add/remove/swap hill climbing from the greedy result, moves tried in a
/// seeded shuffled order, first strict improvement accepted.
SolverReport select_local_search(const EvalContext& ctx, const SolverOptions& options = {});

enum class SolverKind { Exhaustive, Greedy, Local };

SolverKind parse_solver_kind(std::string_view name);
std::string to_string(SolverKind kind);
SolverReport run_solver(SolverKind kind, const EvalContext& ctx, const SolverOptions& options = {});

/// Is there a selection with total <= threshold? Exact with the exhaustive
/// solver; the heuristic path (greedy, then local search) answers "yes"
/// soundly but may miss a witness.
bool decide(const EvalContext& ctx, const Rational& threshold, const SolverOptions& options = {},
            bool exact = true);

}  // namespace schemamap
