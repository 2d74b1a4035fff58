#include "schemamap/selector.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "schemamap/errors.hpp"
#include "schemamap/rng.hpp"

namespace schemamap {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned resolve_workers(unsigned requested, std::size_t jobs) {
  unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

// Runs fn(worker, begin, end) over contiguous slices of [0, jobs).
template <typename Fn>
void parallel_slices(unsigned workers, std::uint64_t jobs, Fn&& fn) {
  if (workers <= 1) {
    fn(0u, std::uint64_t{0}, jobs);
    return;
  }
  std::vector<std::thread> threads;
  std::uint64_t chunk = (jobs + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t begin = std::min<std::uint64_t>(jobs, w * chunk);
    std::uint64_t end = std::min<std::uint64_t>(jobs, begin + chunk);
    threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

bool better_solution(const ObjectiveBreakdown& a, const Selection& sa,
                     const ObjectiveBreakdown& b, const Selection& sb) {
  if (a.total != b.total) return a.total < b.total;
  if (a.size != b.size) return a.size < b.size;
  return sa.members() < sb.members();
}

SolverReport select_exhaustive(const EvalContext& ctx, const SolverOptions& options) {
  auto start = Clock::now();
  options.weights.validate();
  const std::size_t n = ctx.candidates().size();
  if (n > options.cap || n >= 63)
    throw DomainError("exhaustive search over " + std::to_string(n) +
                      " candidates exceeds the cap of " + std::to_string(options.cap));

  const std::uint64_t total = std::uint64_t{1} << n;
  unsigned workers = resolve_workers(options.workers, total);

  struct Best {
    Selection selection;
    ObjectiveBreakdown breakdown;
    bool set = false;
  };
  std::vector<Best> best(workers);
  parallel_slices(workers, total, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    Best& b = best[w];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      Selection s = Selection::from_mask(mask, n);
      ObjectiveBreakdown bd = ctx.evaluate(s, options.weights);
      if (!b.set || better_solution(bd, s, b.breakdown, b.selection)) {
        b.selection = std::move(s);
        b.breakdown = bd;
        b.set = true;
      }
    }
  });

  Best winner;
  for (auto& b : best) {
    if (!b.set) continue;
    if (!winner.set || better_solution(b.breakdown, b.selection, winner.breakdown, winner.selection))
      winner = b;
  }

  SolverReport report;
  report.best = winner.selection;
  report.breakdown = winner.breakdown;
  report.solver = "exhaustive";
  report.evaluations = total;
  report.optimal = true;
  report.wall_seconds = seconds_since(start);
  return report;
}

SolverReport select_greedy(const EvalContext& ctx, const SolverOptions& options) {
  auto start = Clock::now();
  options.weights.validate();
  const std::size_t n = ctx.candidates().size();

  Selection current;
  ObjectiveBreakdown current_bd = ctx.evaluate(current, options.weights);
  std::uint64_t evaluations = 1;

  while (true) {
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < n; ++i)
      if (!current.contains(i)) pool.push_back(i);
    if (pool.empty()) break;

    std::vector<ObjectiveBreakdown> scores(pool.size());
    unsigned workers = resolve_workers(options.workers, pool.size());
    parallel_slices(workers, pool.size(), [&](unsigned, std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t k = begin; k < end; ++k)
        scores[k] = ctx.evaluate(current.with(pool[k]), options.weights);
    });
    evaluations += pool.size();

    std::size_t pick = pool.size();
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (scores[k].total >= current_bd.total) continue;
      if (pick == pool.size() || scores[k].total < scores[pick].total) pick = k;
    }
    if (pick == pool.size()) break;
    current = current.with(pool[pick]);
    current_bd = scores[pick];
  }

  SolverReport report;
  report.best = std::move(current);
  report.breakdown = current_bd;
  report.solver = "greedy";
  report.evaluations = evaluations;
  report.optimal = false;
  report.wall_seconds = seconds_since(start);
  return report;
}

SolverReport select_local_search(const EvalContext& ctx, const SolverOptions& options) {
  auto start = Clock::now();
  if (options.max_moves < 1) throw DomainError("local search needs max_moves >= 1");
  SolverReport greedy = select_greedy(ctx, options);
  const std::size_t n = ctx.candidates().size();

  Selection current = greedy.best;
  ObjectiveBreakdown current_bd = greedy.breakdown;
  std::uint64_t evaluations = greedy.evaluations;
  std::uint64_t moves_tried = 0;
  Rng rng(options.seed);

  struct Move {
    std::size_t out;  // n when nothing leaves
    std::size_t in;   // n when nothing enters
  };

  bool improved = true;
  while (improved && moves_tried < options.max_moves) {
    improved = false;
    std::vector<Move> moves;
    for (std::size_t i = 0; i < n; ++i) {
      if (current.contains(i)) {
        moves.push_back({i, n});
        for (std::size_t j = 0; j < n; ++j)
          if (!current.contains(j)) moves.push_back({i, j});
      } else {
        moves.push_back({n, i});
      }
    }
    rng.shuffle(moves);
    for (const auto& mv : moves) {
      if (moves_tried >= options.max_moves) break;
      Selection next = current;
      if (mv.out != n) next = next.without(mv.out);
      if (mv.in != n) next = next.with(mv.in);
      ObjectiveBreakdown bd = ctx.evaluate(next, options.weights);
      ++moves_tried;
      ++evaluations;
      if (bd.total < current_bd.total) {
        current = std::move(next);
        current_bd = bd;
        improved = true;
        break;
      }
    }
  }

  SolverReport report;
  report.best = std::move(current);
  report.breakdown = current_bd;
  report.solver = "local";
  report.evaluations = evaluations;
  report.optimal = false;
  report.wall_seconds = seconds_since(start);
  return report;
}

SolverKind parse_solver_kind(std::string_view name) {
  if (name == "exhaustive") return SolverKind::Exhaustive;
  if (name == "greedy") return SolverKind::Greedy;
  if (name == "local") return SolverKind::Local;
  throw DomainError("unknown solver '" + std::string(name) + "' (exhaustive, greedy, local)");
}

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::Exhaustive: return "exhaustive";
    case SolverKind::Greedy: return "greedy";
    case SolverKind::Local: return "local";
  }
  return "?";
}

SolverReport run_solver(SolverKind kind, const EvalContext& ctx, const SolverOptions& options) {
  switch (kind) {
    case SolverKind::Exhaustive: return select_exhaustive(ctx, options);
    case SolverKind::Greedy: return select_greedy(ctx, options);
    case SolverKind::Local: return select_local_search(ctx, options);
  }
  throw DomainError("unknown solver");
}

bool decide(const EvalContext& ctx, const Rational& threshold, const SolverOptions& options,
            bool exact) {
  if (threshold < Rational(0)) throw DomainError("decision threshold must be non-negative");
  if (exact) return select_exhaustive(ctx, options).breakdown.total <= threshold;
  if (select_greedy(ctx, options).breakdown.total <= threshold) return true;
  return select_local_search(ctx, options).breakdown.total <= threshold;
}

}  // namespace schemamap
