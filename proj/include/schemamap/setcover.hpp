#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schemamap/objective.hpp"
#include "schemamap/selector.hpp"

namespace schemamap {

struct SetCoverInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> family;
  std::size_t bound = 1;  // n: at most this many sets

  /// Throws DomainError: empty universe, n = 0, n > |R|, or a set element
  /// outside the universe.
  void validate() const;
};

/// Reads `universe: a b c`, one `set: a b` line per member, `n: k`.
SetCoverInstance parse_setcover(std::string_view text, const std::string& source_name = {});

/// A mapping-selection instance built from a SET COVER instance: source
/// relations r1..rk/2, target u/2, candidates ri(X,Y) -> u(X,Y),
/// J = U x D and I = union of Ri x D, D = {1..m+1}.
struct ReducedInstance {
  SchemaPtr source_schema;
  SchemaPtr target_schema;
  Instance source;
  Instance target;
  CandidateSet candidates;
  std::int64_t threshold = 0;  // m
  std::vector<std::int64_t> domain;
  Weights weights;

  EvalContext context() const { return EvalContext(candidates, source, target); }
};

/// Unweighted form: m = 2n.
ReducedInstance reduce(const SetCoverInstance& sc);

/// Weighted form: m = size(theta_1) * w3 * n, every candidate of size 2.
ReducedInstance reduce_weighted(const SetCoverInstance& sc, const Weights& weights);

/// (m+1) * (|U| - |union of chosen sets|) + 2 |M|, m = 2n. `chosen` holds
/// 0-based family indices. Throws DomainError on an out-of-range index.
Rational closed_form_objective(const std::vector<std::size_t>& chosen, const SetCoverInstance& sc);

/// w1 (m+1) (|U| - |union|) + w3 * 2 |M| with m = 2 w3 n; no error term,
/// since reduction candidates never create errors.
Rational closed_form_objective_weighted(const std::vector<std::size_t>& chosen,
                                        const SetCoverInstance& sc, const Weights& weights);

/// Exhaustive check over subsets of size <= n. Throws DomainError past 20 sets.
bool brute_force_set_cover(const SetCoverInstance& sc);

/// Reduces (weighted when `weights` is not all ones), solves exhaustively
/// and compares the optimum with m.
bool decide_cover_via_selection(const SetCoverInstance& sc, const Weights& weights = {},
                                std::size_t cap = 20);

/// Constant names used by the reduction.
std::string universe_constant(const std::string& element);
std::string domain_constant(std::int64_t k);

}  // namespace schemamap
