#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "schemamap/chase.hpp"
#include "schemamap/mapping.hpp"
#include "schemamap/relational.hpp"

namespace schemamap {

using Rational = boost::rational<std::int64_t>;

/// `p/q`, or `p` when the denominator is 1.
std::string format_rational(const Rational& r);
/// `p/q (≈ d.dddd)`.
std::string format_rational_with_decimal(const Rational& r);
/// Accepts `p`, `p/q` and `-p/q`. Throws ParseError.
Rational parse_rational(std::string_view text);
double to_double(const Rational& r);

/// Positive integer weights of the unexplained, error and size terms.
struct Weights {
  std::int64_t unexplained = 1;
  std::int64_t errors = 1;
  std::int64_t size = 1;

  /// Throws DomainError unless all three are positive.
  void validate() const;
  friend bool operator==(const Weights&, const Weights&) = default;
};

/// Parses `w1,w2,w3`. Throws ParseError.
Weights parse_weights(std::string_view text);

struct ObjectiveBreakdown {
  Rational unexplained;  // sum over J of (1 - explains)
  Rational errors;
  std::int64_t size = 0;
  Rational total;  // w1 * unexplained + w2 * errors + w3 * size
  Weights weights;

  friend bool operator==(const ObjectiveBreakdown&, const ObjectiveBreakdown&) = default;
};

/// Degree to which the tuples `produced` by one tgd account for the ground
/// tuple `q`: the best over producing tuples t with a homomorphism h,
/// h(t) = q, of the fraction of t's positions that are constants or nulls
/// corroborated by another produced tuple that maps into `target` under an
/// extension of h. Throws DomainError if `q` is not ground.
Rational covers_degree(const Instance& produced, const Instance& target, const Tuple& q);

/// 1 when `t` has no homomorphic image in `target`, else 0.
int creates_error(const Tuple& t, const Instance& target);

/// Candidates, data example and every per-candidate chase, with the covers
/// and creates tables precomputed. Immutable after construction and safe to
/// share between threads.
class EvalContext {
 public:
  /// `target` must be ground; candidates must fit the instances' schemas.
  /// Per-candidate chases share one allocator starting at `first_null`.
  EvalContext(CandidateSet candidates, Instance source, Instance target, NullId first_null = 1);

  const CandidateSet& candidates() const noexcept { return candidates_; }
  const Instance& source() const noexcept { return source_; }
  const Instance& target() const noexcept { return target_; }
  NullId first_null() const noexcept { return first_null_; }

  /// K_theta for candidate `index`.
  const ChaseResult& chase_of(std::size_t index) const { return per_candidate_.at(index); }
  /// Union over all candidates.
  const ChaseResult& chase_all() const noexcept { return all_; }

  /// J in canonical order; covers tables are indexed by this order.
  const std::vector<Tuple>& target_tuples() const noexcept { return target_tuples_; }
  std::optional<std::size_t> target_index(const Tuple& q) const;

  /// Memoized covers(candidate, J[q_index]).
  Rational covers_at(std::size_t candidate, std::size_t q_index) const;

  /// Ids into the shared table of error tuples (ground duplicates across
  /// candidates share one id).
  const std::vector<std::size_t>& error_ids(std::size_t candidate) const {
    return error_ids_.at(candidate);
  }
  std::size_t error_table_size() const noexcept { return error_table_size_; }

  /// Objective over a selection; see `objective`.
  ObjectiveBreakdown evaluate(const Selection& selection, const Weights& weights) const;

 private:
  CandidateSet candidates_;
  Instance source_;
  Instance target_;
  NullId first_null_ = 1;
  std::vector<ChaseResult> per_candidate_;
  ChaseResult all_;
  std::vector<Tuple> target_tuples_;
  std::map<Tuple, std::size_t> target_index_;
  // covers scaled by common_denominator_, [candidate][q]
  std::vector<std::vector<std::int64_t>> scaled_covers_;
  std::int64_t common_denominator_ = 1;
  std::vector<std::vector<std::size_t>> error_ids_;
  std::size_t error_table_size_ = 0;
};

/// 0 iff `t` (a tuple of K_theta) maps into J. Throws DomainError when the
/// candidate did not produce `t`.
int creates(const EvalContext& ctx, std::size_t candidate, const Tuple& t);

/// Memoized for tuples of J; computed directly for other ground tuples.
Rational covers(const EvalContext& ctx, std::size_t candidate, const Tuple& q);

/// Maximum of covers over the selection; 0 for the empty selection.
Rational explains(const Selection& selection, const EvalContext& ctx, const Tuple& q);

/// Number of distinct tuples created by the selection's chases that have no
/// image in J.
Rational error_sum(const Selection& selection, const EvalContext& ctx);

/// Throws DomainError on a membership violation or non-positive weights.
ObjectiveBreakdown objective(const Selection& selection, const EvalContext& ctx,
                             const Weights& weights = {});

struct PrunedContext {
  EvalContext context;
  Rational offset;            // added to every reduced total
  std::vector<Tuple> removed;  // certain-unexplained tuples taken out of J
};

/// Drops from J the tuples no candidate-produced tuple maps onto. Their
/// contribution is w1 each for every selection, so
/// objective(M, reduced) + offset == objective(M, original).
PrunedContext prune_certain(const EvalContext& ctx, const Weights& weights = {});

}  // namespace schemamap
