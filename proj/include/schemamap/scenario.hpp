#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schemamap/chase.hpp"
#include "schemamap/mapping.hpp"
#include "schemamap/objective.hpp"
#include "schemamap/rng.hpp"

namespace schemamap {

/// Schema-evolution templates. Each invocation creates its own source and
/// target relations, one ground-truth tgd and attribute correspondences.
enum class Primitive { CP, ADD, DL, ADL, ME, VP, VNM };

inline constexpr std::array<Primitive, 7> kAllPrimitives = {
    Primitive::CP, Primitive::ADD, Primitive::DL, Primitive::ADL,
    Primitive::ME, Primitive::VP,  Primitive::VNM};

std::string to_string(Primitive p);
/// Case-insensitive. Throws DomainError.
Primitive parse_primitive(std::string_view name);

struct ScenarioConfig {
  std::map<Primitive, std::size_t> primitive_counts;
  std::int64_t attr_min = 2;  // attributes added/removed by ADD, DL, ADL
  std::int64_t attr_max = 4;
  std::int64_t source_arity_min = 2;  // arity of fresh source relations
  std::int64_t source_arity_max = 4;
  std::size_t rows = 5;  // tuples drawn per source relation
  unsigned pi_corresp = 0;  // percentages in [0, 100]
  unsigned pi_unexplained = 0;
  unsigned pi_errors = 0;
  std::uint64_t seed = 0;

  /// Throws DomainError on out-of-range values or no primitives at all.
  void validate() const;
  std::size_t primitive_total() const;

  /// `key=value` lines, and the reverse.
  std::string to_text() const;
  static ScenarioConfig from_text(std::string_view text, const std::string& source_name = {});
  /// `CP:2,ME:1` form used by the command line and config echo.
  std::string primitives_spec() const;
};

/// Parses `CP:2,ME:1`. Throws DomainError.
std::map<Primitive, std::size_t> parse_primitive_counts(std::string_view text);

struct Correspondence {
  std::string source_relation;
  std::string source_attribute;
  std::string target_relation;
  std::string target_attribute;

  friend bool operator==(const Correspondence&, const Correspondence&) = default;
  friend auto operator<=>(const Correspondence&, const Correspondence&) = default;
};

/// A target position filled by an existential join key shared across the
/// target relations of one VP or VNM invocation.
struct JoinKey {
  std::string target_relation;
  std::size_t position = 0;
  std::string key;
};

struct PrimitiveInvocation {
  Primitive kind = Primitive::CP;
  std::vector<std::string> sources;
  std::vector<std::string> targets;
  std::vector<JoinKey> join_keys;
  std::string tgd_id;
};

/// Mutable state threaded through the primitives.
struct ScenarioBuilder {
  ScenarioBuilder();
  explicit ScenarioBuilder(const ScenarioConfig& config);

  std::int64_t attr_min = 2;
  std::int64_t attr_max = 4;
  std::int64_t source_arity_min = 2;
  std::int64_t source_arity_max = 4;

  std::shared_ptr<Schema> source_schema;
  std::shared_ptr<Schema> target_schema;
  std::vector<StTgd> ground_truth;
  std::set<Correspondence> correspondences;
  std::vector<PrimitiveInvocation> invocations;

  /// Invocation that created a target relation.
  const PrimitiveInvocation* owner_of_target(std::string_view relation) const;
};

/// Applies one primitive. `source_arity` fixes the arity of the fresh source
/// relation (both sources for ME) instead of drawing it; DL and ADL then
/// throw DomainError if the drop would leave no attribute. Without it, DL
/// and ADL draw an arity that keeps at least one attribute.
void apply_primitive(Primitive kind, ScenarioBuilder& builder, Rng& rng,
                     std::optional<std::int64_t> source_arity = std::nullopt);

/// Adds one correspondence per attribute of floor(pct/100 * #targets)
/// randomly chosen target relations, each to a random attribute of a source
/// relation from another invocation. Returns the perturbed target relations.
std::vector<std::string> perturb_correspondences(ScenarioBuilder& builder, unsigned pct, Rng& rng);

/// One tgd per linked (target, source) pair, the joined variants of VP/VNM
/// groups for every linked source, the ME joins, then any ground-truth tgd
/// still missing. Shapes equal up to renaming are emitted once and keep
/// the ground-truth id when they match one.
CandidateSet generate_candidates(const ScenarioBuilder& builder);

struct TuplePools {
  std::vector<Tuple> both;               // K_C tuples generated by both sides
  std::vector<Tuple> only_ground_truth;  // ... by M_G only
  std::vector<Tuple> only_errmap;        // ... by C - M_G only
  /// J tuples witnessing only-M_G tuples: deleting one makes it an error.
  std::vector<Tuple> error_pool;
  /// Grounded only-errmap tuples absent from J: adding one leaves it unexplained.
  std::vector<Tuple> unexplained_pool;
};

/// Classifies every tuple of K_G u K_E. A tuple's witness is its image in J
/// when it maps into J, else the tuple with nulls grounded as `u<id>`; a
/// side generated it when some tuple of that side's chase maps onto the
/// witness.
TuplePools classify_tuples(const Instance& k_ground_truth, const Instance& k_errmap,
                           const Instance& target);

struct NoiseLedger {
  std::vector<Tuple> added;
  std::vector<Tuple> deleted;
};

/// Adds floor(pi_u/100 * |unexplained pool|) pool tuples to J and deletes
/// floor(pi_e/100 * |error pool|) error-pool tuples from it.
std::pair<Instance, NoiseLedger> perturb_instance(const Instance& target, const TuplePools& pools,
                                                  unsigned pi_unexplained, unsigned pi_errors,
                                                  Rng& rng);

/// floor(pct * n / 100).
std::size_t percent_count(unsigned pct, std::size_t n);

/// Replaces each null `_k` by the constant `<prefix><k>`.
Instance ground_instance(const Instance& instance, const std::string& prefix);
Tuple ground_tuple(const Tuple& tuple, const std::string& prefix);

struct Scenario {
  ScenarioConfig config;
  SchemaPtr source_schema;
  SchemaPtr target_schema;
  Instance source;
  Instance target;
  Instance clean_target;  // J before instance noise
  std::vector<StTgd> ground_truth;
  CandidateSet candidates;
  std::set<Correspondence> correspondences;
  std::vector<std::string> perturbed_targets;
  TuplePools pools;
  NoiseLedger ledger;

  EvalContext context() const { return EvalContext(candidates, source, target); }
  /// M_G as a selection over the candidates.
  Selection ground_truth_selection() const;
};

/// primitives -> source data -> J = grounded chase(M_G, I) -> correspondence
/// noise -> candidates -> classification -> instance noise. Deterministic in
/// the config (including its seed).
Scenario generate_scenario(const ScenarioConfig& config);

/// Writes schema.txt, source.inst, target.inst, groundtruth.tgd,
/// candidates.tgd, corresp.csv, ledger.csv and config.txt into `dir`
/// (created when missing).
void write_scenario(const Scenario& scenario, const std::string& dir);

}  // namespace schemamap
