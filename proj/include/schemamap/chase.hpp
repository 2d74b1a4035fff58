#pragma once

#include <compare>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "schemamap/mapping.hpp"
#include "schemamap/relational.hpp"

namespace schemamap {

/// One firing of a tgd: its id and the index of the body match in
/// canonical trigger order.
struct TriggerRef {
  std::string tgd_id;
  std::size_t match_index = 0;

  friend bool operator==(const TriggerRef&, const TriggerRef&) = default;
  friend auto operator<=>(const TriggerRef&, const TriggerRef&) = default;
};

struct NullOrigin {
  std::string tgd_id;
  std::string variable;
  std::size_t match_index = 0;

  friend bool operator==(const NullOrigin&, const NullOrigin&) = default;
};

struct ChaseResult {
  explicit ChaseResult(SchemaPtr target) : instance(std::move(target)) {}

  Instance instance;
  std::map<Tuple, std::set<TriggerRef>> provenance;
  std::map<NullId, NullOrigin> null_registry;

  /// Set union of instances; provenance and registries are merged.
  void merge(const ChaseResult& other);
};

/// Body matches of `tgd` in `source`: one binding per body variable
/// (keyed by name), ordered by the matched facts' canonical order.
std::vector<std::map<std::string, Value>> body_matches(const StTgd& tgd, const Instance& source);

/// Chases a single tgd. Each trigger gets fresh nulls for the existential
/// variables, allocated in one block so concurrent chases sharing an
/// allocator never interleave. Throws DomainError on a schema mismatch.
ChaseResult chase_tgd(const StTgd& tgd, const Instance& source, SchemaPtr target,
                      NullAllocator& nulls);

/// Union of per-tgd chases with one shared allocator, in the given order.
ChaseResult chase_mapping(std::span<const StTgd> tgds, const Instance& source, SchemaPtr target,
                          NullAllocator& nulls);

/// True iff every body match of `tgd` in `source` has a head image in
/// `solution` under some assignment of the existentials. `source` is
/// expected to be ground.
bool satisfies(const Instance& solution, const StTgd& tgd, const Instance& source);

/// `tuple <canonical form> <- tgd_id match_index` lines, one per
/// provenance entry, in canonical tuple order.
std::string format_provenance(const ChaseResult& result);

}  // namespace schemamap
