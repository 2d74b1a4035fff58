#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ranges>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace schemamap {

using NullId = std::uint64_t;

/// A cell value: an uninterpreted constant symbol or a labeled null.
/// Constants order before nulls; constants by symbol, nulls by id.
class Value {
 public:
  static Value constant(std::string symbol) { return Value(std::move(symbol)); }
  static Value null(NullId id) { return Value(id); }

  bool is_constant() const noexcept { return data_.index() == 0; }
  bool is_null() const noexcept { return data_.index() == 1; }

  const std::string& symbol() const { return std::get<0>(data_); }
  NullId null_id() const { return std::get<1>(data_); }

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.data_.index() != b.data_.index())
      return a.data_.index() <=> b.data_.index();
    if (a.is_null()) return a.null_id() <=> b.null_id();
    return a.symbol().compare(b.symbol()) <=> 0;
  }

 private:
  explicit Value(std::string symbol) : data_(std::in_place_index<0>, std::move(symbol)) {}
  explicit Value(NullId id) : data_(std::in_place_index<1>, id) {}

  std::variant<std::string, NullId> data_;
};

struct RelationSig {
  std::string name;
  std::vector<std::string> attributes;

  std::size_t arity() const noexcept { return attributes.size(); }
  friend bool operator==(const RelationSig&, const RelationSig&) = default;
};

/// Relation signatures keyed by name, kept in declaration order.
class Schema {
 public:
  Schema() = default;
  Schema(std::initializer_list<RelationSig> relations);

  /// Throws DomainError on a duplicate relation name, zero arity or
  /// repeated attribute names.
  void add(RelationSig relation);

  const RelationSig* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  const std::vector<RelationSig>& relations() const noexcept { return relations_; }
  std::size_t size() const noexcept { return relations_.size(); }

  friend bool operator==(const Schema& a, const Schema& b) {
    return a.relations_ == b.relations_;
  }

 private:
  std::vector<RelationSig> relations_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using SchemaPtr = std::shared_ptr<const Schema>;

struct Tuple {
  std::string relation;
  std::vector<Value> cells;

  std::size_t arity() const noexcept { return cells.size(); }
  bool is_ground() const;

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

/// A set of tuples over a schema. Iteration is in canonical order
/// (relation name, then cells).
class Instance {
 public:
  using Storage = std::set<Tuple>;
  using const_iterator = Storage::const_iterator;

  explicit Instance(SchemaPtr schema);

  /// Returns false when the tuple was already present. Throws DomainError
  /// if the relation is unknown or the cell count differs from its arity.
  bool insert(Tuple tuple);
  bool erase(const Tuple& tuple) { return tuples_.erase(tuple) > 0; }
  bool contains(const Tuple& tuple) const { return tuples_.count(tuple) > 0; }

  std::size_t size() const noexcept { return tuples_.size(); }
  bool empty() const noexcept { return tuples_.empty(); }
  bool is_ground() const;

  const Storage& tuples() const noexcept { return tuples_; }
  const_iterator begin() const { return tuples_.begin(); }
  const_iterator end() const { return tuples_.end(); }

  /// All tuples of one relation, in canonical order.
  std::ranges::subrange<const_iterator> relation_tuples(const std::string& relation) const;

  const Schema& schema() const noexcept { return *schema_; }
  const SchemaPtr& schema_ptr() const noexcept { return schema_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.tuples_ == b.tuples_;
  }

 private:
  SchemaPtr schema_;
  Storage tuples_;
};

/// A homomorphism restricted to nulls; constants are always fixed points.
class NullAssignment {
 public:
  const Value* find(NullId id) const;
  void bind(NullId id, Value image) { bindings_.insert_or_assign(id, std::move(image)); }
  std::size_t size() const noexcept { return bindings_.size(); }
  bool empty() const noexcept { return bindings_.empty(); }
  const std::map<NullId, Value>& bindings() const noexcept { return bindings_; }

  Value apply(const Value& v) const;
  Tuple apply(const Tuple& t) const;

  friend bool operator==(const NullAssignment&, const NullAssignment&) = default;

 private:
  std::map<NullId, Value> bindings_;
};

/// Hands out fresh null ids, starting at 1. Safe to share between threads.
class NullAllocator {
 public:
  explicit NullAllocator(NullId first = 1) : next_(first) {}
  NullId fresh() { return next_.fetch_add(1); }
  /// Reserves `count` consecutive ids and returns the first one.
  NullId reserve(std::size_t count) { return next_.fetch_add(count); }
  NullId peek() const { return next_.load(); }

 private:
  std::atomic<NullId> next_;
};

/// Minimal extension h of `base` with h(t) = q, or nullopt.
std::optional<NullAssignment> tuple_homomorphism(const Tuple& t, const Tuple& q,
                                                 const NullAssignment& base);

/// First tuple of `target` (canonical order) that `t` maps onto under an
/// extension of `base`, together with that extension.
std::optional<std::pair<Tuple, NullAssignment>> maps_into(const Tuple& t,
                                                          const Instance& target,
                                                          const NullAssignment& base);

/// Callback for `for_each_extension`: the extension and, per input tuple
/// (input order), the target tuple it was mapped onto. Return false to stop.
using ExtensionVisitor =
    std::function<bool(const NullAssignment&, std::span<const Tuple* const>)>;

/// Enumerates every extension of `base` mapping all `tuples` into `target`.
/// Backtracks on the most-constrained remaining tuple first, ties broken by
/// canonical tuple order; candidates are tried in canonical order.
void for_each_extension(std::span<const Tuple> tuples, const Instance& target,
                        const NullAssignment& base, const ExtensionVisitor& visit);

/// First extension found by `for_each_extension`, or nullopt.
std::optional<NullAssignment> extend_into_instance(std::span<const Tuple> tuples,
                                                   const Instance& target,
                                                   const NullAssignment& base);

/// Collects the null ids occurring in the tuples, ascending.
std::vector<NullId> nulls_of(std::span<const Tuple> tuples);

/// Renames nulls through `renaming`; ids missing from the map are kept.
Tuple rename_nulls(const Tuple& t, const std::unordered_map<NullId, NullId>& renaming);
Instance rename_nulls(const Instance& instance,
                      const std::unordered_map<NullId, NullId>& renaming);

}  // namespace schemamap
