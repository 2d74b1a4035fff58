#include "schemamap/relational.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "schemamap/errors.hpp"

namespace schemamap {

Schema::Schema(std::initializer_list<RelationSig> relations) {
  for (const auto& r : relations) add(r);
}

void Schema::add(RelationSig relation) {
  if (relation.attributes.empty())
    throw DomainError("relation '" + relation.name + "' has arity 0");
  if (index_.count(relation.name))
    throw DomainError("duplicate relation '" + relation.name + "'");
  std::set<std::string> seen;
  for (const auto& a : relation.attributes) {
    if (!seen.insert(a).second)
      throw DomainError("relation '" + relation.name + "' repeats attribute '" + a + "'");
  }
  index_.emplace(relation.name, relations_.size());
  relations_.push_back(std::move(relation));
}

const RelationSig* Schema::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &relations_[it->second];
}

bool Tuple::is_ground() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const Value& v) { return v.is_constant(); });
}

Instance::Instance(SchemaPtr schema) : schema_(std::move(schema)) {
  if (!schema_) schema_ = std::make_shared<const Schema>();
}

bool Instance::insert(Tuple tuple) {
  const RelationSig* sig = schema_->find(tuple.relation);
  if (sig == nullptr)
    throw DomainError("relation '" + tuple.relation + "' is not in the schema");
  if (sig->arity() != tuple.arity())
    throw DomainError("relation '" + tuple.relation + "' expects " +
                      std::to_string(sig->arity()) + " values, got " +
                      std::to_string(tuple.arity()));
  return tuples_.insert(std::move(tuple)).second;
}

bool Instance::is_ground() const {
  return std::all_of(tuples_.begin(), tuples_.end(),
                     [](const Tuple& t) { return t.is_ground(); });
}

std::ranges::subrange<Instance::const_iterator> Instance::relation_tuples(
    const std::string& relation) const {
  // Tuple{rel, {}} is the least tuple of rel; rel + '\0' is the least
  // string greater than rel, so it bounds the range from above.
  auto first = tuples_.lower_bound(Tuple{relation, {}});
  auto last = tuples_.lower_bound(Tuple{relation + '\0', {}});
  return {first, last};
}

const Value* NullAssignment::find(NullId id) const {
  auto it = bindings_.find(id);
  return it == bindings_.end() ? nullptr : &it->second;
}

Value NullAssignment::apply(const Value& v) const {
  if (v.is_null()) {
    if (const Value* image = find(v.null_id())) return *image;
  }
  return v;
}

Tuple NullAssignment::apply(const Tuple& t) const {
  Tuple out{t.relation, {}};
  out.cells.reserve(t.cells.size());
  for (const auto& v : t.cells) out.cells.push_back(apply(v));
  return out;
}

namespace {

// Extends `h` in place; returns false (leaving `h` partially extended) on
// a clash. Callers copy before calling.
bool extend_in_place(const Tuple& t, const Tuple& q, NullAssignment& h) {
  if (t.relation != q.relation || t.cells.size() != q.cells.size()) return false;
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    const Value& from = t.cells[i];
    const Value& to = q.cells[i];
    if (from.is_constant()) {
      if (from != to) return false;
      continue;
    }
    if (const Value* bound = h.find(from.null_id())) {
      if (*bound != to) return false;
    } else {
      h.bind(from.null_id(), to);
    }
  }
  return true;
}

// Cheap pre-check before copying an assignment.
bool compatible(const Tuple& t, const Tuple& q, const NullAssignment& h) {
  if (t.cells.size() != q.cells.size()) return false;
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    const Value& from = t.cells[i];
    const Value& to = q.cells[i];
    if (from.is_constant()) {
      if (from != to) return false;
    } else if (const Value* bound = h.find(from.null_id())) {
      if (*bound != to) return false;
    }
  }
  // Repeated unbound nulls inside t still need the full check.
  return true;
}

class Backtracker {
 public:
  Backtracker(std::span<const Tuple> tuples, const Instance& target,
              const ExtensionVisitor& visit)
      : tuples_(tuples), target_(target), visit_(visit), images_(tuples.size(), nullptr) {
    order_.resize(tuples.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return tuples_[a] < tuples_[b];
    });
    remaining_.assign(tuples.size(), true);
  }

  bool run(const NullAssignment& h, std::size_t left) {
    if (left == 0) return visit_(h, std::span<const Tuple* const>(images_));

    // Most constrained remaining tuple; order_ holds canonical order so the
    // first minimum wins ties.
    std::size_t best = tuples_.size();
    std::vector<std::pair<const Tuple*, NullAssignment>> best_candidates;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t idx : order_) {
      if (!remaining_[idx]) continue;
      std::vector<std::pair<const Tuple*, NullAssignment>> candidates;
      for (const Tuple& q : target_.relation_tuples(tuples_[idx].relation)) {
        if (!compatible(tuples_[idx], q, h)) continue;
        NullAssignment ext = h;
        if (extend_in_place(tuples_[idx], q, ext)) candidates.emplace_back(&q, std::move(ext));
        if (candidates.size() >= best_count) break;
      }
      if (candidates.size() < best_count) {
        best = idx;
        best_count = candidates.size();
        best_candidates = std::move(candidates);
        if (best_count == 0) return true;
      }
    }

    remaining_[best] = false;
    for (auto& [q, ext] : best_candidates) {
      images_[best] = q;
      if (!run(ext, left - 1)) {
        remaining_[best] = true;
        return false;
      }
    }
    images_[best] = nullptr;
    remaining_[best] = true;
    return true;
  }

 private:
  std::span<const Tuple> tuples_;
  const Instance& target_;
  const ExtensionVisitor& visit_;
  std::vector<const Tuple*> images_;
  std::vector<std::size_t> order_;
  std::vector<bool> remaining_;
};

}  // namespace

std::optional<NullAssignment> tuple_homomorphism(const Tuple& t, const Tuple& q,
                                                 const NullAssignment& base) {
  if (!compatible(t, q, base) || t.relation != q.relation) return std::nullopt;
  NullAssignment h = base;
  if (!extend_in_place(t, q, h)) return std::nullopt;
  return h;
}

std::optional<std::pair<Tuple, NullAssignment>> maps_into(const Tuple& t,
                                                          const Instance& target,
                                                          const NullAssignment& base) {
  for (const Tuple& q : target.relation_tuples(t.relation)) {
    if (auto h = tuple_homomorphism(t, q, base)) return std::make_pair(q, std::move(*h));
  }
  return std::nullopt;
}

void for_each_extension(std::span<const Tuple> tuples, const Instance& target,
                        const NullAssignment& base, const ExtensionVisitor& visit) {
  Backtracker bt(tuples, target, visit);
  bt.run(base, tuples.size());
}

std::optional<NullAssignment> extend_into_instance(std::span<const Tuple> tuples,
                                                   const Instance& target,
                                                   const NullAssignment& base) {
  std::optional<NullAssignment> found;
  for_each_extension(tuples, target, base,
                     [&](const NullAssignment& h, std::span<const Tuple* const>) {
                       found = h;
                       return false;
                     });
  return found;
}

std::vector<NullId> nulls_of(std::span<const Tuple> tuples) {
  std::set<NullId> ids;
  for (const auto& t : tuples)
    for (const auto& v : t.cells)
      if (v.is_null()) ids.insert(v.null_id());
  return {ids.begin(), ids.end()};
}

Tuple rename_nulls(const Tuple& t, const std::unordered_map<NullId, NullId>& renaming) {
  Tuple out{t.relation, {}};
  out.cells.reserve(t.cells.size());
  for (const auto& v : t.cells) {
    if (v.is_null()) {
      auto it = renaming.find(v.null_id());
      out.cells.push_back(it == renaming.end() ? v : Value::null(it->second));
    } else {
      out.cells.push_back(v);
    }
  }
  return out;
}

Instance rename_nulls(const Instance& instance,
                      const std::unordered_map<NullId, NullId>& renaming) {
  Instance out(instance.schema_ptr());
  for (const auto& t : instance) out.insert(rename_nulls(t, renaming));
  return out;
}

}  // namespace schemamap
