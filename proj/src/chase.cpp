#include "schemamap/chase.hpp"

#include <algorithm>

#include "schemamap/errors.hpp"
#include "schemamap/instance_io.hpp"

namespace schemamap {

void ChaseResult::merge(const ChaseResult& other) {
  for (const auto& t : other.instance) instance.insert(t);
  for (const auto& [t, refs] : other.provenance) provenance[t].insert(refs.begin(), refs.end());
  for (const auto& [id, origin] : other.null_registry) null_registry.emplace(id, origin);
}

namespace {

// Body atoms as tuples whose variables are pattern nulls 1..k.
struct BodyPattern {
  std::vector<Tuple> tuples;
  std::vector<std::string> variables;  // index i <-> pattern null i + 1
};

BodyPattern make_body_pattern(const StTgd& tgd) {
  BodyPattern p;
  std::set<std::string> vars = tgd.body_variables();
  p.variables.assign(vars.begin(), vars.end());
  auto id_of = [&](const std::string& name) {
    auto it = std::lower_bound(p.variables.begin(), p.variables.end(), name);
    return static_cast<NullId>(it - p.variables.begin()) + 1;
  };
  for (const auto& atom : tgd.body) {
    Tuple t{atom.relation, {}};
    for (const auto& term : atom.terms)
      t.cells.push_back(term.is_variable() ? Value::null(id_of(term.name))
                                           : Value::constant(term.name));
    p.tuples.push_back(std::move(t));
  }
  return p;
}

void check_body_schema(const StTgd& tgd, const Schema& source) {
  for (const auto& atom : tgd.body) {
    const RelationSig* sig = source.find(atom.relation);
    if (sig == nullptr)
      throw DomainError("tgd '" + tgd.id + "': body relation '" + atom.relation +
                        "' is not in the source schema");
    if (sig->arity() != atom.terms.size())
      throw DomainError("tgd '" + tgd.id + "': arity mismatch for '" + atom.relation + "'");
  }
}

}  // namespace

std::vector<std::map<std::string, Value>> body_matches(const StTgd& tgd, const Instance& source) {
  check_body_schema(tgd, source.schema());
  BodyPattern pattern = make_body_pattern(tgd);

  std::vector<std::pair<std::vector<Tuple>, NullAssignment>> found;
  for_each_extension(pattern.tuples, source, NullAssignment{},
                     [&](const NullAssignment& h, std::span<const Tuple* const> images) {
                       std::vector<Tuple> facts;
                       facts.reserve(images.size());
                       for (const Tuple* q : images) facts.push_back(*q);
                       found.emplace_back(std::move(facts), h);
                       return true;
                     });
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::map<std::string, Value>> out;
  out.reserve(found.size());
  for (const auto& [facts, h] : found) {
    std::map<std::string, Value> binding;
    for (std::size_t i = 0; i < pattern.variables.size(); ++i)
      binding.emplace(pattern.variables[i], *h.find(static_cast<NullId>(i) + 1));
    out.push_back(std::move(binding));
  }
  return out;
}

ChaseResult chase_tgd(const StTgd& tgd, const Instance& source, SchemaPtr target,
                      NullAllocator& nulls) {
  ChaseResult result(target);
  for (const auto& atom : tgd.head) {
    const RelationSig* sig = result.instance.schema().find(atom.relation);
    if (sig == nullptr || sig->arity() != atom.terms.size())
      throw DomainError("tgd '" + tgd.id + "': head atom '" + atom.relation +
                        "' does not fit the target schema");
  }

  auto matches = body_matches(tgd, source);
  std::set<std::string> ex_set = tgd.existential_variables();
  std::vector<std::string> existentials(ex_set.begin(), ex_set.end());

  NullId next = existentials.empty() ? 0 : nulls.reserve(matches.size() * existentials.size());
  for (std::size_t m = 0; m < matches.size(); ++m) {
    std::map<std::string, Value> binding = matches[m];
    for (const auto& var : existentials) {
      NullId id = next++;
      binding.emplace(var, Value::null(id));
      result.null_registry.emplace(id, NullOrigin{tgd.id, var, m});
    }
    for (const auto& atom : tgd.head) {
      Tuple t{atom.relation, {}};
      t.cells.reserve(atom.terms.size());
      for (const auto& term : atom.terms)
        t.cells.push_back(term.is_variable() ? binding.at(term.name)
                                             : Value::constant(term.name));
      result.provenance[t].insert(TriggerRef{tgd.id, m});
      result.instance.insert(std::move(t));
    }
  }
  return result;
}

ChaseResult chase_mapping(std::span<const StTgd> tgds, const Instance& source, SchemaPtr target,
                          NullAllocator& nulls) {
  ChaseResult result(target);
  for (const auto& tgd : tgds) result.merge(chase_tgd(tgd, source, target, nulls));
  return result;
}

bool satisfies(const Instance& solution, const StTgd& tgd, const Instance& source) {
  auto matches = body_matches(tgd, source);
  std::set<std::string> ex_set = tgd.existential_variables();

  // Pattern ids for existentials sit above every null already in play.
  NullId base = 1;
  for (const auto& t : source)
    for (const auto& v : t.cells)
      if (v.is_null()) base = std::max(base, v.null_id() + 1);
  for (const auto& t : solution)
    for (const auto& v : t.cells)
      if (v.is_null()) base = std::max(base, v.null_id() + 1);

  for (const auto& match : matches) {
    std::map<std::string, Value> binding = match;
    NullId next = base;
    for (const auto& var : ex_set) binding.emplace(var, Value::null(next++));
    std::vector<Tuple> head;
    for (const auto& atom : tgd.head) {
      Tuple t{atom.relation, {}};
      for (const auto& term : atom.terms)
        t.cells.push_back(term.is_variable() ? binding.at(term.name)
                                             : Value::constant(term.name));
      head.push_back(std::move(t));
    }
    // Only the existential pattern nulls may be rebound; pin the rest.
    NullAssignment pinned;
    for (const auto& id : nulls_of(head))
      if (id < base) pinned.bind(id, Value::null(id));
    if (!extend_into_instance(head, solution, pinned)) return false;
  }
  return true;
}

std::string format_provenance(const ChaseResult& result) {
  std::string out;
  for (const auto& [t, refs] : result.provenance)
    for (const auto& ref : refs)
      out += "tuple " + format_tuple(t) + " <- " + ref.tgd_id + " " +
             std::to_string(ref.match_index) + "\n";
  return out;
}

}  // namespace schemamap
