#pragma once

// Small random schemas, tgds and data examples for property tests.

#include <string>
#include <vector>

#include "schemamap/instance_io.hpp"
#include "schemamap/objective.hpp"
#include "schemamap/rng.hpp"

namespace randgen {

using namespace schemamap;

struct Toy {
  SchemaPtr source;
  SchemaPtr target;
};

inline Toy toy_schemas() {
  SchemaPair p = parse_schema_file("[source]\nr(a, b)\ns(a, b, c)\n[target]\nt(a, b)\nu(a, b, c)\n");
  return {p.source, p.target};
}

inline StTgd random_tgd(Rng& rng, std::size_t index) {
  const std::vector<std::string> body_vars = {"X", "Y", "Z", "W"};
  auto term = [&](const std::vector<std::string>& pool) {
    if (rng.below(6) == 0) return Term::constant(rng.below(2) ? "a" : "b");
    return Term::variable(pool[rng.below(pool.size())]);
  };
  auto atom = [&](const std::vector<std::string>& pool, bool source) {
    bool binary = rng.below(2) == 0;
    Atom a{source ? (binary ? "r" : "s") : (binary ? "t" : "u"), {}};
    for (std::size_t i = 0; i < (binary ? 2u : 3u); ++i) a.terms.push_back(term(pool));
    return a;
  };
  StTgd tgd;
  tgd.id = "g" + std::to_string(index);
  for (std::size_t i = 0, k = 1 + rng.below(2); i < k; ++i) tgd.body.push_back(atom(body_vars, true));
  auto bv = tgd.body_variables();
  std::vector<std::string> head_pool(bv.begin(), bv.end());
  head_pool.push_back("E1");
  head_pool.push_back("E2");
  for (std::size_t i = 0, k = 1 + rng.below(2); i < k; ++i) tgd.head.push_back(atom(head_pool, false));
  return tgd;
}

inline Instance random_source(Rng& rng, const SchemaPtr& schema, std::size_t max_tuples = 5) {
  Instance inst(schema);
  const std::vector<std::string> consts = {"a", "b", "c"};
  for (std::size_t i = 0, k = 1 + rng.below(max_tuples); i < k; ++i) {
    bool binary = rng.below(2) == 0;
    Tuple t{binary ? "r" : "s", {}};
    for (std::size_t p = 0; p < (binary ? 2u : 3u); ++p)
      t.cells.push_back(Value::constant(consts[rng.below(consts.size())]));
    inst.insert(t);
  }
  return inst;
}

/// Candidates, a source, and a ground J mixing grounded chase tuples (some
/// nulls grounded consistently, some not) with unrelated tuples.
struct Problem {
  CandidateSet candidates;
  Instance source;
  Instance target;
};

inline Problem random_problem(Rng& rng, std::size_t candidates, const Toy& s) {
  Problem p{{}, random_source(rng, s.source), Instance(s.target)};
  for (std::size_t i = 0; i < candidates; ++i) p.candidates.add(random_tgd(rng, i));
  NullAllocator nulls;
  for (const auto& tgd : p.candidates.candidates()) {
    if (rng.below(3) == 0) continue;
    ChaseResult r = chase_tgd(tgd, p.source, s.target, nulls);
    for (const auto& t : r.instance) {
      if (rng.below(3) == 0) continue;
      Tuple g{t.relation, {}};
      for (const auto& v : t.cells)
        g.cells.push_back(v.is_null() ? Value::constant(rng.below(4) ? "n" + std::to_string(v.null_id())
                                                                     : "a")
                                      : v);
      p.target.insert(g);
    }
  }
  const std::vector<std::string> consts = {"a", "b", "c", "q"};
  for (std::size_t i = 0, k = rng.below(3); i < k; ++i)
    p.target.insert({"t", {Value::constant(consts[rng.below(4)]), Value::constant(consts[rng.below(4)])}});
  if (rng.below(2) == 0 && rng.below(2) == 0) {
    SizeOverrides o;
    o[p.candidates[0].id] = 1 + static_cast<std::int64_t>(rng.below(5));
    p.candidates.set_overrides(o);
  }
  return p;
}

}  // namespace randgen
