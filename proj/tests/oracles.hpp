#pragma once

// Brute-force reference implementations used as test oracles. Each is
// written directly from the definitions, with no search heuristics and no
// code shared with the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "schemamap/objective.hpp"
#include "schemamap/relational.hpp"

namespace oracle {

using namespace schemamap;

inline std::vector<NullId> nulls_in(const std::vector<Tuple>& tuples) {
  std::set<NullId> ids;
  for (const auto& t : tuples)
    for (const auto& v : t.cells)
      if (v.is_null()) ids.insert(v.null_id());
  return {ids.begin(), ids.end()};
}

inline std::vector<Value> active_domain(const Instance& inst) {
  std::set<Value> dom;
  for (const auto& t : inst)
    for (const auto& v : t.cells) dom.insert(v);
  return {dom.begin(), dom.end()};
}

inline Tuple apply(const Tuple& t, const std::map<NullId, Value>& h) {
  Tuple out{t.relation, {}};
  for (const auto& v : t.cells) {
    if (v.is_null()) {
      auto it = h.find(v.null_id());
      out.cells.push_back(it == h.end() ? v : it->second);
    } else {
      out.cells.push_back(v);
    }
  }
  return out;
}

/// Calls f on every total map from `nulls` into `dom`; stops when f returns true.
template <typename F>
bool any_assignment(const std::vector<NullId>& nulls, const std::vector<Value>& dom, F&& f) {
  std::map<NullId, Value> h;
  std::vector<std::size_t> digit(nulls.size(), 0);
  if (!nulls.empty() && dom.empty()) return false;
  while (true) {
    h.clear();
    for (std::size_t i = 0; i < nulls.size(); ++i) h.emplace(nulls[i], dom[digit[i]]);
    if (f(h)) return true;
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == dom.size()) digit[i++] = 0;
    if (i == digit.size()) return false;
  }
}

/// Is there a homomorphism sending every tuple of `tuples` into `target`?
inline bool homomorphism_exists(const std::vector<Tuple>& tuples, const Instance& target) {
  return any_assignment(nulls_in(tuples), active_domain(target), [&](const auto& h) {
    return std::all_of(tuples.begin(), tuples.end(),
                       [&](const Tuple& t) { return target.contains(oracle::apply(t, h)); });
  });
}

/// Number of distinct homomorphisms (restricted to the tuples' nulls).
inline std::size_t homomorphism_count(const std::vector<Tuple>& tuples, const Instance& target) {
  std::size_t n = 0;
  any_assignment(nulls_in(tuples), active_domain(target), [&](const auto& h) {
    if (std::all_of(tuples.begin(), tuples.end(),
                    [&](const Tuple& t) { return target.contains(oracle::apply(t, h)); }))
      ++n;
    return false;
  });
  return n;
}

inline bool hom_equivalent(const Instance& a, const Instance& b) {
  std::vector<Tuple> ta(a.begin(), a.end());
  std::vector<Tuple> tb(b.begin(), b.end());
  return homomorphism_exists(ta, b) && homomorphism_exists(tb, a);
}

/// Naive chase: every combination of source facts for the body atoms, in
/// lexicographic order; fresh nulls per existential per combination.
inline Instance naive_chase(const StTgd& tgd, const Instance& source, SchemaPtr target,
                            NullId& next_null) {
  Instance out(std::move(target));
  std::vector<std::vector<Tuple>> per_atom;
  for (const auto& atom : tgd.body) {
    auto range = source.relation_tuples(atom.relation);
    per_atom.emplace_back(range.begin(), range.end());
  }
  std::set<std::map<std::string, Value>> seen;
  std::vector<std::size_t> idx(per_atom.size(), 0);
  for (const auto& v : per_atom)
    if (v.empty()) return out;
  while (true) {
    std::map<std::string, Value> env;
    bool ok = true;
    for (std::size_t a = 0; a < per_atom.size() && ok; ++a) {
      const Tuple& fact = per_atom[a][idx[a]];
      const auto& terms = tgd.body[a].terms;
      for (std::size_t p = 0; p < terms.size() && ok; ++p) {
        if (!terms[p].is_variable()) {
          ok = fact.cells[p] == Value::constant(terms[p].name);
          continue;
        }
        auto [it, fresh] = env.emplace(terms[p].name, fact.cells[p]);
        if (!fresh && it->second != fact.cells[p]) ok = false;
      }
    }
    if (ok && seen.insert(env).second) {
      std::map<std::string, Value> full = env;
      for (const auto& atom : tgd.head)
        for (const auto& term : atom.terms)
          if (term.is_variable() && !full.count(term.name))
            full.emplace(term.name, Value::null(next_null++));
      for (const auto& atom : tgd.head) {
        Tuple t{atom.relation, {}};
        for (const auto& term : atom.terms)
          t.cells.push_back(term.is_variable() ? full.at(term.name) : Value::constant(term.name));
        out.insert(std::move(t));
      }
    }
    std::size_t a = 0;
    while (a < idx.size() && ++idx[a] == per_atom[a].size()) idx[a++] = 0;
    if (a == idx.size()) break;
  }
  return out;
}

/// covers straight from the definition: over producing tuples t and
/// position maps h with h(t) = q, the fraction of positions holding a
/// constant or a null that some other produced tuple also holds and that
/// tuple maps into J under some extension of h.
inline Rational covers(const Instance& produced, const Instance& target, const Tuple& q) {
  std::int64_t best = 0;
  auto dom = active_domain(target);
  for (const auto& t : produced) {
    if (t.relation != q.relation) continue;
    std::map<NullId, Value> h;
    bool ok = true;
    for (std::size_t p = 0; p < t.arity() && ok; ++p) {
      if (t.cells[p].is_constant()) {
        ok = t.cells[p] == q.cells[p];
      } else {
        auto [it, fresh] = h.emplace(t.cells[p].null_id(), q.cells[p]);
        if (!fresh && it->second != q.cells[p]) ok = false;
      }
    }
    if (!ok) continue;
    std::int64_t covered = 0;
    for (const auto& v : t.cells) {
      if (v.is_constant()) {
        ++covered;
        continue;
      }
      bool corroborated = false;
      for (const auto& other : produced) {
        if (other == t) continue;
        if (std::find(other.cells.begin(), other.cells.end(), v) == other.cells.end()) continue;
        std::vector<NullId> free;
        for (const auto& w : other.cells)
          if (w.is_null() && !h.count(w.null_id())) free.push_back(w.null_id());
        std::sort(free.begin(), free.end());
        free.erase(std::unique(free.begin(), free.end()), free.end());
        corroborated = any_assignment(free, dom, [&](const auto& ext) {
          std::map<NullId, Value> all = h;
          all.insert(ext.begin(), ext.end());
          return target.contains(oracle::apply(other, all));
        });
        if (corroborated) break;
      }
      if (corroborated) ++covered;
    }
    best = std::max(best, covered);
  }
  return q.arity() == 0 ? Rational(0) : Rational(best, static_cast<std::int64_t>(q.arity()));
}

/// The objective from the definitions, given each candidate's chase.
inline ObjectiveBreakdown objective(const std::vector<Instance>& chases,
                                    const std::vector<std::int64_t>& sizes,
                                    const std::vector<std::size_t>& selected,
                                    const Instance& target, const Weights& w) {
  ObjectiveBreakdown b;
  b.weights = w;
  for (const auto& q : target) {
    Rational best(0);
    for (auto c : selected) best = std::max(best, covers(chases[c], target, q));
    b.unexplained += Rational(1) - best;
  }
  std::set<Tuple> errors;
  for (auto c : selected)
    for (const auto& t : chases[c])
      if (!homomorphism_exists({t}, target)) errors.insert(t);
  b.errors = Rational(static_cast<std::int64_t>(errors.size()));
  for (auto c : selected) b.size += sizes[c];
  b.total = b.unexplained * w.unexplained + b.errors * w.errors + Rational(b.size * w.size);
  return b;
}

}  // namespace oracle
