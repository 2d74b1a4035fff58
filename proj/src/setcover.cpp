#include "schemamap/setcover.hpp"

#include <set>
#include <sstream>

#include "schemamap/errors.hpp"

namespace schemamap {

void SetCoverInstance::validate() const {
  if (universe.empty()) throw DomainError("set cover: empty universe");
  if (bound == 0) throw DomainError("set cover: n must be positive");
  if (bound > family.size())
    throw DomainError("set cover: n = " + std::to_string(bound) + " exceeds |R| = " +
                      std::to_string(family.size()));
  std::set<std::string> u(universe.begin(), universe.end());
  if (u.size() != universe.size()) throw DomainError("set cover: repeated universe element");
  for (const auto& r : family)
    for (const auto& e : r)
      if (!u.count(e)) throw DomainError("set cover: element '" + e + "' is not in the universe");
}

SetCoverInstance parse_setcover(std::string_view text, const std::string& source_name) {
  SetCoverInstance sc;
  bool have_universe = false;
  bool have_bound = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pct = line.find('%'); pct != std::string::npos) line.erase(pct);
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    std::vector<std::string> rest;
    for (std::string w; words >> w;) rest.push_back(w);
    if (key == "universe:") {
      if (have_universe) throw ParseError("universe given twice", lineno, source_name);
      sc.universe = rest;
      have_universe = true;
    } else if (key == "set:") {
      sc.family.push_back(rest);
    } else if (key == "n:") {
      if (rest.size() != 1 || rest[0].find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("'n:' expects one non-negative integer", lineno, source_name);
      sc.bound = std::stoull(rest[0]);
      have_bound = true;
    } else {
      throw ParseError("unknown key '" + key + "' (universe:, set:, n:)", lineno, source_name);
    }
  }
  if (!have_universe) throw ParseError("missing 'universe:' line", 0, source_name);
  if (!have_bound) throw ParseError("missing 'n:' line", 0, source_name);
  return sc;
}

std::string universe_constant(const std::string& element) { return "u_" + element; }
std::string domain_constant(std::int64_t k) { return "d_" + std::to_string(k); }

namespace {

ReducedInstance build(const SetCoverInstance& sc, std::int64_t m, const Weights& weights) {
  auto source = std::make_shared<Schema>();
  auto target = std::make_shared<Schema>();
  for (std::size_t i = 0; i < sc.family.size(); ++i)
    source->add(RelationSig{"r" + std::to_string(i + 1), {"x", "y"}});
  target->add(RelationSig{"u", {"x", "y"}});

  ReducedInstance out{source, target, Instance(source), Instance(target), {}, m, {}, weights};
  for (std::int64_t k = 1; k <= m + 1; ++k) out.domain.push_back(k);

  for (const auto& e : sc.universe)
    for (auto k : out.domain)
      out.target.insert(Tuple{"u", {Value::constant(universe_constant(e)),
                                    Value::constant(domain_constant(k))}});
  for (std::size_t i = 0; i < sc.family.size(); ++i) {
    std::string rel = "r" + std::to_string(i + 1);
    for (const auto& e : sc.family[i])
      for (auto k : out.domain)
        out.source.insert(Tuple{rel, {Value::constant(universe_constant(e)),
                                      Value::constant(domain_constant(k))}});
    StTgd tgd;
    tgd.id = "theta" + std::to_string(i + 1);
    tgd.body.push_back(Atom{rel, {Term::variable("X"), Term::variable("Y")}});
    tgd.head.push_back(Atom{"u", {Term::variable("X"), Term::variable("Y")}});
    out.candidates.add(std::move(tgd));
  }
  return out;
}

std::size_t covered_count(const std::vector<std::size_t>& chosen, const SetCoverInstance& sc) {
  std::set<std::string> covered;
  for (auto i : chosen) {
    if (i >= sc.family.size())
      throw DomainError("set index " + std::to_string(i) + " out of range");
    covered.insert(sc.family[i].begin(), sc.family[i].end());
  }
  return covered.size();
}

}  // namespace

ReducedInstance reduce(const SetCoverInstance& sc) {
  sc.validate();
  return build(sc, 2 * static_cast<std::int64_t>(sc.bound), Weights{});
}

ReducedInstance reduce_weighted(const SetCoverInstance& sc, const Weights& weights) {
  sc.validate();
  weights.validate();
  constexpr std::int64_t kCandidateSize = 2;
  return build(sc, kCandidateSize * weights.size * static_cast<std::int64_t>(sc.bound), weights);
}

Rational closed_form_objective(const std::vector<std::size_t>& chosen, const SetCoverInstance& sc) {
  std::int64_t m = 2 * static_cast<std::int64_t>(sc.bound);
  std::set<std::size_t> distinct(chosen.begin(), chosen.end());
  auto uncovered = static_cast<std::int64_t>(sc.universe.size() - covered_count(chosen, sc));
  return Rational((m + 1) * uncovered + 2 * static_cast<std::int64_t>(distinct.size()));
}

Rational closed_form_objective_weighted(const std::vector<std::size_t>& chosen,
                                        const SetCoverInstance& sc, const Weights& weights) {
  std::int64_t m = 2 * weights.size * static_cast<std::int64_t>(sc.bound);
  std::set<std::size_t> distinct(chosen.begin(), chosen.end());
  auto uncovered = static_cast<std::int64_t>(sc.universe.size() - covered_count(chosen, sc));
  return Rational(weights.unexplained * (m + 1) * uncovered +
                  weights.size * 2 * static_cast<std::int64_t>(distinct.size()));
}

bool brute_force_set_cover(const SetCoverInstance& sc) {
  sc.validate();
  const std::size_t k = sc.family.size();
  if (k > 20) throw DomainError("brute-force set cover is capped at 20 sets");
  std::set<std::string> universe(sc.universe.begin(), sc.universe.end());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > sc.bound) continue;
    std::set<std::string> covered;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) covered.insert(sc.family[i].begin(), sc.family[i].end());
    if (covered == universe) return true;
  }
  return false;
}

bool decide_cover_via_selection(const SetCoverInstance& sc, const Weights& weights,
                                std::size_t cap) {
  ReducedInstance reduced = weights == Weights{} ? reduce(sc) : reduce_weighted(sc, weights);
  EvalContext ctx = reduced.context();
  SolverOptions options;
  options.weights = weights;
  options.cap = cap;
  return decide(ctx, Rational(reduced.threshold), options, /*exact=*/true);
}

}  // namespace schemamap
