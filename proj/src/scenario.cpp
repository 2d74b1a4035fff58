#include "schemamap/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <sstream>

#include "schemamap/errors.hpp"
#include "schemamap/instance_io.hpp"

namespace schemamap {

std::string to_string(Primitive p) {
  switch (p) {
    case Primitive::CP: return "CP";
    case Primitive::ADD: return "ADD";
    case Primitive::DL: return "DL";
    case Primitive::ADL: return "ADL";
    case Primitive::ME: return "ME";
    case Primitive::VP: return "VP";
    case Primitive::VNM: return "VNM";
  }
  return "?";
}

Primitive parse_primitive(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto p : kAllPrimitives)
    if (to_string(p) == upper) return p;
  throw DomainError("unknown primitive '" + std::string(name) +
                    "' (CP, ADD, DL, ADL, ME, VP, VNM)");
}

std::map<Primitive, std::size_t> parse_primitive_counts(std::string_view text) {
  std::map<Primitive, std::size_t> out;
  std::string s(text);
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw DomainError("primitive counts look like CP:2,ME:1; got '" + item + "'");
    std::string count = item.substr(colon + 1);
    if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("bad primitive count in '" + item + "'");
    out[parse_primitive(item.substr(0, colon))] += std::stoull(count);
  }
  return out;
}

void ScenarioConfig::validate() const {
  if (pi_corresp > 100 || pi_unexplained > 100 || pi_errors > 100)
    throw DomainError("noise percentages must lie in [0, 100]");
  if (attr_min < 1 || attr_min > attr_max)
    throw DomainError("attribute range must satisfy 1 <= low <= high");
  if (source_arity_min < 1 || source_arity_min > source_arity_max)
    throw DomainError("source arity range must satisfy 1 <= low <= high");
  if (rows == 0) throw DomainError("rows per source relation must be positive");
  if (primitive_total() == 0) throw DomainError("the configuration invokes no primitive");
}

std::size_t ScenarioConfig::primitive_total() const {
  std::size_t n = 0;
  for (const auto& [p, c] : primitive_counts) n += c;
  return n;
}

std::string ScenarioConfig::primitives_spec() const {
  std::string out;
  for (auto p : kAllPrimitives) {
    auto it = primitive_counts.find(p);
    if (it == primitive_counts.end() || it->second == 0) continue;
    if (!out.empty()) out += ",";
    out += to_string(p) + ":" + std::to_string(it->second);
  }
  return out;
}

std::string ScenarioConfig::to_text() const {
  std::ostringstream out;
  out << "seed=" << seed << "\n"
      << "primitives=" << primitives_spec() << "\n"
      << "rows=" << rows << "\n"
      << "attr_range=" << attr_min << "," << attr_max << "\n"
      << "source_arity_range=" << source_arity_min << "," << source_arity_max << "\n"
      << "pi_corresp=" << pi_corresp << "\n"
      << "pi_unexplained=" << pi_unexplained << "\n"
      << "pi_errors=" << pi_errors << "\n";
  return out.str();
}

ScenarioConfig ScenarioConfig::from_text(std::string_view text, const std::string& source_name) {
  ScenarioConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto number = [&](const std::string& v) -> std::uint64_t {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected a non-negative integer, got '" + v + "'", lineno, source_name);
    return std::stoull(v);
  };
  auto range = [&](const std::string& v, std::int64_t& lo, std::int64_t& hi) {
    auto comma = v.find(',');
    if (comma == std::string::npos) throw ParseError("expected 'low,high'", lineno, source_name);
    lo = static_cast<std::int64_t>(number(v.substr(0, comma)));
    hi = static_cast<std::int64_t>(number(v.substr(comma + 1)));
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pct = line.find('%'); pct != std::string::npos) line.erase(pct);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", lineno, source_name);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (!value.empty() && value.back() == '\r') value.pop_back();
    if (key == "seed") {
      cfg.seed = number(value);
    } else if (key == "primitives") {
      try {
        cfg.primitive_counts = parse_primitive_counts(value);
      } catch (const DomainError& e) {
        throw ParseError(e.what(), lineno, source_name);
      }
    } else if (key == "rows") {
      cfg.rows = number(value);
    } else if (key == "attr_range") {
      range(value, cfg.attr_min, cfg.attr_max);
    } else if (key == "source_arity_range") {
      range(value, cfg.source_arity_min, cfg.source_arity_max);
    } else if (key == "pi_corresp") {
      cfg.pi_corresp = static_cast<unsigned>(number(value));
    } else if (key == "pi_unexplained") {
      cfg.pi_unexplained = static_cast<unsigned>(number(value));
    } else if (key == "pi_errors") {
      cfg.pi_errors = static_cast<unsigned>(number(value));
    } else {
      throw ParseError("unknown config key '" + key + "'", lineno, source_name);
    }
  }
  return cfg;
}

ScenarioBuilder::ScenarioBuilder()
    : source_schema(std::make_shared<Schema>()), target_schema(std::make_shared<Schema>()) {}

ScenarioBuilder::ScenarioBuilder(const ScenarioConfig& config) : ScenarioBuilder() {
  attr_min = config.attr_min;
  attr_max = config.attr_max;
  source_arity_min = config.source_arity_min;
  source_arity_max = config.source_arity_max;
}

const PrimitiveInvocation* ScenarioBuilder::owner_of_target(std::string_view relation) const {
  for (const auto& inv : invocations)
    if (std::find(inv.targets.begin(), inv.targets.end(), relation) != inv.targets.end())
      return &inv;
  return nullptr;
}

namespace {

std::vector<std::string> names(const std::string& prefix, std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  for (std::size_t i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<Term> vars(const std::string& prefix, std::size_t from, std::size_t to) {
  std::vector<Term> out;
  for (std::size_t i = from; i <= to; ++i) out.push_back(Term::variable(prefix + std::to_string(i)));
  return out;
}

template <typename T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

void apply_primitive(Primitive kind, ScenarioBuilder& b, Rng& rng,
                     std::optional<std::int64_t> source_arity) {
  const std::string tag = std::to_string(b.invocations.size());
  PrimitiveInvocation inv;
  inv.kind = kind;
  inv.tgd_id = "gt" + tag;
  StTgd tgd;
  tgd.id = inv.tgd_id;

  auto draw_arity = [&] {
    return source_arity ? *source_arity : rng.between(b.source_arity_min, b.source_arity_max);
  };
  auto add_source = [&](const std::string& name, std::vector<std::string> attrs) {
    b.source_schema->add(RelationSig{name, std::move(attrs)});
    inv.sources.push_back(name);
  };
  auto add_target = [&](const std::string& name, std::vector<std::string> attrs) {
    b.target_schema->add(RelationSig{name, std::move(attrs)});
    inv.targets.push_back(name);
  };
  auto corr = [&](const std::string& s, const std::string& sa, const std::string& t,
                  const std::string& ta) { b.correspondences.insert({s, sa, t, ta}); };

  const std::string s = "s" + tag;
  const std::string t = "t" + tag;

  switch (kind) {
    case Primitive::CP:
    case Primitive::ADD: {
      auto n = static_cast<std::size_t>(draw_arity());
      std::size_t k = kind == Primitive::ADD ? static_cast<std::size_t>(rng.between(b.attr_min, b.attr_max)) : 0;
      if (n < 1) throw DomainError(to_string(kind) + " needs a source relation with attributes");
      auto src_attrs = names("a", 1, n);
      add_source(s, src_attrs);
      add_target(t, concat(src_attrs, names("e", 1, k)));
      tgd.body.push_back(Atom{s, vars("X", 1, n)});
      tgd.head.push_back(Atom{t, concat(vars("X", 1, n), vars("E", 1, k))});
      for (const auto& a : src_attrs) corr(s, a, t, a);
      break;
    }
    case Primitive::DL:
    case Primitive::ADL: {
      auto drop = static_cast<std::size_t>(rng.between(b.attr_min, b.attr_max));
      std::size_t add = kind == Primitive::ADL ? static_cast<std::size_t>(rng.between(b.attr_min, b.attr_max)) : 0;
      std::int64_t n_signed = source_arity ? *source_arity
                                           : static_cast<std::int64_t>(drop) + rng.between(1, 2);
      if (n_signed - static_cast<std::int64_t>(drop) < 1)
        throw DomainError(to_string(kind) + " dropping " + std::to_string(drop) +
                          " attributes from a relation of arity " + std::to_string(n_signed) +
                          " leaves no attribute");
      auto n = static_cast<std::size_t>(n_signed);
      auto src_attrs = names("a", 1, n);
      auto dropped = rng.sample(n, drop);
      std::vector<bool> keep(n, true);
      for (auto d : dropped) keep[d] = false;
      std::vector<std::string> kept_attrs;
      std::vector<Term> kept_vars;
      for (std::size_t i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        kept_attrs.push_back(src_attrs[i]);
        kept_vars.push_back(Term::variable("X" + std::to_string(i + 1)));
      }
      add_source(s, src_attrs);
      add_target(t, concat(kept_attrs, names("e", 1, add)));
      tgd.body.push_back(Atom{s, vars("X", 1, n)});
      tgd.head.push_back(Atom{t, concat(kept_vars, vars("E", 1, add))});
      for (const auto& a : kept_attrs) corr(s, a, t, a);
      break;
    }
    case Primitive::ME: {
      auto n1 = static_cast<std::size_t>(draw_arity());
      auto n2 = static_cast<std::size_t>(draw_arity());
      const std::string sa = s + "a";
      const std::string sb = s + "b";
      auto a_attrs = names("a", 1, n1);
      auto b_attrs = names("b", 1, n2);
      add_source(sa, a_attrs);
      add_source(sb, b_attrs);
      add_target(t, concat(a_attrs, names("b", 2, n2)));
      // Joined on the first attribute of each source.
      std::vector<Term> b_terms{Term::variable("X1")};
      auto rest = vars("Y", 2, n2);
      b_terms.insert(b_terms.end(), rest.begin(), rest.end());
      tgd.body.push_back(Atom{sa, vars("X", 1, n1)});
      tgd.body.push_back(Atom{sb, b_terms});
      tgd.head.push_back(Atom{t, concat(vars("X", 1, n1), rest)});
      for (const auto& a : a_attrs) corr(sa, a, t, a);
      corr(sb, b_attrs[0], t, a_attrs[0]);
      for (std::size_t j = 1; j < n2; ++j) corr(sb, b_attrs[j], t, b_attrs[j]);
      break;
    }
    case Primitive::VP:
    case Primitive::VNM: {
      auto n = static_cast<std::size_t>(draw_arity());
      if (n < 2) throw DomainError(to_string(kind) + " needs a source relation of arity >= 2");
      auto split = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(n) - 1));
      auto src_attrs = names("a", 1, n);
      add_source(s, src_attrs);
      const std::string ta = t + "a";
      const std::string tb = t + "b";
      const std::string tm = t + "m";
      std::vector<std::string> left(src_attrs.begin(), src_attrs.begin() + split);
      std::vector<std::string> right(src_attrs.begin() + split, src_attrs.end());
      tgd.body.push_back(Atom{s, vars("X", 1, n)});
      if (kind == Primitive::VP) {
        add_target(ta, concat({"k"}, left));
        add_target(tb, concat({"k"}, right));
        tgd.head.push_back(Atom{ta, concat({Term::variable("K")}, vars("X", 1, split))});
        tgd.head.push_back(Atom{tb, concat({Term::variable("K")}, vars("X", split + 1, n))});
        inv.join_keys = {{ta, 0, "K"}, {tb, 0, "K"}};
      } else {
        add_target(ta, concat({"k1"}, left));
        add_target(tm, {"k1", "k2"});
        add_target(tb, concat({"k2"}, right));
        tgd.head.push_back(Atom{ta, concat({Term::variable("K1")}, vars("X", 1, split))});
        tgd.head.push_back(Atom{tm, {Term::variable("K1"), Term::variable("K2")}});
        tgd.head.push_back(Atom{tb, concat({Term::variable("K2")}, vars("X", split + 1, n))});
        inv.join_keys = {{ta, 0, "K1"}, {tm, 0, "K1"}, {tm, 1, "K2"}, {tb, 0, "K2"}};
      }
      for (const auto& a : left) corr(s, a, ta, a);
      for (const auto& a : right) corr(s, a, tb, a);
      break;
    }
  }
  b.ground_truth.push_back(std::move(tgd));
  b.invocations.push_back(std::move(inv));
}

std::vector<std::string> perturb_correspondences(ScenarioBuilder& b, unsigned pct, Rng& rng) {
  std::vector<std::string> perturbed;
  const auto& targets = b.target_schema->relations();
  std::size_t count = percent_count(pct, targets.size());
  if (count == 0) return perturbed;
  for (auto ti : rng.sample(targets.size(), count)) {
    const RelationSig& target = targets[ti];
    const PrimitiveInvocation* owner = b.owner_of_target(target.name);
    std::vector<const RelationSig*> others;
    for (const auto& inv : b.invocations) {
      if (&inv == owner) continue;
      for (const auto& s : inv.sources) others.push_back(b.source_schema->find(s));
    }
    if (others.empty()) continue;
    const RelationSig* source = others[rng.below(others.size())];
    for (const auto& attr : target.attributes) {
      const auto& sattr = source->attributes[rng.below(source->arity())];
      b.correspondences.insert({source->name, sattr, target.name, attr});
    }
    perturbed.push_back(target.name);
  }
  return perturbed;
}

namespace {

// Body s(X1..Xn); each head position takes its join key, else the variable
// of the first corresponding source attribute, else a fresh existential.
std::optional<StTgd> linked_candidate(const ScenarioBuilder& b, const RelationSig& source,
                                      const std::vector<std::string>& targets,
                                      const std::vector<JoinKey>& keys) {
  bool linked = false;
  StTgd tgd;
  tgd.body.push_back(Atom{source.name, vars("X", 1, source.arity())});
  std::size_t fresh = 0;
  for (const auto& tname : targets) {
    const RelationSig* target = b.target_schema->find(tname);
    Atom atom{tname, {}};
    for (std::size_t p = 0; p < target->arity(); ++p) {
      auto key = std::find_if(keys.begin(), keys.end(), [&](const JoinKey& k) {
        return k.target_relation == tname && k.position == p;
      });
      if (key != keys.end()) {
        atom.terms.push_back(Term::variable("K_" + key->key));
        continue;
      }
      std::optional<std::size_t> from;
      for (const auto& c : b.correspondences) {
        if (c.source_relation != source.name || c.target_relation != tname ||
            c.target_attribute != target->attributes[p])
          continue;
        auto it = std::find(source.attributes.begin(), source.attributes.end(), c.source_attribute);
        from = static_cast<std::size_t>(it - source.attributes.begin());
        break;
      }
      if (from) {
        linked = true;
        atom.terms.push_back(Term::variable("X" + std::to_string(*from + 1)));
      } else {
        atom.terms.push_back(Term::variable("E" + std::to_string(++fresh)));
      }
    }
    tgd.head.push_back(std::move(atom));
  }
  if (!linked) return std::nullopt;
  return tgd;
}

}  // namespace

CandidateSet generate_candidates(const ScenarioBuilder& b) {
  std::vector<std::pair<StTgd, std::string>> gt_shapes;
  for (const auto& gt : b.ground_truth) gt_shapes.emplace_back(normalize_tgd(gt), gt.id);

  CandidateSet out;
  std::vector<StTgd> seen;
  std::size_t counter = 0;
  auto emit = [&](StTgd tgd) {
    StTgd shape = normalize_tgd(tgd);
    auto same = [&](const StTgd& o) { return o.body == shape.body && o.head == shape.head; };
    if (std::any_of(seen.begin(), seen.end(), same)) return;
    auto gt = std::find_if(gt_shapes.begin(), gt_shapes.end(),
                           [&](const auto& g) { return same(g.first); });
    tgd.id = gt != gt_shapes.end() ? gt->second : "c" + std::to_string(++counter);
    seen.push_back(std::move(shape));
    out.add(std::move(tgd));
  };

  for (const auto& target : b.target_schema->relations())
    for (const auto& source : b.source_schema->relations())
      if (auto tgd = linked_candidate(b, source, {target.name}, {})) emit(std::move(*tgd));

  for (std::size_t i = 0; i < b.invocations.size(); ++i) {
    const auto& inv = b.invocations[i];
    if (inv.kind == Primitive::VP || inv.kind == Primitive::VNM) {
      for (const auto& source : b.source_schema->relations())
        if (auto tgd = linked_candidate(b, source, inv.targets, inv.join_keys)) emit(std::move(*tgd));
    } else if (inv.kind == Primitive::ME) {
      emit(b.ground_truth[i]);
    }
  }
  for (const auto& gt : b.ground_truth) emit(gt);
  return out;
}

std::size_t percent_count(unsigned pct, std::size_t n) {
  return static_cast<std::size_t>((static_cast<std::uint64_t>(pct) * n) / 100);
}

Tuple ground_tuple(const Tuple& tuple, const std::string& prefix) {
  Tuple out{tuple.relation, {}};
  for (const auto& v : tuple.cells)
    out.cells.push_back(v.is_null() ? Value::constant(prefix + std::to_string(v.null_id())) : v);
  return out;
}

Instance ground_instance(const Instance& instance, const std::string& prefix) {
  Instance out(instance.schema_ptr());
  for (const auto& t : instance) out.insert(ground_tuple(t, prefix));
  return out;
}

TuplePools classify_tuples(const Instance& k_ground_truth, const Instance& k_errmap,
                           const Instance& target) {
  Instance all(k_ground_truth.schema_ptr());
  for (const auto& t : k_ground_truth) all.insert(t);
  for (const auto& t : k_errmap) all.insert(t);

  auto generated_by = [](const Instance& side, const Tuple& witness) {
    for (const Tuple& t : side.relation_tuples(witness.relation))
      if (tuple_homomorphism(t, witness, NullAssignment{})) return true;
    return false;
  };

  TuplePools pools;
  std::set<Tuple> error_pool;
  std::set<Tuple> unexplained_pool;
  for (const auto& t : all) {
    auto image = maps_into(t, target, NullAssignment{});
    Tuple witness = image ? image->first : ground_tuple(t, "u");
    bool by_gt = generated_by(k_ground_truth, witness);
    bool by_err = generated_by(k_errmap, witness);
    if (by_gt && by_err) {
      pools.both.push_back(t);
    } else if (by_gt) {
      pools.only_ground_truth.push_back(t);
      if (image) error_pool.insert(witness);
    } else {
      pools.only_errmap.push_back(t);
      if (!image) unexplained_pool.insert(witness);
    }
  }
  pools.error_pool.assign(error_pool.begin(), error_pool.end());
  pools.unexplained_pool.assign(unexplained_pool.begin(), unexplained_pool.end());
  return pools;
}

std::pair<Instance, NoiseLedger> perturb_instance(const Instance& target, const TuplePools& pools,
                                                  unsigned pi_unexplained, unsigned pi_errors,
                                                  Rng& rng) {
  if (pi_unexplained > 100 || pi_errors > 100)
    throw DomainError("noise percentages must lie in [0, 100]");
  Instance out = target;
  NoiseLedger ledger;
  std::size_t adds = percent_count(pi_unexplained, pools.unexplained_pool.size());
  for (auto i : rng.sample(pools.unexplained_pool.size(), adds)) {
    if (out.insert(pools.unexplained_pool[i])) ledger.added.push_back(pools.unexplained_pool[i]);
  }
  std::size_t dels = percent_count(pi_errors, pools.error_pool.size());
  for (auto i : rng.sample(pools.error_pool.size(), dels)) {
    if (out.erase(pools.error_pool[i])) ledger.deleted.push_back(pools.error_pool[i]);
  }
  std::sort(ledger.added.begin(), ledger.added.end());
  std::sort(ledger.deleted.begin(), ledger.deleted.end());
  return {std::move(out), std::move(ledger)};
}

Selection Scenario::ground_truth_selection() const {
  std::vector<std::string> ids;
  for (const auto& g : ground_truth) ids.push_back(g.id);
  return Selection::from_ids(candidates, ids);
}

Scenario generate_scenario(const ScenarioConfig& config) {
  config.validate();
  Rng rng(config.seed);
  ScenarioBuilder builder(config);
  for (auto kind : kAllPrimitives) {
    auto it = config.primitive_counts.find(kind);
    if (it == config.primitive_counts.end()) continue;
    for (std::size_t i = 0; i < it->second; ++i) apply_primitive(kind, builder, rng);
  }

  SchemaPtr source_schema = builder.source_schema;
  SchemaPtr target_schema = builder.target_schema;

  Instance source(source_schema);
  const std::size_t pool = std::max<std::size_t>(2, config.rows);
  for (const auto& rel : source_schema->relations()) {
    for (std::size_t r = 0; r < config.rows; ++r) {
      Tuple t{rel.name, {}};
      for (std::size_t a = 0; a < rel.arity(); ++a)
        t.cells.push_back(Value::constant("v" + std::to_string(rng.below(pool))));
      source.insert(std::move(t));
    }
  }

  NullAllocator gt_nulls;
  ChaseResult k_gt = chase_mapping(builder.ground_truth, source, target_schema, gt_nulls);
  Instance clean_target = ground_instance(k_gt.instance, "n");

  auto perturbed = perturb_correspondences(builder, config.pi_corresp, rng);
  CandidateSet candidates = generate_candidates(builder);

  std::set<std::string> gt_ids;
  for (const auto& g : builder.ground_truth) gt_ids.insert(g.id);
  NullAllocator c_nulls;
  Instance k_ground_truth(target_schema);
  Instance k_errmap(target_schema);
  for (const auto& c : candidates.candidates()) {
    ChaseResult r = chase_tgd(c, source, target_schema, c_nulls);
    Instance& side = gt_ids.count(c.id) ? k_ground_truth : k_errmap;
    for (const auto& t : r.instance) side.insert(t);
  }
  TuplePools pools = classify_tuples(k_ground_truth, k_errmap, clean_target);
  auto [target, ledger] =
      perturb_instance(clean_target, pools, config.pi_unexplained, config.pi_errors, rng);

  return Scenario{config,
                  source_schema,
                  target_schema,
                  std::move(source),
                  std::move(target),
                  std::move(clean_target),
                  builder.ground_truth,
                  std::move(candidates),
                  builder.correspondences,
                  std::move(perturbed),
                  std::move(pools),
                  std::move(ledger)};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

void write_scenario(const Scenario& scenario, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ParseError("cannot create directory: " + ec.message(), 0, dir);
  auto path = [&](const char* name) { return (fs::path(dir) / name).string(); };

  write_text_file(path("schema.txt"),
                  serialize_schema_file(*scenario.source_schema, *scenario.target_schema));
  write_text_file(path("source.inst"), serialize_instance(scenario.source));
  write_text_file(path("target.inst"), serialize_instance(scenario.target));

  std::string gt;
  for (const auto& g : scenario.ground_truth) gt += format_tgd(g) + "\n";
  write_text_file(path("groundtruth.tgd"), gt);
  write_text_file(path("candidates.tgd"), serialize_tgd_file(scenario.candidates));

  std::string corresp = "source_rel,source_attr,target_rel,target_attr\n";
  for (const auto& c : scenario.correspondences)
    corresp += csv_field(c.source_relation) + "," + csv_field(c.source_attribute) + "," +
               csv_field(c.target_relation) + "," + csv_field(c.target_attribute) + "\n";
  write_text_file(path("corresp.csv"), corresp);

  std::string ledger = "action,tuple\n";
  for (const auto& t : scenario.ledger.added) ledger += "added," + csv_field(format_tuple(t)) + "\n";
  for (const auto& t : scenario.ledger.deleted)
    ledger += "deleted," + csv_field(format_tuple(t)) + "\n";
  write_text_file(path("ledger.csv"), ledger);

  write_text_file(path("config.txt"), scenario.config.to_text());
}

}  // namespace schemamap
