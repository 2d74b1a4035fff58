#include "schemamap/objective.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "schemamap/errors.hpp"

namespace schemamap {

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string format_rational_with_decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", to_double(r));
  return format_rational(r) + " (≈ " + buf + ")";
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw ParseError("malformed rational '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string_view::npos)
      throw ParseError("malformed rational '" + std::string(text) + "'");
    try {
      return std::stoll(std::string(s));
    } catch (const std::exception&) {
      throw ParseError("rational out of range '" + std::string(text) + "'");
    }
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw ParseError("rational denominator must be positive: '" + std::string(text) + "'");
  return Rational(num, den);
}

void Weights::validate() const {
  if (unexplained <= 0 || errors <= 0 || size <= 0)
    throw DomainError("weights must be positive integers");
}

Weights parse_weights(std::string_view text) {
  std::vector<std::int64_t> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string_view::npos)
      throw ParseError("weights must be three positive integers 'w1,w2,w3', got '" +
                       std::string(text) + "'");
    parts.push_back(std::stoll(std::string(piece)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3 || parts[0] <= 0 || parts[1] <= 0 || parts[2] <= 0)
    throw ParseError("weights must be three positive integers 'w1,w2,w3', got '" +
                     std::string(text) + "'");
  return Weights{parts[0], parts[1], parts[2]};
}

namespace {

// Tuples of `produced` containing each null.
std::map<NullId, std::vector<const Tuple*>> null_occurrences(const Instance& produced) {
  std::map<NullId, std::vector<const Tuple*>> out;
  for (const auto& t : produced) {
    std::set<NullId> seen;
    for (const auto& v : t.cells)
      if (v.is_null() && seen.insert(v.null_id()).second) out[v.null_id()].push_back(&t);
  }
  return out;
}

// Covered-position count of the best producing tuple; 0 when nothing maps.
std::size_t best_covered_positions(const Instance& produced, const Instance& target,
                                   const Tuple& q,
                                   const std::map<NullId, std::vector<const Tuple*>>& occurs) {
  std::size_t best = 0;
  for (const Tuple& t : produced.relation_tuples(q.relation)) {
    auto h = tuple_homomorphism(t, q, NullAssignment{});
    if (!h) continue;
    std::map<NullId, bool> corroborated;
    std::size_t covered = 0;
    for (const auto& v : t.cells) {
      if (v.is_constant()) {
        ++covered;
        continue;
      }
      auto [it, fresh] = corroborated.try_emplace(v.null_id(), false);
      if (fresh) {
        auto occ = occurs.find(v.null_id());
        if (occ != occurs.end()) {
          for (const Tuple* other : occ->second) {
            if (*other == t) continue;
            if (maps_into(*other, target, *h)) {
              it->second = true;
              break;
            }
          }
        }
      }
      if (it->second) ++covered;
    }
    best = std::max(best, covered);
    if (best == q.arity()) break;
  }
  return best;
}

void require_ground(const Tuple& q) {
  if (!q.is_ground())
    throw DomainError("covers is defined for ground target tuples only");
}

}  // namespace

Rational covers_degree(const Instance& produced, const Instance& target, const Tuple& q) {
  require_ground(q);
  if (q.arity() == 0) return Rational(0);
  auto occurs = null_occurrences(produced);
  std::size_t covered = best_covered_positions(produced, target, q, occurs);
  return Rational(static_cast<std::int64_t>(covered), static_cast<std::int64_t>(q.arity()));
}

int creates_error(const Tuple& t, const Instance& target) {
  return maps_into(t, target, NullAssignment{}) ? 0 : 1;
}

EvalContext::EvalContext(CandidateSet candidates, Instance source, Instance target,
                         NullId first_null)
    : candidates_(std::move(candidates)),
      source_(std::move(source)),
      target_(std::move(target)),
      first_null_(first_null),
      all_(target_.schema_ptr()) {
  if (!target_.is_ground()) throw DomainError("the target instance J must be ground");
  for (const auto& c : candidates_.candidates())
    validate_tgd(c, source_.schema(), target_.schema());

  NullAllocator nulls(first_null);
  per_candidate_.reserve(candidates_.size());
  for (const auto& c : candidates_.candidates()) {
    per_candidate_.push_back(chase_tgd(c, source_, target_.schema_ptr(), nulls));
    all_.merge(per_candidate_.back());
  }

  target_tuples_.assign(target_.begin(), target_.end());
  for (std::size_t i = 0; i < target_tuples_.size(); ++i) target_index_.emplace(target_tuples_[i], i);

  for (const auto& q : target_tuples_) {
    std::int64_t a = static_cast<std::int64_t>(q.arity());
    common_denominator_ = std::lcm(common_denominator_, a);
    if (common_denominator_ > (std::int64_t{1} << 40))
      throw DomainError("too many distinct target arities for exact evaluation");
  }

  scaled_covers_.assign(candidates_.size(), std::vector<std::int64_t>(target_tuples_.size(), 0));
  std::map<Tuple, std::size_t> error_table;
  error_ids_.resize(candidates_.size());
  for (std::size_t c = 0; c < candidates_.size(); ++c) {
    const Instance& produced = per_candidate_[c].instance;
    auto occurs = null_occurrences(produced);
    for (std::size_t qi = 0; qi < target_tuples_.size(); ++qi) {
      const Tuple& q = target_tuples_[qi];
      auto covered = static_cast<std::int64_t>(best_covered_positions(produced, target_, q, occurs));
      scaled_covers_[c][qi] = covered * (common_denominator_ / static_cast<std::int64_t>(q.arity()));
    }
    for (const auto& t : produced) {
      if (creates_error(t, target_) == 0) continue;
      auto [it, inserted] = error_table.try_emplace(t, error_table.size());
      error_ids_[c].push_back(it->second);
    }
  }
  error_table_size_ = error_table.size();
}

std::optional<std::size_t> EvalContext::target_index(const Tuple& q) const {
  auto it = target_index_.find(q);
  if (it == target_index_.end()) return std::nullopt;
  return it->second;
}

Rational EvalContext::covers_at(std::size_t candidate, std::size_t q_index) const {
  return Rational(scaled_covers_.at(candidate).at(q_index), common_denominator_);
}

ObjectiveBreakdown EvalContext::evaluate(const Selection& selection, const Weights& weights) const {
  weights.validate();
  selection.check_within(candidates_);
  const auto& members = selection.members();

  // Unexplained mass, scaled by the common denominator.
  std::int64_t explained_scaled = 0;
  for (std::size_t qi = 0; qi < target_tuples_.size(); ++qi) {
    std::int64_t best = 0;
    for (auto m : members) best = std::max(best, scaled_covers_[m][qi]);
    explained_scaled += best;
  }
  std::int64_t total_scaled = static_cast<std::int64_t>(target_tuples_.size()) * common_denominator_;

  std::vector<char> seen(error_table_size_, 0);
  std::int64_t error_count = 0;
  for (auto m : members)
    for (auto id : error_ids_[m])
      if (!seen[id]) {
        seen[id] = 1;
        ++error_count;
      }

  ObjectiveBreakdown out;
  out.weights = weights;
  out.unexplained = Rational(total_scaled - explained_scaled, common_denominator_);
  out.errors = Rational(error_count);
  out.size = selection_size(selection, candidates_);
  out.total = out.unexplained * weights.unexplained + out.errors * weights.errors +
              Rational(out.size * weights.size);
  return out;
}

int creates(const EvalContext& ctx, std::size_t candidate, const Tuple& t) {
  if (candidate >= ctx.candidates().size())
    throw DomainError("candidate index out of range");
  if (!ctx.chase_of(candidate).instance.contains(t))
    throw DomainError("tuple was not produced by candidate '" + ctx.candidates()[candidate].id + "'");
  return creates_error(t, ctx.target());
}

Rational covers(const EvalContext& ctx, std::size_t candidate, const Tuple& q) {
  require_ground(q);
  if (candidate >= ctx.candidates().size())
    throw DomainError("candidate index out of range");
  if (auto qi = ctx.target_index(q)) return ctx.covers_at(candidate, *qi);
  return covers_degree(ctx.chase_of(candidate).instance, ctx.target(), q);
}

Rational explains(const Selection& selection, const EvalContext& ctx, const Tuple& q) {
  selection.check_within(ctx.candidates());
  Rational best(0);
  for (auto m : selection.members()) best = std::max(best, covers(ctx, m, q));
  return best;
}

Rational error_sum(const Selection& selection, const EvalContext& ctx) {
  selection.check_within(ctx.candidates());
  std::set<std::size_t> ids;
  for (auto m : selection.members()) ids.insert(ctx.error_ids(m).begin(), ctx.error_ids(m).end());
  return Rational(static_cast<std::int64_t>(ids.size()));
}

ObjectiveBreakdown objective(const Selection& selection, const EvalContext& ctx,
                             const Weights& weights) {
  return ctx.evaluate(selection, weights);
}

PrunedContext prune_certain(const EvalContext& ctx, const Weights& weights) {
  weights.validate();
  const Instance& produced = ctx.chase_all().instance;
  Instance reduced(ctx.target().schema_ptr());
  std::vector<Tuple> removed;
  for (const auto& q : ctx.target()) {
    bool reachable = false;
    for (const Tuple& t : produced.relation_tuples(q.relation)) {
      if (tuple_homomorphism(t, q, NullAssignment{})) {
        reachable = true;
        break;
      }
    }
    if (reachable) {
      reduced.insert(q);
    } else {
      removed.push_back(q);
    }
  }
  Rational offset(static_cast<std::int64_t>(removed.size()) * weights.unexplained);
  return PrunedContext{EvalContext(ctx.candidates(), ctx.source(), std::move(reduced), ctx.first_null()),
                       offset,
                       std::move(removed)};
}

}  // namespace schemamap
