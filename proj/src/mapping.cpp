#include "schemamap/mapping.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "lexer.hpp"
#include "schemamap/errors.hpp"
#include "schemamap/instance_io.hpp"

namespace schemamap {

using detail::Tok;
using detail::TokenStream;

std::set<std::string> StTgd::body_variables() const {
  std::set<std::string> vars;
  for (const auto& a : body)
    for (const auto& t : a.terms)
      if (t.is_variable()) vars.insert(t.name);
  return vars;
}

std::set<std::string> StTgd::existential_variables() const {
  std::set<std::string> body_vars = body_variables();
  std::set<std::string> out;
  for (const auto& a : head)
    for (const auto& t : a.terms)
      if (t.is_variable() && !body_vars.count(t.name)) out.insert(t.name);
  return out;
}

void validate_tgd(const StTgd& tgd, const Schema& source, const Schema& target) {
  if (tgd.body.empty()) throw DomainError("tgd '" + tgd.id + "' has an empty body");
  if (tgd.head.empty()) throw DomainError("tgd '" + tgd.id + "' has an empty head");
  auto check = [&](const Atom& atom, const Schema& own, const Schema& other, const char* side,
                   const char* other_side) {
    const RelationSig* sig = own.find(atom.relation);
    if (sig == nullptr) {
      if (other.contains(atom.relation))
        throw DomainError(std::string(side) + " atom '" + atom.relation + "' is over the " +
                          other_side + " schema");
      throw DomainError("unknown relation '" + atom.relation + "'");
    }
    if (sig->arity() != atom.terms.size())
      throw DomainError("arity mismatch for '" + atom.relation + "': declared " +
                        std::to_string(sig->arity()) + ", got " +
                        std::to_string(atom.terms.size()));
  };
  for (const auto& a : tgd.body) check(a, source, target, "body", "target");
  for (const auto& a : tgd.head) check(a, target, source, "head", "source");
}

namespace {

Term parse_term(TokenStream& ts) {
  const auto& tok = ts.peek();
  switch (tok.kind) {
    case Tok::Word:
      if (detail::starts_upper(tok.text)) return Term::variable(ts.next().text);
      return Term::constant(ts.next().text);
    case Tok::Quoted:
      return Term::constant(ts.next().text);
    case Tok::Null:
      ts.fail("labeled nulls are not allowed in tgds");
    default:
      ts.fail("expected a variable or constant" + ts.describe_found());
  }
}

Atom parse_atom(TokenStream& ts) {
  Atom atom;
  atom.relation = ts.expect(Tok::Word, "relation name").text;
  ts.expect(Tok::LParen, "'('");
  if (!ts.at(Tok::RParen)) {
    atom.terms.push_back(parse_term(ts));
    while (ts.accept(Tok::Comma)) atom.terms.push_back(parse_term(ts));
  }
  ts.expect(Tok::RParen, "')'");
  return atom;
}

std::vector<Atom> parse_conjunction(TokenStream& ts) {
  std::vector<Atom> atoms;
  atoms.push_back(parse_atom(ts));
  while (ts.accept(Tok::Amp)) atoms.push_back(parse_atom(ts));
  return atoms;
}

std::string format_term(const Term& t) {
  return t.is_variable() ? t.name : format_value(Value::constant(t.name));
}

std::string format_atom(const Atom& a) {
  std::string out = a.relation + "(";
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_term(a.terms[i]);
  }
  return out + ")";
}

std::string format_conjunction(const std::vector<Atom>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out += " & ";
    out += format_atom(atoms[i]);
  }
  return out;
}

void rename_by_first_occurrence(StTgd& tgd) {
  std::unordered_map<std::string, std::string> names;
  auto visit = [&](std::vector<Atom>& atoms) {
    for (auto& a : atoms)
      for (auto& t : a.terms) {
        if (!t.is_variable()) continue;
        auto [it, inserted] = names.try_emplace(t.name, "");
        if (inserted) it->second = "V" + std::to_string(names.size());
        t.name = it->second;
      }
  };
  visit(tgd.body);
  visit(tgd.head);
}

Atom shape_of(const Atom& a) {
  Atom s{a.relation, {}};
  for (const auto& t : a.terms) s.terms.push_back(t.is_variable() ? Term::variable("") : t);
  return s;
}

}  // namespace

StTgd parse_tgd(std::string_view text, const Schema& source, const Schema& target,
                const std::string& source_name, std::size_t line) {
  TokenStream ts(detail::tokenize(text, line, source_name), line, source_name);
  StTgd tgd;
  {
    // `id:` prefix is a word followed by a colon.
    auto tokens = detail::tokenize(text, line, source_name);
    if (tokens.size() > 2 && tokens[0].kind == Tok::Word && tokens[1].kind == Tok::Colon) {
      tgd.id = ts.next().text;
      ts.next();
    }
  }
  tgd.body = parse_conjunction(ts);
  ts.expect(Tok::Arrow, "'->'");
  tgd.head = parse_conjunction(ts);
  ts.accept(Tok::Dot);
  if (!ts.at_end()) ts.fail("trailing input after tgd" + ts.describe_found());
  try {
    validate_tgd(tgd, source, target);
  } catch (const DomainError& e) {
    ts.fail(e.what());
  }
  return tgd;
}

std::string format_tgd(const StTgd& tgd) {
  std::string out;
  if (!tgd.id.empty()) out = tgd.id + ": ";
  return out + format_conjunction(tgd.body) + " -> " + format_conjunction(tgd.head);
}

namespace {

// Runs of equal-shaped atoms; only their internal order is open.
std::vector<std::pair<std::size_t, std::size_t>> shape_runs(const std::vector<Atom>& atoms) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < atoms.size();) {
    std::size_t j = i + 1;
    while (j < atoms.size() && shape_of(atoms[j]) == shape_of(atoms[i])) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  return runs;
}

std::uint64_t orderings(const std::vector<std::pair<std::size_t, std::size_t>>& runs,
                        std::uint64_t limit) {
  std::uint64_t total = 1;
  for (auto [b, e] : runs)
    for (std::size_t k = 2; k <= e - b; ++k) {
      total *= k;
      if (total > limit) return total;
    }
  return total;
}

// Steps `atoms` to the next ordering that permutes within runs only;
// false after the last one.
bool next_ordering(std::vector<Atom>& atoms, std::vector<std::vector<std::size_t>>& perms,
                   const std::vector<Atom>& base,
                   const std::vector<std::pair<std::size_t, std::size_t>>& runs) {
  for (std::size_t r = 0; r < runs.size(); ++r) {
    bool more = std::next_permutation(perms[r].begin(), perms[r].end());
    auto [b, e] = runs[r];
    for (std::size_t k = 0; k < e - b; ++k) atoms[b + k] = base[b + perms[r][k]];
    if (more) return true;
  }
  return false;
}

}  // namespace

StTgd normalize_tgd(const StTgd& tgd) {
  StTgd n{"", tgd.body, tgd.head};
  auto by_shape = [](const Atom& a, const Atom& b) { return shape_of(a) < shape_of(b); };
  std::stable_sort(n.body.begin(), n.body.end(), by_shape);
  std::stable_sort(n.head.begin(), n.head.end(), by_shape);

  // Exact: the least renamed form over all orderings within shape runs.
  constexpr std::uint64_t kLimit = 5040;
  auto body_runs = shape_runs(n.body);
  auto head_runs = shape_runs(n.head);
  if (orderings(body_runs, kLimit) * orderings(head_runs, kLimit) <= kLimit) {
    auto init = [](const auto& runs) {
      std::vector<std::vector<std::size_t>> perms;
      for (auto [b, e] : runs) {
        perms.emplace_back(e - b);
        std::iota(perms.back().begin(), perms.back().end(), std::size_t{0});
      }
      return perms;
    };
    const std::vector<Atom> body_base = n.body;
    const std::vector<Atom> head_base = n.head;
    auto body_perms = init(body_runs);
    std::optional<StTgd> best;
    StTgd probe{"", body_base, head_base};
    do {
      auto head_perms = init(head_runs);
      probe.head = head_base;
      do {
        StTgd renamed = probe;
        rename_by_first_occurrence(renamed);
        if (!best || std::tie(renamed.body, renamed.head) < std::tie(best->body, best->head))
          best = std::move(renamed);
      } while (next_ordering(probe.head, head_perms, head_base, head_runs));
    } while (next_ordering(probe.body, body_perms, body_base, body_runs));
    return *best;
  }

  rename_by_first_occurrence(n);
  for (int round = 0; round < 4; ++round) {
    StTgd prev = n;
    std::sort(n.body.begin(), n.body.end());
    std::sort(n.head.begin(), n.head.end());
    rename_by_first_occurrence(n);
    if (n.body == prev.body && n.head == prev.head) break;
  }
  return n;
}

bool same_tgd_shape(const StTgd& a, const StTgd& b) {
  StTgd na = normalize_tgd(a);
  StTgd nb = normalize_tgd(b);
  return na.body == nb.body && na.head == nb.head;
}

SizeOverrides parse_size_overrides(std::string_view text, const std::string& source_name) {
  SizeOverrides out;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    TokenStream ts(detail::tokenize(text.substr(start, end - start), lineno, source_name),
                   lineno, source_name);
    start = end + 1;
    if (ts.at_end()) continue;
    std::string id = ts.expect(Tok::Word, "tgd id").text;
    ts.expect(Tok::Equals, "'='");
    std::string digits = ts.expect(Tok::Word, "positive integer").text;
    if (!ts.at_end()) ts.fail("trailing input after size override");
    if (digits.find_first_not_of("0123456789") != std::string::npos)
      ts.fail("size must be a positive integer, got '" + digits + "'");
    std::int64_t value = 0;
    try {
      value = std::stoll(digits);
    } catch (const std::exception&) {
      ts.fail("size out of range: " + digits);
    }
    if (value <= 0) ts.fail("size must be positive");
    out[id] = value;
  }
  return out;
}

std::string serialize_size_overrides(const SizeOverrides& overrides) {
  std::string out;
  for (const auto& [id, size] : overrides) out += id + " = " + std::to_string(size) + "\n";
  return out;
}

std::int64_t tgd_size(const StTgd& tgd, const SizeOverrides& overrides) {
  if (auto it = overrides.find(tgd.id); it != overrides.end()) return it->second;
  return static_cast<std::int64_t>(tgd.atom_count());
}

CandidateSet::CandidateSet(std::vector<StTgd> candidates, SizeOverrides overrides)
    : overrides_(std::move(overrides)) {
  for (auto& c : candidates) add(std::move(c));
}

void CandidateSet::add(StTgd tgd) {
  if (index_.count(tgd.id)) throw DomainError("duplicate tgd id '" + tgd.id + "'");
  index_.emplace(tgd.id, candidates_.size());
  candidates_.push_back(std::move(tgd));
}

std::optional<std::size_t> CandidateSet::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CandidateSet parse_tgd_file(std::string_view text, const Schema& source, const Schema& target,
                            const std::string& source_name) {
  CandidateSet out;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (detail::tokenize(line, lineno, source_name).front().kind == Tok::End) continue;
    StTgd tgd = parse_tgd(line, source, target, source_name, lineno);
    if (tgd.id.empty()) tgd.id = "t" + std::to_string(lineno);
    if (out.index_of(tgd.id))
      throw ParseError("duplicate tgd id '" + tgd.id + "'", lineno, source_name);
    out.add(std::move(tgd));
  }
  return out;
}

std::string serialize_tgd_file(const CandidateSet& candidates) {
  std::string out;
  for (const auto& c : candidates.candidates()) out += format_tgd(c) + "\n";
  return out;
}

Selection::Selection(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Selection Selection::from_ids(const CandidateSet& candidates, const std::vector<std::string>& ids) {
  std::vector<std::size_t> members;
  for (const auto& id : ids) {
    auto idx = candidates.index_of(id);
    if (!idx) throw DomainError("'" + id + "' is not a candidate id");
    members.push_back(*idx);
  }
  return Selection(std::move(members));
}

Selection Selection::from_mask(std::uint64_t mask, std::size_t width) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < width; ++i)
    if (mask & (std::uint64_t{1} << i)) members.push_back(i);
  Selection s;
  s.members_ = std::move(members);
  return s;
}

Selection Selection::all(const CandidateSet& candidates) {
  std::vector<std::size_t> members(candidates.size());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
  return Selection(std::move(members));
}

bool Selection::contains(std::size_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

Selection Selection::with(std::size_t index) const {
  auto m = members_;
  m.push_back(index);
  return Selection(std::move(m));
}

Selection Selection::without(std::size_t index) const {
  Selection s;
  for (auto m : members_)
    if (m != index) s.members_.push_back(m);
  return s;
}

std::vector<std::string> Selection::ids(const CandidateSet& candidates) const {
  check_within(candidates);
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (auto m : members_) out.push_back(candidates[m].id);
  return out;
}

void Selection::check_within(const CandidateSet& candidates) const {
  if (!members_.empty() && members_.back() >= candidates.size())
    throw DomainError("selection member " + std::to_string(members_.back()) +
                      " is outside the candidate set of size " +
                      std::to_string(candidates.size()));
}

std::int64_t selection_size(const Selection& selection, const CandidateSet& candidates) {
  selection.check_within(candidates);
  std::int64_t total = 0;
  for (auto m : selection.members()) total += candidates.size_of(m);
  return total;
}

}  // namespace schemamap
