#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schemamap/relational.hpp"

namespace schemamap {

/// A variable (uppercase-initial name) or a constant symbol inside an atom.
struct Term {
  enum class Kind : std::uint8_t { Variable, Constant };

  Kind kind = Kind::Variable;
  std::string name;

  static Term variable(std::string n) { return {Kind::Variable, std::move(n)}; }
  static Term constant(std::string s) { return {Kind::Constant, std::move(s)}; }
  bool is_variable() const noexcept { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct Atom {
  std::string relation;
  std::vector<Term> terms;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Source-to-target tgd: body over the source schema, head over the target
/// schema. Head variables absent from the body are existential.
struct StTgd {
  std::string id;
  std::vector<Atom> body;
  std::vector<Atom> head;

  std::set<std::string> body_variables() const;
  std::set<std::string> existential_variables() const;
  bool is_full() const { return existential_variables().empty(); }
  std::size_t atom_count() const { return body.size() + head.size(); }
};

/// Checks the tgd against both schemas; throws DomainError describing the
/// first problem (unknown relation, arity, wrong side, empty body/head).
void validate_tgd(const StTgd& tgd, const Schema& source, const Schema& target);

/// Parses `[id:] body & body -> head & head`. Throws ParseError.
StTgd parse_tgd(std::string_view text, const Schema& source, const Schema& target,
                const std::string& source_name = {}, std::size_t line = 1);

/// `id: body -> head` on one line (no id prefix when the id is empty).
std::string format_tgd(const StTgd& tgd);

/// Atoms sorted by shape and variables numbered by first occurrence
/// (V1, V2, ...), taking the least such form over the orderings of
/// equal-shaped atoms. Tgds equal up to atom order and variable renaming
/// normalize identically whenever those orderings number at most 5040;
/// larger tgds fall back to iterated sorting. The id is cleared.
StTgd normalize_tgd(const StTgd& tgd);
bool same_tgd_shape(const StTgd& a, const StTgd& b);

using SizeOverrides = std::map<std::string, std::int64_t>;

/// Parses `id = integer` lines. Values must be positive.
SizeOverrides parse_size_overrides(std::string_view text, const std::string& source_name = {});
std::string serialize_size_overrides(const SizeOverrides& overrides);

/// Override for the tgd's id when present, else body + head atom count.
std::int64_t tgd_size(const StTgd& tgd, const SizeOverrides& overrides);

/// Ordered candidate tgds; order is the solvers' tie-break order.
class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::vector<StTgd> candidates, SizeOverrides overrides = {});

  /// Throws DomainError on a duplicate id.
  void add(StTgd tgd);
  void set_overrides(SizeOverrides overrides) { overrides_ = std::move(overrides); }

  const std::vector<StTgd>& candidates() const noexcept { return candidates_; }
  const SizeOverrides& overrides() const noexcept { return overrides_; }
  std::size_t size() const noexcept { return candidates_.size(); }
  bool empty() const noexcept { return candidates_.empty(); }
  const StTgd& operator[](std::size_t i) const { return candidates_[i]; }

  std::optional<std::size_t> index_of(std::string_view id) const;
  std::int64_t size_of(std::size_t index) const { return tgd_size(candidates_[index], overrides_); }

 private:
  std::vector<StTgd> candidates_;
  SizeOverrides overrides_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Parses a tgd file: one tgd per line, `%` comments. Missing ids become
/// `t<line>`.
CandidateSet parse_tgd_file(std::string_view text, const Schema& source, const Schema& target,
                            const std::string& source_name = {});
std::string serialize_tgd_file(const CandidateSet& candidates);

/// A subset of a candidate set, held as ascending candidate indices.
class Selection {
 public:
  Selection() = default;
  /// Sorts and deduplicates.
  explicit Selection(std::vector<std::size_t> members);

  static Selection from_ids(const CandidateSet& candidates, const std::vector<std::string>& ids);
  static Selection from_mask(std::uint64_t mask, std::size_t width);
  static Selection all(const CandidateSet& candidates);

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t index) const;

  Selection with(std::size_t index) const;
  Selection without(std::size_t index) const;

  std::vector<std::string> ids(const CandidateSet& candidates) const;
  /// Throws DomainError unless every member indexes into `candidates`.
  void check_within(const CandidateSet& candidates) const;

  friend bool operator==(const Selection&, const Selection&) = default;
  friend auto operator<=>(const Selection&, const Selection&) = default;

 private:
  std::vector<std::size_t> members_;
};

/// Sum of member sizes; 0 for the empty selection. Throws on membership violation.
std::int64_t selection_size(const Selection& selection, const CandidateSet& candidates);

}  // namespace schemamap
