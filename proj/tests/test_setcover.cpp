#include <gtest/gtest.h>

#include "schemamap/errors.hpp"
#include "schemamap/rng.hpp"
#include "schemamap/setcover.hpp"

using namespace schemamap;

namespace {

SetCoverInstance make(std::vector<std::string> u, std::vector<std::vector<std::string>> r, std::size_t n) {
  return SetCoverInstance{std::move(u), std::move(r), n};
}

SetCoverInstance random_instance(Rng& rng, std::size_t max_u, std::size_t max_r) {
  SetCoverInstance sc;
  std::size_t nu = 1 + rng.below(max_u);
  for (std::size_t i = 0; i < nu; ++i) sc.universe.push_back(std::string(1, static_cast<char>('a' + i)));
  std::size_t nr = 1 + rng.below(max_r);
  for (std::size_t i = 0; i < nr; ++i) {
    std::vector<std::string> set;
    for (const auto& e : sc.universe)
      if (rng.below(3) == 0) set.push_back(e);
    sc.family.push_back(set);
  }
  sc.bound = 1 + rng.below(nr);
  return sc;
}

// Independent cover check by recursion over the family.
bool covers_within(const SetCoverInstance& sc, std::size_t next, std::size_t left, std::set<std::string> have) {
  if (have.size() == sc.universe.size()) return true;
  if (left == 0 || next == sc.family.size()) return false;
  if (covers_within(sc, next + 1, left, have)) return true;
  have.insert(sc.family[next].begin(), sc.family[next].end());
  return covers_within(sc, next + 1, left - 1, have);
}

}  // namespace

TEST(SetCoverFile, ParsesAndRejects) {
  auto sc = parse_setcover("% example\nuniverse: a b c\nset: a b\nset: c\nn: 2\n");
  EXPECT_EQ(sc.universe, (std::vector<std::string>{"a", "b", "c"}));
  ASSERT_EQ(sc.family.size(), 2u);
  EXPECT_EQ(sc.bound, 2u);
  EXPECT_THROW(parse_setcover("set: a\nn: 1\n"), ParseError);
  EXPECT_THROW(parse_setcover("universe: a\n"), ParseError);
  EXPECT_THROW(parse_setcover("universe: a\nn: x\n"), ParseError);
  try {
    parse_setcover("universe: a\nbogus: 1\n", "sc.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(SetCoverInstance, Validation) {
  EXPECT_THROW(make({}, {{}}, 1).validate(), DomainError);
  EXPECT_THROW(make({"a"}, {{"a"}}, 0).validate(), DomainError);
  EXPECT_THROW(make({"a"}, {{"a"}}, 2).validate(), DomainError);
  EXPECT_THROW(make({"a"}, {{"b"}}, 1).validate(), DomainError);
  EXPECT_NO_THROW(make({"a"}, {{}}, 1).validate());
}

TEST(Reduction, ConstructionCounts) {
  auto sc = make({"a", "b"}, {{"a"}, {"a", "b"}}, 1);
  ReducedInstance red = reduce(sc);
  EXPECT_EQ(red.threshold, 2);
  EXPECT_EQ(red.domain, (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_EQ(red.target.size(), 6u);
  EXPECT_EQ(static_cast<std::size_t>(std::ranges::distance(red.source.relation_tuples("r2"))), 6u);
  EXPECT_EQ(static_cast<std::size_t>(std::ranges::distance(red.source.relation_tuples("r1"))), 3u);
  ASSERT_EQ(red.candidates.size(), 2u);
  for (const auto& c : red.candidates.candidates()) {
    EXPECT_TRUE(c.is_full());
    EXPECT_EQ(tgd_size(c, {}), 2);
  }
  EXPECT_TRUE(red.target.contains({"u", {Value::constant("u_a"), Value::constant("d_3")}}));
  EvalContext ctx = red.context();
  EXPECT_EQ(objective(Selection({1}), ctx).total, Rational(2));
  EXPECT_EQ(closed_form_objective({1}, sc), Rational(2));
  EXPECT_EQ(closed_form_objective({}, sc), Rational(6));
  EXPECT_THROW(closed_form_objective({2}, sc), DomainError);
}

TEST(Reduction, EmptyFamilyMembers) {
  auto sc = make({"a", "b"}, {{}, {}}, 2);
  ReducedInstance red = reduce(sc);
  EXPECT_TRUE(red.source.empty());
  EvalContext ctx = red.context();
  for (std::uint64_t mask = 0; mask < 4; ++mask) {
    Selection sel = Selection::from_mask(mask, 2);
    EXPECT_EQ(objective(sel, ctx).total, Rational(5 * 2 + 2 * static_cast<std::int64_t>(sel.size())));
  }
}

TEST(Reduction, DecisionExamples) {
  EXPECT_TRUE(decide_cover_via_selection(make({"a", "b", "c"}, {{"a", "b"}, {"c"}}, 2)));
  EXPECT_FALSE(decide_cover_via_selection(make({"a", "b", "c"}, {{"a", "b"}, {"a"}}, 2)));
  EXPECT_TRUE(decide_cover_via_selection(make({"a", "b"}, {{"a", "b"}}, 1)));
  EXPECT_TRUE(brute_force_set_cover(make({"a", "b", "c"}, {{"a", "b"}, {"c"}}, 2)));
  EXPECT_FALSE(brute_force_set_cover(make({"a", "b", "c"}, {{"a", "b"}, {"c"}}, 1)));
}

TEST(Reduction, WeightedExamples) {
  auto coverable = make({"a", "b", "c"}, {{"a", "b"}, {"c"}}, 2);
  auto uncoverable = make({"a", "b", "c"}, {{"a", "b"}, {"a"}}, 2);
  EXPECT_EQ(reduce_weighted(coverable, Weights{1, 1, 1}).threshold, reduce(coverable).threshold);
  EXPECT_EQ(reduce_weighted(coverable, Weights{1, 1, 1}).target, reduce(coverable).target);
  EXPECT_TRUE(decide_cover_via_selection(coverable, Weights{2, 3, 1}));
  EXPECT_FALSE(decide_cover_via_selection(uncoverable, Weights{1, 1, 5}));
  EXPECT_EQ(reduce_weighted(coverable, Weights{2, 3, 5}).threshold, 2 * 5 * 2);
}

TEST(ReductionProperty, PipelineEqualsClosedForm) {
  Rng rng(2718);
  for (int round = 0; round < 60; ++round) {
    auto sc = random_instance(rng, 5, 4);
    ReducedInstance red = reduce(sc);
    EvalContext ctx = red.context();
    EXPECT_LE(red.source.size() + red.target.size(),
              static_cast<std::size_t>(red.threshold + 1) * (sc.universe.size() + [&] {
                std::size_t s = 0;
                for (const auto& r : sc.family) s += r.size();
                return s;
              }()));
    for (std::uint64_t mask = 0; mask < (1ull << sc.family.size()); ++mask) {
      Selection sel = Selection::from_mask(mask, sc.family.size());
      auto b = objective(sel, ctx);
      EXPECT_EQ(b.total, closed_form_objective(sel.members(), sc));
      EXPECT_EQ(b.errors, Rational(0));
    }
    EXPECT_EQ(brute_force_set_cover(sc), covers_within(sc, 0, sc.bound, {}));
    EXPECT_EQ(decide_cover_via_selection(sc), brute_force_set_cover(sc));
  }
}

TEST(ReductionProperty, WeightedPipelineEqualsWeightedClosedForm) {
  Rng rng(31415);
  for (int round = 0; round < 40; ++round) {
    auto sc = random_instance(rng, 4, 4);
    Weights w{1 + static_cast<std::int64_t>(rng.below(5)), 1 + static_cast<std::int64_t>(rng.below(5)),
              1 + static_cast<std::int64_t>(rng.below(5))};
    ReducedInstance red = reduce_weighted(sc, w);
    EvalContext ctx = red.context();
    for (std::uint64_t mask = 0; mask < (1ull << sc.family.size()); ++mask) {
      Selection sel = Selection::from_mask(mask, sc.family.size());
      EXPECT_EQ(objective(sel, ctx, w).total, closed_form_objective_weighted(sel.members(), sc, w));
    }
    EXPECT_EQ(decide_cover_via_selection(sc, w), brute_force_set_cover(sc));
  }
}

TEST(Reduction, CapsAreEnforced) {
  SetCoverInstance big;
  big.universe = {"a"};
  big.family.assign(21, {"a"});
  big.bound = 1;
  EXPECT_THROW(brute_force_set_cover(big), DomainError);
  EXPECT_THROW(decide_cover_via_selection(big, {}, 20), DomainError);
}
