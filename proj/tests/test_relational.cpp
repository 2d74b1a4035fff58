#include <gtest/gtest.h>

#include "oracles.hpp"
#include "schemamap/errors.hpp"
#include "schemamap/rng.hpp"

using namespace schemamap;

namespace {

Value c(const char* s) { return Value::constant(s); }
Value n(NullId id) { return Value::null(id); }

SchemaPtr rs_schema() {
  return std::make_shared<Schema>(Schema{{"r", {"a", "b"}}, {"s", {"a", "b", "c"}}});
}

}  // namespace

TEST(Value, ConstantsOrderBeforeNulls) {
  EXPECT_LT(c("zzz"), n(1));
  EXPECT_LT(c("a"), c("b"));
  EXPECT_LT(n(2), n(10));
  EXPECT_EQ(c("a"), c("a"));
  EXPECT_NE(c("a"), n(1));
}

TEST(Schema, RejectsBadDeclarations) {
  Schema s;
  s.add({"r", {"a"}});
  EXPECT_THROW(s.add({"r", {"b"}}), DomainError);
  EXPECT_THROW(s.add({"z", {}}), DomainError);
  EXPECT_THROW(s.add({"q", {"a", "a"}}), DomainError);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.contains("r"));
  EXPECT_EQ(s.find("missing"), nullptr);
}

TEST(Instance, InsertValidatesRelationAndArity) {
  Instance inst(rs_schema());
  EXPECT_TRUE(inst.insert({"r", {c("1"), c("2")}}));
  EXPECT_FALSE(inst.insert({"r", {c("1"), c("2")}}));
  EXPECT_THROW(inst.insert({"r", {c("1")}}), DomainError);
  EXPECT_THROW(inst.insert({"t", {c("1")}}), DomainError);
  EXPECT_EQ(inst.size(), 1u);
}

TEST(Instance, RelationTuplesIsolatesOneRelation) {
  auto schema = std::make_shared<Schema>(Schema{{"r", {"a"}}, {"r2", {"a"}}, {"ra", {"a"}}});
  Instance inst(schema);
  inst.insert({"r", {c("x")}});
  inst.insert({"r", {n(1)}});
  inst.insert({"r2", {c("y")}});
  inst.insert({"ra", {c("z")}});
  auto range = inst.relation_tuples("r");
  std::vector<Tuple> got(range.begin(), range.end());
  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0].cells[0], c("x"));
  EXPECT_EQ(got[1].cells[0], n(1));
  EXPECT_TRUE(inst.relation_tuples("missing").empty());
}

TEST(Homomorphism, ConstantsAreFixed) {
  EXPECT_FALSE(tuple_homomorphism({"r", {c("a"), n(1)}}, {"r", {c("b"), c("x")}}, {}));
  auto h = tuple_homomorphism({"r", {c("a"), n(1)}}, {"r", {c("a"), c("x")}}, {});
  ASSERT_TRUE(h);
  EXPECT_EQ(*h->find(1), c("x"));
}

TEST(Homomorphism, RepeatedNullMustAgree) {
  EXPECT_FALSE(tuple_homomorphism({"r", {n(1), n(1)}}, {"r", {c("a"), c("b")}}, {}));
  EXPECT_TRUE(tuple_homomorphism({"r", {n(1), n(1)}}, {"r", {c("a"), c("a")}}, {}));
}

TEST(Homomorphism, RespectsBaseBindings) {
  NullAssignment base;
  base.bind(1, c("a"));
  EXPECT_FALSE(tuple_homomorphism({"r", {n(1), n(2)}}, {"r", {c("b"), c("c")}}, base));
  EXPECT_TRUE(tuple_homomorphism({"r", {n(1), n(2)}}, {"r", {c("a"), c("c")}}, base));
}

TEST(Homomorphism, NullsMayMapToNulls) {
  Instance target(rs_schema());
  target.insert({"r", {n(7), c("a")}});
  auto m = maps_into({"r", {n(1), c("a")}}, target, {});
  ASSERT_TRUE(m);
  EXPECT_EQ(*m->second.find(1), n(7));
}

TEST(Homomorphism, RelationMismatchFails) {
  EXPECT_FALSE(tuple_homomorphism({"r", {n(1), n(2)}}, {"s", {c("a"), c("b"), c("c")}}, {}));
}

TEST(Homomorphism, ExtensionSharesNullsAcrossTuples) {
  Instance target(rs_schema());
  target.insert({"r", {c("a"), c("b")}});
  target.insert({"r", {c("b"), c("c")}});
  std::vector<Tuple> path = {{"r", {n(1), n(2)}}, {"r", {n(2), n(3)}}};
  auto h = extend_into_instance(path, target, {});
  ASSERT_TRUE(h);
  EXPECT_EQ(*h->find(1), c("a"));
  EXPECT_EQ(*h->find(3), c("c"));
  std::vector<Tuple> cycle = {{"r", {n(1), n(2)}}, {"r", {n(2), n(1)}}};
  EXPECT_FALSE(extend_into_instance(cycle, target, {}));
}

TEST(Homomorphism, EmptyInputHasTheTrivialExtension) {
  Instance target(rs_schema());
  std::size_t calls = 0;
  for_each_extension({}, target, {}, [&](const NullAssignment&, auto) {
    ++calls;
    return true;
  });
  EXPECT_EQ(calls, 1u);
}

TEST(Homomorphism, VisitorCanStopEarly) {
  Instance target(rs_schema());
  for (const char* v : {"a", "b", "c"}) target.insert({"r", {c(v), c(v)}});
  std::vector<Tuple> one = {{"r", {n(1), n(1)}}};
  std::size_t calls = 0;
  for_each_extension(one, target, {}, [&](const NullAssignment&, auto) {
    ++calls;
    return false;
  });
  EXPECT_EQ(calls, 1u);
}

// Random instances of at most six tuples over at most four nulls: the
// backtracking matcher finds exactly the brute-force homomorphisms.
TEST(HomomorphismProperty, MatchesBruteForceEnumeration) {
  auto schema = rs_schema();
  Rng rng(20240611);
  const std::vector<Value> consts = {c("a"), c("b"), c("c")};
  auto random_tuple = [&](std::size_t max_null) {
    bool binary = rng.below(2) == 0;
    Tuple t{binary ? "r" : "s", {}};
    for (std::size_t p = 0; p < (binary ? 2u : 3u); ++p) {
      if (rng.below(3) == 0)
        t.cells.push_back(consts[rng.below(consts.size())]);
      else
        t.cells.push_back(n(1 + rng.below(max_null)));
    }
    return t;
  };
  for (int round = 0; round < 400; ++round) {
    std::size_t max_null = 1 + rng.below(4);
    std::vector<Tuple> pattern;
    for (std::size_t i = 0, k = 1 + rng.below(3); i < k; ++i) pattern.push_back(random_tuple(max_null));
    Instance target(schema);
    for (std::size_t i = 0, k = 1 + rng.below(6); i < k; ++i) {
      Tuple t = random_tuple(2);
      for (auto& v : t.cells)
        if (v.is_null()) v = n(v.null_id() + 100);
      target.insert(t);
    }

    std::size_t found = 0;
    std::set<std::map<NullId, Value>> distinct;
    for_each_extension(pattern, target, {}, [&](const NullAssignment& h, auto images) {
      ++found;
      distinct.insert(h.bindings());
      for (std::size_t i = 0; i < pattern.size(); ++i) EXPECT_EQ(h.apply(pattern[i]), *images[i]);
      return true;
    });
    EXPECT_EQ(found, distinct.size());
    EXPECT_EQ(found, oracle::homomorphism_count(pattern, target)) << "round " << round;
    EXPECT_EQ(extend_into_instance(pattern, target, {}).has_value(),
              oracle::homomorphism_exists(pattern, target));
  }
}

TEST(Nulls, RenameAndCollect) {
  Instance inst(rs_schema());
  inst.insert({"r", {n(3), n(1)}});
  inst.insert({"r", {c("a"), n(3)}});
  std::vector<Tuple> ts(inst.begin(), inst.end());
  EXPECT_EQ(nulls_of(ts), (std::vector<NullId>{1, 3}));
  Instance renamed = rename_nulls(inst, {{3, 9}});
  EXPECT_TRUE(renamed.contains({"r", {n(9), n(1)}}));
  EXPECT_TRUE(renamed.contains({"r", {c("a"), n(9)}}));
}

TEST(Nulls, AllocatorHandsOutConsecutiveBlocks) {
  NullAllocator alloc(5);
  EXPECT_EQ(alloc.fresh(), 5u);
  EXPECT_EQ(alloc.reserve(3), 6u);
  EXPECT_EQ(alloc.peek(), 9u);
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    auto v = r.between(2, 4);
    EXPECT_GE(v, 2);
    EXPECT_LE(v, 4);
  }
  auto s = r.sample(10, 4);
  std::set<std::size_t> unique(s.begin(), s.end());
  EXPECT_EQ(unique.size(), 4u);
  for (auto x : s) EXPECT_LT(x, 10u);
  EXPECT_NE(derive_seed(7, 0), derive_seed(7, 1));
}
