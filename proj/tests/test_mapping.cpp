#include <gtest/gtest.h>

#include "schemamap/errors.hpp"
#include "schemamap/instance_io.hpp"
#include "schemamap/mapping.hpp"
#include "schemamap/rng.hpp"

using namespace schemamap;

namespace {

struct Schemas {
  SchemaPtr source;
  SchemaPtr target;
};

Schemas running_schemas() {
  SchemaPair p = parse_schema_file(
      "[source]\nproj(name, code, fund)\nfunding(fund, person, company)\n"
      "[target]\ntask(project, person, org)\norg(id, company)\n");
  return {p.source, p.target};
}

StTgd parse(const std::string& text) {
  auto s = running_schemas();
  return parse_tgd(text, *s.source, *s.target);
}

}  // namespace

TEST(Tgd, ParsesBodyHeadAndExistentials) {
  StTgd t = parse("theta3: proj(P, N, F) & funding(F, E, C) -> task(P, E, O) & org(O, C)");
  EXPECT_EQ(t.id, "theta3");
  ASSERT_EQ(t.body.size(), 2u);
  ASSERT_EQ(t.head.size(), 2u);
  EXPECT_EQ(t.existential_variables(), (std::set<std::string>{"O"}));
  EXPECT_EQ(t.body_variables(), (std::set<std::string>{"C", "E", "F", "N", "P"}));
  EXPECT_FALSE(t.is_full());
  EXPECT_EQ(t.atom_count(), 4u);
  EXPECT_EQ(tgd_size(t, {}), 4);
}

TEST(Tgd, ConstantsInAtoms) {
  StTgd t = parse("proj(P, '7', F) -> task(P, acme, O)");
  EXPECT_EQ(t.body[0].terms[1], Term::constant("7"));
  EXPECT_EQ(t.head[0].terms[1], Term::constant("acme"));
  EXPECT_TRUE(t.id.empty());
}

TEST(Tgd, FormatParsesBack) {
  for (const char* text : {"theta1: proj(P, N, F) & funding(F, E, C) -> task(P, E, O)",
                           "x: proj(P, 'Big Data', F) -> org(F, 'a\\'b')",
                           "proj(A, B, C) -> task(A, B, C)"}) {
    StTgd t = parse(text);
    std::string formatted = format_tgd(t);
    StTgd back = parse(formatted);
    EXPECT_EQ(back.id, t.id);
    EXPECT_EQ(back.body, t.body);
    EXPECT_EQ(back.head, t.head);
    EXPECT_EQ(format_tgd(back), formatted);
  }
}

TEST(Tgd, RejectsWrongSidesAndArity) {
  auto s = running_schemas();
  auto message = [&](const std::string& text) -> std::string {
    try {
      parse_tgd(text, *s.source, *s.target, "c.tgd", 3);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 3u);
      return e.what();
    }
    return "";
  };
  EXPECT_NE(message("task(P, E, O) -> task(P, E, O)").find("target schema"), std::string::npos);
  EXPECT_NE(message("proj(P, N, F) -> proj(P, N, F)").find("source schema"), std::string::npos);
  EXPECT_NE(message("proj(P, N) -> task(P, N, O)"), "");
  EXPECT_NE(message("nope(P) -> task(P, N, O)"), "");
  EXPECT_NE(message("proj(P, N, F) ->"), "");
  EXPECT_NE(message("-> task(P, N, O)"), "");
  EXPECT_NE(message("proj(P, N, F) task(P, N, F)"), "");
}

TEST(Tgd, NormalizationIgnoresAtomOrderAndVariableNames) {
  StTgd a = parse("a: proj(P, N, F) & funding(F, E, C) -> task(P, E, O) & org(O, C)");
  StTgd b = parse("b: funding(G, Y, Z) & proj(Q, M, G) -> org(W, Z) & task(Q, Y, W)");
  StTgd c = parse("c: proj(P, N, F) & funding(F, E, C) -> task(P, E, O) & org(C, O)");
  EXPECT_TRUE(same_tgd_shape(a, b));
  EXPECT_FALSE(same_tgd_shape(a, c));
  EXPECT_TRUE(normalize_tgd(a).id.empty());
  EXPECT_EQ(normalize_tgd(normalize_tgd(a)).body, normalize_tgd(a).body);
}

// Random variable renamings and atom shuffles never change the normal form.
TEST(Tgd, NormalizationIsRenamingInvariant) {
  StTgd base = parse("proj(P, N, F) & funding(F, E, C) & proj(Q, N, G) -> task(P, E, O) & org(O, C) & task(Q, E, O)");
  StTgd norm = normalize_tgd(base);
  Rng rng(5);
  for (int round = 0; round < 100; ++round) {
    std::vector<std::string> names = {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J"};
    rng.shuffle(names);
    std::map<std::string, std::string> ren;
    std::size_t k = 0;
    auto rename = [&](std::vector<Atom> atoms) {
      for (auto& a : atoms)
        for (auto& t : a.terms)
          if (t.is_variable()) {
            auto [it, fresh] = ren.try_emplace(t.name, names[k]);
            if (fresh) ++k;
            t.name = it->second;
          }
      rng.shuffle(atoms);
      return atoms;
    };
    StTgd other{"x", rename(base.body), rename(base.head)};
    StTgd other_norm = normalize_tgd(other);
    EXPECT_EQ(other_norm.body, norm.body);
    EXPECT_EQ(other_norm.head, norm.head);
  }
}

TEST(SizeOverrides, ParseAndApply) {
  SizeOverrides o = parse_size_overrides("% sizes\ntheta1 = 3\ntheta3 = 4\n");
  EXPECT_EQ(o.at("theta1"), 3);
  EXPECT_EQ(parse_size_overrides(serialize_size_overrides(o)), o);
  EXPECT_THROW(parse_size_overrides("a = 0\n"), ParseError);
  EXPECT_THROW(parse_size_overrides("a = x\n"), ParseError);
  StTgd t = parse("theta1: proj(P, N, F) & funding(F, E, C) -> task(P, E, O)");
  EXPECT_EQ(tgd_size(t, o), 3);
  EXPECT_EQ(tgd_size(t, {}), 3);
  EXPECT_EQ(tgd_size(parse("z: proj(P, N, F) -> task(P, N, F)"), o), 2);
}

TEST(TgdFile, IdsDefaultToLineNumberAndDuplicatesFail) {
  auto s = running_schemas();
  CandidateSet cs = parse_tgd_file(
      "% candidates\nproj(P, N, F) -> task(P, N, F)\n\nk: proj(P, N, F) -> org(P, F)\n",
      *s.source, *s.target, "c.tgd");
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].id, "t2");
  EXPECT_EQ(cs[1].id, "k");
  EXPECT_EQ(cs.index_of("k"), 1u);
  EXPECT_FALSE(cs.index_of("zzz"));

  CandidateSet back = parse_tgd_file(serialize_tgd_file(cs), *s.source, *s.target);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].id, "t2");
  EXPECT_EQ(back[1].head, cs[1].head);

  try {
    parse_tgd_file("a: proj(P, N, F) -> task(P, N, F)\na: proj(P, N, F) -> task(P, N, F)\n",
                   *s.source, *s.target, "c.tgd");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(SelectionSet, MembershipAndSizes) {
  auto s = running_schemas();
  CandidateSet cs = parse_tgd_file(
      "a: proj(P, N, F) -> task(P, N, F)\nb: proj(P, N, F) & funding(F, E, C) -> org(P, C)\n",
      *s.source, *s.target);
  Selection sel = Selection::from_ids(cs, {"b", "a", "b"});
  EXPECT_EQ(sel.members(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(selection_size(sel, cs), 5);
  EXPECT_EQ(selection_size(Selection{}, cs), 0);
  EXPECT_THROW(Selection::from_ids(cs, {"c"}), DomainError);
  EXPECT_THROW(selection_size(Selection({5}), cs), DomainError);
  EXPECT_EQ(Selection::from_mask(0b10, 2), Selection({1}));
  EXPECT_EQ(Selection::all(cs).size(), 2u);
  EXPECT_EQ(sel.without(0).with(0), sel);
  EXPECT_EQ(sel.ids(cs), (std::vector<std::string>{"a", "b"}));
}
