#include "schemamap/worked_example.hpp"

namespace schemamap {

namespace {

Tuple fact(std::string relation, std::initializer_list<const char*> cells) {
  Tuple t{std::move(relation), {}};
  for (const char* c : cells) t.cells.push_back(Value::constant(c));
  return t;
}

}  // namespace

WorkedExample running_example(std::size_t extra_projects) {
  auto source = std::make_shared<Schema>(Schema{
      {"proj", {"name", "code", "fund"}},
      {"funding", {"fund", "person", "company"}},
  });
  auto target = std::make_shared<Schema>(Schema{
      {"task", {"project", "person", "org"}},
      {"org", {"id", "company"}},
  });

  WorkedExample ex{source, target, Instance(source), Instance(target), {}};
  ex.source.insert(fact("proj", {"BigData", "7", "2"}));
  ex.source.insert(fact("proj", {"ML", "5", "1"}));
  ex.source.insert(fact("funding", {"1", "Alice", "SAP"}));
  ex.source.insert(fact("funding", {"2", "Bob", "IBM"}));

  ex.target.insert(fact("task", {"ML", "Alice", "111"}));
  ex.target.insert(fact("org", {"111", "SAP"}));
  ex.target.insert(fact("task", {"Web", "Carol", "222"}));
  ex.target.insert(fact("org", {"222", "Oracle"}));

  for (std::size_t k = 1; k <= extra_projects; ++k) {
    std::string name = "x" + std::to_string(k);
    std::string code = std::to_string(100 + k);
    ex.source.insert(fact("proj", {name.c_str(), code.c_str(), "1"}));
    ex.target.insert(fact("task", {name.c_str(), "Alice", "111"}));
  }

  auto var = Term::variable;
  Atom proj{"proj", {var("P"), var("N"), var("F")}};
  Atom funding{"funding", {var("F"), var("E"), var("C")}};
  Atom task{"task", {var("P"), var("E"), var("O")}};
  Atom org{"org", {var("O"), var("C")}};
  ex.candidates.add(StTgd{"theta1", {proj, funding}, {task}});
  ex.candidates.add(StTgd{"theta3", {proj, funding}, {task, org}});
  ex.candidates.set_overrides({{"theta1", 3}, {"theta3", 4}});
  return ex;
}

}  // namespace schemamap
