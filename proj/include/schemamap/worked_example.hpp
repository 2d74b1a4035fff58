#pragma once

// The project/task/org running example.
//
// Source: proj(name, code, fund), funding(fund, person, company).
// Target: task(project, person, org), org(id, company).
// Candidates:
//   theta1: proj(P, N, F) & funding(F, E, C) -> task(P, E, O)
//   theta3: proj(P, N, F) & funding(F, E, C) -> task(P, E, O) & org(O, C)
// chased in that order, so theta1 yields task(BigData, Bob, _1) and
// task(ML, Alice, _2) and theta3 yields the same shape over _3 and _4 plus
// org(_3, IBM) and org(_4, SAP).
//
// J holds task(ML, Alice, 111) and org(111, SAP), which the candidates can
// reach, plus task(Web, Carol, 222) and org(222, Oracle), which they
// cannot. The last two are a fixture choice: any two unreachable tuples
// that no candidate tuple maps into give the same scores.

#include <cstddef>

#include "schemamap/objective.hpp"

namespace schemamap {

struct WorkedExample {
  SchemaPtr source_schema;
  SchemaPtr target_schema;
  Instance source;
  Instance target;
  CandidateSet candidates;  // theta1, theta3; sizes 3 and 4 via overrides

  EvalContext context() const { return EvalContext(candidates, source, target); }
};

/// The base example, optionally extended with `extra_projects` pairs
/// proj(xK, K, 1) / task(xK, Alice, 111).
WorkedExample running_example(std::size_t extra_projects = 0);

}  // namespace schemamap
