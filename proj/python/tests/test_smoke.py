from fractions import Fraction

import pytest

import schemamap

SCHEMA = "[source]\nr(a, b)\n[target]\nt(a, b)\nu(a, b)\n"


def test_running_example_totals():
    p = schemamap.running_example()
    assert p.candidate_ids == ["theta1", "theta3"]
    totals = [p.objective(sel)["total"] for sel in ([], ["theta1"], ["theta3"], ["theta1", "theta3"])]
    assert totals == [4, Fraction(22, 3), 8, 12]
    b = p.objective(["theta1"])
    assert (b["unexplained"], b["errors"], b["size"]) == (Fraction(10, 3), 1, 3)
    assert p.covers("theta1", "task('ML', 'Alice', '111')") == Fraction(2, 3)
    assert p.covers("theta3", "task('ML', 'Alice', '111')") == 1


def test_selection_flips_with_extra_projects():
    assert schemamap.running_example().select()["selection"] == []
    r = schemamap.running_example(5).select()
    assert r["selection"] == ["theta3"] and r["total"] == 8 and r["optimal"]
    assert schemamap.running_example(5).select(solver="greedy")["selection"] == ["theta3"]
    assert schemamap.running_example().decide(4)
    assert not schemamap.running_example().decide("39/10")


def test_problem_from_text_and_chase():
    p = schemamap.Problem(SCHEMA, "r(a, b).\nr(c, d).\n", "t(a, b).\n", "g1: r(X, Y) -> t(X, Y)\ng2: r(X, Y) -> u(X, E)\n")
    assert p.chase(["g1"]) == "t(a, b).\nt(c, d).\n"
    assert "u(a, _1)." in p.chase()
    b = p.objective(["g1"], weights=(1, 1, 1))
    assert b["errors"] == 1 and b["unexplained"] == 0 and b["size"] == 2
    with pytest.raises(schemamap.ParseError):
        schemamap.Problem(SCHEMA, "r(a).\n", "", "")
    with pytest.raises(schemamap.DomainError):
        p.objective(["nope"])


def test_reduction_matches_closed_form():
    universe = ["a", "b", "c"]
    family = [["a", "b"], ["c"], ["a"]]
    problem, threshold = schemamap.reduce_setcover(universe, family, 2)
    assert threshold == 4
    for chosen in ([], [0], [0, 1], [2], [0, 1, 2]):
        ids = [problem.candidate_ids[i] for i in chosen]
        assert problem.objective(ids)["total"] == schemamap.set_cover_closed_form(universe, family, 2, chosen)
    assert schemamap.brute_force_set_cover(universe, family, 2)
    assert schemamap.decide_cover_via_selection(universe, family, 2, weights=(2, 3, 4))
    assert not schemamap.decide_cover_via_selection(universe, family, 1)


def test_generated_scenario_round_trips(tmp_path):
    s = schemamap.generate_scenario("CP:1,VP:1", seed=4, out_dir=str(tmp_path))
    p = s["problem"]
    assert len(s["ground_truth_ids"]) == 2
    b = p.objective(s["ground_truth_ids"])
    assert b["total"] == b["size"]
    loaded = schemamap.Problem.from_dir(str(tmp_path))
    assert loaded.candidate_ids == p.candidate_ids
    assert loaded.target == p.target
    assert loaded.ground_truth == p.ground_truth


def test_normalize_and_cli():
    a = schemamap.normalize_tgd("r(X, Y) -> t(Y, X) & u(X, Z)", SCHEMA)
    b = schemamap.normalize_tgd("r(B, A) -> u(B, Q) & t(A, B)", SCHEMA)
    assert a == b
    code, out, _ = schemamap.run_cli(["verify-fixture"])
    assert code == 0 and "fixture verified" in out
    assert schemamap.run_cli(["bogus"])[0] == 2
