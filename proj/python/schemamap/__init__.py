"""Schema-mapping selection: chase, exact objective, solvers, scenario
generation and the SET COVER reduction."""

from ._core import (
    DomainError,
    ParseError,
    Problem,
    brute_force_set_cover,
    decide_cover_via_selection,
    generate_scenario,
    normalize_tgd,
    reduce_setcover,
    run_cli,
    running_example,
    set_cover_closed_form,
)

__all__ = [
    "DomainError",
    "ParseError",
    "Problem",
    "brute_force_set_cover",
    "decide_cover_via_selection",
    "generate_scenario",
    "normalize_tgd",
    "reduce_setcover",
    "run_cli",
    "running_example",
    "set_cover_closed_form",
]
