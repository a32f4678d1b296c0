"""Hyper-Catalan and Geode numbers with exact integer arithmetic."""

import json

from ._core import (
    F1,
    H1,
    NonzeroConstant,
    NotDivisible,
    OutOfRange,
    certificate_R,
    check_certificate_R,
    check_wz1,
    check_wz2,
    claim1_sum,
    claim2_ct,
    claim2_sum,
    enumerate_mult_vectors,
    eval_alternating,
    eval_general,
    geode_closed_2var,
    geode_closed_shifted,
    geode_closed_two_nonzero,
    geode_recurrence_check,
    geode_series,
    hyper_catalan,
    partition_sum_main,
    solve_S,
    suite_names,
)
from ._core import run_suite_json as _run_suite_json


def run_suite(name, **bounds):
    """Run a verification suite and return its report as a dict."""
    return json.loads(_run_suite_json(name, **bounds))


__all__ = [
    "F1",
    "H1",
    "NonzeroConstant",
    "NotDivisible",
    "OutOfRange",
    "certificate_R",
    "check_certificate_R",
    "check_wz1",
    "check_wz2",
    "claim1_sum",
    "claim2_ct",
    "claim2_sum",
    "enumerate_mult_vectors",
    "eval_alternating",
    "eval_general",
    "geode_closed_2var",
    "geode_closed_shifted",
    "geode_closed_two_nonzero",
    "geode_recurrence_check",
    "geode_series",
    "hyper_catalan",
    "partition_sum_main",
    "run_suite",
    "solve_S",
    "suite_names",
]
