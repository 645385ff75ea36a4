"""Exact rational verification of q-Watson type 4phi3 summation formulas."""

import json

from ._qwatson import (
    ConstraintViolated,
    DegenerateDenominator,
    DivisionByZero,
    Error,
    ParamPoint,
    ResampleBudgetExhausted,
    UnknownIdentity,
    UnsatisfiableConstraints,
    andrews_rhs,
    check_identity,
    cor_rhs,
    identity_ids,
    jain_rhs,
    lhs_eval,
    phi65_rhs,
    phi_eval,
    poch_fraction,
    qbinom,
    qpoch,
    qpoch_desc,
    qpow,
    rhs_eval,
    terminating_bound,
    thm_rhs,
    unity_lhs,
)
from ._qwatson import _run_suite_json


def run_suite(ids=None, *, seed=42, trials=100, n_max=8, eps_max=4, height=10, include_timing=True):
    """Run the randomized verifier and return the report as a dict."""
    if ids is None:
        ids = identity_ids()
    return json.loads(_run_suite_json(list(ids), seed, trials, n_max, eps_max, height, include_timing))


__all__ = [name for name in dir() if not name.startswith("_")]
