"""Exact Macdonald and Jack polynomials, and checks of the identities around them."""

import json

from ._macjack import expand, expand_latex, norm_ratio, pieri, suite_names, verify_json, NotExact

__all__ = ["expand", "expand_latex", "expand_json", "norm_ratio", "pieri", "suite_names", "verify", "NotExact"]


def expand_json(partition, n_vars=0, basis="J", side="qt"):
    from ._macjack import expand_json as _raw
    return json.loads(_raw(partition, n_vars, basis, side))


def verify(suite, **bounds):
    """Run one suite and return its reports as dicts."""
    return json.loads(verify_json(suite, **bounds))
