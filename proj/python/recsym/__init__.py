"""Composition rules for complex 4-vectors.

Thin wrapper over the compiled ``_recsym`` extension. Checker results come
back as plain dicts and lists decoded from the JSON report format.
"""

import json
import numbers

from . import _recsym
from ._recsym import (  # noqa: F401
    Backend,
    CScalar,
    Mat2,
    Quat4,
    RecsymError,
    Velocity3,
    add,
    boost_from_velocity,
    conj,
    cross_term,
    det,
    einstein_add,
    embed,
    euclid_norm_sq,
    evaluate,
    extract,
    identity_ids,
    le_compose,
    massless_dirac,
    mat_mul,
    null_spinor,
    property_ids,
    qform,
    qform_via_conj,
    rs_compose,
    scale,
    sigma,
    sqrt_scalar,
    sub,
    trace,
    velocity_from_boost,
)

__all__ = [name for name in dir(_recsym) if not name.startswith("_")] + [
    "quat",
    "check_identity",
    "search_counterexample",
    "run_suite",
    "run_cli",
]


def _component_text(x):
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a component")
    if isinstance(x, numbers.Integral):
        return str(int(x))
    if isinstance(x, numbers.Real):
        return repr(float(x))
    if isinstance(x, numbers.Complex):
        sign = "-" if x.imag < 0 else "+"
        return "{!r}{}{!r}i".format(float(x.real), sign, abs(float(x.imag)))
    raise TypeError("unsupported component type: {}".format(type(x).__name__))


def quat(s, x, y, z, backend="exact"):
    """Build a 4-vector from Python numbers or literal strings like '3/5' or '1+2i'."""
    parts = [_component_text(c) for c in (s, x, y, z)]
    return _recsym.parse_quat("({}; {}, {}, {})".format(*parts), backend)


def check_identity(identity_id, **kwargs):
    return json.loads(_recsym.check_identity(identity_id, **kwargs))


def search_counterexample(property_id, **kwargs):
    found = _recsym.search_counterexample(property_id, **kwargs)
    return None if found is None else json.loads(found)


def run_suite(**kwargs):
    return json.loads(_recsym.run_suite(**kwargs))


def run_cli(*args):
    """Run the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _recsym.run_cli(list(args))
