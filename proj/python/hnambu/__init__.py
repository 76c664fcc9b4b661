"""Exact verification of ternary hom-Nambu-Lie algebras, their twists and deformations."""

import json

from ._core import (
    Error,
    MultiPoly,
    Scalar,
    cross4_bracket,
    jacobian3_bracket,
    series_cos,
    series_sin,
    vw_bracket,
)
from . import _core

__all__ = [
    "Error",
    "MultiPoly",
    "Scalar",
    "UsageError",
    "counterexample",
    "cross4_bracket",
    "deform",
    "jacobian3_bracket",
    "list_models",
    "series_cos",
    "series_sin",
    "verify",
    "vw_bracket",
]


class UsageError(ValueError):
    pass


def _result(triple):
    code, out, err = triple
    if code == 2:
        raise UsageError(err.strip())
    return json.loads(out)


def verify(model, **options):
    """Runs the skew-symmetry, hom-Nambu and multiplicativity checks; returns the report dict."""
    return _result(_core._verify(model, **options))


def counterexample(name, **options):
    return _result(_core._counterexample(name, **options))


def deform(model, **options):
    """Verifies a formal deformation order by order; returns the report dict."""
    return _result(_core._deform(model, **options))


def list_models():
    return _result(_core._list_models())["models"]
