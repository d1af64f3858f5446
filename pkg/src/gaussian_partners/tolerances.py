"""Numerical thresholds shared by every module.

Defaults can be overridden for a block of code with :func:`using`, or for a
whole CLI run through the ``GAUSSIAN_PARTNERS_TOL`` environment variable
(``"name=value,name=value"``).  Explicit ``--tol`` flags on the CLI take
precedence over the environment variable, which takes precedence over the
defaults below.
"""

from __future__ import annotations

import contextlib
import contextvars
import dataclasses
import math
import os
from dataclasses import dataclass

ENV_VAR = "GAUSSIAN_PARTNERS_TOL"


@dataclass(frozen=True)
class Tolerances:
    # generic absolute equality
    atol: float = 1e-10
    # eigenvalues |nu_I - nu_J| <= degeneracy * max(1, nu_J) are grouped
    degeneracy: float = 1e-8
    # prod 1/nu_I >= 1 - purity  ->  pure
    purity: float = 1e-8
    # nu > 1 + correlated counts as a correlated mode of J_A
    correlated: float = 1e-7
    # nu~ < 1 - subunity counts toward negativity / the entanglement partner
    subunity: float = 1e-9
    # ||[Pi_A, J]|| <= commutator * ||J||  ->  uncorrelated
    commutator: float = 1e-9
    # relative rank cut for dropping dependent vectors
    rank: float = 1e-9
    # Gram matrices with a larger condition number are degenerate
    max_condition: float = 1e12
    # nu >= 1 - physical  ->  physical
    physical: float = 1e-9


_current: contextvars.ContextVar[Tolerances] = contextvars.ContextVar(
    "gaussian_partners_tolerances", default=Tolerances()
)


def get() -> Tolerances:
    return _current.get()


def parse_overrides(text: str) -> dict[str, float]:
    """Parse ``"name=value,name=value"`` into a dict, validating names."""
    names = {f.name for f in dataclasses.fields(Tolerances)}
    out: dict[str, float] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in names:
            raise ValueError(f"unknown tolerance override {item!r}; valid names: {sorted(names)}")
        try:
            number = float(value)
        except ValueError:
            raise ValueError(f"tolerance {key!r} needs a number, got {value.strip()!r}") from None
        if not math.isfinite(number) or number <= 0:
            raise ValueError(f"tolerance {key!r} must be positive and finite, got {number}")
        out[key] = number
    return out


def from_environment(environ=None) -> dict[str, float]:
    environ = os.environ if environ is None else environ
    text = environ.get(ENV_VAR, "")
    return parse_overrides(text) if text else {}


@contextlib.contextmanager
def using(**overrides: float):
    token = _current.set(dataclasses.replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
