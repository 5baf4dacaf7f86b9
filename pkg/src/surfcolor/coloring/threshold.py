"""Degree thresholds as functions of the Euler genus.

Families:

* ``linear``: ``9g - 4`` (defect of the big color in ``(0,0,0,*)`` and ``(2,2,*)``)
* ``2kk``: ``38 + sqrt(84g + 1682)``
* ``00kk``: ``20 + sqrt(48g + 481)``
* ``trianglefree``: ``ceil((10g + 32) / 3)``
* ``girth7``: ``5 + ceil(sqrt(14g + 22))``

The two square-root families are kept exactly as ``a + sqrt(b)``; their
defining quadratics then evaluate to integers with the surd cancelling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import PreconditionError

FAMILIES = ("linear", "2kk", "00kk", "trianglefree", "girth7")


@dataclass(frozen=True)
class Surd:
    """The real number ``a + sqrt(b)``."""

    a: int
    b: int

    def __float__(self):
        return self.a + math.sqrt(self.b)

    def floor(self) -> int:
        return self.a + math.isqrt(self.b)

    def __str__(self):
        return f"{self.a}+sqrt({self.b})"


def _check(family: str, g: int) -> None:
    if family not in FAMILIES:
        raise PreconditionError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if g < 0 or (family == "linear" and g < 1):
        raise PreconditionError(f"genus {g} out of range for family {family}")


def exact_threshold(family: str, g: int) -> int | Surd:
    _check(family, g)
    if family == "linear":
        return 9 * g - 4
    if family == "2kk":
        return Surd(38, 84 * g + 1682)
    if family == "00kk":
        return Surd(20, 48 * g + 481)
    if family == "trianglefree":
        return -(-(10 * g + 32) // 3)
    return 5 + math.isqrt(14 * g + 22 - 1) + 1


def threshold(family: str, g: int) -> int | float:
    """Threshold value: an ``int`` for the integral families, a ``float`` otherwise."""
    value = exact_threshold(family, g)
    return float(value) if isinstance(value, Surd) else value


def defect_bound(family: str, g: int) -> int:
    """Integer defect to use for a family: real thresholds are floored."""
    value = exact_threshold(family, g)
    return value.floor() if isinstance(value, Surd) else value


# quadratic p(K) = K^2 + lin*K + const(g); p must be 1 at the square-root thresholds
_QUADRATIC = {
    "2kk": (-76, lambda g: -84 * g - 237),
    "00kk": (-40, lambda g: -48 * g - 80),
    "girth7": (-10, lambda g: 4 - 14 * g),
}


def residual(family: str, g: int, K=None):
    """Value of the family's quadratic in ``K`` (default: the family threshold).

    With ``K`` omitted the square-root families are evaluated exactly, so
    the result is an ``int``.  A float ``K`` gives a float.
    """
    _check(family, g)
    if family not in _QUADRATIC:
        raise PreconditionError(f"family {family!r} has no defining quadratic")
    lin, const = _QUADRATIC[family]
    if K is None:
        K = exact_threshold(family, g)
    if isinstance(K, Surd):
        # (a + r)^2 + lin (a + r) with r = sqrt(b): the r terms carry 2a + lin
        if 2 * K.a + lin != 0:
            raise PreconditionError("surd does not cancel for this threshold")
        return K.a * K.a + K.b + lin * K.a + const(g)
    return K * K + lin * K + const(g)
