"""Extremal functions attaining the bounds, in closed form and via the series engine.

``omega1 = z^3/3``; ``omega2 = int (t + z)/(1 + t z)``;
``omega3 = int (t + z^3)/(1 + t z^3)``.

Integrating ``omega3'`` term by term gives a ``z^7`` term
``-t(1 - t^2) z^7 / 7`` and no ``z^6`` term.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .power_series import Series, antiderivative, divide, monomial_substitute
from .schur import OmegaCoeffs, SchurParams

__all__ = [
    "Extremal",
    "KINDS",
    "extremal_coeffs",
    "extremal_via_series",
    "witness_params",
]

KINDS = ("omega1", "omega2", "omega3")


@dataclass(frozen=True)
class Extremal:
    kind: str
    t: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown extremal {self.kind!r}; expected one of {KINDS}")
        t = float(self.t)
        if not 0 <= t <= 1:
            raise ValueError(f"t = {t!r} outside [0, 1]")
        if self.kind == "omega1":
            t = 0.0
        object.__setattr__(self, "t", t)


def _check_order(order: int):
    if order < 4:
        raise ValueError(f"order must be >= 4, got {order}")


def extremal_coeffs(kind: Extremal, order: int = 10) -> OmegaCoeffs:
    _check_order(order)
    c = np.zeros(order, dtype=complex)  # c[k-1] is c_k
    t = kind.t
    if kind.kind == "omega1":
        c[2] = 1 / 3
        return OmegaCoeffs(c)
    c[0] = t
    if kind.kind == "omega2":
        for k in range(1, order):
            c[k] = (1 - t * t) * (-t) ** (k - 1) / (k + 1)
    else:
        j = 1
        while 3 * j + 1 <= order:
            c[3 * j] = (1 - t * t) * (-t) ** (j - 1) / (3 * j + 1)
            j += 1
    return OmegaCoeffs(c)


def _derivative_series(kind: Extremal, order: int) -> Series:
    """``omega'`` to ``order - 1`` built from series operations."""
    n = order - 1
    t = kind.t
    if kind.kind == "omega1":
        return Series.from_coeffs([0, 0, 1], n)
    num = Series.from_coeffs([t, 1], n)
    den = Series.from_coeffs([1, t], n)
    mobius = divide(num, den)
    if kind.kind == "omega2":
        return mobius
    return monomial_substitute(mobius, 3)


def extremal_via_series(kind: Extremal, order: int = 10) -> OmegaCoeffs:
    _check_order(order)
    omega = antiderivative(_derivative_series(kind, order))
    return OmegaCoeffs(omega.coeffs[1:])


def witness_params(kind: Extremal) -> SchurParams:
    """Schur parameters of ``omega'`` for the extremal ``kind``."""
    if kind.kind == "omega1":
        return SchurParams((0, 0, 1))
    if kind.kind == "omega2":
        return SchurParams((kind.t, 1))
    # (t + z^3)/(1 + t z^3): Mobius map composed with z^3
    return SchurParams((kind.t, 0, 0, 1))
