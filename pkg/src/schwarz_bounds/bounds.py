"""Closed-form coefficient bounds and the three coefficient functionals.

All bounds are functions of ``t = |c_1|`` (and ``|mu|`` where present).
The piecewise ones come from maximizing a concave quadratic in ``|c_2|``
over ``[0, (1 - t**2)/2]``; the returned :class:`BoundValue` records which
piece was used. At a split point both pieces agree and the first-listed
label is returned.

The ``*_array`` helpers hold the formulas once and broadcast over numpy
arrays; the scalar functions add domain checks and branch labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "FunctionalSpec",
    "BoundValue",
    "DomainError",
    "TH3_VARIANTS",
    "functional_value",
    "functional_array",
    "bound_lemma1",
    "bound_lemma2",
    "bound_th1",
    "bound_th2",
    "bound_th3",
    "bound_th4",
    "bound_th5",
    "th2_split",
    "th4_split",
    "operative_bound",
]

DOMAIN_SLACK = 1e-12
TH3_VARIANTS = ("stated", "proof_final", "remark")

TH2_BRANCHES = ("interior-vertex", "endpoint")
TH4_BRANCHES = ("c2-zero", "endpoint")
SINGLE_BRANCH = "single"


class DomainError(ValueError):
    """Argument outside the domain on which a bound is defined."""


@dataclass(frozen=True)
class FunctionalSpec:
    """``F1 = |c3 - mu c1 c2|``, ``F2 = |c1 c3 - mu c2^2|``, ``F3 = |c4 - c2^2|``."""

    kind: str
    mu: complex = 1.0

    def __post_init__(self):
        if self.kind not in ("F1", "F2", "F3"):
            raise ValueError(f"unknown functional {self.kind!r}")
        mu = complex(self.mu)
        if not np.isfinite(mu):
            raise ValueError("mu must be finite")
        if self.kind == "F3":
            mu = 1.0 + 0j
        object.__setattr__(self, "mu", mu)

    @property
    def mu_abs(self) -> float:
        return abs(self.mu)

    def describe(self) -> str:
        if self.kind == "F3":
            return "|c4 - c2^2|"
        mu = _fmt_mu(self.mu)
        if self.kind == "F1":
            return f"|c3 - {mu} c1 c2|"
        return f"|c1 c3 - {mu} c2^2|"


def _fmt_mu(mu: complex) -> str:
    if mu.imag == 0:
        return f"{mu.real:g}"
    return f"({mu.real:g}{mu.imag:+g}i)"


class BoundValue(NamedTuple):
    value: float
    branch: str


def functional_array(spec: FunctionalSpec, c: np.ndarray) -> np.ndarray:
    """Functional evaluated on rows ``(c_1, c_2, c_3, c_4, ...)``."""
    c = np.asarray(c)
    c1, c2, c3 = c[..., 0], c[..., 1], c[..., 2]
    if spec.kind == "F1":
        return np.abs(c3 - spec.mu * c1 * c2)
    if spec.kind == "F2":
        return np.abs(c1 * c3 - spec.mu * c2 * c2)
    return np.abs(c[..., 3] - c2 * c2)


def functional_value(spec: FunctionalSpec, w) -> float:
    """Value of the functional on a class member ``w`` (an ``OmegaCoeffs``)."""
    c = np.asarray(getattr(w, "c", w))
    if c.shape[-1] < 4:
        raise ValueError(f"need at least 4 coefficients, got {c.shape[-1]}")
    return float(functional_array(spec, c))


# --- domain checks -----------------------------------------------------------


def _check_t(t: float) -> float:
    t = float(t)
    if not np.isfinite(t) or t < -DOMAIN_SLACK or t > 1 + DOMAIN_SLACK:
        raise DomainError(f"|c1| = {t!r} outside [0, 1]")
    return min(max(t, 0.0), 1.0)


def _check_mu(mu_abs: float) -> float:
    mu_abs = float(mu_abs)
    if not np.isfinite(mu_abs) or mu_abs < 0:
        raise DomainError(f"|mu| = {mu_abs!r} must be finite and nonnegative")
    return mu_abs


# --- Carlson-type bounds -------------------------------------------------------


def lemma1_array(c1, c2):
    c1, c2 = np.asarray(c1, dtype=float), np.asarray(c2, dtype=float)
    b2 = 1 - c1**2
    b3 = 1 - c1**2 - c2**2 / (1 + c1)
    b4 = 1 - c1**2 - c2**2
    return b2, b3, b4


def lemma2_array(c1, c2):
    c1, c2 = np.asarray(c1, dtype=float), np.asarray(c2, dtype=float)
    b2 = (1 - c1**2) / 2
    b3 = (1 - c1**2 - 4 * c2**2 / (1 + c1)) / 3
    b4 = (1 - c1**2 - 4 * c2**2) / 4
    return b2, b3, b4


def bound_lemma1(c1_abs: float, c2_abs: float) -> tuple[float, float, float]:
    """Bounds on ``|c2|, |c3|, |c4|`` for ``|omega| < 1``."""
    t = _check_t(c1_abs)
    if c2_abs < -DOMAIN_SLACK or c2_abs > 1 - t * t + 1e-9:
        raise DomainError(f"|c2| = {c2_abs!r} outside [0, 1 - |c1|^2]")
    return tuple(float(b) for b in lemma1_array(t, max(c2_abs, 0.0)))


def bound_lemma2(c1_abs: float, c2_abs: float) -> tuple[float, float, float]:
    """Bounds on ``|c2|, |c3|, |c4|`` for ``|omega'| <= 1``."""
    t = _check_t(c1_abs)
    if c2_abs < -DOMAIN_SLACK or c2_abs > (1 - t * t) / 2 + 1e-9:
        raise DomainError(f"|c2| = {c2_abs!r} outside [0, (1 - |c1|^2)/2]")
    return tuple(float(b) for b in lemma2_array(t, max(c2_abs, 0.0)))


# --- functional bounds ------------------------------------------------------


def th2_split(mu_abs: float) -> float:
    return 1.0 / (1.0 + 0.75 * mu_abs)


def th2_branches(mu_abs, t):
    """Both pieces of the ``|c3 - mu c1 c2|`` bound, unselected."""
    t = np.asarray(t, dtype=float)
    vertex = (1 + t) * (9 * mu_abs**2 * t**2 - 16 * t + 16) / 48
    endpoint = (1 / 3 + mu_abs / 2) * t * (1 - t**2)
    return vertex, endpoint


def th2_array(mu_abs, t):
    vertex, endpoint = th2_branches(mu_abs, t)
    first = np.asarray(t) <= th2_split(mu_abs)
    return np.where(first, vertex, endpoint), first


def bound_th2(mu_abs: float, t: float) -> BoundValue:
    """Bound on ``|c3 - mu c1 c2|`` at ``|c1| = t``; split at ``1/(1 + 3|mu|/4)``."""
    mu_abs, t = _check_mu(mu_abs), _check_t(t)
    value, first = th2_array(mu_abs, t)
    return BoundValue(float(value), TH2_BRANCHES[0] if first else TH2_BRANCHES[1])


def bound_th1(t: float) -> BoundValue:
    """Bound on ``|c3 - c1 c2|``; the ``mu = 1`` case, split at ``4/7``."""
    return bound_th2(1.0, t)


def th3_array(t, variant: str = "remark"):
    t = np.asarray(t, dtype=float)
    if variant == "stated":
        return (1 - t**2) * (3 + t**2) / 42
    if variant == "proof_final":
        return (1 - t**2) * (2 + t**2) / 12
    if variant == "remark":
        return (3 - 2 * t**2 - t**4) / 12
    raise ValueError(f"unknown variant {variant!r}; expected one of {TH3_VARIANTS}")


def bound_th3(t: float, variant: str = "remark") -> float:
    """Bound on ``|c1 c3 - c2^2|``.

    ``stated`` uses the prefactor 1/42, ``proof_final`` the last line
    ``(1 - t^2)(2 + t^2)/12`` of the derivation, and ``remark`` the value
    ``(3 - 2t^2 - t^4)/12 = (1 - t^2)(3 + t^2)/12``. Only ``remark`` is sound
    and sharp; it is the operative bound.
    """
    if variant not in TH3_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {TH3_VARIANTS}")
    return float(th3_array(_check_t(t), variant))


def th4_split(t: float) -> float:
    """``|mu|`` at or below which the ``c2 = 0`` piece applies."""
    return 4 * t / (3 * (1 + t))


def th4_branches(mu_abs, t):
    t = np.asarray(t, dtype=float)
    zero = t * (1 - t**2) / 3
    endpoint = (3 * mu_abs + 2 * (2 - 3 * mu_abs) * t**2 - (4 - 3 * mu_abs) * t**4) / 12
    return zero, endpoint


def th4_array(mu_abs, t):
    zero, endpoint = th4_branches(mu_abs, t)
    first = mu_abs <= 4 * np.asarray(t) / (3 * (1 + np.asarray(t)))
    return np.where(first, zero, endpoint), first


def bound_th4(mu_abs: float, t: float) -> BoundValue:
    """Bound on ``|c1 c3 - mu c2^2|`` at ``|c1| = t``."""
    mu_abs, t = _check_mu(mu_abs), _check_t(t)
    value, first = th4_array(mu_abs, t)
    return BoundValue(float(value), TH4_BRANCHES[0] if first else TH4_BRANCHES[1])


def th5_array(t):
    t = np.asarray(t, dtype=float)
    return (1 - t**2) / 4


def bound_th5(t: float) -> float:
    """Bound on ``|c4 - c2^2|``."""
    return float(th5_array(_check_t(t)))


def operative_bound(spec: FunctionalSpec, t: float, variant: str | None = None) -> tuple[BoundValue, str]:
    """The sound bound to compare ``spec`` against, with the name of the bound used.

    ``variant`` selects one of the |c1 c3 - c2^2| bound forms for ``F2`` and requires ``|mu| = 1``.
    """
    if spec.kind == "F1":
        name = "th1" if spec.mu_abs == 1 else "th2"
        return bound_th2(spec.mu_abs, t), name
    if spec.kind == "F2":
        if variant is not None:
            if not np.isclose(spec.mu_abs, 1.0, rtol=0, atol=1e-15):
                raise ValueError("bound variants apply only to |mu| = 1")
            return BoundValue(bound_th3(t, variant), SINGLE_BRANCH), f"th3_{variant}"
        return bound_th4(spec.mu_abs, t), "th4"
    return BoundValue(bound_th5(t), SINGLE_BRANCH), "th5"
