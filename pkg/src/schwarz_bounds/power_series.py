"""Truncated power series over complex coefficients.

A :class:`Series` of order ``N`` stores the Taylor coefficients ``a_0..a_N``
of an analytic function; every operation truncates at the order of its
result, so coefficient ``k`` of an output depends only on coefficients
``0..k`` of the inputs.

The array kernels (``_mul``, ``_reciprocal``, ...) act on the last axis and
broadcast over any leading axes, which lets :mod:`schwarz_bounds.schur`
expand whole batches of Schur functions at once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Series",
    "SeriesOrderError",
    "SingularSeriesError",
    "DEFAULT_ORDER",
    "add",
    "mul",
    "reciprocal",
    "divide",
    "derivative",
    "antiderivative",
    "monomial_substitute",
]

DEFAULT_ORDER = 10
SINGULAR_THRESHOLD = 1e-9


class SeriesOrderError(ValueError):
    """Operands of a binary series operation have different orders."""


class SingularSeriesError(ZeroDivisionError):
    """Reciprocal requested of a series whose constant term vanishes."""


def _as_cx(x) -> complex:
    z = complex(x)
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ValueError(f"non-finite coefficient {x!r}")
    return z


@dataclass(frozen=True, eq=False)
class Series:
    """Truncated Taylor expansion ``sum_k coeffs[k] z**k`` for ``k <= order``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).reshape(-1)
        if c.size == 0:
            raise ValueError("a series needs at least the constant coefficient")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zeros(cls, order: int = DEFAULT_ORDER) -> Series:
        return cls(np.zeros(order + 1, dtype=complex))

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> Series:
        c = np.zeros(order + 1, dtype=complex)
        c[0] = _as_cx(value)
        return cls(c)

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> Series:
        """Build a series from a coefficient list, zero-padding or truncating to ``order``."""
        c = np.asarray(coeffs, dtype=complex).reshape(-1)
        if order is None:
            return cls(c)
        out = np.zeros(order + 1, dtype=complex)
        n = min(order + 1, c.size)
        out[:n] = c[:n]
        return cls(out)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.coeffs.size

    def truncate(self, order: int) -> Series:
        return Series.from_coeffs(self.coeffs, order)

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __neg__(self):
        return Series(-self.coeffs)

    def __sub__(self, other):
        return add(self, -other)

    def __repr__(self):
        return f"Series(order={self.order}, coeffs={np.array2string(self.coeffs, precision=6)})"


def _check_orders(a: Series, b: Series):
    if a.order != b.order:
        raise SeriesOrderError(f"order mismatch: {a.order} != {b.order}")


# --- array kernels (last axis = coefficient index) -------------------------


def _mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=complex)
    for k in range(n):
        out[..., k] = np.sum(a[..., : k + 1] * b[..., k::-1], axis=-1)
    return out


def _reciprocal(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    out = np.zeros(a.shape, dtype=complex)
    inv0 = 1.0 / a[..., 0]
    out[..., 0] = inv0
    for k in range(1, n):
        out[..., k] = -inv0 * np.sum(a[..., 1 : k + 1] * out[..., k - 1 :: -1], axis=-1)
    return out


def _derivative(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    if n == 1:
        return np.zeros(a.shape, dtype=complex)
    return a[..., 1:] * np.arange(1, n)


def _antiderivative(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    out = np.zeros(a.shape[:-1] + (n + 1,), dtype=complex)
    out[..., 1:] = a / np.arange(1, n + 1)
    return out


# --- public series operations ----------------------------------------------


def add(a: Series, b: Series) -> Series:
    _check_orders(a, b)
    return Series(a.coeffs + b.coeffs)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    return Series(_mul(a.coeffs, b.coeffs))


def reciprocal(a: Series) -> Series:
    """Series ``b`` with ``a*b = 1 + O(z**(N+1))``.

    Raises :class:`SingularSeriesError` when ``|a_0| <= 1e-9``.
    """
    if abs(a.coeffs[0]) <= SINGULAR_THRESHOLD:
        raise SingularSeriesError(f"constant term {a.coeffs[0]!r} is (numerically) zero")
    return Series(_reciprocal(a.coeffs))


def divide(a: Series, b: Series) -> Series:
    return mul(a, reciprocal(b))


def derivative(a: Series) -> Series:
    """d/dz, returned at order ``N-1`` (a constant maps to the order-0 zero series)."""
    return Series(_derivative(a.coeffs))


def antiderivative(a: Series) -> Series:
    """Integral from 0, returned at order ``N+1``."""
    return Series(_antiderivative(a.coeffs))


def monomial_substitute(a: Series, m: int) -> Series:
    """The series of ``a(z**m)`` at the same order; terms past ``z**N`` are dropped."""
    if int(m) != m or m < 1:
        raise ValueError(f"substitution exponent must be a positive integer, got {m!r}")
    m = int(m)
    out = np.zeros_like(a.coeffs)
    src = a.coeffs[: a.order // m + 1]
    out[:: m][: src.size] = src
    return Series(out)
