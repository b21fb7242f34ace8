"""Schur-parameter generation of bounded analytic functions.

A sequence ``g_0, ..., g_{d-1}`` in the closed unit disk defines a function
with sup-norm at most one through the backward recursion

    f_k = (g_k + z f_{k+1}) / (1 + conj(g_k) z f_{k+1}),    f_d = 0,

and ``f = f_0``. A parameter on the unit circle makes ``f_k`` the unimodular
constant ``g_k`` and the deeper parameters are ignored.

Members of the two coefficient classes are built from such an ``f``:

* ``omega_from_schur``: ``omega' = f``, so ``|omega'| <= 1`` (the smaller class);
* ``b0_from_schur``: ``omega = z f``, so ``|omega| < 1`` on the disk.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .power_series import (
    DEFAULT_ORDER,
    Series,
    _antiderivative,
    _mul,
    _reciprocal,
    reciprocal,
)

__all__ = [
    "SchurParams",
    "OmegaCoeffs",
    "NotSchurError",
    "schur_to_series",
    "schur_eval",
    "series_to_schur",
    "sample_params",
    "omega_from_schur",
    "b0_from_schur",
    "sample_batch",
    "schur_series_batch",
    "omega_batch",
    "b0_batch",
]

PARAM_SLACK = 1e-15
UNIT_TOL = 1e-12


class NotSchurError(ValueError):
    """The forward Schur algorithm produced a parameter outside the closed disk."""


@dataclass(frozen=True)
class SchurParams:
    params: tuple[complex, ...]

    def __post_init__(self):
        ps = tuple(complex(p) for p in np.atleast_1d(np.asarray(self.params, dtype=complex)))
        if not ps:
            raise ValueError("at least one Schur parameter is required")
        for p in ps:
            if not np.isfinite(p):
                raise ValueError("Schur parameters must be finite")
            if abs(p) > 1 + PARAM_SLACK:
                raise ValueError(f"Schur parameter {p!r} lies outside the closed unit disk")
        object.__setattr__(self, "params", ps)

    @property
    def depth(self) -> int:
        return len(self.params)

    def effective(self) -> tuple[complex, ...]:
        """Parameters up to and including the first unimodular one."""
        for i, p in enumerate(self.params):
            if abs(p) >= 1 - UNIT_TOL:
                return self.params[: i + 1]
        return self.params

    def as_array(self, depth: int | None = None) -> np.ndarray:
        out = np.zeros(depth or self.depth, dtype=complex)
        out[: self.depth] = self.params
        return out


@dataclass(frozen=True, eq=False)
class OmegaCoeffs:
    """Coefficients ``c_1..c_N`` of ``omega = sum c_k z**k`` (``c_0 = 0``)."""

    c: np.ndarray

    def __post_init__(self):
        c = np.array(self.c, dtype=complex).reshape(-1)
        c.setflags(write=False)
        object.__setattr__(self, "c", c)

    def __getitem__(self, k: int) -> complex:
        """1-based coefficient access, ``w[1]`` is ``c_1``."""
        if k < 1 or k > self.c.size:
            raise IndexError(f"coefficient index {k} outside 1..{self.c.size}")
        return self.c[k - 1]

    @property
    def order(self) -> int:
        return self.c.size

    def as_series(self) -> Series:
        return Series(np.concatenate([[0], self.c]))


def _unimodular(g):
    return g / np.abs(g)


def _schur_kernel(params: np.ndarray, order: int, depth_per_row=None) -> np.ndarray:
    """Backward recursion on a batch of parameter rows ``(B, d)``; returns ``(B, order+1)``."""
    params = np.asarray(params, dtype=complex)
    if params.ndim == 1:
        params = params[None, :]
    nrow, depth = params.shape
    n = order + 1
    f = np.zeros((nrow, n), dtype=complex)
    z = np.zeros(n, dtype=complex)
    if n > 1:
        z[1] = 1.0
    for k in range(depth - 1, -1, -1):
        g = params[:, k][:, None]
        zf = _mul(z, f)
        num = zf * 1.0
        num[:, 0] += g[:, 0]
        den = np.conj(g) * zf
        den[:, 0] += 1.0
        fk = _mul(num, _reciprocal(den))
        # unimodular parameter: f_k is the constant g_k
        unit = np.abs(g[:, 0]) >= 1 - UNIT_TOL
        if unit.any():
            fk[unit] = 0.0
            fk[unit, 0] = _unimodular(g[unit, 0])
        if depth_per_row is not None:
            beyond = k >= depth_per_row
            fk[beyond] = 0.0
        f = fk
    return f


def schur_to_series(p: SchurParams, order: int = DEFAULT_ORDER) -> Series:
    """Taylor expansion to ``order`` of the Schur function with parameters ``p``."""
    return Series(_schur_kernel(np.array(p.params), order)[0])


def schur_eval(p: SchurParams, z) -> complex:
    """Exact pointwise value of the Schur function at ``|z| < 1`` (no truncation)."""
    z = complex(z)
    if abs(z) >= 1:
        raise ValueError(f"|z| = {abs(z)} is outside the open unit disk")
    f = 0j
    for g in reversed(p.effective()):
        if abs(g) >= 1 - UNIT_TOL:
            f = g / abs(g)
            continue
        zf = z * f
        f = (g + zf) / (1 + g.conjugate() * zf)
    return f


def series_to_schur(f: Series, depth: int, tol: float = 1e-9) -> SchurParams:
    """Forward Schur algorithm: extract up to ``depth`` parameters from ``f``.

    Raises :class:`NotSchurError` when some parameter exceeds modulus
    ``1 + tol``, or when a unimodular parameter is followed by a nonzero
    remainder. A unimodular parameter with vanishing remainder ends the
    list early.
    """
    if depth < 1 or depth > max(f.order, 1):
        raise ValueError(f"depth must lie in 1..{max(f.order, 1)}, got {depth}")
    cur = f.coeffs.copy()
    out = []
    for _ in range(depth):
        g = cur[0]
        if abs(g) > 1 + tol:
            raise NotSchurError(f"parameter {g!r} has modulus {abs(g):.12g} > 1")
        out.append(g)
        if abs(g) >= 1 - tol:
            if np.any(np.abs(cur[1:]) > tol):
                raise NotSchurError("unimodular parameter followed by a nonconstant remainder")
            return SchurParams(tuple(out[:-1]) + (g / abs(g),))
        if cur.size == 1:
            break
        num = cur.copy()
        num[0] -= g
        den = -np.conj(g) * cur
        den[0] += 1.0
        q = Series(num) * reciprocal(Series(den))
        cur = q.coeffs[1:].copy()
    return SchurParams(tuple(out))


def sample_params(rng, depth: int, fixed_modulus: float | None = None) -> SchurParams:
    """Draw parameters: area-uniform on the disk, ``g_0`` optionally pinned in modulus.

    ``rng`` is anything accepted by :func:`numpy.random.default_rng`.
    """
    rng = np.random.default_rng(rng)
    return SchurParams(tuple(sample_batch(rng, 1, depth, fixed_modulus)[0]))


def sample_batch(rng, size: int, depth: int, fixed_modulus: float | None = None) -> np.ndarray:
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if fixed_modulus is not None and not 0 <= fixed_modulus <= 1:
        raise ValueError("fixed modulus must lie in [0, 1]")
    rng = np.random.default_rng(rng)
    r = np.sqrt(rng.random((size, depth)))
    phase = rng.random((size, depth)) * 2 * np.pi
    if fixed_modulus is not None:
        r[:, 0] = fixed_modulus
    return r * np.exp(1j * phase)


def schur_series_batch(params: np.ndarray, order: int, depth_per_row=None) -> np.ndarray:
    return _schur_kernel(params, order, depth_per_row)


def omega_batch(params: np.ndarray, order: int = 4, depth_per_row=None) -> np.ndarray:
    """Rows ``c_1..c_order`` of ``omega = int f`` for each parameter row."""
    f = _schur_kernel(params, order - 1, depth_per_row)
    return _antiderivative(f)[:, 1:]


def b0_batch(params: np.ndarray, order: int = 4, depth_per_row=None) -> np.ndarray:
    """Rows ``c_1..c_order`` of ``omega = z f`` for each parameter row."""
    return _schur_kernel(params, order - 1, depth_per_row)


def omega_from_schur(p: SchurParams, order: int = DEFAULT_ORDER) -> OmegaCoeffs:
    """Coefficients of ``omega`` with ``omega' = f_p``: ``c_k = f_{k-1} / k``."""
    return OmegaCoeffs(omega_batch(np.array(p.params), order)[0])


def b0_from_schur(p: SchurParams, order: int = DEFAULT_ORDER) -> OmegaCoeffs:
    """Coefficients of ``omega = z f_p``: ``c_{k+1} = f_k``."""
    return OmegaCoeffs(b0_batch(np.array(p.params), order)[0])
