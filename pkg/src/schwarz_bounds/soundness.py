"""Sampling harness: draw class members and record the worst residual of every inequality.

A residual is ``value - bound``; an inequality holds on the sample when its
maximum residual is at most ``RESIDUAL_TOL``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bounds as B
from .schur import SchurParams, b0_batch, omega_batch, sample_batch

__all__ = ["Check", "SoundnessReport", "soundness_sweep", "RESIDUAL_TOL"]

RESIDUAL_TOL = 1e-9
TH2_MUS = (0.0, 0.5, 2.0, 1.5j)
TH4_MUS = (0.0, 0.5, 1.0, 2.0)
BATCH = 25_000


@dataclass
class Check:
    name: str
    klass: str
    max_residual: float = -np.inf
    count: int = 0
    worst: SchurParams | None = None
    worst_depth: int = 0

    @property
    def ok(self) -> bool:
        return self.max_residual <= RESIDUAL_TOL

    def update(self, residual: np.ndarray, params: np.ndarray, depths: np.ndarray):
        i = int(np.argmax(residual))
        self.count += residual.size
        if residual[i] > self.max_residual:
            self.max_residual = float(residual[i])
            self.worst_depth = int(depths[i])
            self.worst = SchurParams(tuple(params[i, : depths[i]]))


@dataclass
class SoundnessReport:
    checks: list[Check]
    samples: int
    depth: int
    seed: int
    th3_variant: str

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def _mu_label(mu) -> str:
    mu = complex(mu)
    return f"{mu.real:g}" if mu.imag == 0 else f"{mu.imag:g}i"


def _bprime_residuals(c: np.ndarray, th3_variant: str) -> dict[str, np.ndarray]:
    a = np.abs(c)
    t = np.minimum(a[:, 0], 1.0)
    b2, b3, b4 = B.lemma2_array(t, a[:, 1])
    out = {
        "lemma2.c1": a[:, 0] - 1,
        "lemma2.c2": a[:, 1] - b2,
        "lemma2.c3": a[:, 2] - b3,
        "lemma2.c4": a[:, 3] - b4,
    }
    f1 = B.functional_array(B.FunctionalSpec("F1", 1.0), c)
    out["th1"] = f1 - B.th2_array(1.0, t)[0]
    for mu in TH2_MUS:
        f = B.functional_array(B.FunctionalSpec("F1", mu), c)
        out[f"th2.mu={_mu_label(mu)}"] = f - B.th2_array(abs(mu), t)[0]
    f2 = B.functional_array(B.FunctionalSpec("F2", 1.0), c)
    out[f"th3.{th3_variant}"] = f2 - B.th3_array(t, th3_variant)
    for mu in TH4_MUS:
        f = B.functional_array(B.FunctionalSpec("F2", mu), c)
        out[f"th4.mu={_mu_label(mu)}"] = f - B.th4_array(abs(mu), t)[0]
    out["th5"] = B.functional_array(B.FunctionalSpec("F3"), c) - B.th5_array(t)
    return out


def _b0_residuals(c: np.ndarray) -> dict[str, np.ndarray]:
    a = np.abs(c)
    t = np.minimum(a[:, 0], 1.0)
    b2, b3, b4 = B.lemma1_array(t, a[:, 1])
    return {
        "lemma1.c1": a[:, 0] - 1,
        "lemma1.c2": a[:, 1] - b2,
        "lemma1.c3": a[:, 2] - b3,
        "lemma1.c4": a[:, 3] - b4,
    }


def soundness_sweep(samples: int = 100_000, depth: int = 6, seed: int = 0,
                    th3_variant: str = "remark", min_depth: int = 2) -> SoundnessReport:
    """Check every inequality on ``samples`` members of each class.

    Each member has its own depth drawn uniformly from ``min_depth..depth``.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if th3_variant not in B.TH3_VARIANTS:
        raise ValueError(f"unknown variant {th3_variant!r}")
    lo = min(min_depth, depth)
    checks: dict[str, Check] = {}
    streams = np.random.SeedSequence(seed).spawn(2)
    for klass, make, residuals, ss in (
        ("B0'", omega_batch, lambda c: _bprime_residuals(c, th3_variant), streams[0]),
        ("B0", b0_batch, _b0_residuals, streams[1]),
    ):
        rng = np.random.default_rng(ss)
        done = 0
        while done < samples:
            n = min(BATCH, samples - done)
            depths = rng.integers(lo, depth + 1, size=n)
            params = sample_batch(rng, n, depth)
            params[np.arange(depth)[None, :] >= depths[:, None]] = 0
            c = make(params, 4, depths)
            for name, r in residuals(c).items():
                checks.setdefault(name, Check(name, klass)).update(r, params, depths)
            done += n
    return SoundnessReport(list(checks.values()), samples, depth, seed, th3_variant)
