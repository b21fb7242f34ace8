"""Multistart coordinate pattern search over Schur parameters with ``|c_1|`` pinned.

Decision vector of one start (length ``2*depth - 1``)::

    [phase(g_0), |g_1|, phase(g_1), ..., |g_{d-1}|, phase(g_{d-1})]

with ``|g_0| = t`` fixed. Moduli are clipped to ``[0, 1]`` and phases wrapped
after every move, so each probe is a genuine member of the class. All starts
advance in lockstep so that one probe of one coordinate is a single batched
objective call; starts never interact, so the result is the same as running
them one by one.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .bounds import FunctionalSpec, functional_array, operative_bound
from .extremals import Extremal, witness_params
from .schur import SchurParams, omega_batch

__all__ = ["OptConfig", "OptReport", "maximize", "sweep", "witnesses_for", "thread_count"]

THREADS_ENV = "SCHWARZ_BOUNDS_THREADS"


@dataclass(frozen=True)
class OptConfig:
    depth: int = 6
    starts: int = 64
    iters: int = 200
    shrink: float = 0.5
    init_step: float = 0.25
    seed: int = 0
    tol: float = 1e-10
    use_witnesses: bool = True
    record_history: bool = False

    def __post_init__(self):
        if self.depth < 1 or self.starts < 1 or self.iters < 1:
            raise ValueError("depth, starts and iters must be positive")
        if not 0 < self.shrink < 1:
            raise ValueError("shrink must lie in (0, 1)")
        if self.init_step <= 0 or self.tol <= 0:
            raise ValueError("init_step and tol must be positive")


@dataclass(frozen=True, eq=False)
class OptReport:
    t: float
    empirical_max: float
    bound: float
    gap: float
    argmax: SchurParams
    evaluations: int
    bound_name: str = ""
    branch: str = ""
    spec: FunctionalSpec | None = None
    # (sweeps + 1, starts) incumbent values when OptConfig.record_history is set
    history: np.ndarray | None = field(default=None, repr=False)

    def as_row(self) -> dict:
        return {
            "t": self.t,
            "empirical_max": self.empirical_max,
            "bound": self.bound,
            "gap": self.gap,
            "evaluations": self.evaluations,
        }


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "0")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0")
    return n or (os.cpu_count() or 1)


def witnesses_for(spec: FunctionalSpec, t: float) -> list[SchurParams]:
    """Known extremals with ``|c_1| = t`` that are relevant to ``spec``."""
    out = []
    if spec.kind == "F1" and t == 0:
        out.append(witness_params(Extremal("omega1")))
    if spec.kind in ("F1", "F2"):
        out.append(witness_params(Extremal("omega2", t)))
    if spec.kind == "F3":
        out.append(witness_params(Extremal("omega3", t)))
    return out


def _wrap(phase):
    return np.mod(phase + np.pi, 2 * np.pi) - np.pi


def _project(x: np.ndarray) -> np.ndarray:
    x[:, 1::2] = np.clip(x[:, 1::2], 0.0, 1.0)
    x[:, 0::2] = _wrap(x[:, 0::2])
    return x


def _to_params(x: np.ndarray, t: float) -> np.ndarray:
    nrow, m = x.shape
    depth = (m + 1) // 2
    p = np.empty((nrow, depth), dtype=complex)
    p[:, 0] = t * np.exp(1j * x[:, 0])
    p[:, 1:] = x[:, 1::2] * np.exp(1j * x[:, 2::2])
    return p


def _from_params(p: SchurParams, t: float, depth: int) -> np.ndarray:
    g = p.as_array(depth)
    x = np.zeros(2 * depth - 1)
    x[0] = np.angle(g[0]) if t > 0 else 0.0
    x[1::2] = np.abs(g[1:])
    x[2::2] = np.angle(g[1:])
    return x


def _initial_points(spec, t, cfg, rng) -> np.ndarray:
    m = 2 * cfg.depth - 1
    known = witnesses_for(spec, t) if cfg.use_witnesses else []
    seeds = [_from_params(w, t, cfg.depth) for w in known if w.depth <= cfg.depth]
    seeds = seeds[: cfg.starts]
    nrand = cfg.starts - len(seeds)
    x = np.empty((nrand, m))
    x[:, 0::2] = rng.uniform(-np.pi, np.pi, size=(nrand, cfg.depth))
    x[:, 1::2] = np.sqrt(rng.random((nrand, cfg.depth - 1)))
    return _project(np.vstack([np.array(seeds).reshape(-1, m), x]))


def maximize(spec: FunctionalSpec, t: float, cfg: OptConfig = OptConfig(), *,
             variant: str | None = None, rng=None) -> OptReport:
    """Maximize ``spec`` over members with ``|c_1| = t``.

    Start 0 is an extremal witness whenever one is known for ``spec``.
    ``variant`` picks the comparison bound for ``F2`` (see
    :func:`schwarz_bounds.bounds.operative_bound`).
    """
    bound, name = operative_bound(spec, t, variant)  # validates t
    t = float(min(max(t, 0.0), 1.0))
    rng = np.random.default_rng(cfg.seed if rng is None else rng)

    def objective(x):
        return functional_array(spec, omega_batch(_to_params(x, t), 4))

    x = _initial_points(spec, t, cfg, rng)
    nstart, m = x.shape
    fx = objective(x)
    evaluations = nstart
    step = np.full(nstart, cfg.init_step)
    active = np.ones(nstart, dtype=bool)
    history = [fx.copy()] if cfg.record_history else None

    for _ in range(cfg.iters):
        if not active.any():
            break
        improved = np.zeros(nstart, dtype=bool)
        for j in range(m):
            pending = active.copy()
            for sign in (1.0, -1.0):
                rows = np.flatnonzero(pending)
                if rows.size == 0:
                    break
                cand = x[rows].copy()
                cand[:, j] += sign * step[rows]
                _project(cand)
                fc = objective(cand)
                evaluations += rows.size
                better = fc > fx[rows]
                won = rows[better]
                x[won] = cand[better]
                fx[won] = fc[better]
                improved[won] = True
                pending[won] = False
        step[active & ~improved] *= cfg.shrink
        active &= step >= cfg.tol
        if history is not None:
            history.append(fx.copy())

    # ties resolved by lowest start index
    best = int(np.argmax(fx))
    argmax = SchurParams(tuple(_to_params(x[best : best + 1], t)[0]))
    emp = float(fx[best])
    return OptReport(
        t=t,
        empirical_max=emp,
        bound=bound.value,
        gap=bound.value - emp,
        argmax=argmax,
        evaluations=int(evaluations),
        bound_name=name,
        branch=bound.branch,
        spec=spec,
        history=None if history is None else np.array(history),
    )


def sweep(spec: FunctionalSpec, t_grid, cfg: OptConfig = OptConfig(), *,
          variant: str | None = None, threads: int | None = None) -> list[OptReport]:
    """One :func:`maximize` per grid point; point ``i`` uses seed ``(cfg.seed, i)``."""
    grid = [float(t) for t in t_grid]
    for t in grid:
        operative_bound(spec, t, variant)
    seeds = np.random.SeedSequence(cfg.seed).spawn(len(grid))

    def run(i):
        return maximize(spec, grid[i], cfg, variant=variant, rng=np.random.default_rng(seeds[i]))

    workers = min(threads or thread_count(), max(len(grid), 1))
    if workers <= 1:
        return [run(i) for i in range(len(grid))]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, range(len(grid))))


def with_depth(cfg: OptConfig, depth: int) -> OptConfig:
    return replace(cfg, depth=depth)
