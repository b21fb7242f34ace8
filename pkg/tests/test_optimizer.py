import numpy as np
import pytest

from schwarz_bounds.bounds import FunctionalSpec, bound_th1, bound_th3
from schwarz_bounds.optimizer import OptConfig, maximize, sweep, thread_count, witnesses_for
from schwarz_bounds.schur import schur_eval

from conftest import cauchy_coeffs

FAST = OptConfig(starts=16, iters=120)


def test_sharp_region_th1():
    r = maximize(FunctionalSpec("F1", 1), 0.8, FAST)
    assert r.bound == pytest.approx(0.24)
    assert abs(r.empirical_max - 0.24) < 1e-3
    assert r.empirical_max <= r.bound + 1e-9
    assert r.gap == pytest.approx(r.bound - r.empirical_max)
    assert r.bound_name == "th1" and r.branch == "endpoint"


def test_remark_constant():
    r = maximize(FunctionalSpec("F1", 1), 0.0, FAST)
    assert 1 / 3 - 1e-3 <= r.empirical_max <= 1 / 3 + 1e-9


def test_rigid_at_one():
    r = maximize(FunctionalSpec("F3"), 1.0, FAST)
    assert r.empirical_max == pytest.approx(0, abs=1e-15)
    assert r.bound == 0


def test_determinism():
    a = maximize(FunctionalSpec("F2", 0.7), 0.4, FAST)
    b = maximize(FunctionalSpec("F2", 0.7), 0.4, FAST)
    assert a.empirical_max == b.empirical_max
    assert a.argmax == b.argmax
    assert a.evaluations == b.evaluations


def test_monotone_incumbent():
    cfg = OptConfig(starts=12, iters=60, record_history=True, use_witnesses=False)
    r = maximize(FunctionalSpec("F1", 1), 0.3, cfg)
    h = r.history
    assert h.shape[1] == 12
    assert np.all(np.diff(h, axis=0) >= 0)


def test_feasible_argmax_is_genuine_member():
    cfg = OptConfig(starts=16, iters=150, use_witnesses=False)
    t = 0.3
    r = maximize(FunctionalSpec("F1", 1), t, cfg)
    p = r.argmax
    assert all(abs(g) <= 1 + 1e-15 for g in p.params)
    assert abs(abs(p.params[0]) - t) < 1e-15
    # independent check of the reported maximum: pointwise membership and Cauchy coefficients
    z = 0.999 * np.exp(2j * np.pi * np.arange(400) / 400)
    assert max(abs(schur_eval(p, x)) for x in z) <= 1 + 1e-12
    f = cauchy_coeffs(p, 3)
    c1, c2, c3 = f[0], f[1] / 2, f[2] / 3
    assert abs(abs(c3 - c1 * c2) - r.empirical_max) < 1e-10


def test_witness_seeding_guarantees_value():
    cfg = OptConfig(starts=1, iters=1)
    assert maximize(FunctionalSpec("F3"), 0.6, cfg).empirical_max >= 0.16 - 1e-15
    assert maximize(FunctionalSpec("F2", 1), 0.0, cfg).empirical_max >= 0.25 - 1e-15
    assert maximize(FunctionalSpec("F1", 1), 0.0, cfg).empirical_max >= 1 / 3 - 1e-15


def test_witness_lists():
    assert len(witnesses_for(FunctionalSpec("F1"), 0.0)) == 2
    assert len(witnesses_for(FunctionalSpec("F1"), 0.3)) == 1
    assert witnesses_for(FunctionalSpec("F3"), 0.3)[0].params == (0.3, 0, 0, 1)


def test_shallow_depth_skips_deep_witness():
    # the omega3 witness needs four parameters and is dropped at depth 2
    r = maximize(FunctionalSpec("F3"), 0.0, OptConfig(depth=2, starts=4, iters=50))
    assert r.argmax.depth == 2
    assert r.empirical_max <= 0.25 + 1e-9


def test_domain_error():
    with pytest.raises(ValueError):
        maximize(FunctionalSpec("F1"), 1.5, FAST)
    with pytest.raises(ValueError):
        sweep(FunctionalSpec("F1"), [0.2, -0.1], FAST)


def test_sweep():
    assert sweep(FunctionalSpec("F1"), [], FAST) == []
    grid = [0.0, 0.5, 0.9]
    reps = sweep(FunctionalSpec("F1", 1), grid, FAST, threads=1)
    assert [r.t for r in reps] == grid
    again = sweep(FunctionalSpec("F1", 1), grid, FAST, threads=3)
    assert [r.empirical_max for r in reps] == [r.empirical_max for r in again]
    for r in reps:
        assert r.empirical_max <= bound_th1(r.t).value + 1e-9


def test_sweep_against_stated_variant():
    reps = sweep(FunctionalSpec("F2", 1), [0.0, 0.2], FAST, variant="stated")
    assert reps[0].empirical_max >= 0.249
    assert reps[0].bound == pytest.approx(1 / 14)
    assert all(r.empirical_max > r.bound for r in reps)
    assert all(r.empirical_max <= bound_th3(r.t, "remark") + 1e-9 for r in reps)


def test_config_validation():
    with pytest.raises(ValueError):
        OptConfig(shrink=1.0)
    with pytest.raises(ValueError):
        OptConfig(starts=0)


def test_thread_env(monkeypatch):
    monkeypatch.setenv("SCHWARZ_BOUNDS_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("SCHWARZ_BOUNDS_THREADS", "0")
    assert thread_count() >= 1
    monkeypatch.setenv("SCHWARZ_BOUNDS_THREADS", "x")
    with pytest.raises(ValueError):
        thread_count()
