"""Exit criteria. Each test records one PASS/FAIL line, printed in the terminal summary."""

import time

import numpy as np
import pytest

from schwarz_bounds import bounds as B
from schwarz_bounds.cli import main
from schwarz_bounds.extremals import Extremal, extremal_coeffs, extremal_via_series
from schwarz_bounds.optimizer import OptConfig, maximize, sweep
from schwarz_bounds.power_series import Series
from schwarz_bounds.schur import SchurParams, schur_eval, schur_to_series, series_to_schur
from schwarz_bounds.soundness import RESIDUAL_TOL, soundness_sweep

RESULTS: list[str] = []
GRID = np.linspace(0, 1, 101)
CFG = OptConfig()  # defaults: depth 6, 64 starts, 200 sweeps, seed 0


def record(label: str, ok: bool, detail: str):
    RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")
    assert ok, detail


@pytest.fixture(scope="module")
def soundness():
    start = time.perf_counter()
    report = soundness_sweep(samples=100_000, depth=6, seed=0, min_depth=2)
    return report, time.perf_counter() - start


def test_ac1_soundness_sweep(soundness, capsys):
    report, elapsed = soundness
    worst = max(c.max_residual for c in report.checks)
    code = main(["verify"])
    capsys.readouterr()
    ok = report.ok and worst <= RESIDUAL_TOL and elapsed < 60 and code == 0
    bad = ", ".join(c.name for c in report.failures()) or "none"
    record("AC1 soundness (1e5 per class, depths 2-6)", ok,
           f"max residual {worst:.3e} over {len(report.checks)} inequalities, violations: {bad}, "
           f"{elapsed:.2f}s, verify exit {code}")


def test_ac2_c3_c1c2_constant():
    r = maximize(B.FunctionalSpec("F1", 1), 0.0, CFG)
    w1 = B.functional_value(B.FunctionalSpec("F1", 1), extremal_coeffs(Extremal("omega1"), 6))
    ok = 1 / 3 - 1e-3 <= r.empirical_max <= 1 / 3 + 1e-9 and abs(w1 - 1 / 3) <= 1e-15
    record("AC2 max |c3-c1c2| at t=0 is 1/3", ok,
           f"optimizer {r.empirical_max:.15f}, omega1 error {abs(w1 - 1 / 3):.1e}")


def test_ac3_c3_c1c2_sharp_region():
    ts = [4 / 7, 0.7, 0.8, 0.9]
    spec = B.FunctionalSpec("F1", 1)
    reps = sweep(spec, ts, CFG)
    worst_gap, worst_over, worst_witness = 0.0, -np.inf, 0.0
    for t, r in zip(ts, reps):
        bound = B.bound_th1(t).value
        worst_gap = max(worst_gap, bound - r.empirical_max)
        worst_over = max(worst_over, r.empirical_max - bound)
        w = B.functional_value(spec, extremal_coeffs(Extremal("omega2", t), 6))
        worst_witness = max(worst_witness, abs(w - 5 / 6 * t * (1 - t * t)))
    ok = worst_gap <= 1e-3 and worst_over <= 1e-9 and worst_witness <= 1e-14
    record("AC3 |c3-c1c2| bound sharp on [4/7, 1]", ok,
           f"max gap {worst_gap:.2e}, max overshoot {worst_over:.1e}, omega2 error {worst_witness:.1e}")


def test_ac4_branch_continuity():
    v, e = B.th2_branches(1.0, 4 / 7)
    th1 = max(abs(v - 110 / 343), abs(e - 110 / 343))
    rng = np.random.default_rng(0)
    th2 = max(abs(np.subtract(*B.th2_branches(mu, B.th2_split(mu)))) for mu in rng.uniform(0, 4, 100))
    cor = 0.0
    for t in GRID:
        ref = (1 + t) * (9 * t * t - 4 * t + 4) / 12 if t <= 2 / 5 else 4 / 3 * t * (1 - t * t)
        cor = max(cor, abs(B.bound_th2(2, t).value - ref))
    ok = th1 <= 1e-12 and th2 <= 1e-12 and cor <= 1e-12
    record("AC4 branch continuity", ok,
           f"th1 at 4/7 {th1:.1e}, th2 over 100 mu {th2:.1e}, mu=2 grid {cor:.1e}")


def test_ac5_c1c3_c2sq_constant(soundness):
    spec = B.FunctionalSpec("F2", 1)
    attain = max(abs(B.functional_value(spec, extremal_coeffs(Extremal("omega2", t), 4)) - B.bound_th3(t, "remark"))
                 for t in GRID)
    reps = sweep(spec, np.linspace(0, 1, 11), CFG, variant="remark")
    at0 = reps[0].empirical_max
    over_remark = max(r.empirical_max - B.bound_th3(r.t, "remark") for r in reps)
    sampled = next(c for c in soundness[0].checks if c.name == "th3.remark").max_residual
    stated0, proof0 = B.bound_th3(0, "stated"), B.bound_th3(0, "proof_final")
    ok = (attain <= 1e-12 and at0 >= 0.249 and at0 > stated0 and at0 > proof0
          and over_remark <= 1e-9 and sampled <= 1e-9)
    record("AC5 |c1c3-c2^2| constant", ok,
           f"omega2 attains remark bound ({attain:.1e}); max at t=0 {at0:.6f} vs stated {stated0:.6f}, "
           f"proof_final {proof0:.6f}; overshoot of remark: sweep {over_remark:.1e}, samples {sampled:.1e}")


def test_ac6_c1c3_mu_c2sq(soundness):
    grid_err = max(abs(B.bound_th4(1, t).value - B.bound_th3(t, "remark")) for t in GRID)
    checks = {c.name: c.max_residual for c in soundness[0].checks}
    sampled = max(checks[f"th4.mu={m}"] for m in ("0", "0.5", "1", "2"))
    ok = grid_err <= 1e-12 and sampled <= 1e-9
    record("AC6 |c1c3-mu c2^2| consistency", ok, f"th4(1,.) vs th3 remark {grid_err:.1e}, sampled residual {sampled:.1e}")


def test_ac7_c4_c2sq():
    spec = B.FunctionalSpec("F3")
    witness = max(abs(B.functional_value(spec, extremal_coeffs(Extremal("omega3", t), 8)) - (1 - t * t) / 4)
                  for t in GRID)
    reps = sweep(spec, [0, 0.3, 0.6, 0.9], CFG)
    gap = max(abs(r.gap) for r in reps)
    over = max(r.empirical_max - r.bound for r in reps)
    misprint = 0.0
    for t in GRID:
        w = extremal_via_series(Extremal("omega3", t), 10)
        misprint = max(misprint, abs(w[6]), abs(w[7] + t * (1 - t * t) / 7))
    ok = witness <= 1e-14 and gap <= 1e-3 and over <= 1e-9 and misprint <= 1e-13
    record("AC7 |c4-c2^2| bound", ok,
           f"omega3 error {witness:.1e}, optimizer gap {gap:.1e}, z^6/z^7 check {misprint:.1e}")


def test_ac8_infrastructure(tmp_path):
    rng = np.random.default_rng(8)
    # Schur round trip at depth 5, |g| <= 0.95
    rt = 0.0
    for _ in range(10_000):
        g = 0.95 * np.sqrt(rng.random(5)) * np.exp(2j * np.pi * rng.random(5))
        p = SchurParams(tuple(g))
        back = series_to_schur(schur_to_series(p, 6), 5)
        rt = max(rt, np.max(np.abs(np.array(back.params) - g)))
    # pointwise modulus near the boundary, including Blaschke products (last parameter unimodular)
    z = 0.999 * np.exp(2j * np.pi * rng.random(200))
    modulus = 0.0
    for i in range(1000):
        d = int(rng.integers(1, 9))
        g = np.sqrt(rng.random(d)) * np.exp(2j * np.pi * rng.random(d))
        if i % 4 == 0:
            g[-1] /= abs(g[-1])
        p = SchurParams(tuple(g))
        modulus = max(modulus, max(abs(schur_eval(p, x)) for x in z))
    # ring axioms on unit-scale triples
    ring = 0.0
    for _ in range(1000):
        n = int(rng.integers(0, 11))
        a, b, c = (Series(rng.uniform(-1, 1, n + 1) + 1j * rng.uniform(-1, 1, n + 1)) for _ in range(3))
        pairs = [
            ((a + b).coeffs, (b + a).coeffs),
            ((a * b).coeffs, (b * a).coeffs),
            (((a + b) + c).coeffs, (a + (b + c)).coeffs),
            (((a * b) * c).coeffs, (a * (b * c)).coeffs),
            ((a * (b + c)).coeffs, (a * b + a * c).coeffs),
        ]
        ring = max(ring, max(np.max(np.abs(x - y)) for x, y in pairs))
    # CLI determinism
    same = True
    for argv in (["verify", "--samples", "5000"],
                 ["sharpness", "--functional", "F1", "--grid", "3", "--starts", "8", "--iters", "50"],
                 ["table", "--functional", "F2", "--mu", "1", "--variant", "stated", "--format", "json"]):
        out = [tmp_path / "a", tmp_path / "b"]
        for o in out:
            main(argv + ["--out", str(o)])
        same &= out[0].read_bytes() == out[1].read_bytes()
    ok = rt <= 1e-9 and modulus <= 1 + 1e-12 and ring <= 1e-12 and same
    record("AC8 infrastructure", ok,
           f"round trip {rt:.1e}, max |f| {modulus:.15f}, ring axioms {ring:.1e}, byte-identical reruns {same}")
