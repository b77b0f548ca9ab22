"""Acceptance criteria, one test each, at their stated tolerances."""

import cmath
import io
import json
import math
from pathlib import Path

import numpy as np
import pytest
from scipy.integrate import quad

from mlcardioid import cli
from mlcardioid.bounds import sharp_bound
from mlcardioid.briot_bouquet import DominantSpec, dominant, ode_residual, p_condition_margin
from mlcardioid.cardioid import default_region, hc, min_real_on_circle, quartic_value, winding_number
from mlcardioid.series import Identity, PowerSeries, identity_residual
from mlcardioid.special import MLParams, gamma, mittag_leffler
from mlcardioid.verify import (
    hypothesis_combination,
    make_schwarz,
    randomized_sweep,
    verify_re_part_theorem,
)

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return cli.run(list(argv), out, err), out.getvalue()


def test_criterion_01_special_functions():
    """Mittag-Leffler(1,1,1) equals exp on |z| <= 0.9; Gamma(5) and Gamma(1/2)"""
    rng = np.random.default_rng(1)
    one = MLParams(1, 1, 1)
    zs = [cmath.rect(0.9 * math.sqrt(rng.uniform()), rng.uniform(0, 2 * math.pi)) for _ in range(100)]
    err = max(abs(mittag_leffler(one, z) - cmath.exp(z)) for z in zs)
    assert err < 1e-12
    assert abs(gamma(5) - 24) / 24 < 1e-12
    assert abs(gamma(0.5) - math.sqrt(math.pi)) / math.sqrt(math.pi) < 1e-12


def test_criterion_02_operator_identities():
    """Recurrence and Bernardi identity residuals below 1e-10 over 100 draws"""
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(100):
        p = MLParams(*rng.uniform(0.5, 3, 3))
        sigma = float(rng.uniform(-0.5, 3))
        c = rng.uniform(-1, 1, 17) + 1j * rng.uniform(-1, 1, 17)
        c[0], c[1] = 0, 1
        f = PowerSeries(c)
        for kind in Identity:
            worst = max(worst, identity_residual(kind, p, f, sigma if kind is Identity.BERNARDI_INT else None))
    assert worst < 1e-10


def test_criterion_03_sharp_bound():
    """Sharp bound: 13/18 at c=1, quadrature agreement, monotone, inside (1/2, 1)"""
    assert abs(sharp_bound(1) - 13 / 18) < 1e-12
    for c in (0.25, 0.5, 1, 2, 5, 10):
        f = lambda u: c * u ** (c - 1) * (3 - 2 * u + u * u / 2) / 3
        head, _ = quad(f, 0, 1e-3, epsabs=1e-15, epsrel=1e-13, limit=200)
        tail, _ = quad(f, 1e-3, 1, epsabs=1e-15, epsrel=1e-13, limit=200)
        assert abs(sharp_bound(c) - (head + tail)) < 1e-10
    vals = np.array([sharp_bound(c) for c in np.geomspace(0.01, 100, 100)])
    assert np.all(np.diff(vals) < 0)
    assert np.all((vals > 0.5) & (vals < 1))


def test_criterion_04_cardioid_geometry():
    """Cardioid: minimum real part, quartic on the boundary, winding numbers"""
    t = 2 * np.pi * np.arange(4096) / 4096
    for r in (0.1, 0.25, 0.4, 0.5):
        assert abs(min_real_on_circle(r) - hc(r * np.exp(1j * t)).real.min()) < 1e-6
    s = 2 * np.pi * np.arange(256) / 256
    assert np.max(np.abs(quartic_value(hc(np.exp(1j * s))))) < 1e-9
    assert winding_number(1) == 1
    assert winding_number(4) == 0


def test_criterion_05_dominant_ode():
    """Dominant ODE residual on the 17x17 grid, q(0) = 1, N=64 vs N=96"""
    radii = np.linspace(0, 0.5, 17)
    angles = 2 * np.pi * np.arange(17) / 17
    z = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    for a in (1, 1.5, 2, 3, 5):
        spec = DominantSpec.from_exponent(a)
        assert np.max(np.abs(ode_residual(spec, z, 64))) < 1e-8
        assert dominant(spec, 0, 64) == 1
        assert np.max(np.abs(dominant(spec, z, 64) - dominant(spec, z, 96))) < 1e-10


def test_criterion_06_dominant_subordination():
    """Dominant images at radii 0.3, 0.6, 0.9 lie inside the cardioid"""
    t = 2 * np.pi * np.arange(64) / 64
    z = (np.array([0.3, 0.6, 0.9])[:, None] * np.exp(1j * t)[None, :]).ravel()
    region = default_region()
    for a in (1, 2, 5):
        assert region.contains_many(dominant(DominantSpec.from_exponent(a), z)).all()


def test_criterion_07_p_condition():
    """P-condition margins against a one-million-sample minimization"""
    t = 2 * np.pi * np.arange(10**6) / 10**6
    w = np.exp(1j * t)
    base = (4 * w / 3 + 2 * w * w / 3).real
    assert abs(p_condition_margin(1) - np.min(base + 1)) < 1e-9
    assert abs(p_condition_margin(1)) < 1e-9
    assert abs(p_condition_margin(2) - 1) < 1e-9


def test_criterion_08_theorem_sweeps():
    """Zero counterexamples over 200 seeded trials per theorem family"""
    for seed, family in enumerate(("thm21", "thm22", "thm23", "thm31", "thm32", "thm33")):
        reports = randomized_sweep(1000 + seed, 200, [family])
        assert len(reports) == 200
        assert {r.theorem for r in reports} == {family}
        assert not any(r.counterexample for r in reports)
        assert all(r.passed for r in reports)
        again = randomized_sweep(1000 + seed, 200, [family])
        assert [r.to_json() for r in again] == [r.to_json() for r in reports]


def test_criterion_09_sharpness():
    """Extremal case: margin near z = -1/2 below 5e-3; combination equals h_c"""
    identity = make_schwarz("monomial", k=1)
    r = verify_re_part_theorem("thm21", {"gamma": 1, "lam": 1, "zeta": 1}, identity, grid=[-0.5 + 1e-3])
    assert r.passed
    assert r.conclusion_margin < 5e-3
    # Taylor coefficients of the rebuilt combination, read off with an FFT on |z| = 0.9
    n, rad = 32, 0.9
    z = rad * np.exp(2j * np.pi * np.arange(n) / n)
    coeffs = np.fft.fft(hypothesis_combination(1.0, identity, z)) / n / rad ** np.arange(n)
    expected = np.zeros(n, dtype=complex)
    expected[:3] = [1, 4 / 3, 2 / 3]
    assert np.max(np.abs(coeffs - expected)) < 1e-12


def test_criterion_10_cli_contract(monkeypatch):
    """CLI examples, golden SVG files, exit codes"""
    code, out = run_cli("bound", "--theorem", "thm21", "--gamma", "1", "--lambda", "1", "--zeta", "1")
    assert (code, out) == (0, '{"c":1.0,"bound":0.7222222222222222}\n')
    code, out = run_cli("ml-eval", "--alpha", "1", "--beta", "1", "--gamma", "1", "--z", "0")
    assert (code, out) == (0, '{"value":[1.0,0.0]}\n')
    code, out = run_cli("verify", "--sweep", "--seed", "42", "--trials", "100")
    assert code == 0 and len(json.loads(out)) == 100

    for argv, name in ((["cardioid"], "cardioid.svg"), (["dominant", "--a", "2"], "dominant_a2.svg")):
        first = run_cli("plot-svg", *argv)
        second = run_cli("plot-svg", *argv)
        assert first == second == (0, (GOLDEN / name).read_text())

    assert run_cli("bound", "--theorem", "thm21", "--gamma", "1")[0] == 2
    assert run_cli("verify", "--theorem", "thm31", "--gamma", "0.5")[0] == 2
    monkeypatch.setattr("mlcardioid.verify.sharp_bound_root", lambda q: 2.0)
    assert run_cli("verify", "--theorem", "thm21", "--gamma", "1", "--lambda", "1")[0] == 1
