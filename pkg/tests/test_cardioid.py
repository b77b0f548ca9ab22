import numpy as np
import pytest

from mlcardioid.cardioid import (
    HC_SERIES,
    CardioidRegion,
    contains,
    default_region,
    hc,
    is_subordinate_to_cardioid,
    min_real_on_circle,
    quartic_value,
    winding_number,
)
from mlcardioid.cardioid import _monotone_chains, _winding
from mlcardioid.errors import BoundaryAmbiguous, ParamError
from mlcardioid.powerseries import PowerSeries


def dense_winding(w, a, b):
    # textbook crossing rule over every edge, used as an oracle
    wy = w.imag[:, None]
    is_left = (b.real - a.real) * (wy - a.imag) - (w.real[:, None] - a.real) * (b.imag - a.imag)
    up = (a.imag <= wy) & (b.imag > wy) & (is_left > 0)
    down = (a.imag > wy) & (b.imag <= wy) & (is_left < 0)
    return np.sum(up, axis=1) - np.sum(down, axis=1)


@pytest.mark.parametrize("z, expected", [(0, 1), (1, 3), (-0.5, 0.5)])
def test_hc_examples(z, expected):
    assert hc(z) == pytest.approx(expected, abs=1e-15)


def test_quartic_examples():
    assert quartic_value(1) == -48
    assert abs(quartic_value(hc(np.exp(1j * np.pi / 3)))) < 1e-9
    assert quartic_value(4) > 0


def test_quartic_vanishes_on_boundary():
    t = 2 * np.pi * np.arange(256) / 256
    assert np.max(np.abs(quartic_value(hc(np.exp(1j * t))))) < 1e-9


def test_contains_examples():
    assert contains(1)
    assert not contains(3.1)
    # the boundary meets the real axis only at 3 and at the cusp 1/3
    assert contains(0.4)
    assert not contains(0.3)


def test_cusp_location():
    assert hc(-1) == pytest.approx(1 / 3, abs=1e-15)
    assert quartic_value(0.4) < 0 < quartic_value(0.3)


def test_winding_numbers():
    assert winding_number(1) == 1
    assert winding_number(4) == 0


def test_region_invariants():
    region = CardioidRegion(2048)
    b = region.boundary
    assert b.size == 2048
    # closed under wraparound: consecutive samples (including last -> first) are close
    steps = np.abs(np.diff(np.append(b, b[0])))
    assert steps.max() < 0.01
    assert np.max(np.abs(quartic_value(b))) < 1e-9


def test_boundary_ambiguous():
    region = default_region()
    # a polyline vertex and a point 1e-10 off it are both ambiguous
    for w in (region.boundary[300], region.boundary[300] + 1e-10):
        with pytest.raises(BoundaryAmbiguous):
            contains(w)
        assert region.contains_many([w], strict=False)[0]
    # the exact curve sits within chord sag of the polyline, far below 1e-5
    assert region.boundary_distance(hc(np.exp(0.7j))) < 1e-5


def test_chain_winding_equals_dense_rule():
    region = default_region()
    a, b = region._edges()
    rng = np.random.default_rng(0)
    w = rng.uniform(-1, 4, 3000) + 1j * rng.uniform(-2.5, 2.5, 3000)
    # include heights exactly at vertices, where the half-open rule matters
    w = np.concatenate([w, region.boundary[::7].real + 1j * region.boundary[::7].imag + 1e-12, [1, 4, 0.4, 0.3]])
    np.testing.assert_array_equal(region.winding_number(w), dense_winding(w, a, b))


def test_chain_winding_on_other_polygons():
    rng = np.random.default_rng(1)
    t = np.sort(rng.uniform(0, 2 * np.pi, 40))
    poly = (1 + 0.6 * rng.uniform(size=40)) * np.exp(1j * t)
    w = rng.uniform(-2, 2, 2000) + 1j * rng.uniform(-2, 2, 2000)
    nxt = np.roll(poly, -1)
    np.testing.assert_array_equal(_winding(w, _monotone_chains(poly, nxt)), dense_winding(w, poly, nxt))


def test_scaled_circles_inside_and_outside():
    t = 2 * np.pi * (np.arange(256) + 0.5) / 256
    region = default_region()
    inner = hc(0.99 * np.exp(1j * t))
    assert region.contains_many(inner).all()
    outer = hc(1.01 * np.exp(1j * t))
    exterior = quartic_value(outer) > 0
    assert exterior.sum() > 200
    assert not region.contains_many(outer[exterior]).any()


def test_membership_agrees_with_quartic_sign_away_from_boundary():
    region = default_region()
    x, y = np.meshgrid(np.linspace(-0.5, 3.5, 121), np.linspace(-2.2, 2.2, 121))
    w = (x + 1j * y).ravel()
    far = region.boundary_distance(w) > 1e-3
    inside = region.contains_many(w[far])
    np.testing.assert_array_equal(inside, quartic_value(w[far]) < 0)


@pytest.mark.parametrize("r, expected", [(0.3, 0.66), (1e-12, 1.0), (0.5, 0.5)])
def test_min_real_examples(r, expected):
    assert min_real_on_circle(r) == pytest.approx(expected, abs=1e-11)


@pytest.mark.parametrize("r", [0.1, 0.25, 0.4, 0.5])
def test_min_real_matches_sampling(r):
    t = 2 * np.pi * np.arange(4096) / 4096
    vals = hc(r * np.exp(1j * t))
    assert abs(min_real_on_circle(r) - vals.real.min()) < 1e-6
    # the modulus statement made alongside it
    assert abs(min_real_on_circle(r) - np.abs(vals).min()) < 1e-6


def test_min_real_rejects_large_radius():
    with pytest.raises(ParamError):
        min_real_on_circle(0.6)
    with pytest.raises(ParamError):
        min_real_on_circle(0)


def test_min_real_formula_fails_past_half():
    # beyond r = 1/2 the minimum is no longer at z = -r, hence the ParamError
    t = 2 * np.pi * np.arange(4096) / 4096
    r = 0.9
    assert hc(r * np.exp(1j * t)).real.min() < hc(-r).real - 1e-3


def test_subordination_examples():
    assert is_subordinate_to_cardioid(HC_SERIES, radii=(0.5, 0.9)).passed
    assert is_subordinate_to_cardioid(PowerSeries([1, 0])).passed
    report = is_subordinate_to_cardioid(PowerSeries([1, 3]), radii=(0.3, 0.9))
    assert not report.conclusion_pass
    assert report.conclusion_margin < 0
    assert abs(report.worst_point) == pytest.approx(0.9)


def test_subordination_requires_normalization():
    report = is_subordinate_to_cardioid(PowerSeries([1.5, 0.1]))
    assert not report.hypothesis_pass
    assert not report.counterexample


def test_subordination_radii_validated():
    with pytest.raises(ParamError):
        is_subordinate_to_cardioid(HC_SERIES, radii=(1.0,))
