"""The cardioid function h_c(z) = 1 + 4z/3 + 2z^2/3 and its image region."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .errors import BoundaryAmbiguous, ParamError
from .powerseries import PowerSeries, evaluate
from .report import VerificationReport

__all__ = [
    "HC_SERIES",
    "hc",
    "quartic_value",
    "CardioidRegion",
    "default_region",
    "contains",
    "winding_number",
    "min_real_on_circle",
    "is_subordinate_to_cardioid",
]

HC_SERIES = PowerSeries([1.0, 4.0 / 3.0, 2.0 / 3.0])
BOUNDARY_TOL = 1e-9
_NEAR_QUARTIC = 0.1


def hc(z):
    """h_c(z) = 1 + 4z/3 + 2z^2/3 for scalars or arrays."""
    z = np.asarray(z, dtype=np.complex128)
    out = 1 + z * (4.0 / 3.0 + z * (2.0 / 3.0))
    return complex(out) if out.ndim == 0 else out


def quartic_value(w):
    """(9u^2+9v^2-18u+5)^2 - 16(9u^2+9v^2-6u+1) at w = u + iv.

    Negative inside the cardioid, zero on it, positive outside (away from the
    cusp at w = 1/3).
    """
    w = np.asarray(w, dtype=np.complex128)
    u, v = w.real, w.imag
    rho = 9 * (u * u + v * v)
    out = (rho - 18 * u + 5) ** 2 - 16 * (rho - 6 * u + 1)
    return float(out) if out.ndim == 0 else out


_CHUNK = 2048


def _chunked(fn):
    # bounds the (points x segments) temporaries
    def wrapper(w, a, b):
        if w.size <= _CHUNK:
            return fn(w, a, b)
        return np.concatenate([fn(w[i : i + _CHUNK], a, b) for i in range(0, w.size, _CHUNK)])

    return wrapper


@_chunked
def _segment_distance(w: np.ndarray, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # distance from each point in w (shape (m,)) to the nearest segment [a_j, b_j]
    d = b - a
    dd = np.abs(d) ** 2
    rel = w[:, None] - a[None, :]
    t = np.clip((rel * d.conj()).real / dd, 0.0, 1.0)
    return np.min(np.abs(rel - t * d), axis=1)


def _monotone_chains(a: np.ndarray, b: np.ndarray):
    # split the edges a_j -> b_j into maximal runs of strictly rising or falling y;
    # horizontal edges never count under the crossing rule and are dropped
    sign = np.sign(b.imag - a.imag)
    chains = []
    start = 0
    for j in range(1, sign.size + 1):
        if j == sign.size or sign[j] != sign[start]:
            if sign[start] != 0:
                idx = np.arange(start, j)
                chains.append((int(sign[start]), a[idx], b[idx]))
            start = j
    return chains


def _winding(w: np.ndarray, chains) -> np.ndarray:
    """Crossing-rule winding number of a closed polyline around each point of ``w``.

    An upward edge with ``w`` strictly to its left counts +1, a downward edge
    with ``w`` strictly to its right counts -1.  Within a y-monotone chain at
    most one edge straddles a given height, found by binary search.
    """
    wn = np.zeros(w.shape, dtype=np.int64)
    wy = w.imag
    for direction, a, b in chains:
        if direction > 0:
            ys = np.append(a.imag, b.imag[-1])
            j = np.searchsorted(ys, wy, side="right") - 1
        else:
            ys = np.append(b.imag[::-1], a.imag[0])
            j = a.size - np.searchsorted(ys, wy, side="right")
        ok = (j >= 0) & (j < a.size)
        jj = np.where(ok, j, 0)
        ea, eb = a[jj], b[jj]
        is_left = (eb.real - ea.real) * (wy - ea.imag) - (w.real - ea.real) * (eb.imag - ea.imag)
        if direction > 0:
            wn += ok & (is_left > 0)
        else:
            wn -= ok & (is_left < 0)
    return wn


@dataclass(frozen=True)
class CardioidRegion:
    """Sampled boundary h_c(e^{it}) of the cardioid domain, t on a uniform grid."""

    samples: int = 2048
    boundary: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        t = 2 * np.pi * np.arange(self.samples) / self.samples
        pts = hc(np.exp(1j * t))
        pts.setflags(write=False)
        object.__setattr__(self, "boundary", pts)

    def _edges(self):
        a = self.boundary
        return a, np.roll(a, -1)

    @cached_property
    def _chains(self):
        return _monotone_chains(*self._edges())

    def winding_number(self, w) -> np.ndarray | int:
        w_arr = np.atleast_1d(np.asarray(w, dtype=np.complex128))
        out = _winding(w_arr, self._chains)
        return int(out[0]) if np.ndim(w) == 0 else out

    def boundary_distance(self, w):
        w_arr = np.atleast_1d(np.asarray(w, dtype=np.complex128))
        out = _segment_distance(w_arr, *self._edges())
        return float(out[0]) if np.ndim(w) == 0 else out

    def contains_many(self, w, *, strict: bool = True) -> np.ndarray:
        """Vectorized membership.

        With ``strict=True`` a point within 1e-9 of the boundary raises
        ``BoundaryAmbiguous``; otherwise such points count as contained
        (closure semantics).
        """
        w_arr = np.atleast_1d(np.asarray(w, dtype=np.complex128))
        inside = np.zeros(w_arr.shape, dtype=bool)
        qv = quartic_value(w_arr)
        # pre-filter: a point with positive quartic value is never interior
        cand = qv <= 0
        if np.any(cand):
            inside[cand] = _winding(w_arr[cand], self._chains) != 0
        # the quartic's gradient is bounded near the curve, so every point
        # within BOUNDARY_TOL of the polyline has |quartic| far below this cut
        near = np.zeros(w_arr.shape, dtype=bool)
        maybe = np.abs(qv) < _NEAR_QUARTIC
        if np.any(maybe):
            dist = np.full(w_arr.shape, np.inf)
            dist[maybe] = _segment_distance(w_arr[maybe], *self._edges())
            near = dist <= BOUNDARY_TOL
        if np.any(near):
            if strict:
                k = int(np.argmax(near))
                raise BoundaryAmbiguous(complex(w_arr[k]), float(dist[k]))
            inside[near] = True
        return inside

    def contains(self, w) -> bool:
        return bool(self.contains_many(w)[0])


@lru_cache(maxsize=8)
def default_region(samples: int = 2048) -> CardioidRegion:
    return CardioidRegion(samples)


def contains(w) -> bool:
    """True when ``w`` lies inside h_c(D), decided by winding number."""
    return default_region().contains(w)


def winding_number(w) -> int:
    return default_region().winding_number(w)


def min_real_on_circle(r: float) -> float:
    """min over |z| = r of Re h_c(z), equal to h_c(-r) for 0 < r <= 1/2."""
    if not 0 < r <= 0.5:
        raise ParamError(f"closed form holds only for 0 < r <= 1/2, got r={r!r}")
    return 1 - 4 * r / 3 + 2 * r * r / 3


def _polar_points(radii, samples_per_radius: int) -> np.ndarray:
    t = 2 * np.pi * np.arange(samples_per_radius) / samples_per_radius
    return (np.asarray(radii, dtype=float)[:, None] * np.exp(1j * t)[None, :]).ravel()


def is_subordinate_to_cardioid(
    f: PowerSeries, radii=(0.3, 0.6, 0.9), samples_per_radius: int = 64
) -> VerificationReport:
    """Necessary-condition test for f < h_c.

    Checks f(0) = 1 and that f maps every sampled point of the given circles
    into the cardioid.  A failure refutes subordination; a pass only fails to
    refute it.
    """
    radii = [float(r) for r in radii]
    if any(not 0 < r < 1 for r in radii):
        raise ParamError("radii must lie in (0, 1)")
    z = _polar_points(radii, samples_per_radius)
    w = evaluate(f, z)
    normalized = abs(f[0] - 1) <= 1e-12
    inside = default_region().contains_many(w, strict=False)
    q = quartic_value(w)
    worst = int(np.argmax(q))
    return VerificationReport(
        theorem="subordination",
        params={"order": f.order, "radii": radii, "samples_per_radius": samples_per_radius},
        hypothesis_pass=bool(normalized),
        hypothesis_margin=float(q[worst]),
        conclusion_pass=bool(np.all(inside)),
        conclusion_margin=-float(q[worst]),
        worst_point=complex(z[worst]),
        sample_count=int(z.size),
        note="sampled necessary condition; can refute but not prove subordination",
    )
