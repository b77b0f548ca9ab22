"""Constructive numerical checks of the subordination theorems.

Real-part theorems (thm21-thm23): for a Schwarz function w let
p = h_c(w), which is subordinate to h_c.  The solution of

    phi + (1/c) z phi' = p,    phi(0) = 1,

is phi(z) = c int_0^1 u^(c-1) p(uz) du, i.e. phi_n = p_n c/(c+n) on Taylor
coefficients.  The combination phi + (1/c) z phi' is rebuilt termwise from
phi and must land in the cardioid at every grid point (the hypothesis).  The
conclusion Re(phi^(1/zeta)) >= bound^(1/zeta) is then checked on |z| <= 1/2,
the disc on which the minimum-real-part argument applies.

The shorter form c int_0^1 u^(c-1) h_c(u w(z)) du (``theorem21_construct``)
agrees with phi when w is a rotation of z, which includes the extremal case.

Dominant theorems (thm31-thm33): the dominant must solve its Briot-Bouquet
equation, satisfy q(0) = 1, and map the grid into the cardioid (q < h_c).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .bounds import BoundOrigin, BoundQuery, effective_exponent, sharp_bound_root
from .briot_bouquet import DominantSpec, Origin, dominant, ode_residual, p_condition_margin
from .cardioid import default_region, hc, quartic_value
from .errors import HypothesisError, ParamError
from .report import VerificationReport

__all__ = [
    "SchwarzFn",
    "make_schwarz",
    "polar_grid",
    "theorem21_construct",
    "theorem_solution",
    "hypothesis_combination",
    "verify_re_part_theorem",
    "verify_dominant_theorem",
    "verify_theorem",
    "randomized_sweep",
    "RE_PART_THEOREMS",
    "DOMINANT_THEOREMS",
]

RE_PART_THEOREMS = ("thm21", "thm22", "thm23")
DOMINANT_THEOREMS = ("thm31", "thm32", "thm33")
DEFAULT_RADII = (0.1, 0.3, 0.5, 0.7, 0.9)
DEFAULT_ANGLES = 64
CONCLUSION_RADIUS = 0.5
ODE_TOL = 1e-8
# slack for the closed-disc (equality) case of the sharp bound
BOUND_TOL = 1e-12


class SchwarzKind(str, Enum):
    MONOMIAL = "monomial"
    BLASCHKE = "blaschke"


@dataclass(frozen=True)
class SchwarzFn:
    """w(z) = e^{i theta} z^k  or  w(z) = z (a - z) / (1 - conj(a) z)."""

    kind: SchwarzKind
    k: int = 1
    theta: float = 0.0
    a: complex = 0j

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        if self.kind is SchwarzKind.MONOMIAL:
            return np.exp(1j * self.theta) * z**self.k
        return z * (self.a - z) / (1 - np.conj(self.a) * z)

    def derivative(self, z):
        z = np.asarray(z, dtype=np.complex128)
        if self.kind is SchwarzKind.MONOMIAL:
            return self.k * np.exp(1j * self.theta) * z ** (self.k - 1)
        den = 1 - np.conj(self.a) * z
        blaschke = (self.a - z) / den
        return blaschke + z * (abs(self.a) ** 2 - 1) / den**2

    def taylor(self, N: int) -> tuple[np.ndarray, np.ndarray]:
        """Taylor coefficients of w and w^2 up to z^N."""
        w = np.zeros(N + 1, dtype=np.complex128)
        w2 = np.zeros(N + 1, dtype=np.complex128)
        if self.kind is SchwarzKind.MONOMIAL:
            rot = np.exp(1j * self.theta)
            if self.k <= N:
                w[self.k] = rot
            if 2 * self.k <= N:
                w2[2 * self.k] = rot * rot
            return w, w2
        # w = z (a - z) / (1 - conj(a) z); 1/(1 - bz)^m expands as sum C(n+m-1, n) b^n z^n
        b = np.conj(self.a)
        n = np.arange(N + 1)
        geo = b**n if b != 0 else (n == 0).astype(np.complex128)
        w = np.convolve([0, self.a, -1], geo)[: N + 1]
        w2 = np.convolve([0, 0, self.a**2, -2 * self.a, 1], (n + 1) * geo)[: N + 1]
        return w, w2

    def series_order(self, radius: float) -> int:
        """Truncation order that resolves w and w^2 to double precision on |z| <= radius."""
        if self.kind is SchwarzKind.MONOMIAL:
            return 2 * self.k
        rho = abs(self.a) * radius
        if rho < 1e-3:
            return 8
        return min(int(45 / -math.log(rho)) + 16, 200_000)

    def to_dict(self) -> dict:
        if self.kind is SchwarzKind.MONOMIAL:
            return {"kind": self.kind.value, "k": self.k, "theta": self.theta}
        return {"kind": self.kind.value, "a": [self.a.real, self.a.imag]}


def make_schwarz(kind, **params) -> SchwarzFn:
    """Build a Schwarz function and confirm |w| < 1 on the circle |z| = 0.999."""
    kind = SchwarzKind(kind)
    if kind is SchwarzKind.MONOMIAL:
        k = params.get("k", 1)
        if int(k) != k or k < 1:
            raise ParamError(f"monomial degree must be an integer >= 1, got {k!r}")
        sf = SchwarzFn(kind, k=int(k), theta=float(params.get("theta", 0.0)))
    else:
        a = complex(params.get("a", 0j))
        if not abs(a) < 1:
            raise ParamError(f"Blaschke zero must satisfy |a| < 1, got {a!r}")
        sf = SchwarzFn(kind, a=a)
    probe = 0.999 * np.exp(2j * np.pi * np.arange(256) / 256)
    if abs(complex(sf(0.0))) > 1e-15 or np.max(np.abs(sf(probe))) >= 1 + 1e-9:
        raise ParamError(f"{sf!r} is not a Schwarz function")
    return sf


def polar_grid(radii=DEFAULT_RADII, angles: int = DEFAULT_ANGLES) -> np.ndarray:
    t = 2 * np.pi * np.arange(angles) / angles
    return (np.asarray(radii, dtype=float)[:, None] * np.exp(1j * t)[None, :]).ravel()


def _coefficients(c: float):
    return 4 * c / (3 * (c + 1)), 2 * c / (3 * (c + 2))


def theorem21_construct(c: float, sf: SchwarzFn, z):
    """c int_0^1 u^(c-1) h_c(u w(z)) du = 1 + A w + B w^2, A = 4c/(3(c+1)), B = 2c/(3(c+2)).

    This is the extremal function composed with w.  It coincides with
    ``theorem_solution`` when w is a rotation of z.
    """
    A, B = _coefficients(c)
    w = sf(z)
    out = 1 + A * w + B * w * w
    return complex(out) if out.ndim == 0 else out


def _solution_coeffs(c: float, sf: SchwarzFn, radius: float) -> np.ndarray:
    w, w2 = sf.taylor(sf.series_order(radius))
    p = 4 / 3 * w + 2 / 3 * w2
    p[0] += 1
    n = np.arange(p.size)
    return p * (c / (c + n))


def _eval(coeffs, z):
    return np.polynomial.polynomial.polyval(z, coeffs)


def theorem_solution(c: float, sf: SchwarzFn, z):
    """phi(z) = c int_0^1 u^(c-1) h_c(w(uz)) du, summed from Taylor coefficients."""
    z = np.asarray(z, dtype=np.complex128)
    phi = _solution_coeffs(c, sf, float(np.max(np.abs(z), initial=0.0)))
    out = _eval(phi, z)
    return complex(out) if out.ndim == 0 else out


def hypothesis_combination(c: float, sf: SchwarzFn, z):
    """phi + (1/c) z phi', with z phi' taken termwise from phi's coefficients."""
    z = np.asarray(z, dtype=np.complex128)
    phi = _solution_coeffs(c, sf, float(np.max(np.abs(z), initial=0.0)))
    n = np.arange(phi.size)
    out = _eval(phi, z) + _eval(n * phi, z) / c
    return complex(out) if out.ndim == 0 else out


def _theorem_params(theorem: str, params: dict) -> dict:
    keys = {
        "thm21": ("gamma", "lam"),
        "thm22": ("alpha", "beta", "lam"),
        "thm23": ("sigma", "lam"),
    }[theorem]
    missing = [k for k in keys if k not in params]
    if missing:
        raise ParamError(f"{theorem} needs parameters {missing}")
    return {k: float(params[k]) for k in keys}


def verify_re_part_theorem(
    theorem,
    params: dict,
    sf: SchwarzFn,
    grid=None,
    *,
    conclusion_radius: float = CONCLUSION_RADIUS,
) -> VerificationReport:
    """Check one of the sharp real-part theorems for the function built from ``sf``.

    ``params`` holds the theorem parameters (``gamma``/``alpha``/``beta``/
    ``sigma`` and ``lam``) plus an optional root index ``zeta``.
    """
    theorem = BoundOrigin(theorem).value
    zeta = float(params.get("zeta", 1.0))
    tparams = _theorem_params(theorem, params)
    query = BoundQuery.for_theorem(theorem, zeta, **tparams)
    bound = sharp_bound_root(query)
    bound_plain = sharp_bound_root(BoundQuery(query.c))
    z = polar_grid() if grid is None else np.asarray(grid, dtype=np.complex128).ravel()
    if np.any(np.abs(z) >= 1):
        raise ParamError("grid points must lie in the open unit disc")

    psi = hypothesis_combination(query.c, sf, z)
    # the rebuilt combination should reproduce h_c(w) up to rounding
    hyp_residual = float(np.max(np.abs(psi - hc(sf(z)))))
    region = default_region()
    inside = region.contains_many(psi, strict=False)
    qv = quartic_value(psi)
    hyp_worst = int(np.argmax(qv))

    mask = np.abs(z) <= conclusion_radius
    zc = z[mask]
    if zc.size:
        phi = theorem_solution(query.c, sf, zc)
        rooted = np.power(phi, 1 / zeta).real - bound
        plain = phi.real - bound_plain
        k = int(np.argmin(rooted))
        margin, worst = float(rooted[k]), complex(zc[k])
        plain_margin = float(np.min(plain))
        concl = margin >= -BOUND_TOL and plain_margin >= -BOUND_TOL
    else:
        margin, worst, plain_margin, concl = math.inf, 0j, math.inf, True

    return VerificationReport(
        theorem=theorem,
        params={**tparams, "zeta": zeta, "c": query.c, "schwarz": sf.to_dict()},
        hypothesis_pass=bool(np.all(inside)),
        hypothesis_margin=float(qv[hyp_worst]),
        conclusion_pass=bool(concl),
        conclusion_margin=margin,
        worst_point=worst,
        sample_count=int(z.size),
        details={
            "bound": bound,
            "re_part_margin": plain_margin,
            "hypothesis_residual": hyp_residual,
            "hypothesis_worst_point": complex(z[hyp_worst]),
            "conclusion_radius": conclusion_radius,
            "conclusion_samples": int(zc.size),
        },
    )


def _dominant_exponent(theorem: str, params: dict) -> float:
    try:
        if theorem == "thm31":
            return float(params["gamma"])
        if theorem == "thm32":
            return float(params["beta"]) / float(params["alpha"])
        return float(params["sigma"]) + 1
    except KeyError as exc:
        raise ParamError(f"{theorem} needs parameter {exc.args[0]!r}") from None


def verify_dominant_theorem(theorem, params: dict, grid=None, N: int = 64) -> VerificationReport:
    """Check that the theorem's dominant solves its equation and is subordinate to h_c.

    Raises ``HypothesisError`` when Re(P) > 0 fails, i.e. the theorem does not
    apply; that is not a verification failure.
    """
    origin = Origin(theorem)
    if origin is Origin.GENERIC:
        raise ParamError("a theorem tag is required")
    a = _dominant_exponent(origin.value, params)
    margin = p_condition_margin(a)
    if margin < 0:
        raise HypothesisError(f"{origin.value}: Re(P) > 0 fails, margin {margin:.6g} (a={a!r})")
    spec = DominantSpec.from_exponent(a, origin=origin)
    z = polar_grid() if grid is None else np.asarray(grid, dtype=np.complex128).ravel()

    residual = float(np.max(np.abs(ode_residual(spec, z, N))))
    q = dominant(spec, z, N)
    inside = default_region().contains_many(q, strict=False)
    qv = quartic_value(q)
    worst = int(np.argmax(qv))
    q0 = dominant(spec, 0.0, N)
    q0_ok = abs(q0 - 1) <= 1e-14

    return VerificationReport(
        theorem=origin.value,
        params={k: float(v) for k, v in params.items()} | {"a": a, "order": N},
        hypothesis_pass=True,
        hypothesis_margin=-margin,
        conclusion_pass=bool(residual < ODE_TOL and np.all(inside) and q0_ok),
        conclusion_margin=-float(qv[worst]),
        worst_point=complex(z[worst]),
        sample_count=int(z.size),
        details={"ode_residual": residual, "q0": q0, "contained": bool(np.all(inside))},
    )


def verify_theorem(theorem: str, params: dict, sf: SchwarzFn | None = None, grid=None) -> VerificationReport:
    if theorem in RE_PART_THEOREMS:
        return verify_re_part_theorem(theorem, params, sf or make_schwarz("monomial", k=1), grid)
    if theorem in DOMINANT_THEOREMS:
        return verify_dominant_theorem(theorem, params, grid)
    raise ParamError(f"unknown theorem tag {theorem!r}")


def _draw_schwarz(rng: np.random.Generator) -> SchwarzFn:
    if rng.random() < 0.5:
        return make_schwarz("monomial", k=int(rng.integers(1, 4)), theta=float(rng.uniform(0, 2 * np.pi)))
    r = float(rng.uniform(0, 0.9))
    phase = float(rng.uniform(0, 2 * np.pi))
    return make_schwarz("blaschke", a=r * complex(math.cos(phase), math.sin(phase)))


def _draw_params(theorem: str, rng: np.random.Generator) -> dict:
    def u(lo, hi):
        return float(rng.uniform(lo, hi))

    if theorem == "thm21":
        return {"gamma": u(0.5, 3), "lam": u(0.1, 3), "zeta": u(1, 3)}
    if theorem == "thm22":
        return {"alpha": u(0.5, 3), "beta": u(0.5, 3), "lam": u(0.1, 3), "zeta": u(1, 3)}
    if theorem == "thm23":
        return {"sigma": u(-0.9, 3), "lam": u(0.05, 0.95), "zeta": u(1, 3)}
    if theorem == "thm31":
        return {"gamma": u(1, 6)}
    if theorem == "thm32":
        alpha = u(0.5, 2)
        return {"alpha": alpha, "beta": alpha * u(1, 6)}
    return {"sigma": u(0, 5)}


def randomized_sweep(seed: int, trials: int, theorems=None) -> list[VerificationReport]:
    """Reports for ``trials`` seeded random draws of theorem, parameters and Schwarz function.

    Draws are made sequentially from one generator, so the list depends only on
    ``seed``, ``trials`` and ``theorems``.
    """
    if trials < 1:
        raise ParamError("trials must be >= 1")
    pool = tuple(theorems) if theorems else RE_PART_THEOREMS + DOMINANT_THEOREMS
    for tag in pool:
        if tag not in RE_PART_THEOREMS + DOMINANT_THEOREMS:
            raise ParamError(f"unknown theorem tag {tag!r}")
    rng = np.random.default_rng(seed)
    reports = []
    for _ in range(trials):
        theorem = pool[int(rng.integers(len(pool)))]
        params = _draw_params(theorem, rng)
        if theorem in RE_PART_THEOREMS:
            reports.append(verify_re_part_theorem(theorem, params, _draw_schwarz(rng)))
        else:
            reports.append(verify_dominant_theorem(theorem, params))
    return reports
