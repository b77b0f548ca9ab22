"""Best dominants of Briot-Bouquet subordinations with the cardioid target.

For h = h_c the auxiliary function is H(z) = z exp(4z/3 + z^2/3), and the
univalent solution of

    q + z q' / (eta q + mu) = h_c,    q(0) = 1,

is z^mu H^eta (eta int_0^z H(t)^eta t^(mu-1) dt)^(-1) - mu/eta.  Writing
e(z) = exp(eta (4z/3 + z^2/3)) = sum g_k z^k and a = mu + eta, the integral
equals z^a G(z) with G(z) = sum g_k z^k / (a + k).  All powers of z cancel,
leaving the single-valued form

    q(z) = e(z) / (eta G(z)) - mu / eta,

which is what this module evaluates.  No branch of z^a is ever chosen.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np
from numpy.polynomial import polynomial as P

from .cardioid import hc
from .errors import DenominatorZero, HypothesisError, ParamError, SingularDenominator

__all__ = [
    "Origin",
    "DominantSpec",
    "ExpPolySeries",
    "exp_poly_coeffs",
    "big_h",
    "dominant",
    "dominant_derivative",
    "ode_residual",
    "p_condition_margin",
    "lemma22_dominant",
]

DEFAULT_ORDER = 64
_G_TOL = 1e-14
_SINGULAR_TOL = 1e-10


class Origin(str, Enum):
    THM31 = "thm31"  # a = gamma
    THM32 = "thm32"  # a = beta / alpha
    THM33 = "thm33"  # a = sigma + 1
    GENERIC = "generic"


@dataclass(frozen=True)
class DominantSpec:
    """Parameters (eta, mu) of a Briot-Bouquet equation; ``a = mu + eta``."""

    eta: float = 1.0
    mu: float = 0.0
    origin: Origin = Origin.GENERIC

    def __post_init__(self):
        object.__setattr__(self, "origin", Origin(self.origin))
        if self.eta == 0 or not math.isfinite(self.eta):
            raise ParamError("eta must be a nonzero real")
        # the theorem hypothesis is reported first: a tagged a < 1 is inapplicable, not malformed
        if self.origin is not Origin.GENERIC and math.isfinite(self.mu) and self.a < 1:
            raise HypothesisError(f"{self.origin.value} needs exponent a >= 1, got a={self.a!r}")
        if not (math.isfinite(self.mu) and self.mu >= 0):
            raise ParamError(f"mu must be a real >= 0, got {self.mu!r}")
        if self.a <= 0:
            # G(z) has the factors 1/(a + k)
            raise ParamError(f"exponent a = mu + eta must be positive, got {self.a!r}")

    @property
    def a(self) -> float:
        return self.mu + self.eta

    @classmethod
    def from_exponent(cls, a: float, eta: float = 1.0, origin=Origin.GENERIC) -> DominantSpec:
        return cls(eta=eta, mu=a - eta, origin=origin)

    @classmethod
    def theorem31(cls, gamma: float) -> DominantSpec:
        return cls.from_exponent(gamma, origin=Origin.THM31)

    @classmethod
    def theorem32(cls, alpha: float, beta: float) -> DominantSpec:
        return cls.from_exponent(beta / alpha, origin=Origin.THM32)

    @classmethod
    def theorem33(cls, sigma: float) -> DominantSpec:
        return cls.from_exponent(sigma + 1, origin=Origin.THM33)


@dataclass(frozen=True)
class ExpPolySeries:
    """Maclaurin coefficients g_0..g_N of exp(eta (4z/3 + z^2/3))."""

    coeffs: np.ndarray
    eta: float

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, z):
        return P.polyval(np.asarray(z, dtype=np.complex128), self.coeffs)


def exp_poly_coeffs(eta: float, N: int = DEFAULT_ORDER) -> ExpPolySeries:
    """Coefficients from (k+1) g_{k+1} = (4 eta/3) g_k + (2 eta/3) g_{k-1}, g_0 = 1."""
    if N < 2:
        raise ParamError("N must be >= 2")
    g = np.zeros(N + 1)
    g[0] = 1.0
    g[1] = 4 * eta / 3
    for k in range(1, N):
        g[k + 1] = (4 * eta / 3 * g[k] + 2 * eta / 3 * g[k - 1]) / (k + 1)
    g.setflags(write=False)
    return ExpPolySeries(g, float(eta))


def big_h(z):
    """H(z) = z exp(4z/3 + z^2/3)."""
    z = np.asarray(z, dtype=np.complex128)
    out = z * np.exp(4 * z / 3 + z * z / 3)
    return complex(out) if out.ndim == 0 else out


def _check_domain(z, N):
    if N < 16:
        raise ParamError("series order N must be >= 16")
    if np.any(np.abs(z) >= 1):
        raise ParamError("dominants are evaluated on the open unit disc only")


def _parts(spec: DominantSpec, z: np.ndarray, N: int):
    g = exp_poly_coeffs(spec.eta, N).coeffs
    k = np.arange(N + 1)
    gi = g / (spec.a + k)
    e = P.polyval(z, g)
    de = P.polyval(z, P.polyder(g))
    G = P.polyval(z, gi)
    dG = P.polyval(z, P.polyder(gi))
    bad = np.abs(G) < _G_TOL
    if np.any(bad):
        raise DenominatorZero(complex(z[bad][0]))
    return e, de, G, dG


def _scalar_or_array(z_in, out):
    return complex(out[0]) if np.ndim(z_in) == 0 else out.reshape(np.shape(z_in))


def dominant(spec: DominantSpec, z, N: int = DEFAULT_ORDER):
    """q(z) = e(z) / (eta G(z)) - mu/eta; q(0) = 1."""
    zz = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
    _check_domain(zz, N)
    e, _, G, _ = _parts(spec, zz, N)
    return _scalar_or_array(z, e / (spec.eta * G) - spec.mu / spec.eta)


def dominant_derivative(spec: DominantSpec, z, N: int = DEFAULT_ORDER):
    """q'(z) by the quotient rule on the termwise-differentiated series."""
    zz = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
    _check_domain(zz, N)
    e, de, G, dG = _parts(spec, zz, N)
    return _scalar_or_array(z, (de * G - e * dG) / (spec.eta * G * G))


def ode_residual(spec: DominantSpec, z, N: int = DEFAULT_ORDER):
    """q + z q'/(eta q + mu) - h_c(z); identically zero for the exact dominant."""
    zz = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
    _check_domain(zz, N)
    e, de, G, dG = _parts(spec, zz, N)
    q = e / (spec.eta * G) - spec.mu / spec.eta
    dq = (de * G - e * dG) / (spec.eta * G * G)
    denom = spec.eta * q + spec.mu
    bad = np.abs(denom) <= _SINGULAR_TOL
    if np.any(bad):
        raise SingularDenominator(complex(zz[bad][0]))
    return _scalar_or_array(z, q + zz * dq / denom - hc(zz))


def _re_hc_on_circle(c: float) -> float:
    # Re h_c(e^{it}) as a quadratic in c = cos t
    return 4 / 3 * c * c + 4 / 3 * c + 1 / 3


def _re_hc_extremes() -> tuple[float, float]:
    # vertex c = -1/2 lies inside [-1, 1]; the maximum is at c = 1
    return _re_hc_on_circle(-0.5), _re_hc_on_circle(1.0)


def p_condition_margin(a: float, eta: float = 1.0) -> float:
    """Closed-disc minimum of Re(eta h_c(z) + mu) with mu = a - eta.

    For eta = 1 this is a - 1: the quantity Re(4z/3 + 2z^2/3 + a) attains its
    infimum -1 + a on the boundary where cos t = -1/2.  A zero margin still
    satisfies the open-disc hypothesis.
    """
    lo, hi = _re_hc_extremes()
    return eta * (lo if eta > 0 else hi) + (a - eta)


def lemma22_dominant(mu: float, z):
    """(mu / z^mu) int_0^z t^(mu-1) h_c(t) dt, integrated termwise."""
    if not mu > 0:
        raise ParamError("mu must be positive")
    z = np.asarray(z, dtype=np.complex128)
    out = 1 + (4 * z / 3) * (mu / (mu + 1)) + (2 * z * z / 3) * (mu / (mu + 2))
    return complex(out) if out.ndim == 0 else out
