"""Sharp lower bounds on Re(phi^(1/zeta)) and their extremal functions.

Each bound has the form ``c int_0^1 u^(c-1) (3 - 2u + u^2/2)/3 du`` where only
the exponent ``c`` depends on which operator combination is subordinate to
h_c.  The integrand is a polynomial times ``u^(c-1)``, so the integral is
evaluated in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .errors import ParamError

__all__ = [
    "BoundOrigin",
    "BoundQuery",
    "sharp_bound",
    "sharp_bound_root",
    "effective_exponent",
    "extremal_series_value",
]


class BoundOrigin(str, Enum):
    THM21 = "thm21"  # c = gamma / lambda
    THM22 = "thm22"  # c = beta / (lambda alpha)
    THM23 = "thm23"  # c = (sigma + 1) / (1 - lambda)


def _positive(name, value):
    if not (math.isfinite(value) and value > 0):
        raise ParamError(f"{name} must be positive, got {value!r}")


def effective_exponent(origin, **params) -> float:
    """The exponent c for a theorem tag.

    thm21 takes ``gamma, lam``; thm22 takes ``alpha, beta, lam``; thm23 takes
    ``sigma, lam`` with ``0 < lam < 1`` and ``sigma > -1``.
    """
    origin = BoundOrigin(origin)
    lam = params["lam"]
    _positive("lambda", lam)
    if origin is BoundOrigin.THM21:
        _positive("gamma", params["gamma"])
        return params["gamma"] / lam
    if origin is BoundOrigin.THM22:
        _positive("alpha", params["alpha"])
        _positive("beta", params["beta"])
        return params["beta"] / (lam * params["alpha"])
    if not lam < 1:
        raise ParamError(f"thm23 needs 0 < lambda < 1, got {lam!r}")
    sigma = params["sigma"]
    if not sigma > -1:
        raise ParamError(f"thm23 needs sigma > -1, got {sigma!r}")
    return (sigma + 1) / (1 - lam)


@dataclass(frozen=True)
class BoundQuery:
    c: float
    zeta: float = 1.0
    origin: BoundOrigin | None = None

    def __post_init__(self):
        _positive("c", self.c)
        if not (math.isfinite(self.zeta) and self.zeta >= 1):
            raise ParamError(f"zeta must be >= 1, got {self.zeta!r}")
        if self.origin is not None:
            object.__setattr__(self, "origin", BoundOrigin(self.origin))

    @classmethod
    def for_theorem(cls, origin, zeta: float = 1.0, **params) -> BoundQuery:
        return cls(effective_exponent(origin, **params), zeta, origin)


def sharp_bound(c: float) -> float:
    """c int_0^1 u^(c-1) (3 - 2u + u^2/2)/3 du.

    Termwise integration gives 1 - 2c/(3(c+1)) + c/(6(c+2)), evaluated here as
    the single fraction (3c^2 + 11c + 12) / (6(c+1)(c+2)) so that small integer c
    such as c = 1 come out correctly rounded.  Strictly decreasing from 1
    (c -> 0+) to 1/2 (c -> infinity).
    """
    _positive("c", c)
    return (3 * c * c + 11 * c + 12) / (6 * (c + 1) * (c + 2))


def sharp_bound_root(q: BoundQuery) -> float:
    return sharp_bound(q.c) ** (1 / q.zeta)


def extremal_series_value(c: float, z):
    """c int_0^1 u^(c-1) h_c(uz) du, the extremal E f(z)/z for exponent c."""
    _positive("c", c)
    z = np.asarray(z, dtype=np.complex128)
    out = 1 + (4 * c / (3 * (c + 1))) * z + (2 * c / (3 * (c + 2))) * z * z
    return complex(out) if out.ndim == 0 else out
