"""Coefficient-space operators on truncated series.

Every operator here is diagonal in the monomial basis, so the analytic
identities relating them reduce to finite coefficient comparisons.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import ClassError, ParamError
from .powerseries import PowerSeries, evaluate
from .special import MLParams, normalized_ml_series

__all__ = [
    "PowerSeries",
    "evaluate",
    "hadamard",
    "apply_operator",
    "z_times_derivative",
    "bernardi",
    "Identity",
    "identity_residual",
]


def hadamard(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Coefficientwise (Hadamard) product, truncated to the shorter order."""
    n = min(len(f), len(g))
    return PowerSeries(f.coeffs[:n] * g.coeffs[:n])


def _require_class_a(f: PowerSeries):
    if not f.is_class_a():
        raise ClassError(f"series must start 0 + 1*z + ..., got c0={f[0]!r}, c1={f[1]!r}")


def apply_operator(p: MLParams, f: PowerSeries) -> PowerSeries:
    """Convolve ``f`` with the normalized Mittag-Leffler series."""
    _require_class_a(f)
    return hadamard(normalized_ml_series(p, f.order), f)


def z_times_derivative(f: PowerSeries) -> PowerSeries:
    return PowerSeries(np.arange(len(f)) * f.coeffs)


def bernardi(sigma: float, f: PowerSeries) -> PowerSeries:
    """Bernardi-Libera-Livingston integral operator with parameter ``sigma > -1``.

    ``(sigma+1) z^-sigma int_0^z t^(sigma-1) f(t) dt`` maps ``z^k`` to
    ``(sigma+1)/(sigma+k) z^k``.
    """
    if not sigma > -1:
        raise ParamError(f"sigma must exceed -1, got {sigma!r}")
    _require_class_a(f)
    k = np.arange(len(f), dtype=float)
    factors = np.zeros(len(f))
    factors[1:] = (sigma + 1) / (sigma + k[1:])
    return PowerSeries(factors * f.coeffs)


class Identity(str, Enum):
    REC1 = "rec1"
    REC2 = "rec2"
    BERNARDI_INT = "bernardi_int"


def _max_abs(s: PowerSeries) -> float:
    return float(np.max(np.abs(s.coeffs)))


def identity_residual(kind, p: MLParams, f: PowerSeries, sigma: float | None = None) -> float:
    """Largest coefficient mismatch between the two sides of an operator identity.

    ``REC1``: z (E^g f)' = (1-g) E^g f + g E^(g+1) f.
    ``REC2``: a z (E_(b+1) f)' = b E_b f + (a-b) E_(b+1) f.
    ``BERNARDI_INT``: z (E L f)' = (s+1) E f - s E L f.
    """
    kind = Identity(kind)
    _require_class_a(f)
    if kind is Identity.REC1:
        ef = apply_operator(p, f)
        lhs = z_times_derivative(ef)
        rhs = (1 - p.gamma) * ef + p.gamma * apply_operator(p.shifted(dgamma=1), f)
    elif kind is Identity.REC2:
        ef_b1 = apply_operator(p.shifted(dbeta=1), f)
        lhs = p.alpha * z_times_derivative(ef_b1)
        rhs = p.beta * apply_operator(p, f) + (p.alpha - p.beta) * ef_b1
    else:
        if sigma is None:
            raise ParamError("sigma is required for the Bernardi identity")
        elf = apply_operator(p, bernardi(sigma, f))
        lhs = z_times_derivative(elf)
        rhs = (sigma + 1) * apply_operator(p, f) - sigma * elf
    return _max_abs(lhs - rhs)
