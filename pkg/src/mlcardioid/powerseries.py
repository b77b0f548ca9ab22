"""Truncated Maclaurin series with complex coefficients."""

from __future__ import annotations

from dataclasses import dataclass
import json
import warnings

import numpy as np


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Coefficients c_0..c_N of a truncated power series.

    The array is stored as ``complex128`` and marked read-only so a series can
    be shared freely.  Arithmetic between series of different orders truncates
    to the shorter one.
    """

    coeffs: np.ndarray

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=np.complex128).ravel()
        if arr.size < 2:
            # order >= 1 is required; a bare constant is padded with a zero z term
            arr = np.concatenate([arr, np.zeros(2 - arr.size, dtype=np.complex128)])
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def __repr__(self):
        return f"PowerSeries(order={self.order}, coeffs={self.coeffs.tolist()!r})"

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(np.all(self.coeffs == other.coeffs))

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries(self.coeffs[: order + 1])

    def _binary(self, other, op):
        if isinstance(other, PowerSeries):
            n = min(self.coeffs.size, other.coeffs.size)
            return PowerSeries(op(self.coeffs[:n], other.coeffs[:n]))
        return NotImplemented

    def __add__(self, other):
        return self._binary(other, np.add)

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __neg__(self):
        return PowerSeries(-self.coeffs)

    def __mul__(self, scalar):
        if isinstance(scalar, PowerSeries):
            return NotImplemented
        return PowerSeries(self.coeffs * scalar)

    __rmul__ = __mul__

    def is_class_a(self, atol: float = 1e-12) -> bool:
        """True when the series is normalized as ``z + a_2 z^2 + ...``."""
        return abs(self.coeffs[0]) <= atol and abs(self.coeffs[1] - 1) <= atol

    def __call__(self, z):
        return evaluate(self, z)

    def to_json(self) -> str:
        return json.dumps({"coeffs": [[c.real, c.imag] for c in self.coeffs.tolist()]})

    @classmethod
    def from_json(cls, text: str) -> PowerSeries:
        data = json.loads(text)
        return cls([complex(re, im) for re, im in data["coeffs"]])


def evaluate(f: PowerSeries, z):
    """Horner evaluation; accepts scalars or numpy arrays of points."""
    z_arr = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(z_arr) >= 1):
        warnings.warn("evaluating a truncated series outside the unit disc", RuntimeWarning, stacklevel=2)
    acc = np.zeros_like(z_arr)
    for c in f.coeffs[::-1]:
        acc = acc * z_arr + c
    if acc.ndim == 0:
        return complex(acc)
    return acc
