"""Complex polar arithmetic and the order-p conjugates.

The order-p conjugates of ``z = |z| e^{i theta}`` are

    z^{c_p^j} = |z| * exp(i * theta * exp(i 2 pi j / p)),   j = 0, ..., p - 1

so their product over a full period is ``|z|**p``.  ``theta`` is always the
principal argument of the *original* value in (-pi, pi]; iterated application
is a different (and non-equivalent) operation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PolarComplex",
    "to_polar",
    "from_polar",
    "principal_angle",
    "conj_p",
    "conj_p_array",
]


@dataclass(frozen=True)
class PolarComplex:
    """Modulus and principal angle of a complex number."""

    modulus: float
    angle: float

    def __post_init__(self) -> None:
        if not self.modulus >= 0.0:
            raise ValueError(f"modulus must be nonnegative, got {self.modulus}")
        if not -math.pi < self.angle <= math.pi:
            raise ValueError(f"angle {self.angle} outside (-pi, pi]")
        if self.modulus == 0.0 and self.angle != 0.0:
            raise ValueError("zero modulus requires angle 0")

    def to_complex(self) -> complex:
        return from_polar(self.modulus, self.angle)


def principal_angle(z: complex) -> float:
    """Four-quadrant argument in (-pi, pi], with angle(0) = 0."""
    z = complex(z)
    if z == 0:
        return 0.0
    theta = math.atan2(z.imag, z.real)
    # atan2(-0.0, x<0) returns -pi; the half-open range excludes it
    if theta == -math.pi:
        theta = math.pi
    return theta


def to_polar(z: complex) -> PolarComplex:
    z = complex(z)
    if z == 0:
        return PolarComplex(0.0, 0.0)
    return PolarComplex(abs(z), principal_angle(z))


def from_polar(modulus: float, angle: float) -> complex:
    return cmath.rect(modulus, angle)


def _root_of_unity(p: int, j: int) -> tuple[float, float]:
    """cos and sin of 2 pi j / p with the exactly representable cases pinned."""
    if 4 * j == p:
        return 0.0, 1.0
    if 4 * j == 3 * p:
        return 0.0, -1.0
    phase = 2.0 * math.pi * j / p
    return math.cos(phase), math.sin(phase)


def _check_order(p: int) -> int:
    p = int(p)
    if p < 2:
        raise ValueError(f"conjugate order p must be >= 2, got {p}")
    return p


def conj_p(z: complex, p: int, j: int) -> complex:
    """The j-th order-p conjugate of ``z`` (j is reduced modulo p)."""
    p = _check_order(p)
    j = int(j) % p
    z = complex(z)
    if j == 0:
        return z
    if 2 * j == p:
        return z.conjugate()
    if z == 0:
        return 0j
    modulus = abs(z)
    theta = principal_angle(z)
    c, s = _root_of_unity(p, j)
    return cmath.rect(modulus * math.exp(-theta * s), theta * c)


def conj_p_array(a, p: int, j: int) -> np.ndarray:
    """Entrywise :func:`conj_p` over an array; returns a new complex array."""
    p = _check_order(p)
    j = int(j) % p
    a = np.asarray(a, dtype=np.complex128)
    if j == 0:
        return a.copy()
    if 2 * j == p:
        return np.conj(a)
    modulus = np.abs(a)
    theta = np.array(np.arctan2(a.imag, a.real), dtype=np.float64)
    theta[theta == -np.pi] = np.pi
    theta[modulus == 0.0] = 0.0
    c, s = _root_of_unity(p, j)
    scaled = modulus * np.exp(-theta * s)
    phase = theta * c
    out = np.empty(a.shape, dtype=np.complex128)
    out.real = scaled * np.cos(phase)
    out.imag = scaled * np.sin(phase)
    return out
