"""Quaternion scalar arithmetic.

A quaternion ``w + x*i + y*j + z*k`` is stored as four binary64
components.  Multiplication follows the Hamilton convention
``i*i = j*j = k*k = i*j*k = -1`` and is non-commutative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "w", float(self.w))
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "z", float(self.z))

    def conjugate(self) -> Quaternion:
        """Negate the vector part; ``q * q.conjugate() == abs(q)**2``."""
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def __abs__(self) -> float:
        # hypot scales internally, so no overflow for large components.
        return math.hypot(self.w, self.x, self.y, self.z)

    def abs_squared(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inverse(self) -> Quaternion:
        """Multiplicative inverse ``conjugate / |q|**2``.

        Raises ZeroDivisionError for the zero quaternion.
        """
        n2 = self.abs_squared()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def is_zero(self) -> bool:
        return self.w == 0.0 and self.x == 0.0 and self.y == 0.0 and self.z == 0.0

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(
                self.w * other.w - self.x * other.x - self.y * other.y - self.z * other.z,
                self.w * other.x + self.x * other.w + self.y * other.z - self.z * other.y,
                self.w * other.y - self.x * other.z + self.y * other.w + self.z * other.x,
                self.w * other.z + self.x * other.y - self.y * other.x + self.z * other.w,
            )
        if isinstance(other, (int, float)):
            f = float(other)
            return Quaternion(self.w * f, self.x * f, self.y * f, self.z * f)
        return NotImplemented

    def __rmul__(self, other):
        # Real scalars commute with quaternions, so no separate ordering here.
        if isinstance(other, (int, float)):
            f = float(other)
            return Quaternion(self.w * f, self.x * f, self.y * f, self.z * f)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            f = float(other)
            return Quaternion(self.w / f, self.x / f, self.y / f, self.z / f)
        if isinstance(other, Quaternion):
            return self * other.inverse()
        return NotImplemented

    def __str__(self) -> str:
        # Shortest round-trip formatting, four components separated by spaces.
        return f"{self.w!r} {self.x!r} {self.y!r} {self.z!r}"


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
