"""Exact integer 3-vector arithmetic used throughout the package.

Everything here is plain Python int arithmetic, so values never overflow
and no floating point is involved anywhere.
"""

from __future__ import annotations

from math import gcd

Vec3 = tuple[int, int, int]


def det3(a: Vec3, b: Vec3, c: Vec3) -> int:
    """Determinant of the 3x3 integer matrix with rows a, b, c."""
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def cross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def dot(a: Vec3, b: Vec3) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def sub(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def add(a: Vec3, b: Vec3) -> Vec3:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def scale(k: int, a: Vec3) -> Vec3:
    return (k * a[0], k * a[1], k * a[2])


def neg(a: Vec3) -> Vec3:
    return (-a[0], -a[1], -a[2])


def is_primitive(a: Vec3) -> bool:
    """True iff a is nonzero and its entries have gcd 1."""
    return gcd(gcd(abs(a[0]), abs(a[1])), abs(a[2])) == 1


def matvec(rows: tuple[Vec3, Vec3, Vec3], a: Vec3) -> Vec3:
    """Apply the integer matrix given by its rows to the column vector a."""
    return (dot(rows[0], a), dot(rows[1], a), dot(rows[2], a))


def dual_covector(a: Vec3, b: Vec3, c: Vec3) -> Vec3:
    """Integer covector m with <m,a> = 1, <m,b> = <m,c> = 0.

    Requires det3(a, b, c) = +-1, i.e. (a, b, c) is a lattice basis.
    """
    d = det3(a, b, c)
    if d not in (1, -1):
        raise ValueError(f"({a}, {b}, {c}) is not a lattice basis: det = {d}")
    bc = cross(b, c)
    return bc if d == 1 else neg(bc)
