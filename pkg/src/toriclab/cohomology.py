"""Exact intersection calculus for complete unimodular fans and pairs.

Degree-3 products of facet classes are evaluated by closed-form case
analysis instead of materializing a quotient ring:

  * three distinct indices: 1 if the triple is a cone of the fan, else 0;
  * a repeated index over a wall: the negated wall coefficient -a_s;
  * a triple index: eliminated through a linear relation given by the dual
    covector of the ray inside its first maximal cone.

The same scheme extends to arbitrary characteristic pairs, where triangle
values become orientation-weighted determinant signs (+-1) and repeated
indices are reduced with the same covector trick; on fans (oriented so all
cone determinants are positive) the two calculi agree entirely.

Volume polynomials collect every degree-3 integral with multinomial
weights; their values at valid support parameters are Euclidean volumes of
the corresponding simple polytopes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .charfunc import CharacteristicPair
from .combinatorics import SimplicialSphere2
from .errors import SupportInvalid, ValidationError
from .fan import Fan3
from .lattice import Vec3, det3, dot, dual_covector

Multiset = tuple[int, int, int]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _as_multiset(indices, m: int) -> Multiset:
    t = tuple(sorted(int(i) for i in indices))
    if len(t) != 3:
        raise ValidationError(f"need exactly 3 indices, got {indices!r}")
    if not all(0 <= i < m for i in t):
        raise ValidationError(f"index out of range in {t}")
    return t


@dataclass(frozen=True)
class LinearRelation:
    """The degree-2 relation sum_i <mu, ray_i> v_i = 0 for a covector mu."""

    mu: Vec3
    coeffs: tuple[int, ...]


def linear_relation(f: Fan3, mu) -> LinearRelation:
    mu = tuple(int(x) for x in mu)
    return LinearRelation(mu=mu, coeffs=tuple(dot(mu, r) for r in f.rays))


def betti_numbers(sphere: SimplicialSphere2) -> tuple[int, int, int, int]:
    """Even-degree Betti numbers (b0, b2, b4, b6) via the h-vector of the
    sphere; for an m-vertex 2-sphere this works out to (1, m-3, m-3, 1)."""
    fvec = (1, sphere.m, len(sphere.walls), len(sphere.triangles))
    n = 3
    h = []
    for k in range(n + 1):
        h.append(sum((-1) ** (k - i) * math.comb(n - i, k - i) * fvec[i]
                     for i in range(k + 1)))
    return tuple(h)


class IntersectionTable:
    """Memoized degree-3 integrals of one fan, keyed by sorted multiset."""

    def __init__(self, fan: Fan3):
        self.fan = fan
        self._memo: dict[Multiset, int] = {}
        self._triangles = set(fan.sphere.triangles)

    def value(self, indices) -> int:
        key = _as_multiset(indices, self.fan.m)
        if key not in self._memo:
            self._memo[key] = self._compute(key)
        return self._memo[key]

    def _compute(self, key: Multiset) -> int:
        i, j, k = key
        if i != j and j != k:
            return 1 if key in self._triangles else 0
        if i == j == k:
            return self._cube(i)
        rep, other = (i, k) if i == j else (j, i)
        return self._square(rep, other)

    def _square(self, i: int, j: int) -> int:
        """Integral of v_i^2 v_j."""
        pair = tuple(sorted((i, j)))
        wall = self.fan.wall_table.get(pair)
        if wall is None:
            return 0
        i1, i2 = wall.pair
        return -wall.a[0] if i == i1 else -wall.a[1]

    def _cube(self, i: int) -> int:
        """Integral of v_i^3, reduced through the first cone containing i."""
        tri = next(t for t in self.fan.sphere.triangles if i in t)
        j, k = (x for x in tri if x != i)
        mu = dual_covector(self.fan.rays[i], self.fan.rays[j], self.fan.rays[k])
        total = 0
        for t in range(self.fan.m):
            if t == i:
                continue
            c = dot(mu, self.fan.rays[t])
            if c:
                total -= c * self._square(i, t)
        return total


@lru_cache(maxsize=None)
def intersection_table(f: Fan3) -> IntersectionTable:
    return IntersectionTable(f)


def triple_intersection(f: Fan3, indices) -> int:
    """The integral of v_i v_j v_k over the fan's toric space."""
    return intersection_table(f).value(indices)


def chern_number_c1c2(f: Fan3) -> int:
    """Sum over walls J of sum over t of the integral of v_J v_t.

    An independent route to the total curvature: the double sum pairs the
    second elementary symmetric class with the first one.  It must equal
    gauss_bonnet_sum(f); a mismatch indicates an internal bug.
    """
    table = intersection_table(f)
    total = 0
    for w in f.walls:
        i1, i2 = w.pair
        total += sum(table.value((i1, i2, t)) for t in range(f.m))
    return total


# ---------------------------------------------------------------------------
# volume polynomials


@dataclass(frozen=True)
class VolumePolynomial:
    """Homogeneous cubic in m variables with exact rational coefficients.

    Keys of ``coeffs`` are sorted index multisets (i <= j <= k); only
    nonzero coefficients are stored.
    """

    fan: Fan3
    coeffs: tuple[tuple[Multiset, Fraction], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return self.fan.m

    def coefficient(self, indices) -> Fraction:
        key = _as_multiset(indices, self.m)
        return dict(self.coeffs).get(key, Fraction(0))

    def __call__(self, c) -> Fraction:
        c = [Fraction(x) for x in c]
        if len(c) != self.m:
            raise ValidationError(f"{len(c)} values for {self.m} variables")
        return sum((coeff * c[i] * c[j] * c[k]
                    for (i, j, k), coeff in self.coeffs), Fraction(0))


def volume_polynomial(f: Fan3) -> VolumePolynomial:
    """Assemble the full cubic from the intersection table.

    The coefficient of c_i c_j c_k (distinct) is the triple integral; of
    c_i^2 c_j it is the integral over 2; of c_i^3 over 6 — the multinomial
    weights of (c_1 v_1 + ... + c_m v_m)^3 / 3!.
    """
    table = intersection_table(f)
    coeffs = []
    for i in range(f.m):
        for j in range(i, f.m):
            for k in range(j, f.m):
                v = table.value((i, j, k))
                if not v:
                    continue
                if i == j == k:
                    weight = Fraction(1, 6)
                elif i == j or j == k:
                    weight = Fraction(1, 2)
                else:
                    weight = Fraction(1)
                coeffs.append(((i, j, k), weight * v))
    return VolumePolynomial(fan=f, coeffs=tuple(coeffs))


def serialize_volume_polynomial(V: VolumePolynomial) -> str:
    """One line per nonzero coefficient: `<p/q> : <i>^<e> ...`, sorted by
    multidegree — a stable, diffable dump."""
    out = []
    for key, coeff in sorted(V.coeffs):
        parts = []
        for var in sorted(set(key)):
            parts.append(f"{var}^{key.count(var)}")
        out.append(f"{coeff} : " + " ".join(parts))
    return "\n".join(out) + "\n"


def edge_functional(f: Fan3, pair, c) -> Fraction:
    """The derivative of the volume polynomial along a wall, evaluated at c.

    By Euler's identity on the (linear) second partial d_i d_j V, the value
    is sum_t c_t * integral(v_i v_j v_t).  It is positive exactly when the
    polytope edge dual to the wall has positive length, so positivity over
    all walls certifies that c are genuine support parameters for the fan.
    """
    w = f.wall_table.get(tuple(sorted(pair)))
    if w is None:
        raise ValidationError(f"{tuple(sorted(pair))} is not a wall of this fan")
    table = intersection_table(f)
    c = [Fraction(x) for x in c]
    if len(c) != f.m:
        raise ValidationError(f"{len(c)} values for {f.m} rays")
    i1, i2 = w.pair
    return sum((c[t] * table.value((i1, i2, t)) for t in range(f.m)),
               Fraction(0))


def certify_support(f: Fan3, c) -> None:
    """Raise SupportInvalid listing every wall with a non-positive edge."""
    bad = []
    for w in f.walls:
        v = edge_functional(f, w.pair, c)
        if v <= 0:
            bad.append((tuple(sorted(w.pair)), v))
    if bad:
        detail = ", ".join(f"wall {p}: {v}" for p, v in bad)
        raise SupportInvalid(f"non-positive edge functionals: {detail}")


def evaluate_volume(V: VolumePolynomial, c) -> Fraction:
    """Volume of the polytope cut out by support parameters c.

    The parameters must define a polytope whose normal fan is V's fan;
    this is certified by edge-functional positivity before evaluating.
    """
    c = [Fraction(x) for x in c]
    certify_support(V.fan, c)
    return V(c)


# ---------------------------------------------------------------------------
# signed calculus for general characteristic pairs


class SignedIntersectionTable:
    """Degree-3 integrals of a characteristic pair.

    Distinct triples evaluate to the orientation sign of the triangle times
    the sign of the ray determinant (a permutation-invariant product);
    repeated indices reduce through dual covectors exactly as in the fan
    case.  Values lie in {0, +1, -1} on distinct triples.
    """

    def __init__(self, pair: CharacteristicPair):
        self.pair = pair
        self._memo: dict[Multiset, int] = {}
        self._triangles = set(pair.sphere.triangles)
        self._apexes = {w: pair.sphere.wall_apexes(w) for w in pair.sphere.walls}

    def value(self, indices) -> int:
        key = _as_multiset(indices, self.pair.lam.m)
        if key not in self._memo:
            self._memo[key] = self._compute(key)
        return self._memo[key]

    def _distinct(self, i: int, j: int, k: int) -> int:
        if tuple(sorted((i, j, k))) not in self._triangles:
            return 0
        lam = self.pair.lam
        d = det3(lam[i], lam[j], lam[k])
        if d == 0:
            raise ValidationError(
                f"triangle {(i, j, k)} has degenerate vectors (det 0)")
        return self.pair.sphere.orientation_sign(i, j, k) * _sign(d)

    def _compute(self, key: Multiset) -> int:
        i, j, k = key
        if i != j and j != k:
            return self._distinct(i, j, k)
        if i == j == k:
            return self._cube(i)
        rep, other = (i, k) if i == j else (j, i)
        return self._square(rep, other)

    def _mu_for(self, i: int, j: int, k: int) -> Vec3:
        lam = self.pair.lam
        try:
            return dual_covector(lam[i], lam[j], lam[k])
        except ValueError:
            raise ValidationError(
                f"triangle {(i, j, k)} violates the basis condition; "
                f"the signed calculus needs it to hold") from None

    def _square(self, i: int, j: int) -> int:
        """Integral of v_i^2 v_j, via a covector vanishing on lambda(j)."""
        wall = tuple(sorted((i, j)))
        if wall not in self._apexes:
            return 0
        t = min(self._apexes[wall])
        mu = self._mu_for(i, j, t)
        lam = self.pair.lam
        total = 0
        for s in self._apexes[wall]:
            c = dot(mu, lam[s])
            if c:
                total -= c * self._distinct(s, i, j)
        return total

    def _cube(self, i: int) -> int:
        tri = next(t for t in self.pair.sphere.triangles if i in t)
        j, k = (x for x in tri if x != i)
        mu = self._mu_for(i, j, k)
        lam = self.pair.lam
        total = 0
        for t in range(lam.m):
            if t == i:
                continue
            c = dot(mu, lam[t])
            if c:
                total -= c * self._square(i, t)
        return total


@lru_cache(maxsize=None)
def signed_intersection_table(pair: CharacteristicPair) -> SignedIntersectionTable:
    return SignedIntersectionTable(pair)


def signed_triple_intersection(pair: CharacteristicPair, indices) -> int:
    """Integral of v_i v_j v_k for an arbitrary characteristic pair."""
    return signed_intersection_table(pair).value(indices)
