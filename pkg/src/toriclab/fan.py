"""Complete simplicial fans in Z^3: walls, curvature, Gauss-Bonnet.

All arithmetic is exact (arbitrary-precision integers and fractions).  A
fan is stored as primitive rays plus maximal cones; the cone complex is
required to triangulate a 2-sphere, which together with the wall sign
condition and a generic-ray piercing test certifies completeness.

Wall bookkeeping follows a fixed normalization: the wall pair (i1, i2) and
its two apexes (i, i') are ordered so that

    det(ray(i1), ray(i2), ray(i))  = +1
    det(ray(i1), ray(i2), ray(i')) = -1

and then the integers a1 = det(ray(i'), ray(i2), ray(i)),
a2 = det(ray(i1), ray(i'), ray(i)) satisfy the exact wall relation

    ray(i) + ray(i') = a1 * ray(i1) + a2 * ray(i2).

The unimodular curvature of the wall is 2 - a1 - a2; its sign equals the
sign of det(ray(i1)-ray(i'), ray(i2)-ray(i'), ray(i)-ray(i')), which
classifies the wall as convex, flat, or concave.  Summed over all walls of
a complete unimodular fan, the curvature is 24.
"""

from __future__ import annotations

import os
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .charfunc import CharacteristicFunction, CharacteristicPair
from .combinatorics import SimplicialSphere2, Triangle
from .errors import (
    IncompleteFan,
    InternalError,
    NotFound,
    OrientationError,
    ParseError,
    ValidationError,
)
from .lattice import Vec3, add, det3, is_primitive, sub

ENV_SEED = "TORICLAB_SEED"


@dataclass(frozen=True)
class Wall:
    """One wall of a fan with its normalized data (see module docstring)."""

    pair: tuple[int, int]      # (i1, i2), positive-basis order
    apexes: tuple[int, int]    # (i, i'), det +1 / det -1 sides
    a: tuple[int, int]
    curvature: int
    classification: str        # convex | flat | concave

    @property
    def key(self) -> tuple[int, int]:
        """The wall as a sorted pair, for lookups."""
        return tuple(sorted(self.pair))


@dataclass(frozen=True)
class CompletenessCertificate:
    """Evidence from check_complete: the sampled direction and its cone."""

    direction: Vec3
    cone: Triangle
    attempts: int


@dataclass(frozen=True)
class Fan3:
    """An immutable simplicial fan in Z^3.

    ``sphere`` is the cone complex validated as a simplicial 2-sphere; it
    is None only when the fan was built with ``validate=False`` (raw mode,
    for feeding deliberately broken complexes to check_complete).
    """

    name: str
    rays: tuple[Vec3, ...]
    maximal_cones: tuple[Triangle, ...]
    sphere: SimplicialSphere2 | None
    support: tuple[Fraction, ...] | None

    @classmethod
    def from_data(cls, name, rays, cones, support=None, validate=True) -> "Fan3":
        rays = tuple(tuple(int(x) for x in r) for r in rays)
        cones = tuple(sorted(tuple(sorted(int(i) for i in c)) for c in cones))
        m = len(rays)
        for i, r in enumerate(rays):
            if not is_primitive(r):
                raise ValidationError(f"ray {i} = {r} is not primitive")
        for c in cones:
            if len(set(c)) != 3:
                raise ValidationError(f"cone {c} does not have 3 distinct rays")
            if not all(0 <= i < m for i in c):
                raise ValidationError(f"cone {c} references a ray outside 0..{m - 1}")
        sphere = None
        if validate:
            for c in cones:
                if det3(rays[c[0]], rays[c[1]], rays[c[2]]) == 0:
                    raise ValidationError(f"cone {c} is degenerate: det = 0")
            try:
                sphere = SimplicialSphere2.from_triangles(m, cones)
            except ValidationError as e:
                raise ValidationError(f"cone complex is not a 2-sphere: {e}") from None
        if support is not None:
            support = tuple(Fraction(x) for x in support)
            if len(support) != m:
                raise ValidationError(
                    f"{len(support)} support parameters for {m} rays")
        return cls(name=name, rays=rays, maximal_cones=cones,
                   sphere=sphere, support=support)

    @property
    def m(self) -> int:
        return len(self.rays)

    def ray(self, i: int) -> Vec3:
        return self.rays[i]

    @cached_property
    def wall_table(self) -> dict[tuple[int, int], Wall]:
        """All walls keyed by sorted pair, computed once."""
        if self.sphere is None:
            raise InternalError("raw fan (validate=False) has no wall table")
        return {w: _compute_wall(self, w) for w in self.sphere.walls}

    @property
    def walls(self) -> tuple[Wall, ...]:
        """Walls in deterministic (sorted-pair lexicographic) order."""
        return tuple(self.wall_table[k] for k in sorted(self.wall_table))

    def with_support(self, support) -> "Fan3":
        return Fan3.from_data(self.name, self.rays, self.maximal_cones,
                              support=support)


def _compute_wall(f: Fan3, wall_pair: tuple[int, int]) -> Wall:
    u, v = wall_pair
    p, q = f.sphere.wall_apexes(wall_pair)
    for i1, i2 in ((u, v), (v, u)):
        for i, ip in ((p, q), (q, p)):
            if (det3(f.rays[i1], f.rays[i2], f.rays[i]) == 1
                    and det3(f.rays[i1], f.rays[i2], f.rays[ip]) == -1):
                return _finish_wall(f, i1, i2, i, ip)
    raise OrientationError(
        f"wall {wall_pair}: no ordering gives determinants +1/-1 for the "
        f"two apexes; the cone pair is not unimodular or not on opposite sides")


def _finish_wall(f: Fan3, i1, i2, i, ip) -> Wall:
    l1, l2, li, lp = f.rays[i1], f.rays[i2], f.rays[i], f.rays[ip]
    a1 = det3(lp, l2, li)
    a2 = det3(l1, lp, li)
    if add(li, lp) != add(tuple(a1 * x for x in l1), tuple(a2 * x for x in l2)):
        raise InternalError(
            f"wall relation failed at ({i1},{i2}): "
            f"ray({i})+ray({ip}) != {a1}*ray({i1})+{a2}*ray({i2})")
    curv = 2 - a1 - a2
    side = det3(sub(l1, lp), sub(l2, lp), sub(li, lp))
    if side != curv:
        raise InternalError(
            f"wall ({i1},{i2}): side determinant {side} != curvature {curv}")
    cls = "convex" if curv > 0 else ("flat" if curv == 0 else "concave")
    return Wall(pair=(i1, i2), apexes=(i, ip), a=(a1, a2),
                curvature=curv, classification=cls)


def wall_data(f: Fan3, pair) -> Wall:
    """The normalized wall record for an unordered wall pair."""
    key = tuple(sorted(pair))
    try:
        return f.wall_table[key]
    except KeyError:
        raise ValidationError(f"{key} is not a wall of this fan") from None


def curvature(w: Wall) -> int:
    return w.curvature


def classify_wall(f: Fan3, pair) -> str:
    return wall_data(f, pair).classification


def gauss_bonnet_sum(f: Fan3) -> int:
    """Total unimodular curvature over all walls (24 for complete fans)."""
    return sum(w.curvature for w in f.walls)


def positive_curvature_wall(f: Fan3) -> Wall:
    """First wall (in deterministic order) with curvature > 0.

    Every complete fan has one; exhaustion means the input is not a
    complete fan and raises NotFound.
    """
    for w in f.walls:
        if w.curvature > 0:
            return w
    raise NotFound("no wall of positive curvature: input cannot be a complete fan")


@dataclass(frozen=True)
class UnimodularVerdict:
    ok: bool
    violations: tuple[tuple[Triangle, int], ...]  # (cone, determinant)


def check_unimodular(f: Fan3) -> UnimodularVerdict:
    """Every maximal cone must have ray determinant +-1."""
    bad = []
    for c in f.maximal_cones:
        d = det3(f.rays[c[0]], f.rays[c[1]], f.rays[c[2]])
        if d not in (1, -1):
            bad.append((c, d))
    return UnimodularVerdict(ok=not bad, violations=tuple(bad))


def check_complete(f: Fan3, seed: int | None = None) -> CompletenessCertificate:
    """Certify completeness, or raise IncompleteFan naming the failure.

    Three-part test: (a) the cone complex is a simplicial 2-sphere, (b) at
    every wall the two apex rays lie strictly on opposite sides of the
    wall's plane, (c) a pseudo-random generic rational direction lies in
    exactly one maximal cone (resampled while it hits a cone boundary).
    The sampler is seeded by ``seed``, or by the TORICLAB_SEED environment
    variable (default 0), so runs are reproducible.
    """
    # (a) sphere test, with a sharper message for uneven walls
    owners: dict[tuple[int, int], int] = {}
    for c in f.maximal_cones:
        for wll in ((c[0], c[1]), (c[0], c[2]), (c[1], c[2])):
            owners[wll] = owners.get(wll, 0) + 1
    for wll, n in sorted(owners.items()):
        if n != 2:
            raise IncompleteFan(f"wall {wll} lies in {n} maximal cones (expected 2)")
    sphere = f.sphere
    if sphere is None:
        try:
            sphere = SimplicialSphere2.from_triangles(f.m, f.maximal_cones)
        except ValidationError as e:
            raise IncompleteFan(f"cone complex is not a 2-sphere: {e}") from None

    # (b) apexes strictly on opposite sides of each wall plane
    for u, v in sphere.walls:
        p, q = sphere.wall_apexes((u, v))
        dp = det3(f.rays[u], f.rays[v], f.rays[p])
        dq = det3(f.rays[u], f.rays[v], f.rays[q])
        if dp == 0 or dq == 0 or (dp > 0) == (dq > 0):
            raise IncompleteFan(
                f"apexes {p}, {q} of wall ({u}, {v}) do not lie strictly on "
                f"opposite sides (determinants {dp}, {dq})")

    # (c) generic-ray piercing
    if seed is None:
        seed = int(os.environ.get(ENV_SEED, "0"))
    rng = random.Random(seed)
    for attempt in range(1, 65):
        direction = tuple(rng.randint(-997, 997) for _ in range(3))
        if direction == (0, 0, 0):
            continue
        hits, on_boundary = _pierce(f, direction)
        if on_boundary:
            continue
        if len(hits) == 1:
            return CompletenessCertificate(direction=direction, cone=hits[0],
                                           attempts=attempt)
        if not hits:
            raise IncompleteFan(
                f"generic direction {direction} lies in no maximal cone")
        raise IncompleteFan(
            f"generic direction {direction} lies in {len(hits)} maximal "
            f"cones: {hits}")
    raise InternalError("piercing test kept hitting cone boundaries; "
                        "input is degenerate beyond repair")


def _pierce(f: Fan3, x: Vec3):
    """Maximal cones whose interior contains x (exact barycentric solve)."""
    hits = []
    boundary = False
    for c in f.maximal_cones:
        la, lb, lc = (f.rays[i] for i in c)
        d = det3(la, lb, lc)
        if d == 0:
            raise ValidationError(f"cone {c} is degenerate: det = 0")
        coeffs = (Fraction(det3(x, lb, lc), d),
                  Fraction(det3(la, x, lc), d),
                  Fraction(det3(la, lb, x), d))
        if all(t > 0 for t in coeffs):
            hits.append(c)
        elif all(t >= 0 for t in coeffs):
            boundary = True
    return hits, boundary


def characteristic_pair(f: Fan3) -> CharacteristicPair:
    """The fan's sphere with its geometric orientation, plus its rays.

    Triangles are oriented so every ray determinant is positive; for a
    complete fan this orientation is globally consistent, which is exactly
    what makes the signed intersection calculus agree with the unsigned
    fan calculus.
    """
    if f.sphere is None:
        raise InternalError("raw fan has no sphere")
    oriented = []
    for (i, j, k) in f.sphere.triangles:
        d = det3(f.rays[i], f.rays[j], f.rays[k])
        if d == 0:
            raise ValidationError(f"cone {(i, j, k)} is degenerate: det = 0")
        oriented.append((i, j, k) if d > 0 else (i, k, j))
    sphere = SimplicialSphere2.from_triangles(f.m, f.sphere.triangles,
                                              oriented=oriented)
    return CharacteristicPair(sphere, CharacteristicFunction(f.rays))


_RAY_RE = re.compile(r"^R\s+(\d+)\s*:\s*(-?\d+)\s+(-?\d+)\s+(-?\d+)$")
_CONE_RE = re.compile(r"^C\s*:\s*(\d+)\s+(\d+)\s+(\d+)$")


def parse_fan(text: str) -> Fan3:
    """Parse a FAN3 document.

    Grammar (line based, '#' comments):
        fan3 <name>
        rays <m>
        R <id>: <x> <y> <z>          (m lines, ids in order)
        cones <f>
        C: <i> <j> <k>               (f lines)
        support: <c1> ... <cm>       (optional; rationals as p/q or integers)
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty FAN3 document")
    head = re.match(r"^fan3\s+(\S.*)$", lines[0])
    if not head:
        raise ParseError(f"expected 'fan3 <name>', got {lines[0]!r}")
    name = head.group(1).strip()

    def count(idx, word):
        if idx >= len(lines) or not lines[idx].startswith(word):
            raise ParseError(f"expected '{word} <n>' on line {idx + 1}")
        try:
            return int(lines[idx].split()[1])
        except (IndexError, ValueError):
            raise ParseError(f"malformed count line {lines[idx]!r}") from None

    m = count(1, "rays")
    rays = []
    for k in range(m):
        ln = lines[2 + k] if 2 + k < len(lines) else ""
        match = _RAY_RE.match(ln)
        if not match:
            raise ParseError(f"malformed ray line {ln!r}")
        if int(match.group(1)) != k:
            raise ParseError(f"ray ids must appear in order; got {match.group(1)} "
                             f"where {k} was expected")
        rays.append(tuple(int(match.group(g)) for g in (2, 3, 4)))

    ncones = count(2 + m, "cones")
    cones = []
    for k in range(ncones):
        idx = 3 + m + k
        ln = lines[idx] if idx < len(lines) else ""
        match = _CONE_RE.match(ln)
        if not match:
            raise ParseError(f"malformed cone line {ln!r}")
        cones.append(tuple(int(match.group(g)) for g in (1, 2, 3)))

    support = None
    rest = lines[3 + m + ncones:]
    if rest:
        if len(rest) != 1 or not rest[0].startswith("support:"):
            raise ParseError(f"unexpected trailing line {rest[0]!r}")
        toks = rest[0].split(":", 1)[1].split()
        try:
            support = [Fraction(t) for t in toks]
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"malformed support parameters {rest[0]!r}") from None

    return Fan3.from_data(name, rays, cones, support=support)


def serialize_fan(f: Fan3) -> str:
    """Canonical FAN3 text; parse(serialize(f)) == f, bit-exact."""
    out = [f"fan3 {f.name}", f"rays {f.m}"]
    for i, (x, y, z) in enumerate(f.rays):
        out.append(f"R {i}: {x} {y} {z}")
    out.append(f"cones {len(f.maximal_cones)}")
    for c in f.maximal_cones:
        out.append(f"C: {c[0]} {c[1]} {c[2]}")
    if f.support is not None:
        out.append("support: " + " ".join(str(c) for c in f.support))
    return "\n".join(out) + "\n"
