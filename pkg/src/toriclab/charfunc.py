"""Characteristic functions: facet 4-colorings and lattice-vector assignments.

The constructive route goes sphere -> proper 4-coloring -> vectors
(a, b, c, d) -> (e1, e2, e3, e1+e2+e3).  Any three distinct vectors among
those four form a lattice basis, so the resulting assignment automatically
satisfies the basis condition on every triangle of the sphere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .combinatorics import SimplicialSphere2, Triangle
from .errors import InternalError, ParseError, ValidationError
from .lattice import Vec3, det3, is_primitive

COLORS = ("a", "b", "c", "d")

COLOR_VECTORS: dict[str, Vec3] = {
    "a": (1, 0, 0),
    "b": (0, 1, 0),
    "c": (0, 0, 1),
    "d": (1, 1, 1),
}


@dataclass(frozen=True)
class FacetColoring:
    """Colors in {a, b, c, d}, one per sphere vertex (= polytope facet)."""

    colors: tuple[str, ...]

    def __post_init__(self):
        bad = [c for c in self.colors if c not in COLORS]
        if bad:
            raise ValidationError(f"unknown color {bad[0]!r}")

    @property
    def m(self) -> int:
        return len(self.colors)

    def is_proper(self, sphere: SimplicialSphere2) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in sphere.walls)


@dataclass(frozen=True)
class CharacteristicFunction:
    """An assignment of a primitive integer vector to each of m facets."""

    vectors: tuple[Vec3, ...]

    def __post_init__(self):
        for i, v in enumerate(self.vectors):
            if len(v) != 3 or not all(isinstance(x, int) for x in v):
                raise ValidationError(f"lambda({i}) = {v!r} is not an integer 3-vector")
            if not is_primitive(v):
                raise ValidationError(f"lambda({i}) = {v} is not primitive")

    @property
    def m(self) -> int:
        return len(self.vectors)

    def __getitem__(self, i: int) -> Vec3:
        return self.vectors[i]


@dataclass(frozen=True)
class CharacteristicPair:
    """A sphere together with a vector assignment of matching size.

    Construction only enforces the size agreement; whether every triangle
    spans a lattice basis is a separate, reportable check
    (:func:`check_star_condition`), so invalid assignments can be loaded
    and diagnosed.
    """

    sphere: SimplicialSphere2
    lam: CharacteristicFunction

    def __post_init__(self):
        if self.sphere.m != self.lam.m:
            raise ValidationError(
                f"sphere has {self.sphere.m} vertices but lambda has {self.lam.m} values")


@dataclass(frozen=True)
class StarVerdict:
    """Outcome of the basis condition scan over all triangles."""

    ok: bool
    violations: tuple[tuple[Triangle, int], ...]  # (triangle, determinant)


def check_star_condition(pair: CharacteristicPair) -> StarVerdict:
    """Check det(lambda(i), lambda(j), lambda(k)) = +-1 on every triangle.

    Both signs are accepted; orientation-sensitive sign constraints belong
    to the fan layer.  Every violating triangle is reported together with
    its determinant.
    """
    bad = []
    lam = pair.lam
    for t in pair.sphere.triangles:
        d = det3(lam[t[0]], lam[t[1]], lam[t[2]])
        if d not in (1, -1):
            bad.append((t, d))
    return StarVerdict(ok=not bad, violations=tuple(bad))


def four_color(sphere: SimplicialSphere2) -> FacetColoring:
    """Properly 4-color the 1-skeleton of a simplicial 2-sphere.

    Deterministic backtracking: vertices are chosen by descending
    saturation (number of distinct neighbor colors), ties broken by
    descending degree and then by smallest id; colors are tried in the
    fixed order a, b, c, d.  Vertex 0 therefore always receives 'a' and the
    first differently-colored vertex receives 'b'.

    The skeleton is planar, so a proper 4-coloring exists; exhaustion of
    the search would indicate corrupted input or a solver bug and raises
    InternalError.
    """
    m = sphere.m
    adj: list[set[int]] = [set() for _ in range(m)]
    for u, v in sphere.walls:
        adj[u].add(v)
        adj[v].add(u)

    assignment: list[str | None] = [None] * m

    def pick() -> int | None:
        best = None
        best_key = None
        for v in range(m):
            if assignment[v] is not None:
                continue
            sat = len({assignment[u] for u in adj[v] if assignment[u] is not None})
            key = (-sat, -len(adj[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def solve() -> bool:
        v = pick()
        if v is None:
            return True
        taken = {assignment[u] for u in adj[v]}
        for color in COLORS:
            if color in taken:
                continue
            assignment[v] = color
            if solve():
                return True
            assignment[v] = None
        return False

    if not solve():
        raise InternalError("4-coloring search exhausted on a planar graph")
    coloring = FacetColoring(tuple(assignment))
    if not coloring.is_proper(sphere):
        raise InternalError("solver produced an improper coloring")
    return coloring


def coloring_to_charfunc(coloring: FacetColoring) -> CharacteristicFunction:
    """Replace colors by vectors: a, b, c, d -> e1, e2, e3, e1+e2+e3."""
    return CharacteristicFunction(
        tuple(COLOR_VECTORS[c] for c in coloring.colors))


_LAMBDA_LINE_RE = re.compile(r"^L\s+(\d+)\s*:\s*(-?\d+)\s+(-?\d+)\s+(-?\d+)$")


def parse_charfunc(text: str) -> CharacteristicFunction:
    """Parse a CHARFUNC block: `lambda <m>` then m lines `L <id>: <x> <y> <z>`."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("lambda"):
        raise ParseError("expected 'lambda <m>' header")
    try:
        m = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ParseError(f"malformed header {lines[0]!r}") from None
    if len(lines) != m + 1:
        raise ParseError(f"expected {m} vector lines, found {len(lines) - 1}")
    vectors = []
    for k, ln in enumerate(lines[1:]):
        match = _LAMBDA_LINE_RE.match(ln)
        if not match:
            raise ParseError(f"malformed vector line {ln!r}")
        if int(match.group(1)) != k:
            raise ParseError(f"vector ids must appear in order; got {match.group(1)} "
                             f"where {k} was expected")
        vectors.append(tuple(int(match.group(g)) for g in (2, 3, 4)))
    return CharacteristicFunction(tuple(vectors))


def format_charfunc(lam: CharacteristicFunction) -> str:
    out = [f"lambda {lam.m}"]
    for i, (x, y, z) in enumerate(lam.vectors):
        out.append(f"L {i}: {x} {y} {z}")
    return "\n".join(out) + "\n"
