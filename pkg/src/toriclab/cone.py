"""Effective-cone analysis of wall classes.

Every wall pairs against the m ray classes through the degree-3 integrals,
giving an integer vector per wall.  These vectors generate a cone; this
module groups them by positive proportionality, decides which groups sit
on extreme rays (one exact LP per group, each answer certified), finds or
refutes a strict-convexity witness, and extracts the positive-curvature
extremal wall whose endpoint forces a triangular or quadrangular face of
the dual polytope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .charfunc import CharacteristicPair
from .cohomology import signed_triple_intersection, triple_intersection
from .errors import CertificationFailure, InternalError, NotFound, NoWitness
from .exactlp import ConeMembership, cone_membership, positive_functional
from .fan import Fan3

__all__ = [
    "WallClass",
    "ConeAnalysis",
    "ObstructionWitness",
    "wall_classes",
    "signed_wall_classes",
    "cone_membership",
    "extremal_walls",
    "strict_convexity_witness",
    "delzant_obstruction_witness",
]

UNCERTIFIED_NOTE = "uncertified: no strict convexity witness supplied"


@dataclass(frozen=True)
class WallClass:
    """A wall with its pairing vector: entry t is the integral over the
    wall class times the class of ray t.  Nonzero at the two apexes, so the
    vector itself is never zero."""

    wall: tuple[int, int]
    pairing: tuple[int, ...]


@dataclass(frozen=True)
class ConeAnalysis:
    """Grouping and extremality data for the cone spanned by wall classes.

    ``groups`` partitions the walls into positive-proportionality classes
    (each listed in first-appearance order, walls sorted within); the first
    wall of a group is its representative.  ``extremal`` lists the
    representatives whose ray is extreme.  ``witness``, when present, pairs
    strictly positively with every class; ``note`` flags the uncertified
    no-support case.
    """

    classes: tuple[WallClass, ...]
    groups: tuple[tuple[tuple[int, int], ...], ...]
    extremal: tuple[tuple[int, int], ...]
    witness: Optional[tuple[Fraction, ...]]
    note: str = ""


@dataclass(frozen=True)
class ObstructionWitness:
    """An extremal positive-curvature wall, relabeled so a1 <= a2, together
    with the vertex it forces to have small degree.

    ``case`` records which branch applied: coefficient a1 < 0 pins the
    endpoint into exactly three maximal cones, a1 = 0 into exactly four;
    the dual polytope then has a face with that many sides.
    """

    wall: tuple[int, int]
    a: tuple[int, int]
    curvature: int
    case: str
    vertex: int
    neighbors: tuple[int, ...]
    dual_face_size: int


def wall_classes(f: Fan3) -> tuple[WallClass, ...]:
    """Pairing vectors for every wall, in sorted wall order."""
    out = []
    for w in f.walls:
        key = w.key
        vec = tuple(triple_intersection(f, key + (t,)) for t in range(f.m))
        if all(v == 0 for v in vec):
            raise InternalError(f"wall class {key} vanished")
        out.append(WallClass(key, vec))
    return tuple(out)


def signed_wall_classes(pair: CharacteristicPair) -> tuple[WallClass, ...]:
    """Pairing vectors of a general characteristic pair, via the signed
    integrals.  Same shape as :func:`wall_classes`, no fan required."""
    m = pair.lam.m
    out = []
    for key in pair.sphere.walls:
        vec = tuple(signed_triple_intersection(pair, key + (t,)) for t in range(m))
        if all(v == 0 for v in vec):
            raise InternalError(f"wall class {key} vanished")
        out.append(WallClass(key, vec))
    return tuple(out)


def _positively_proportional(u: Sequence[int], v: Sequence[int]) -> bool:
    k = next((i for i, a in enumerate(u) if a != 0), None)
    if k is None or v[k] == 0:
        return False
    q = Fraction(v[k], u[k])
    if q <= 0:
        return False
    return all(Fraction(b) == q * a for a, b in zip(u, v))


def _group_classes(classes):
    groups: list[list[WallClass]] = []
    for cls in classes:
        for g in groups:
            if _positively_proportional(g[0].pairing, cls.pairing):
                g.append(cls)
                break
        else:
            groups.append([cls])
    return groups


def strict_convexity_witness(classes, c_tilde=None):
    """A functional pairing >= 1 (or, for a supplied candidate, > 0) with
    every wall class, or a :class:`NoWitness` value explaining why none
    was produced.

    With ``c_tilde`` the check is pure verification — the products are the
    edge functionals of the candidate support.  Without it, a feasibility
    LP searches for any witness; infeasibility comes back with convex
    coefficients combining the pairing vectors to zero, which makes a
    positive functional impossible.  The refusal is a return value, not an
    exception.
    """
    if c_tilde is not None:
        cand = tuple(Fraction(x) for x in c_tilde)
        failing = tuple(
            cls.wall
            for cls in classes
            if sum(c * p for c, p in zip(cand, cls.pairing)) <= 0
        )
        if failing:
            return NoWitness(
                "candidate pairs non-positively with walls "
                + ", ".join(str(w) for w in failing),
                failing=failing,
            )
        return cand
    res = positive_functional([cls.pairing for cls in classes])
    if res.found:
        return res.y
    return NoWitness(
        "wall classes admit no positive functional: "
        "zero is a convex combination of the pairing vectors",
        farkas=res.farkas,
    )


def extremal_walls(f: Fan3) -> ConeAnalysis:
    """Group the wall classes, test each group for extremality by exact
    LP, and attach the support-parameter convexity witness when one is
    available.

    A group is extremal when its representative vector is not a
    nonnegative combination of the classes outside the group.  Fans
    without support parameters still get the full grouping and
    extremality scan, but the analysis is marked uncertified.
    """
    classes = wall_classes(f)
    grouped = _group_classes(classes)
    groups = tuple(tuple(cls.wall for cls in g) for g in grouped)

    extremal = []
    for gi, g in enumerate(grouped):
        rep = g[0]
        outside = [
            cls.pairing for gj, other in enumerate(grouped) if gj != gi
            for cls in other
        ]
        if not cone_membership(rep.pairing, outside).member:
            extremal.append(rep.wall)

    if f.support is not None:
        witness = strict_convexity_witness(classes, f.support)
        if isinstance(witness, NoWitness):
            raise witness
        note = ""
    else:
        witness = None
        note = UNCERTIFIED_NOTE
    return ConeAnalysis(
        classes=classes,
        groups=groups,
        extremal=tuple(extremal),
        witness=witness,
        note=note,
    )


def _wall_labelings(w):
    """Both valid normalizations of a wall: the recorded one and its
    mirror with the roles of the two endpoints (and apexes) swapped."""
    i1, i2 = w.pair
    a1, a2 = w.a
    yield i1, i2, a1, a2
    yield i2, i1, a2, a1


def delzant_obstruction_witness(f: Fan3) -> ObstructionWitness:
    """The first extremal positive-curvature wall in lexicographic order,
    relabeled so a1 <= a2, with the degree claim on its second endpoint
    verified against the dual sphere.

    Positivity of curvature forces a1 <= 0 after the relabeling; a1 < 0
    pins the endpoint i2 into exactly 3 maximal cones and a1 = 0 into
    exactly 4, so the dual polytope has a triangular or quadrangular face.
    """
    analysis = extremal_walls(f)
    extremal_groups = [
        g for g in analysis.groups if g[0] in analysis.extremal
    ]
    qualifying = sorted(
        w for g in extremal_groups for w in g
        if f.wall_table[w].curvature > 0
    )
    if not qualifying:
        raise NotFound("no extremal wall of positive curvature")
    key = qualifying[0]
    w = f.wall_table[key]

    attempts = []
    for i1, i2, a1, a2 in _wall_labelings(w):
        if a1 > a2:
            continue
        expected = 3 if a1 < 0 else 4
        degree = f.sphere.vertex_degree(i2)
        attempts.append((i1, i2, a1, a2, expected, degree))
        if degree == expected:
            return ObstructionWitness(
                wall=(i1, i2),
                a=(a1, a2),
                curvature=w.curvature,
                case="a1 < 0" if a1 < 0 else "a1 = 0",
                vertex=i2,
                neighbors=f.sphere.neighbors(i2),
                dual_face_size=degree,
            )
    detail = "; ".join(
        f"labeling ({i1},{i2}) a=({a1},{a2}) needs degree {e}, found {d}"
        for i1, i2, a1, a2, e, d in attempts
    )
    raise CertificationFailure(
        f"extremal wall {key} violates the degree claim: {detail}"
    )
