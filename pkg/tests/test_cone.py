"""Tests for the exact LP engine and the effective-cone analysis.

The simplex is validated two independent ways: every certificate is
re-verified by exact substitution inside the library, and the decisions
are compared against subset-enumeration oracles (`cone_member_bruteforce`,
`zero_in_convex_hull`) that share no code with the simplex.
"""

import itertools
import random
from fractions import Fraction

import pytest

from toriclab.charfunc import CharacteristicFunction, CharacteristicPair
from toriclab.cone import (
    UNCERTIFIED_NOTE,
    ObstructionWitness,
    WallClass,
    _group_classes,
    delzant_obstruction_witness,
    extremal_walls,
    signed_wall_classes,
    strict_convexity_witness,
    wall_classes,
)
from toriclab.corpus import FAN_NAMES, load_fan
from toriclab.errors import NoWitness
from toriclab.exactlp import cone_membership, phase1_simplex, positive_functional

from oracles import cone_member_bruteforce, zero_in_convex_hull


# ---------------------------------------------------------------------------
# phase-1 simplex


def test_phase1_solves_a_square_system():
    res = phase1_simplex([[1, 0], [0, 1]], [3, 5])
    assert res.feasible
    assert res.solution == (3, 5)


def test_phase1_detects_infeasibility_with_certificate():
    # x1 + x2 = 1 and x1 + x2 = 2 cannot both hold.
    res = phase1_simplex([[1, 1], [1, 1]], [1, 2])
    assert not res.feasible
    y = res.farkas
    assert y[0] + y[1] == 0  # y^T A = 0
    assert y[0] * 1 + y[1] * 2 > 0


def test_phase1_requires_nonnegativity():
    # x = -1 has no nonnegative solution even though the system is square.
    res = phase1_simplex([[1]], [-1])
    assert not res.feasible


# ---------------------------------------------------------------------------
# cone membership


def test_membership_quadrant_inside():
    res = cone_membership((1, 1), [(1, 0), (0, 1)])
    assert res.member
    assert res.coefficients == (1, 1)
    assert res.separator is None


def test_membership_quadrant_outside():
    res = cone_membership((-1, 0), [(1, 0), (0, 1)])
    assert not res.member
    assert res.coefficients is None
    sep = res.separator
    assert sep[0] * (-1) + sep[1] * 0 > 0
    assert sep[0] <= 0 and sep[1] <= 0


def test_membership_empty_generator_list():
    assert cone_membership((0, 0, 0), []).member
    assert not cone_membership((1, 0, 0), []).member


def test_membership_exactly_one_certificate():
    rng = random.Random(20260816)
    for _ in range(60):
        dim = rng.choice([2, 3, 4])
        gens = [
            tuple(rng.randrange(-4, 5) for _ in range(dim))
            for _ in range(rng.randrange(1, 7))
        ]
        x = tuple(rng.randrange(-4, 5) for _ in range(dim))
        res = cone_membership(x, gens)
        assert (res.coefficients is None) != (res.separator is None)
        if res.member:
            rebuilt = [
                sum(c * g[k] for c, g in zip(res.coefficients, gens))
                for k in range(dim)
            ]
            assert tuple(rebuilt) == tuple(map(Fraction, x))
            assert all(c >= 0 for c in res.coefficients)
        else:
            assert all(
                sum(a * b for a, b in zip(res.separator, g)) <= 0 for g in gens
            )
            assert sum(a * b for a, b in zip(res.separator, x)) > 0


def test_membership_agrees_with_bruteforce():
    rng = random.Random(7)
    for _ in range(150):
        dim = rng.choice([2, 3, 4])
        gens = [
            tuple(rng.randrange(-3, 4) for _ in range(dim))
            for _ in range(rng.randrange(1, 7))
        ]
        x = tuple(rng.randrange(-3, 4) for _ in range(dim))
        assert cone_membership(x, gens).member == cone_member_bruteforce(x, gens)


def test_positive_functional_agrees_with_hull_oracle():
    rng = random.Random(8)
    for _ in range(100):
        dim = rng.choice([2, 3])
        rows = [
            tuple(rng.randrange(-3, 4) for _ in range(dim))
            for _ in range(rng.randrange(1, 7))
        ]
        res = positive_functional(rows)
        assert res.found == (not zero_in_convex_hull(rows))
        if res.found:
            assert all(sum(a * b for a, b in zip(r, res.y)) >= 1 for r in rows)
        else:
            assert sum(res.farkas) == 1
            assert all(c >= 0 for c in res.farkas)
            for k in range(dim):
                assert sum(c * r[k] for c, r in zip(res.farkas, rows)) == 0


# ---------------------------------------------------------------------------
# wall classes


def test_wall_class_examples():
    cube = {c.wall: c.pairing for c in wall_classes(load_fan("cube-fan"))}
    assert cube[(0, 2)] == (0, 0, 0, 0, 1, 1)
    cp3 = wall_classes(load_fan("cp3"))
    assert all(c.pairing == (1, 1, 1, 1) for c in cp3)
    blow = {c.wall: c.pairing for c in wall_classes(load_fan("blowup-cp3"))}
    assert blow[(0, 4)] == (1, 1, 1, 0, -1)
    assert blow[(0, 1)] == (0, 0, 0, 1, 1)


def test_wall_classes_nonzero_and_supported_on_the_star():
    # Entry t can only be nonzero when t belongs to the wall or completes
    # it to a triangle.
    for name in FAN_NAMES:
        f = load_fan(name)
        for cls in wall_classes(f):
            assert any(v != 0 for v in cls.pairing)
            star = set(cls.wall) | set(f.sphere.wall_apexes(cls.wall))
            for t, v in enumerate(cls.pairing):
                if t not in star:
                    assert v == 0, (name, cls.wall, t)


def test_wall_class_apex_entries_are_one():
    for name in FAN_NAMES:
        f = load_fan(name)
        for cls in wall_classes(f):
            for t in f.sphere.wall_apexes(cls.wall):
                assert cls.pairing[t] == 1


# ---------------------------------------------------------------------------
# grouping and extremality


def test_cube_fan_three_groups_all_extremal():
    an = extremal_walls(load_fan("cube-fan"))
    assert len(an.classes) == 12
    assert len(an.groups) == 3
    assert all(len(g) == 4 for g in an.groups)
    assert an.extremal == ((0, 2), (0, 4), (2, 4))


def test_cp3_single_group_extremal():
    an = extremal_walls(load_fan("cp3"))
    assert len(an.groups) == 1
    assert len(an.groups[0]) == 6
    assert an.extremal == ((0, 1),)


def test_blowup_middle_group_not_extremal():
    an = extremal_walls(load_fan("blowup-cp3"))
    assert len(an.groups) == 3
    assert an.extremal == ((0, 1), (0, 4))
    # The non-extremal class is literally the sum of the two extremal ones.
    by_rep = {g[0]: an.classes[[c.wall for c in an.classes].index(g[0])].pairing
              for g in an.groups}
    left, middle, right = by_rep[(0, 1)], by_rep[(0, 3)], by_rep[(0, 4)]
    assert middle == tuple(a + b for a, b in zip(left, right))


def test_grouping_collects_positive_multiples_only():
    a = WallClass((0, 1), (1, 2, 0))
    b = WallClass((0, 2), (2, 4, 0))     # 2a: same group
    c = WallClass((1, 2), (-1, -2, 0))   # -a: different group
    groups = _group_classes((a, b, c))
    assert [[cls.wall for cls in g] for g in groups] == [
        [(0, 1), (0, 2)],
        [(1, 2)],
    ]


def test_extremality_matches_bruteforce_on_small_corpus_fans():
    # Definition check without any LP: a representative is extremal iff it
    # is not a nonnegative combination of the classes outside its group.
    for name in FAN_NAMES:
        f = load_fan(name)
        an = extremal_walls(f)
        if len(an.groups) > 6:
            continue
        for g in an.groups:
            rep = next(c for c in an.classes if c.wall == g[0])
            outside = [c.pairing for c in an.classes if c.wall not in g]
            expected = not cone_member_bruteforce(rep.pairing, outside)
            assert (g[0] in an.extremal) == expected, (name, g[0])


def test_extremality_invariant_under_rescaling_and_permutation():
    f = load_fan("blowup-cp3")
    base = extremal_walls(f)
    rng = random.Random(3)
    scaled = []
    for c in base.classes:
        q = Fraction(rng.randrange(1, 9), rng.randrange(1, 5))
        scaled.append(WallClass(c.wall, tuple(v * q for v in c.pairing)))
    rng.shuffle(scaled)
    groups = _group_classes(scaled)
    extremal = set()
    for gi, g in enumerate(groups):
        outside = [c.pairing for gj, og in enumerate(groups) if gj != gi
                   for c in og]
        if not cone_membership(g[0].pairing, outside).member:
            extremal.update(c.wall for c in g)
    base_extremal_walls = {
        w for g in base.groups if g[0] in base.extremal for w in g
    }
    assert extremal == base_extremal_walls


# ---------------------------------------------------------------------------
# strict convexity witnesses


def test_candidate_witness_accepted_on_cube():
    classes = wall_classes(load_fan("cube-fan"))
    res = strict_convexity_witness(classes, (1,) * 6)
    assert res == tuple(Fraction(1) for _ in range(6))


def test_candidate_witness_rejected_with_failing_walls():
    classes = wall_classes(load_fan("cube-fan"))
    res = strict_convexity_witness(classes, (1, -1, 1, 1, 1, 1))
    assert isinstance(res, NoWitness)
    assert set(res.failing) == {(2, 4), (2, 5), (3, 4), (3, 5)}


def test_lp_witness_found_without_candidate():
    for name in FAN_NAMES:
        classes = wall_classes(load_fan(name))
        res = strict_convexity_witness(classes)
        assert not isinstance(res, NoWitness), name
        for cls in classes:
            assert sum(a * b for a, b in zip(res, cls.pairing)) >= 1


def test_both_witness_routes_accept_the_same_classes():
    # The support-parameter candidate and the LP-found functional must be
    # positive on exactly the same classes: all of them.
    for name in FAN_NAMES:
        f = load_fan(name)
        classes = wall_classes(f)
        from_support = strict_convexity_witness(classes, f.support)
        from_lp = strict_convexity_witness(classes)
        for cls in classes:
            s = sum(a * b for a, b in zip(from_support, cls.pairing))
            l = sum(a * b for a, b in zip(from_lp, cls.pairing))
            assert s > 0 and l > 0, (name, cls.wall)


def test_witness_existence_matches_hull_oracle_on_corpus():
    for name in FAN_NAMES:
        classes = wall_classes(load_fan(name))
        assert not zero_in_convex_hull([c.pairing for c in classes]), name


def _antipodal_cube_pair():
    sphere = load_fan("cube-fan").sphere
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    lam = CharacteristicFunction((e1, e1, e2, e2, e3, e3))
    return CharacteristicPair(sphere, lam)


def test_signed_pair_classes_span_everything():
    # Classes of the antipodal pair come in opposite-sign pairs, so zero is
    # a convex combination and no positive functional can exist.  The
    # verdict must be fixed by the hull oracle, not assumed.
    classes = signed_wall_classes(_antipodal_cube_pair())
    vectors = [c.pairing for c in classes]
    assert zero_in_convex_hull(vectors)
    res = strict_convexity_witness(classes)
    assert isinstance(res, NoWitness)
    coeffs = res.farkas
    assert sum(coeffs) == 1
    assert all(c >= 0 for c in coeffs)
    for k in range(6):
        assert sum(c * v[k] for c, v in zip(coeffs, vectors)) == 0


def test_signed_pair_grouping_pairs_opposites_apart():
    classes = signed_wall_classes(_antipodal_cube_pair())
    groups = _group_classes(classes)
    # 12 walls, classes come in 6 coincident positive pairs (two walls per
    # vector) and sign-opposite partners always land in different groups.
    assert len(groups) == 6
    assert all(len(g) == 2 for g in groups)


# ---------------------------------------------------------------------------
# uncertified analysis without support parameters


def test_no_support_marks_analysis_uncertified():
    f = load_fan("cube-fan")
    bare = f.with_support(None)
    an = extremal_walls(bare)
    assert an.witness is None
    assert an.note == UNCERTIFIED_NOTE
    certified = extremal_walls(f)
    assert an.extremal == certified.extremal
    assert an.groups == certified.groups
    assert certified.note == ""


# ---------------------------------------------------------------------------
# the obstruction witness


EXPECTED_WITNESSES = {
    "cp3": ObstructionWitness(
        wall=(0, 1), a=(-1, -1), curvature=4, case="a1 < 0",
        vertex=1, neighbors=(0, 2, 3), dual_face_size=3,
    ),
    "cube-fan": ObstructionWitness(
        wall=(0, 2), a=(0, 0), curvature=2, case="a1 = 0",
        vertex=2, neighbors=(0, 1, 4, 5), dual_face_size=4,
    ),
    "blowup-cp3": ObstructionWitness(
        wall=(0, 1), a=(0, 0), curvature=2, case="a1 = 0",
        vertex=1, neighbors=(0, 2, 3, 4), dual_face_size=4,
    ),
    "cp1xcp2": ObstructionWitness(
        wall=(2, 0), a=(-1, 0), curvature=3, case="a1 < 0",
        vertex=0, neighbors=(2, 3, 4), dual_face_size=3,
    ),
    "flatwall": ObstructionWitness(
        wall=(0, 6), a=(-1, 1), curvature=2, case="a1 < 0",
        vertex=6, neighbors=(0, 2, 4), dual_face_size=3,
    ),
}


def test_obstruction_witness_exact_values():
    for name, expected in EXPECTED_WITNESSES.items():
        assert delzant_obstruction_witness(load_fan(name)) == expected, name


def test_obstruction_witness_invariants():
    # Executable form of the small-face theorem: on every corpus fan the
    # witness vertex has degree 3 or 4, matching the claimed dual face.
    for name in FAN_NAMES:
        f = load_fan(name)
        w = delzant_obstruction_witness(f)
        a1, a2 = w.a
        assert a1 <= a2
        assert a1 <= 0
        assert w.curvature == 2 - a1 - a2 > 0
        assert w.case == ("a1 < 0" if a1 < 0 else "a1 = 0")
        assert w.dual_face_size == (3 if a1 < 0 else 4)
        assert f.sphere.vertex_degree(w.vertex) == w.dual_face_size
        assert w.neighbors == f.sphere.neighbors(w.vertex)
        assert set(w.wall) <= set(f.sphere.neighbors(w.vertex)) | set(w.wall)
        # the wall itself must be extremal and live where it claims
        key = tuple(sorted(w.wall))
        assert f.wall_table[key].curvature == w.curvature


def test_obstruction_wall_is_extremal():
    for name in FAN_NAMES:
        f = load_fan(name)
        w = delzant_obstruction_witness(f)
        an = extremal_walls(f)
        key = tuple(sorted(w.wall))
        group = next(g for g in an.groups if key in g)
        assert group[0] in an.extremal, name
