"""Exact rational linear programming.

A small phase-1 simplex over :class:`fractions.Fraction` with Bland's
pivoting rule, which terminates without cycling.  There are no tolerances
anywhere: every verdict comes with a certificate that is re-verified by
exact substitution before it is returned, so a caller can trust either
answer unconditionally.

Two feasibility questions are exposed:

* :func:`cone_membership` — is a vector a nonnegative combination of given
  generators?  Yields the coefficients, or a separating functional that is
  nonpositive on every generator and positive on the target.
* :func:`positive_functional` — is there a vector pairing to at least 1
  with every row?  Yields the vector, or convex-combination coefficients
  exhibiting 0 as a convex combination of the rows (which makes any
  positive pairing impossible).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InternalError

__all__ = [
    "Phase1Result",
    "ConeMembership",
    "PositiveFunctional",
    "phase1_simplex",
    "cone_membership",
    "positive_functional",
]


def _fractions(v) -> list[Fraction]:
    return [Fraction(x) for x in v]


@dataclass(frozen=True)
class Phase1Result:
    """Outcome of ``find x >= 0 with A x = b``.

    Exactly one of ``solution`` (the x) and ``farkas`` (a vector y with
    y·A <= 0 componentwise and y·b > 0) is set.
    """

    solution: Optional[tuple[Fraction, ...]]
    farkas: Optional[tuple[Fraction, ...]]

    @property
    def feasible(self) -> bool:
        return self.solution is not None


def phase1_simplex(rows: Sequence[Sequence], rhs: Sequence) -> Phase1Result:
    """Solve ``A x = b, x >= 0`` exactly, where ``rows`` are the rows of A.

    Minimizes the sum of artificial variables with Bland's rule.  When the
    minimum is positive the system is infeasible and the simplex
    multipliers give the alternative certificate.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    a = [_fractions(r) for r in rows]
    b = _fractions(rhs)
    if any(len(r) != ncols for r in a) or len(b) != nrows:
        raise InternalError("ragged linear system")

    # Orient every row so the right-hand side is nonnegative, remembering
    # the flips to undo on the certificate.
    signs = []
    for i in range(nrows):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]
            signs.append(-1)
        else:
            signs.append(1)

    # Tableau: real columns, artificial columns, right-hand side.
    width = ncols + nrows + 1
    tab = []
    for i in range(nrows):
        row = a[i] + [Fraction(0)] * nrows + [b[i]]
        row[ncols + i] = Fraction(1)
        tab.append(row)
    basis = [ncols + i for i in range(nrows)]

    # Reduced-cost row for minimizing the artificial sum: cost 1 on each
    # artificial, 0 elsewhere, minus the sum of the (basic) rows.
    z = [Fraction(0)] * width
    for j in range(ncols + nrows):
        z[j] = (Fraction(1) if j >= ncols else Fraction(0)) - sum(
            tab[i][j] for i in range(nrows)
        )
    z[-1] = -sum(b)

    while True:
        enter = next((j for j in range(ncols + nrows) if z[j] < 0), None)
        if enter is None:
            break
        pivot = None
        best = None
        for i in range(nrows):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[pivot]
                ):
                    best = ratio
                    pivot = i
        if pivot is None:
            raise InternalError("phase-1 objective unbounded below")
        piv = tab[pivot][enter]
        tab[pivot] = [x / piv for x in tab[pivot]]
        for i in range(nrows):
            if i != pivot and tab[i][enter]:
                c = tab[i][enter]
                tab[i] = [x - c * y for x, y in zip(tab[i], tab[pivot])]
        if z[enter]:
            c = z[enter]
            z = [x - c * y for x, y in zip(z, tab[pivot])]
        basis[pivot] = enter

    objective = -z[-1]
    if objective == 0:
        x = [Fraction(0)] * ncols
        for i, var in enumerate(basis):
            if var < ncols:
                x[var] = tab[i][-1]
        for i in range(nrows):
            if sum(c * v for c, v in zip(a[i], x)) != b[i]:
                raise InternalError("simplex produced a non-solution")
        return Phase1Result(solution=tuple(x), farkas=None)

    # Infeasible: multipliers from the artificial reduced costs, with the
    # row flips undone, certify the alternative.
    y = [signs[i] * (Fraction(1) - z[ncols + i]) for i in range(nrows)]
    for j in range(ncols):
        if sum(y[i] * signs[i] * a[i][j] for i in range(nrows)) > 0:
            raise InternalError("invalid infeasibility certificate")
    dotb = sum(y[i] * signs[i] * b[i] for i in range(nrows))
    if dotb <= 0:
        raise InternalError("invalid infeasibility certificate")
    return Phase1Result(solution=None, farkas=tuple(y))


@dataclass(frozen=True)
class ConeMembership:
    """Decision for ``x in cone(generators)`` with its certificate.

    On membership, ``coefficients`` re-assemble x exactly; otherwise
    ``separator`` pairs nonpositively with every generator and positively
    with x.  Exactly one field is set.
    """

    member: bool
    coefficients: Optional[tuple[Fraction, ...]]
    separator: Optional[tuple[Fraction, ...]]


def cone_membership(x: Sequence, generators: Sequence[Sequence]) -> ConeMembership:
    """Decide whether x is a nonnegative combination of the generators."""
    target = _fractions(x)
    gens = [_fractions(g) for g in generators]
    dim = len(target)
    if any(len(g) != dim for g in gens):
        raise InternalError("generator dimension mismatch")
    if not gens:
        if all(v == 0 for v in target):
            return ConeMembership(True, (), None)
        sep = tuple(
            Fraction(1) if v > 0 else Fraction(-1) if v < 0 else Fraction(0)
            for v in target
        )
        return ConeMembership(False, None, sep)

    columns = [[g[k] for g in gens] for k in range(dim)]
    res = phase1_simplex(columns, target)
    if res.feasible:
        r = res.solution
        assembled = [
            sum(r[s] * gens[s][k] for s in range(len(gens))) for k in range(dim)
        ]
        if assembled != target or any(c < 0 for c in r):
            raise InternalError("membership coefficients failed verification")
        return ConeMembership(True, r, None)
    sep = res.farkas
    if any(sum(a * b for a, b in zip(sep, g)) > 0 for g in gens):
        raise InternalError("separator fails on a generator")
    if sum(a * b for a, b in zip(sep, target)) <= 0:
        raise InternalError("separator fails on the target")
    return ConeMembership(False, None, sep)


@dataclass(frozen=True)
class PositiveFunctional:
    """Decision for ``exists y with <row, y> >= 1 for every row``.

    On success ``y`` is such a vector.  On failure ``farkas`` holds convex
    coefficients (nonnegative, summing to 1) combining the rows to zero,
    which rules out any y pairing positively with all of them.
    """

    found: bool
    y: Optional[tuple[Fraction, ...]]
    farkas: Optional[tuple[Fraction, ...]]


def positive_functional(rows: Sequence[Sequence]) -> PositiveFunctional:
    """Find y with <row, y> >= 1 for all rows, or prove none exists."""
    mat = [_fractions(r) for r in rows]
    if not mat:
        return PositiveFunctional(True, (), None)
    dim = len(mat[0])
    if any(len(r) != dim for r in mat):
        raise InternalError("ragged row list")

    # Standard form: R y+ - R y- - s = 1 with y+, y-, s >= 0.
    k = len(mat)
    system = []
    for i, r in enumerate(mat):
        slack = [Fraction(0)] * k
        slack[i] = Fraction(-1)
        system.append(list(r) + [-v for v in r] + slack)
    ones = [Fraction(1)] * k
    res = phase1_simplex(system, ones)
    if res.feasible:
        sol = res.solution
        y = tuple(sol[j] - sol[dim + j] for j in range(dim))
        if any(sum(a * b for a, b in zip(r, y)) < 1 for r in mat):
            raise InternalError("functional failed verification")
        return PositiveFunctional(True, y, None)

    pi = res.farkas
    total = sum(pi)
    if total <= 0 or any(p < 0 for p in pi):
        raise InternalError("invalid convex certificate")
    coeffs = tuple(p / total for p in pi)
    for kk in range(dim):
        if sum(coeffs[i] * mat[i][kk] for i in range(k)) != 0:
            raise InternalError("convex certificate does not hit zero")
    return PositiveFunctional(False, None, coeffs)
