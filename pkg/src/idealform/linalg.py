"""Exact linear algebra over the rationals.

Everything downstream (gates, hyperplane enumeration, vertex enumeration)
reduces to the operations in this module, and all of them work on
``fractions.Fraction`` exactly, so geometric predicates are decided without
tolerances. Floating point never enters.

Vectors are plain tuples of Fraction, matrices are tuples of such tuples.
The constructors :func:`vec` and :func:`mat` coerce ints, strings and
Fractions and validate shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import EmptyPointSet, NotAHyperplane, ZeroVector

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def vec(values: Iterable) -> Vec:
    """Coerce an iterable of rational-like values to a Vec."""
    return tuple(Fraction(v) for v in values)


def mat(rows: Iterable[Iterable]) -> Mat:
    """Coerce nested iterables to a rectangular Mat.

    Raises ValueError on ragged input; an empty matrix is allowed.
    """
    out = tuple(vec(row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("matrix rows have unequal lengths")
    return out


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dot of lengths {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), _ZERO)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a copy of ``rows``.

    Returns the reduced matrix (zero rows dropped) and the list of pivot
    column indices. The result depends only on the row space, which makes
    every construction built on it deterministic.
    """
    m = [list(row) for row in rows]
    pivots: list[int] = []
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = _ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of the matrix; 0 for an empty one."""
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Sequence[Fraction]], dim: int) -> list[Vec]:
    """Canonical basis of {x : row . x = 0 for every row}.

    One basis vector per free column of the RREF, in increasing column
    order; for an empty row list this is the standard basis of Q^dim.
    """
    reduced, pivots = rref(rows)
    basis: list[Vec] = []
    pivot_set = set(pivots)
    for free in range(dim):
        if free in pivot_set:
            continue
        v = [_ZERO] * dim
        v[free] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][free]
        basis.append(tuple(v))
    return basis


def solve_unique(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vec | None:
    """Solve rows . x = rhs when the solution exists and is unique.

    Returns None when the system is inconsistent or underdetermined.
    """
    if not rows:
        return None
    n = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(aug)
    if n in pivots:  # pivot in the rhs column: inconsistent
        return None
    if len(pivots) < n:
        return None
    x = [_ZERO] * n
    for i, p in enumerate(pivots):
        x[p] = reduced[i][n]
    return tuple(x)


@dataclass(frozen=True)
class AffineHull:
    """The affine hull {x : eq_lhs . x = eq_rhs} of a point set.

    Rows of eq_lhs are linearly independent, integer and primitive, in a
    canonical order, so two point sets with the same hull produce the same
    object. ``dim`` is the dimension of the hull itself.
    """

    eq_lhs: Mat
    eq_rhs: Vec
    ambient_dim: int

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.eq_lhs)

    def contains(self, point: Sequence[Fraction]) -> bool:
        return all(dot(row, point) == b for row, b in zip(self.eq_lhs, self.eq_rhs))


def affine_hull(points: Sequence[Sequence[Fraction]]) -> AffineHull:
    """Equation description of the affine hull of ``points``.

    The equations are the canonical nullspace basis of the difference
    directions, scaled primitive; a single point yields a full set of
    coordinate-pinning equations, an affinely full set yields none.
    """
    if not points:
        raise EmptyPointSet("affine hull of an empty point set")
    base = vec(points[0])
    n = len(base)
    dirs = [tuple(Fraction(p[j]) - base[j] for j in range(n)) for p in points[1:]]
    lhs_rows: list[Vec] = []
    rhs: list[Fraction] = []
    for normal in nullspace(dirs, n):
        prim = vec(primitive_canonical(normal))
        lhs_rows.append(prim)
        rhs.append(dot(prim, base))
    return AffineHull(eq_lhs=tuple(lhs_rows), eq_rhs=tuple(rhs), ambient_dim=n)


def independent_rows(rows: Sequence[Sequence[Fraction]]) -> list[Vec]:
    """Greedy maximal independent subset of rows, keeping first occurrences."""
    kept: list[Vec] = []
    current = 0
    for row in rows:
        candidate = kept + [tuple(Fraction(x) for x in row)]
        r = rank(candidate)
        if r > current:
            kept = candidate
            current = r
    return kept


def orthogonal_in_subspace(
    space_basis: Sequence[Sequence[Fraction]],
    subset: Sequence[Sequence[Fraction]],
) -> Vec:
    """A nonzero vector of span(space_basis) orthogonal to every subset row.

    The subset must lie inside the space and span a hyperplane of it
    (rank exactly one less), which makes the answer unique up to scale;
    otherwise NotAHyperplane is raised. With an empty subset the space must
    be a line and the returned vector spans it.
    """
    basis = independent_rows(space_basis)
    m = len(basis)
    if m == 0:
        raise NotAHyperplane("the subspace is {0}; it has no hyperplanes")
    subset_rank = rank(subset)
    if subset_rank != m - 1:
        raise NotAHyperplane(
            f"subset spans rank {subset_rank}, expected {m - 1} inside a rank-{m} space"
        )
    if subset and rank(list(basis) + [vec(s) for s in subset]) != m:
        raise NotAHyperplane("subset rows do not all lie in the subspace")
    # Solve for coefficients alpha with (subset . basis^T) alpha = 0; the
    # Gram-style matrix has rank m-1, so the nullspace is one-dimensional.
    g = [[dot(vec(s), b) for b in basis] for s in subset]
    alphas = nullspace(g, m)
    alpha = alphas[0]
    n = len(basis[0])
    out = tuple(
        sum((alpha[i] * basis[i][j] for i in range(m)), _ZERO) for j in range(n)
    )
    if all(x == 0 for x in out):
        raise NotAHyperplane("orthogonal direction degenerated to zero")
    return out


def primitive_canonical(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Canonical integer form of a nonzero rational vector.

    Scaled by the denominator lcm, divided by the entry gcd, and sign-fixed
    so the first nonzero entry is positive. Parallel vectors (including
    negations) map to the same tuple. Raises ZeroVector on the zero vector.
    """
    fracs = vec(v)
    if all(x == 0 for x in fracs):
        raise ZeroVector("cannot canonicalize the zero vector")
    scale = lcm(*(x.denominator for x in fracs)) if fracs else 1
    ints = [int(x * scale) for x in fracs]
    g = gcd(*ints)
    ints = [i // g for i in ints]
    first = next(i for i in ints if i != 0)
    if first < 0:
        ints = [-i for i in ints]
    return tuple(ints)


def scale_row_to_integers(
    coeffs: Sequence[Fraction], rhs: Fraction
) -> tuple[tuple[int, ...], int]:
    """Clear denominators of a constraint row by the smallest positive factor.

    Returns the scaled coefficients and right-hand side; a row that is
    already integer comes back unchanged.
    """
    fracs = vec(coeffs)
    rhs = Fraction(rhs)
    scale = lcm(rhs.denominator, *(x.denominator for x in fracs)) if fracs else rhs.denominator
    return tuple(int(x * scale) for x in fracs), int(rhs * scale)


def has_nonnegative_solution(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> bool:
    """Decide whether rows . x = rhs admits a solution with x >= 0.

    Exact phase-one simplex with Bland's rule, so it terminates and never
    misclassifies. Intended for the small feasibility questions the gates
    ask (convex position, hull membership); not a general LP solver.
    """
    m = len(rows)
    if m == 0:
        return True
    n = len(rows[0])
    # Orient every row so the right-hand side is nonnegative, then append
    # an artificial identity; feasibility == the artificials can be driven
    # to zero.
    tab: list[list[Fraction]] = []
    for row, b in zip(rows, rhs):
        b = Fraction(b)
        if b < 0:
            tab.append([-Fraction(x) for x in row] + [_ZERO] * m + [-b])
        else:
            tab.append([Fraction(x) for x in row] + [_ZERO] * m + [b])
    for i in range(m):
        tab[i][n + i] = _ONE
    basis = list(range(n, n + m))
    # Reduced costs for min(sum of artificials) with the artificial basis.
    red = [_ZERO] * (n + m)
    for j in range(n):
        red[j] = -sum((tab[i][j] for i in range(m)), _ZERO)
    value = sum((tab[i][-1] for i in range(m)), _ZERO)

    while True:
        enter = next((j for j in range(n + m) if red[j] < 0), None)  # Bland
        if enter is None:
            break
        leave = None
        best: Fraction | None = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # cannot happen: the objective is bounded below by 0
            raise AssertionError("phase-one simplex claims unboundedness")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = red[enter]
        red = [x - f * y for x, y in zip(red, tab[leave][:-1])]
        value += f * tab[leave][-1]
        basis[leave] = enter

    return value == 0


def point_in_convex_hull(
    point: Sequence[Fraction], generators: Sequence[Sequence[Fraction]]
) -> bool:
    """Exact membership of a point in the convex hull of the generators."""
    gens = [vec(g) for g in generators]
    if not gens:
        return False
    n = len(gens[0])
    target = vec(point)
    if len(target) != n:
        raise ValueError("point and generators have different dimensions")
    # One equality row per coordinate plus the convexity row.
    rows = [[g[k] for g in gens] for k in range(n)]
    rows.append([_ONE] * len(gens))
    rhs = list(target) + [_ONE]
    return has_nonnegative_solution(rows, rhs)
