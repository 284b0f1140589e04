"""Exact certification that a formulation's LP relaxation is ideal.

The ground truth is small enough to write down: the relaxation should have
exactly the vertices (e^w, h^j) for every alternative j and every ground
element w it covers. This module enumerates the relaxation's vertex set
with rational arithmetic and compares, so a pass is a proof for the given
instance rather than a numerical hint.

Enumeration works incrementally. The relaxation always lives inside the
product of the unit simplex on lambda and the integer bounding box on z,
whose vertices are known in closed form. Each constraint row is then
applied as a cut: vertices on the wrong side are dropped and every cut
edge contributes its intersection point. Keeping the vertex set exact at
every step makes edge detection purely combinatorial (two vertices span an
edge exactly when no third vertex is tight for every row they are both
tight for), so no floating point enters anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cdc import Cdc
from .encoding import Encoding
from .errors import InputError, TooLargeToEnumerate
from .formulation import Formulation
from .linalg import Vec

DEFAULT_ENUM_CAP = 50_000

_ZERO = Fraction(0)


@dataclass(frozen=True)
class VertexSet:
    """The extreme points of a polytope, held as exact rational vectors."""

    vertices: frozenset[Vec]

    @property
    def count(self) -> int:
        return len(self.vertices)

    def sorted(self) -> tuple[Vec, ...]:
        return tuple(sorted(self.vertices))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing a relaxation's vertices with the embedding's.

    ``missing`` lists embedding points the polytope lost (the formulation
    cuts too deep; it is not even valid). ``extra`` lists polytope vertices
    of no embedding form; any of them with a fractional z coordinate is a
    direct witness that the formulation is not ideal.
    """

    passed: bool
    missing: tuple[Vec, ...]
    extra: tuple[Vec, ...]
    expected_count: int
    found_count: int

    @property
    def counts(self) -> tuple[int, int]:
        return (self.expected_count, self.found_count)


def embedding_extreme_points(c: Cdc, e: Encoding) -> VertexSet:
    """All points (e^w, h^j) with w covered by alternative j."""
    if c.d != e.d:
        raise InputError(
            f"disjunction has {c.d} alternatives but the encoding has {e.d} rows"
        )
    points: set[Vec] = set()
    for alt, code in zip(c.alternatives, e.rows):
        tail = tuple(Fraction(x) for x in code)
        for w in alt:
            lam = [_ZERO] * c.n
            lam[w - 1] = Fraction(1)
            points.add(tuple(lam) + tail)
    return VertexSet(frozenset(points))


def _formulation_rows(f: Formulation):
    """Flatten a formulation into exact (coeffs, rhs) rows over (lambda, z).

    Returns (equalities, inequalities) where each inequality means
    coeffs . x <= rhs. The lambda simplex and the z box are not included;
    the enumeration engine starts from them.
    """
    n, r = f.n_lambda, f.r_z
    eqs = []
    for eq in f.equalities:
        coeffs = tuple(Fraction(a) for a in eq.lam) + tuple(Fraction(b) for b in eq.z)
        eqs.append((coeffs, Fraction(eq.rhs)))
    ineqs = []
    for row in f.general_rows:
        b = tuple(Fraction(x) for x in row.normal)
        lower = tuple(Fraction(x) for x in row.lower)
        upper = tuple(Fraction(x) for x in row.upper)
        neg_b = tuple(-x for x in b)
        # lower . lambda - b . z <= 0
        ineqs.append((lower + neg_b, _ZERO))
        # b . z - upper . lambda <= 0
        ineqs.append((tuple(-x for x in upper) + b, _ZERO))
    return eqs, ineqs


def _base_rows(n: int, z_bounds):
    """Defining rows of the starting polytope: simplex and box."""
    r = len(z_bounds)
    eqs = [(tuple(Fraction(1) for _ in range(n)) + (_ZERO,) * r, Fraction(1))]
    ineqs = []
    for v in range(n):
        coeffs = [_ZERO] * (n + r)
        coeffs[v] = Fraction(-1)
        ineqs.append((tuple(coeffs), _ZERO))
    for k, (lo, hi) in enumerate(z_bounds):
        coeffs = [_ZERO] * (n + r)
        coeffs[n + k] = Fraction(-1)
        ineqs.append((tuple(coeffs), Fraction(-lo)))
        coeffs[n + k] = Fraction(1)
        ineqs.append((tuple(coeffs), Fraction(hi)))
    return eqs, ineqs


def _base_vertices(n: int, z_bounds) -> list[Vec]:
    corners_per_axis = [sorted({Fraction(lo), Fraction(hi)}) for lo, hi in z_bounds]
    out = []
    for v in range(n):
        lam = [_ZERO] * n
        lam[v] = Fraction(1)
        head = tuple(lam)
        for corner in product(*corners_per_axis):
            out.append(head + corner)
    return out


def _row_value(coeffs: Vec, x: Vec) -> Fraction:
    return sum(c * xi for c, xi in zip(coeffs, x) if c)


def _tight_masks(vertices: list[Vec], rows) -> list[int]:
    masks = []
    for x in vertices:
        m = 0
        for bit, (coeffs, rhs) in enumerate(rows):
            if _row_value(coeffs, x) == rhs:
                m |= 1 << bit
        masks.append(m)
    return masks


def _apply_cut(vertices, rows, coeffs, rhs, is_equality, cap):
    """Intersect the current vertex set with one halfspace or hyperplane.

    ``rows`` is the list of rows already defining the polytope; the new row
    is appended on return. Correctness of the edge test relies on
    ``vertices`` being the complete vertex set for ``rows``.
    """
    slack = [_row_value(coeffs, x) - rhs for x in vertices]
    neg = [i for i, s in enumerate(slack) if s < 0]
    pos = [i for i, s in enumerate(slack) if s > 0]

    if not pos and not (is_equality and neg):
        rows.append((coeffs, rhs))
        return vertices

    masks = _tight_masks(vertices, rows)
    if is_equality:
        kept = [vertices[i] for i, s in enumerate(slack) if s == 0]
    else:
        kept = [vertices[i] for i, s in enumerate(slack) if s <= 0]

    seen = set(kept)
    for i in neg:
        for j in pos:
            common = masks[i] & masks[j]
            if any(
                masks[k] & common == common
                for k in range(len(vertices))
                if k != i and k != j
            ):
                continue
            t = slack[i] / (slack[i] - slack[j])
            u, w = vertices[i], vertices[j]
            point = tuple(a + t * (b - a) for a, b in zip(u, w))
            if point not in seen:
                seen.add(point)
                kept.append(point)

    if len(kept) > cap:
        raise TooLargeToEnumerate(
            f"vertex enumeration exceeded the cap of {cap} intermediate vertices"
        )
    rows.append((coeffs, rhs))
    return kept


def _enumerate_system(n, z_bounds, equalities, inequalities, cap) -> list[Vec]:
    vertices = _base_vertices(n, z_bounds)
    if len(vertices) > cap:
        raise TooLargeToEnumerate(
            f"the starting simplex-times-box polytope already has "
            f"{len(vertices)} vertices, over the cap of {cap}"
        )
    base_eqs, base_ineqs = _base_rows(n, z_bounds)
    rows = base_eqs + base_ineqs
    for coeffs, rhs in equalities:
        vertices = _apply_cut(vertices, rows, coeffs, rhs, True, cap)
    for coeffs, rhs in inequalities:
        vertices = _apply_cut(vertices, rows, coeffs, rhs, False, cap)
    return vertices


def enumerate_vertices(f: Formulation, *, max_vertices: int = DEFAULT_ENUM_CAP) -> VertexSet:
    """The exact vertex set of the formulation's LP relaxation.

    The relaxation keeps every row of the formulation, including the z
    bounds, but drops integrality. Raises TooLargeToEnumerate when an
    intermediate vertex set grows past ``max_vertices``.
    """
    eqs, ineqs = _formulation_rows(f)
    vertices = _enumerate_system(f.n_lambda, f.z_bounds, eqs, ineqs, max_vertices)
    return VertexSet(frozenset(vertices))


def check_validity_only(c: Cdc, e: Encoding, f: Formulation) -> bool:
    """Whether every embedding point satisfies every row of f exactly.

    This is the cheap one-directional check: it proves the relaxation
    contains the disjunction but says nothing about extra vertices.
    """
    eqs, ineqs = _formulation_rows(f)
    lo_hi = f.z_bounds
    n = f.n_lambda
    for point in embedding_extreme_points(c, e).vertices:
        if len(point) != n + f.r_z:
            return False
        for coeffs, rhs in eqs:
            if _row_value(coeffs, point) != rhs:
                return False
        for coeffs, rhs in ineqs:
            if _row_value(coeffs, point) > rhs:
                return False
        for k, (lo, hi) in enumerate(lo_hi):
            if not lo <= point[n + k] <= hi:
                return False
    return True


def check_ideal(
    c: Cdc,
    e: Encoding,
    f: Formulation,
    *,
    max_vertices: int = DEFAULT_ENUM_CAP,
) -> VerificationReport:
    """Compare the relaxation's vertices with the embedding's extreme points.

    Passing certifies two things at once: the relaxation is exactly the
    convex hull of the disjunction (no vertex lost, none gained), and since
    every embedding point carries an integer code the relaxation is ideal.
    """
    expected = embedding_extreme_points(c, e).vertices
    found = enumerate_vertices(f, max_vertices=max_vertices).vertices
    missing = tuple(sorted(expected - found))
    extra = tuple(sorted(found - expected))
    return VerificationReport(
        passed=not missing and not extra,
        missing=missing,
        extra=extra,
        expected_count=len(expected),
        found_count=len(found),
    )
