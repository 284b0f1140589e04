"""From a disjunction over shared ground elements to an ideal formulation.

The pipeline: alternatives that share ground elements give arcs of an
intersection digraph; each arc contributes the difference of the two code
vectors; when those differences span the affine hull of the codes, every
hyperplane of that span that the differences themselves span yields one
paired constraint, and the resulting system together with the unit simplex
and the hull equations describes exactly the convex hull of the embedded
alternatives. Both gates on the encoding (convex position, hole-freeness)
are checked first, because they are what make the formulation ideal rather
than merely valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .encoding import (
    DEFAULT_HOLE_CAP,
    Encoding,
    code_bounds,
    is_hole_free,
    is_in_convex_position,
)
from .errors import (
    DimensionDeficit,
    EncodingNotIdealizable,
    InputError,
    NoDirections,
    TooFewAlternatives,
    TooManyDirections,
)
from .formulation import Formulation, GeneralRow, LinearEquality
from .linalg import (
    affine_hull,
    dot,
    independent_rows,
    mat,
    orthogonal_in_subspace,
    primitive_canonical,
    rank,
    scale_row_to_integers,
    vec,
)

DEFAULT_DIRECTION_CAP = 20

Arc = tuple[int, int]


@dataclass(frozen=True)
class Cdc:
    """A combinatorial disjunction: choose one alternative, each a subset
    of the ground set {1..n}, with every ground element used somewhere."""

    n: int
    alternatives: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError("ground set must be nonempty")
        if len(self.alternatives) < 2:
            raise TooFewAlternatives("a disjunction needs at least two alternatives")
        covered: set[int] = set()
        for i, alt in enumerate(self.alternatives, start=1):
            if not alt:
                raise InputError(f"alternative {i} is empty")
            bad = [v for v in alt if not (1 <= v <= self.n)]
            if bad:
                raise InputError(f"alternative {i} uses out-of-range elements {sorted(bad)}")
            covered |= alt
        missing = set(range(1, self.n + 1)) - covered
        if missing:
            raise InputError(f"ground elements {sorted(missing)} appear in no alternative")

    @property
    def d(self) -> int:
        return len(self.alternatives)


def cdc(n: int, alternatives) -> Cdc:
    """Convenience constructor from any iterable of iterables."""
    return Cdc(n=n, alternatives=tuple(frozenset(a) for a in alternatives))


@dataclass(frozen=True)
class IntersectionDigraph:
    d: int
    arcs: tuple[Arc, ...]  # (i, j) with i < j, 1-based, sorted


def intersection_digraph(c: Cdc) -> IntersectionDigraph:
    """Arcs between every pair of alternatives that share a ground element."""
    arcs = tuple(
        (i, j)
        for i, j in combinations(range(1, c.d + 1), 2)
        if c.alternatives[i - 1] & c.alternatives[j - 1]
    )
    return IntersectionDigraph(d=c.d, arcs=arcs)


def is_weakly_connected(g: IntersectionDigraph) -> bool:
    """Connectivity of the arc set read as undirected edges."""
    if g.d == 1:
        return True
    adjacency: dict[int, set[int]] = {i: set() for i in range(1, g.d + 1)}
    for i, j in g.arcs:
        adjacency[i].add(j)
        adjacency[j].add(i)
    seen = {1}
    frontier = [1]
    while frontier:
        node = frontier.pop()
        for nb in adjacency[node]:
            if nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    return len(seen) == g.d


@dataclass(frozen=True)
class DifferenceDirections:
    """Code differences along the arcs, raw and deduplicated.

    ``raw`` holds one (arc, h_j - h_i) pair per arc; ``deduped`` holds the
    primitive canonical forms with parallel vectors collapsed, sorted."""

    raw: tuple[tuple[Arc, tuple[int, ...]], ...]
    deduped: tuple[tuple[int, ...], ...]


def difference_directions(g: IntersectionDigraph, e: Encoding) -> DifferenceDirections:
    if g.d != e.d:
        raise InputError(f"digraph has {g.d} nodes but encoding has {e.d} rows")
    raw = tuple(
        ((i, j), tuple(a - b for a, b in zip(e.rows[j - 1], e.rows[i - 1])))
        for i, j in g.arcs
    )
    canon = {primitive_canonical(vec(v)) for _, v in raw}
    return DifferenceDirections(raw=raw, deduped=tuple(sorted(canon)))


def check_dim_condition(dirs: DifferenceDirections, e: Encoding) -> bool:
    """Do the raw differences span the affine hull of the code rows?"""
    hull_dim = affine_hull(mat(e.rows)).dim
    spanned = rank([vec(v) for _, v in dirs.raw])
    return spanned == hull_dim


def spanned_hyperplane_normals(
    directions, cap: int = DEFAULT_DIRECTION_CAP
) -> tuple[tuple[int, ...], ...]:
    """Primitive normals of all hyperplanes of span(directions) spanned by
    the directions themselves.

    Walks the (m-1)-subsets of the deduplicated directions, where m is the
    rank; for m = 1 the single hyperplane is the origin of the line and its
    normal is the line direction. Results are deduplicated and sorted.
    """
    dirs = [vec(d) for d in directions]
    if not dirs:
        raise NoDirections("no directions to span hyperplanes with")
    if len(dirs) > cap:
        raise TooManyDirections(
            f"{len(dirs)} directions exceed the enumeration cap of {cap}"
        )
    basis = independent_rows(dirs)
    m = len(basis)
    normals: set[tuple[int, ...]] = set()
    if m == 1:
        return (primitive_canonical(basis[0]),)
    for subset in combinations(dirs, m - 1):
        if rank(subset) != m - 1:
            continue
        normals.add(primitive_canonical(orthogonal_in_subspace(basis, subset)))
    return tuple(sorted(normals))


def formulation_equalities(c: Cdc, e: Encoding) -> tuple[LinearEquality, ...]:
    """The simplex row plus the affine-hull equations of the code rows."""
    rows: list[LinearEquality] = [
        LinearEquality(lam=(1,) * c.n, z=(0,) * e.r, rhs=1)
    ]
    hull = affine_hull(mat(e.rows))
    for lhs, rhs in zip(hull.eq_lhs, hull.eq_rhs):
        coeffs, scaled_rhs = scale_row_to_integers(lhs, rhs)
        rows.append(LinearEquality(lam=(0,) * c.n, z=coeffs, rhs=scaled_rhs))
    return tuple(rows)


def theorem1_formulation(
    c: Cdc,
    e: Encoding,
    direction_cap: int = DEFAULT_DIRECTION_CAP,
    hole_cap: int = DEFAULT_HOLE_CAP,
) -> Formulation:
    """The ideal formulation of (c, e) via spanned-hyperplane enumeration.

    Raises EncodingNotIdealizable when a gate fails and DimensionDeficit
    when the difference directions do not span the affine hull of the
    codes; the deficit message reports the connectivity diagnostic, since
    weak connectivity of the intersection digraph is the usual sufficient
    condition.
    """
    if c.d != e.d:
        raise InputError(
            f"disjunction has {c.d} alternatives but encoding has {e.d} rows"
        )
    if not is_in_convex_position(e):
        raise EncodingNotIdealizable("a code row lies in the hull of the others")
    if not is_hole_free(e, cap=hole_cap):
        raise EncodingNotIdealizable("the code hull contains a non-code lattice point")

    digraph = intersection_digraph(c)
    dirs = difference_directions(digraph, e)
    if not check_dim_condition(dirs, e):
        hull_dim = affine_hull(mat(e.rows)).dim
        spanned = rank([vec(v) for _, v in dirs.raw])
        connected = is_weakly_connected(digraph)
        raise DimensionDeficit(
            f"difference directions span {spanned} of {hull_dim} dimensions; "
            f"intersection digraph {'is' if connected else 'is not'} weakly connected"
        )
    normals = spanned_hyperplane_normals(dirs.deduped, cap=direction_cap)
    return Formulation(
        n_lambda=c.n,
        r_z=e.r,
        equalities=formulation_equalities(c, e),
        general_rows=rows_for_normals(c, e, normals),
        z_bounds=code_bounds(e),
    )


def rows_for_normals(c: Cdc, e: Encoding, normals) -> tuple[GeneralRow, ...]:
    """One paired row per normal: each ground element's coefficients are the
    extreme values of normal . code over the alternatives that use it."""
    covering = [
        [s for s in range(c.d) if v in c.alternatives[s]] for v in range(1, c.n + 1)
    ]
    rows = []
    for normal in normals:
        values = [dot(vec(normal), vec(row)) for row in e.rows]
        lower = tuple(int(min(values[s] for s in covering[v])) for v in range(c.n))
        upper = tuple(int(max(values[s] for s in covering[v])) for v in range(c.n))
        rows.append(GeneralRow(normal=tuple(normal), lower=lower, upper=upper))
    return tuple(rows)
