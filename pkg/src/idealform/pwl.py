"""Epigraph formulations for univariate piecewise linear functions.

A function given by d segments over breakpoints t_1 < ... < t_{d+1} turns
into a disjunction: pick a segment, then express (x, y) as a convex
combination of its two endpoints. Two consecutive segments share their
meeting point when the function is continuous there, so a ground element
is duplicated only at actual jumps. With the jump count kappa this spends
d + 1 + kappa multiplier variables instead of two per segment.

The fast path applies when d is a power of two (at least 4) and the
function is continuous across one of the two middle quarter spans of
breakpoints. The reflected and zig-zag code families step through single
coordinates in a fixed pattern, and each quarter span's steps touch every
coordinate, so continuity there guarantees the difference directions span
the full code space and the paired rows need only unit normals. No
hyperplane enumeration, no feasibility subproblems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cdc import Cdc, formulation_equalities, rows_for_normals, theorem1_formulation
from .encoding import EncodingKind, code_bounds, make_encoding
from .errors import DimensionDeficit, InputError
from .formulation import Formulation, RecoveryMap

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PwlFunction:
    """d segments: on piece i the value is slopes[i]*x + intercepts[i].

    Pieces are indexed 1..d and piece i lives on [breakpoints[i-1],
    breakpoints[i]]; at a jump the modeled set keeps both one-sided values,
    which is the closure of either semi-continuous convention.
    """

    breakpoints: tuple[Fraction, ...]
    slopes: tuple[Fraction, ...]
    intercepts: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        d = len(self.slopes)
        if d < 2:
            raise InputError("need at least two segments")
        if len(self.intercepts) != d:
            raise InputError("one intercept per segment")
        if len(self.breakpoints) != d + 1:
            raise InputError("need one more breakpoint than segments")
        if any(a >= b for a, b in zip(self.breakpoints, self.breakpoints[1:])):
            raise InputError("breakpoints must be strictly increasing")

    @property
    def d(self) -> int:
        return len(self.slopes)

    def segment_value(self, i: int, x: Fraction) -> Fraction:
        """Value of segment i (1-based) extended to any x."""
        return self.slopes[i - 1] * x + self.intercepts[i - 1]

    def is_continuous_at(self, j: int) -> bool:
        """Whether segments j-1 and j agree at interior breakpoint j."""
        if not 2 <= j <= self.d:
            raise InputError(f"breakpoint {j} is not interior")
        t = self.breakpoints[j - 1]
        return self.segment_value(j - 1, t) == self.segment_value(j, t)

    def jump_indices(self) -> tuple[int, ...]:
        return tuple(j for j in range(2, self.d + 1) if not self.is_continuous_at(j))


def pwl(breakpoints, slopes, intercepts) -> PwlFunction:
    """Build a PwlFunction, coercing entries to exact rationals."""
    return PwlFunction(
        tuple(Fraction(t) for t in breakpoints),
        tuple(Fraction(a) for a in slopes),
        tuple(Fraction(b) for b in intercepts),
    )


@dataclass(frozen=True)
class PwlGroundSet:
    """Segment endpoints as ground elements, left-to-right.

    Jump breakpoints appear twice, the left-limit point first. Alternative
    i holds the two endpoint indices of segment i.
    """

    points: tuple[Point, ...]
    alternatives: tuple[frozenset[int], ...]
    kappa: int

    @property
    def n(self) -> int:
        return len(self.points)


def pwl_ground_set(f: PwlFunction) -> PwlGroundSet:
    points: list[Point] = [(f.breakpoints[0], f.segment_value(1, f.breakpoints[0]))]
    alternatives: list[frozenset[int]] = []
    kappa = 0
    for i in range(1, f.d + 1):
        left = len(points)
        if i > 1 and not f.is_continuous_at(i):
            kappa += 1
            t = f.breakpoints[i - 1]
            points.append((t, f.segment_value(i, t)))
            left += 1
        t_next = f.breakpoints[i]
        points.append((t_next, f.segment_value(i, t_next)))
        alternatives.append(frozenset({left, left + 1}))
    return PwlGroundSet(tuple(points), tuple(alternatives), kappa)


def pwl_prop3_applicable(f: PwlFunction) -> bool:
    """Whether the unit-normal closed form is guaranteed to be ideal.

    Requires d = 2^r with r >= 2 and continuity at every breakpoint of one
    of the two middle quarter spans, indices [d/4+1, d/2+1] or
    [d/2+1, 3d/4+1]. Those spans' code steps touch every coordinate, which
    is exactly what the dimension condition needs.
    """
    d = f.d
    if d < 4 or d & (d - 1):
        return False
    first = range(d // 4 + 1, d // 2 + 2)
    second = range(d // 2 + 1, 3 * d // 4 + 2)
    return any(
        all(f.is_continuous_at(j) for j in span) for span in (first, second)
    )


def pwl_formulation(
    f: PwlFunction, kind: EncodingKind
) -> tuple[Formulation, RecoveryMap]:
    """An ideal formulation of the epigraph of f, plus the point map.

    The λ variables stand for the ground points: the modeled pair is
    x = Σ λ_v x_v with output y ≥ Σ λ_v y_v (the epigraph direction is a
    free ray and needs no vertex bookkeeping). When the fast path does not
    apply the general pipeline runs on the segment disjunction; it can
    reject the instance when too many jumps starve the code steps.
    """
    if kind is EncodingKind.EXPLICIT:
        raise InputError("this pipeline picks its own codes; use gray or zigzag")
    ground = pwl_ground_set(f)
    c = Cdc(ground.n, ground.alternatives)
    e = make_encoding(f.d, kind)
    recovery = RecoveryMap(kind="pwl", points=ground.points, epigraph=True)

    if pwl_prop3_applicable(f):
        identity = sorted(
            tuple(1 if k == j else 0 for k in range(e.r)) for j in range(e.r)
        )
        formulation = Formulation(
            n_lambda=c.n,
            r_z=e.r,
            equalities=formulation_equalities(c, e),
            general_rows=rows_for_normals(c, e, identity),
            z_bounds=code_bounds(e),
        )
        return formulation, recovery

    try:
        return theorem1_formulation(c, e), recovery
    except DimensionDeficit as err:
        jumps = ", ".join(f"t{j}" for j in f.jump_indices())
        raise DimensionDeficit(
            f"{err}; the jumps at {jumps} remove the consecutive-segment "
            f"steps that would supply the missing code coordinates"
        ) from err
