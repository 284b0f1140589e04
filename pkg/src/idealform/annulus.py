"""Relaxations of a planar ring as a choice among radial quadrilaterals.

The ring between concentric circles of radii L and U is covered by d
congruent quadrilaterals. Quadrilateral i spans the angular sector between
steps i-1 and i of the circle split into d equal parts: two vertices sit
on the inner circle and two on the circumscribing radius U / cos(pi/d),
where the outer chord touches the U circle. Consecutive quadrilaterals
share a radial edge, so the 2d corner points form one shared ground set
and the disjunction has the cyclic window structure {2i-3, ..., 2i}.

The formulations are closed-form: under the reflected code family all
paired rows have unit normals; under the zig-zag family there is one
extra row per coordinate pair, with the normal supported on that pair and
weighted to cancel the family's total displacement. Both coefficient
patterns come from the fact that corner 2i-1 and corner 2i belong to
exactly quadrilaterals i and i+1 (cyclically), so each row coefficient is
a min or max over two consecutive codes. Everything here is exact integer
arithmetic; the float corner coordinates live only in the recovery map.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .cdc import Cdc
from .encoding import Encoding, EncodingKind, code_bounds, make_encoding
from .errors import DegenerateSecant, InputError, NotPowerOfTwo
from .formulation import Formulation, GeneralRow, LinearEquality, RecoveryMap
from .linalg import primitive_canonical


@dataclass(frozen=True)
class AnnulusSpec:
    """The ring L <= |x| <= U split into d = 2^r angular pieces."""

    inner_radius: float
    outer_radius: float
    d: int

    def __post_init__(self) -> None:
        if not 0 <= self.inner_radius <= self.outer_radius:
            raise InputError("need 0 <= inner radius <= outer radius")
        _check_piece_count(self.d)


def _check_piece_count(d: int) -> None:
    if d < 2 or d & (d - 1):
        raise NotPowerOfTwo(f"piece count must be a power of two, at least 2; got {d}")


def annulus_cdc(d: int) -> Cdc:
    """The cyclic window disjunction over the 2d corner indices."""
    _check_piece_count(d)
    n = 2 * d
    windows = [
        frozenset(((2 * i + s - 5) % n) + 1 for s in range(1, 5))
        for i in range(1, d + 1)
    ]
    return Cdc(n, tuple(windows))


def annulus_vertices(spec: AnnulusSpec) -> tuple[tuple[float, float], ...]:
    """The 2d corner points, odd indices inner, even indices outer.

    Corners 2i-1 and 2i sit at angle 2*pi*i/d, at radii L and
    U / cos(pi/d). The outer chord between consecutive corners is tangent
    to the U circle, so the quadrilaterals cover the whole ring.
    """
    d = spec.d
    if d == 2:
        raise DegenerateSecant(
            "two pieces put the half-sector angle at pi/2, where the "
            "circumscribing radius diverges"
        )
    if spec.inner_radius == 0:
        warnings.warn(
            "inner radius 0 collapses all inner corners to the origin",
            RuntimeWarning,
            stacklevel=2,
        )
    outer = spec.outer_radius / math.cos(math.pi / d)
    points: list[tuple[float, float]] = []
    for i in range(1, d + 1):
        angle = 2 * math.pi * (i % d) / d
        c, s = math.cos(angle), math.sin(angle)
        points.append((spec.inner_radius * c, spec.inner_radius * s))
        points.append((outer * c, outer * s))
    return tuple(points)


def _pair_rows(e: Encoding, normals) -> tuple[GeneralRow, ...]:
    """Rows from the consecutive-code pattern of the cyclic windows.

    The coefficient of both lambda_{2i-1} and lambda_{2i} in the row for
    normal b is min (resp. max) of b . h^i and b . h^{i+1}, cyclically.
    """
    d = e.d
    rows = []
    for normal in normals:
        values = [sum(nk * hk for nk, hk in zip(normal, row)) for row in e.rows]
        lower = []
        upper = []
        for i in range(1, d + 1):
            here, after = values[i - 1], values[i % d]
            lower += [min(here, after)] * 2
            upper += [max(here, after)] * 2
        rows.append(
            GeneralRow(normal=tuple(normal), lower=tuple(lower), upper=tuple(upper))
        )
    return tuple(rows)


def _closed_form(d: int, kind: EncodingKind, normals_of) -> Formulation:
    e = make_encoding(d, kind)
    normals = sorted(normals_of(e.r))
    return Formulation(
        n_lambda=2 * d,
        r_z=e.r,
        equalities=(LinearEquality(lam=(1,) * (2 * d), z=(0,) * e.r, rhs=1),),
        general_rows=_pair_rows(e, normals),
        z_bounds=code_bounds(e),
    )


def _recovery(d: int, spec: AnnulusSpec | None) -> RecoveryMap:
    if spec is not None and spec.d != d:
        raise InputError(f"spec is for {spec.d} pieces, formulation for {d}")
    points = None
    if spec is not None and d != 2:
        points = annulus_vertices(spec)
    return RecoveryMap(kind="annulus", points=points)


def _unit_normals(r: int) -> list[tuple[int, ...]]:
    return [tuple(1 if k == j else 0 for k in range(r)) for j in range(r)]


def annulus_gray_formulation(
    d: int, spec: AnnulusSpec | None = None
) -> tuple[Formulation, RecoveryMap]:
    """Closed form under the reflected codes: r unit-normal row pairs."""
    _check_piece_count(d)
    return _closed_form(d, EncodingKind.GRAY, _unit_normals), _recovery(d, spec)


def annulus_zigzag_formulation(
    d: int, spec: AnnulusSpec | None = None
) -> tuple[Formulation, RecoveryMap]:
    """Closed form under the zig-zag codes: r(r+1)/2 row pairs.

    Unit normals as in the reflected case, plus one normal per coordinate
    pair k < l, proportional to 2^(-l) e^k - 2^(-k) e^l, emitted in its
    primitive integer scaling.
    """
    _check_piece_count(d)

    def normals(r: int) -> list[tuple[int, ...]]:
        out = _unit_normals(r)
        for k in range(r):
            for l in range(k + 1, r):
                v = [Fraction(0)] * r
                v[k] = Fraction(1, 2 ** (l + 1))
                v[l] = -Fraction(1, 2 ** (k + 1))
                out.append(primitive_canonical(tuple(v)))
        return out

    return _closed_form(d, EncodingKind.ZIGZAG, normals), _recovery(d, spec)
