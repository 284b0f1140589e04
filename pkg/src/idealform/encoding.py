"""Integer encodings of the alternatives and the two idealizability gates.

Two recursive families are built in. The reflected family flips one bit per
step and closes the cycle with a single-coordinate step; the zig-zag family
increases one coordinate per step and closes with the step
(2**(s-1), ..., 2, 1). Arbitrary explicit integer encodings are accepted as
well and are checked by the same gates: every row must be a vertex of the
hull (convex position) and the hull must contain no other lattice point
(hole-freeness). Together the gates are what make a formulation over the
encoding ideal, so they run before any formulation is emitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import ceil, log2

from .errors import (
    HoleCheckTooLarge,
    InputError,
    InvalidOrder,
    NeedsExplicitRows,
    TooFewAlternatives,
)
from .linalg import mat, point_in_convex_hull, vec

Row = tuple[int, ...]

DEFAULT_HOLE_CAP = 10**6


class EncodingKind(Enum):
    GRAY = "gray"
    ZIGZAG = "zigzag"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class Encoding:
    """d distinct integer code vectors of length r, one per alternative."""

    rows: tuple[Row, ...]
    kind: EncodingKind

    def __post_init__(self) -> None:
        if len(self.rows) < 2:
            raise TooFewAlternatives("an encoding needs at least two rows")
        width = len(self.rows[0])
        if width < 1:
            raise InputError("encoding rows must have at least one coordinate")
        for row in self.rows:
            if len(row) != width:
                raise InputError("encoding rows have unequal lengths")
            if not all(isinstance(x, int) for x in row):
                raise InputError("encoding rows must be integer vectors")
        if len(set(self.rows)) != len(self.rows):
            raise InputError("encoding rows must be pairwise distinct")

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def r(self) -> int:
        return len(self.rows[0])


def gray_matrix(s: int) -> tuple[Row, ...]:
    """The 2**s by s reflected binary matrix.

    Built by the recursion that stacks the previous matrix with a 0 column
    over its reversal with a 1 column. Consecutive rows differ in exactly
    one coordinate, by +-1, and the last row differs from the first in the
    final coordinate only.
    """
    if s < 1:
        raise InvalidOrder(f"recursion order must be at least 1, got {s}")
    rows: list[Row] = [(0,), (1,)]
    for _ in range(s - 1):
        rows = [r + (0,) for r in rows] + [r + (1,) for r in reversed(rows)]
    return tuple(rows)


def zigzag_matrix(s: int) -> tuple[Row, ...]:
    """The 2**s by s zig-zag matrix.

    The recursion stacks the previous matrix with a 0 column over a copy
    shifted by the previous last row, with a 1 column. Consecutive rows
    differ by a single +1 step in one coordinate.
    """
    if s < 1:
        raise InvalidOrder(f"recursion order must be at least 1, got {s}")
    rows: list[Row] = [(0,), (1,)]
    for _ in range(s - 1):
        last = rows[-1]
        shifted = [tuple(a + b for a, b in zip(row, last)) for row in rows]
        rows = [r + (0,) for r in rows] + [r + (1,) for r in shifted]
    return tuple(rows)


def make_encoding(d: int, kind: EncodingKind) -> Encoding:
    """The first d rows of the chosen family, with r = ceil(log2(d)) bits."""
    if kind is EncodingKind.EXPLICIT:
        raise NeedsExplicitRows("explicit encodings are built from given rows")
    if d < 2:
        raise TooFewAlternatives(f"need at least two alternatives, got {d}")
    r = ceil(log2(d))
    full = gray_matrix(r) if kind is EncodingKind.GRAY else zigzag_matrix(r)
    return Encoding(rows=full[:d], kind=kind)


def explicit_encoding(rows) -> Encoding:
    """Wrap user-provided integer rows as an explicit encoding."""
    return Encoding(rows=tuple(tuple(int(x) for x in row) for row in rows), kind=EncodingKind.EXPLICIT)


def is_in_convex_position(e: Encoding) -> bool:
    """True when no row lies in the convex hull of the other rows.

    Exactly the condition "every code is a vertex of the hull"; decided by
    one exact feasibility question per row.
    """
    rows = [vec(r) for r in e.rows]
    for i, row in enumerate(rows):
        others = rows[:i] + rows[i + 1 :]
        if point_in_convex_hull(row, mat(others)):
            return False
    return True


def is_hole_free(e: Encoding, cap: int = DEFAULT_HOLE_CAP) -> bool:
    """True when the hull of the rows contains no lattice point beyond them.

    Scans the integer bounding box of the rows; boxes larger than ``cap``
    points raise HoleCheckTooLarge instead of silently taking forever.
    """
    rows = mat(e.rows)
    lows = [min(r[k] for r in e.rows) for k in range(e.r)]
    highs = [max(r[k] for r in e.rows) for k in range(e.r)]
    volume = 1
    for lo, hi in zip(lows, highs):
        volume *= hi - lo + 1
        if volume > cap:
            raise HoleCheckTooLarge(
                f"lattice box has more than {cap} points; raise the cap to force the scan"
            )
    row_set = set(e.rows)
    for point in product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
        if point in row_set:
            continue
        if point_in_convex_hull(vec(point), rows):
            return False
    return True


def code_bounds(e: Encoding) -> tuple[tuple[int, int], ...]:
    """Componentwise (min, max) over the code rows: the box the codes live in."""
    return tuple(
        (min(row[k] for row in e.rows), max(row[k] for row in e.rows))
        for k in range(e.r)
    )
