"""Exception types raised across the package.

Every failure mode that callers are expected to catch has its own class here,
so the CLI can map them onto exit codes without string matching.
"""

from __future__ import annotations


class IdealformError(Exception):
    """Base class for all errors raised by this package."""


class InputError(IdealformError, ValueError):
    """Malformed input data: bad schema, bad field value, bad shape."""


# --- exact linear algebra ---

class EmptyPointSet(IdealformError):
    """An operation that needs at least one point received none."""


class ZeroVector(IdealformError):
    """A direction or normal was the zero vector where a nonzero one is required."""


class NotAHyperplane(IdealformError):
    """The given subset does not span a hyperplane of the given subspace."""


# --- encodings ---

class InvalidOrder(IdealformError):
    """Recursion order s is out of the supported range."""


class TooFewAlternatives(IdealformError):
    """An encoding or disjunction needs at least two alternatives."""


class NeedsExplicitRows(IdealformError):
    """The explicit encoding kind was requested without providing rows."""


# --- disjunctive core ---

class NoDirections(IdealformError):
    """Hyperplane enumeration was asked for an empty direction set."""


class DimensionDeficit(IdealformError):
    """The difference directions do not span the affine hull of the encoding."""


class EncodingNotIdealizable(IdealformError):
    """The encoding fails a gate (convex position or hole-freeness)."""


# --- applications ---

class NotPowerOfTwo(IdealformError):
    """A construction that needs d = 2**r received some other d."""


class DegenerateSecant(IdealformError):
    """The annulus outer-vertex radius diverges for this number of pieces."""


# --- resource caps ---

class ResourceCapExceeded(IdealformError):
    """A configurable work limit was hit before the computation finished."""


class HoleCheckTooLarge(ResourceCapExceeded):
    """The lattice box to scan for the hole-freeness gate exceeds the cap."""


class TooManyDirections(ResourceCapExceeded):
    """The direction set is too large for exhaustive hyperplane enumeration."""


class TooLargeToEnumerate(ResourceCapExceeded):
    """Vertex enumeration exceeded its work budget."""
