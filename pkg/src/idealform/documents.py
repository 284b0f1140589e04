"""Problem and formulation documents: the package's serialized forms.

Problems come in as JSON with one body per kind (cdc, pwl, annulus) and
every rational written as an integer or a "p/q" string, never a float, so
parsing is lossless. Formulations go out the same way: integer rows,
string rationals in the recovery map, float pairs only in the annulus
recovery where the corner coordinates are display data. Parsing an
emitted formulation document reproduces the Formulation and RecoveryMap
field-for-field, which is what lets a verification run consume an emitted
file instead of an in-process object.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .annulus import AnnulusSpec, annulus_cdc, _check_piece_count
from .cdc import Cdc
from .encoding import Encoding, EncodingKind, explicit_encoding, make_encoding
from .errors import IdealformError, InputError
from .formulation import Formulation, GeneralRow, LinearEquality, RecoveryMap
from .pwl import PwlFunction, pwl_ground_set
from .verify import VerificationReport

PROBLEM_KINDS = ("cdc", "pwl", "annulus")
CHECK_LEVELS = ("none", "validity", "ideal")
OUTPUT_FORMATS = ("json", "lp")


@dataclass(frozen=True)
class ProblemOptions:
    check: str = "none"
    output_format: str = "json"


@dataclass(frozen=True)
class ProblemDocument:
    """A parsed, validated problem: what to formulate and how to emit it."""

    kind: str
    cdc: Cdc | None
    function: PwlFunction | None
    pieces: int | None
    geometry: AnnulusSpec | None
    encoding_kind: EncodingKind
    explicit_rows: tuple[tuple[int, ...], ...] | None
    options: ProblemOptions

    @property
    def d(self) -> int:
        if self.kind == "cdc":
            return self.cdc.d
        if self.kind == "pwl":
            return self.function.d
        return self.pieces

    def encoding(self) -> Encoding:
        if self.encoding_kind is EncodingKind.EXPLICIT:
            return explicit_encoding(self.explicit_rows)
        return make_encoding(self.d, self.encoding_kind)

    def disjunction(self) -> Cdc:
        """The ground-set disjunction the formulation is certified against."""
        if self.kind == "cdc":
            return self.cdc
        if self.kind == "pwl":
            ground = pwl_ground_set(self.function)
            return Cdc(ground.n, ground.alternatives)
        return annulus_cdc(self.pieces)


def _fail(field: str, err: Exception):
    wrapped = type(err) if isinstance(err, IdealformError) else InputError
    raise wrapped(f"{field}: {err}") from err


def _rational(value, field: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(
            f"{field}: write exact rationals as integers or strings like '3/2', "
            f"not floats"
        )
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as err:
        _fail(field, err)


def _real(value, field: str) -> float:
    if isinstance(value, bool):
        raise InputError(f"{field}: expected a number")
    if isinstance(value, (int, float)):
        return float(value)
    return float(_rational(value, field))


def _int(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{field}: expected an integer")
    return value


def _encoding_spec(body: dict, field: str, allow_explicit: bool):
    spec = body.get("encoding", "gray")
    if isinstance(spec, str):
        try:
            kind = EncodingKind(spec)
        except ValueError:
            raise InputError(
                f"{field}: unknown encoding {spec!r}; use gray, zigzag, "
                f"or an explicit row list"
            ) from None
        if kind is EncodingKind.EXPLICIT:
            raise InputError(f"{field}: explicit encoding needs its rows inline")
        return kind, None
    if isinstance(spec, dict) and set(spec) == {"explicit"}:
        if not allow_explicit:
            raise InputError(f"{field}: this problem kind picks its own codes")
        rows = tuple(
            tuple(_int(x, f"{field}.explicit[{i}][{j}]") for j, x in enumerate(row))
            for i, row in enumerate(spec["explicit"])
        )
        return EncodingKind.EXPLICIT, rows
    raise InputError(f"{field}: expected an encoding name or {{'explicit': rows}}")


def _options(raw) -> ProblemOptions:
    if raw is None:
        return ProblemOptions()
    check = raw.get("check", "none")
    fmt = raw.get("format", "json")
    if check not in CHECK_LEVELS:
        raise InputError(f"options.check: expected one of {CHECK_LEVELS}, got {check!r}")
    if fmt not in OUTPUT_FORMATS:
        raise InputError(f"options.format: expected one of {OUTPUT_FORMATS}, got {fmt!r}")
    return ProblemOptions(check=check, output_format=fmt)


def parse_problem(text: str) -> ProblemDocument:
    """Parse and fully validate a JSON problem document."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"not valid JSON: {err}") from err
    if not isinstance(raw, dict):
        raise InputError("the top level must be a JSON object")
    kind = raw.get("kind")
    if kind not in PROBLEM_KINDS:
        raise InputError(f"kind: expected one of {PROBLEM_KINDS}, got {kind!r}")
    body = raw.get(kind)
    if not isinstance(body, dict):
        raise InputError(f"{kind}: missing the problem body object")
    options = _options(raw.get("options"))

    if kind == "cdc":
        alts_raw = body.get("alternatives")
        if not isinstance(alts_raw, list):
            raise InputError("cdc.alternatives: expected a list of index lists")
        alternatives = [
            [_int(x, f"cdc.alternatives[{i}][{j}]") for j, x in enumerate(alt)]
            for i, alt in enumerate(alts_raw)
        ]
        n = body.get("n")
        if n is None:
            n = max((x for alt in alternatives for x in alt), default=0)
        else:
            n = _int(n, "cdc.n")
        encoding_kind, rows = _encoding_spec(body, "cdc.encoding", allow_explicit=True)
        try:
            c = Cdc(n, tuple(frozenset(alt) for alt in alternatives))
        except IdealformError as err:
            _fail("cdc.alternatives", err)
        if rows is not None and len(rows) != c.d:
            raise InputError(
                f"cdc.encoding: {len(rows)} explicit rows for {c.d} alternatives"
            )
        return ProblemDocument(kind, c, None, None, None, encoding_kind, rows, options)

    if kind == "pwl":
        def rational_list(key: str) -> tuple[Fraction, ...]:
            values = body.get(key)
            if not isinstance(values, list):
                raise InputError(f"pwl.{key}: expected a list of rationals")
            return tuple(_rational(x, f"pwl.{key}[{i}]") for i, x in enumerate(values))

        encoding_kind, _ = _encoding_spec(body, "pwl.encoding", allow_explicit=False)
        try:
            f = PwlFunction(
                rational_list("breakpoints"),
                rational_list("slopes"),
                rational_list("intercepts"),
            )
        except IdealformError as err:
            _fail("pwl", err)
        return ProblemDocument(kind, None, f, None, None, encoding_kind, None, options)

    d = _int(body.get("d"), "annulus.d")
    encoding_kind, _ = _encoding_spec(body, "annulus.encoding", allow_explicit=False)
    inner, outer = body.get("inner_radius"), body.get("outer_radius")
    if (inner is None) != (outer is None):
        raise InputError("annulus: give both inner_radius and outer_radius or neither")
    geometry = None
    if inner is not None:
        try:
            geometry = AnnulusSpec(
                _real(inner, "annulus.inner_radius"),
                _real(outer, "annulus.outer_radius"),
                d,
            )
        except IdealformError as err:
            _fail("annulus", err)
    else:
        try:
            _check_piece_count(d)
        except IdealformError as err:
            _fail("annulus.d", err)
    return ProblemDocument(kind, None, None, d, geometry, encoding_kind, None, options)


def _vertex_strings(points) -> list[list[str]]:
    return [[str(x) for x in p] for p in points]


def emit_structured(
    f: Formulation,
    recovery: RecoveryMap | None = None,
    *,
    provenance: dict | None = None,
    verification: VerificationReport | None = None,
) -> dict:
    """The formulation as a JSON-ready dict; exact and deterministic."""
    doc: dict = {
        "variables": {
            "lambda": {"count": f.n_lambda, "lower": 0},
            "z": {
                "count": f.r_z,
                "integer": True,
                "bounds": [[lo, hi] for lo, hi in f.z_bounds],
            },
        },
        "equalities": [
            {"lambda": list(eq.lam), "z": list(eq.z), "rhs": eq.rhs}
            for eq in f.equalities
        ],
        "general_rows": [
            {
                "normal": list(row.normal),
                "lower": list(row.lower),
                "upper": list(row.upper),
            }
            for row in f.general_rows
        ],
    }
    if recovery is not None:
        points: list | None = None
        if recovery.points is not None:
            if recovery.kind == "annulus":
                points = [list(p) for p in recovery.points]
            else:
                points = _vertex_strings(recovery.points)
        doc["recovery"] = {
            "kind": recovery.kind,
            "epigraph": recovery.epigraph,
            "points": points,
        }
    if provenance is not None:
        doc["provenance"] = dict(provenance)
    if verification is not None:
        doc["verification"] = {
            "passed": verification.passed,
            "expected": verification.expected_count,
            "found": verification.found_count,
            "missing": _vertex_strings(verification.missing),
            "extra": _vertex_strings(verification.extra),
        }
    return doc


def formulation_from_document(doc: dict) -> tuple[Formulation, RecoveryMap | None]:
    """Rebuild (Formulation, RecoveryMap) from an emitted document."""
    try:
        variables = doc["variables"]
        n = _int(variables["lambda"]["count"], "variables.lambda.count")
        r = _int(variables["z"]["count"], "variables.z.count")
        z_bounds = tuple(
            (_int(lo, "bounds"), _int(hi, "bounds"))
            for lo, hi in variables["z"]["bounds"]
        )
        equalities = tuple(
            LinearEquality(
                lam=tuple(_int(x, "equalities.lambda") for x in eq["lambda"]),
                z=tuple(_int(x, "equalities.z") for x in eq["z"]),
                rhs=_int(eq["rhs"], "equalities.rhs"),
            )
            for eq in doc["equalities"]
        )
        rows = tuple(
            GeneralRow(
                normal=tuple(_int(x, "general_rows.normal") for x in row["normal"]),
                lower=tuple(_int(x, "general_rows.lower") for x in row["lower"]),
                upper=tuple(_int(x, "general_rows.upper") for x in row["upper"]),
            )
            for row in doc["general_rows"]
        )
        f = Formulation(n, r, equalities, rows, z_bounds)
    except (KeyError, TypeError, ValueError) as err:
        if isinstance(err, IdealformError):
            raise
        raise InputError(f"malformed formulation document: {err!r}") from err

    recovery = None
    if "recovery" in doc:
        raw = doc["recovery"]
        points = None
        if raw.get("points") is not None:
            if raw["kind"] == "annulus":
                points = tuple((float(x), float(y)) for x, y in raw["points"])
            else:
                points = tuple(
                    (Fraction(x), Fraction(y)) for x, y in raw["points"]
                )
        recovery = RecoveryMap(
            kind=raw["kind"], points=points, epigraph=bool(raw.get("epigraph", False))
        )
    return f, recovery


def document_text(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
